#pragma once

#include <algorithm>
#include <vector>

#include "schubert2/error.hpp"
#include "schubert2/partition.hpp"

namespace schubert2 {

/// A leaf-labelled trivalent tree encoding a maximal matroidal subdivision of
/// the polytope of pi. Vertices 0..l-1 are the leaves (leaf i carries the i-th
/// part of pi, parts sorted non-increasing); vertices l..2l-3 are internal and
/// trivalent.
struct TreeModel {
  std::vector<int> leaf_labels;            // parts of pi, one per leaf
  std::vector<std::vector<int>> adjacency;  // over all 2l-2 vertices

  int num_leaves() const { return static_cast<int>(leaf_labels.size()); }
  int num_vertices() const { return static_cast<int>(adjacency.size()); }
  bool is_internal(int v) const { return v >= num_leaves(); }

  /// Structural sanity: degrees, connectivity, acyclicity.
  void validate() const {
    const int l = num_leaves();
    if (l < 3) throw validation_error("tree model needs at least 3 leaves");
    if (num_vertices() != 2 * l - 2) throw invariant_error("tree model has wrong vertex count");
    for (int v = 0; v < num_vertices(); ++v) {
      std::size_t want = v < l ? 1 : 3;
      if (adjacency[v].size() != want) throw invariant_error("tree model has wrong vertex degree");
    }
    // connected with 2l-3 edges => tree
    std::vector<bool> seen(adjacency.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 0, edges = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++count;
      edges += static_cast<int>(adjacency[v].size());
      for (int u : adjacency[v])
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    if (count != num_vertices() || edges != 2 * (2 * l - 3))
      throw invariant_error("tree model is not a tree");
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < num_vertices(); ++v)
      for (int u : adjacency[v])
        if (v < u) out.push_back({v, u});
    return out;
  }
};

namespace detail {

inline TreeModel three_leaf_star(const std::vector<int>& labels) {
  TreeModel t;
  t.leaf_labels = labels;
  t.adjacency = {{3}, {3}, {3}, {0, 1, 2}};
  return t;
}

/// Split edge (u,v), attach a fresh leaf through a fresh internal vertex.
/// The caller prepares vertex numbering; here leaves stay 0..l-1 by shifting
/// internal ids up by one when a new leaf is appended.
inline TreeModel insert_leaf(const TreeModel& t, int u, int v, int label) {
  const int l = t.num_leaves();
  auto shift = [l](int x) { return x >= l ? x + 1 : x; };
  TreeModel out;
  out.leaf_labels = t.leaf_labels;
  out.leaf_labels.push_back(label);
  out.adjacency.assign(static_cast<std::size_t>(t.num_vertices() + 2), {});
  for (int a = 0; a < t.num_vertices(); ++a)
    for (int b : t.adjacency[a])
      if (a < b && !(a == std::min(u, v) && b == std::max(u, v))) {
        out.adjacency[shift(a)].push_back(shift(b));
        out.adjacency[shift(b)].push_back(shift(a));
      }
  const int new_leaf = l;
  const int new_internal = t.num_vertices() + 1;
  for (int end : {shift(u), shift(v), new_leaf}) {
    out.adjacency[new_internal].push_back(end);
    out.adjacency[end].push_back(new_internal);
  }
  return out;
}

}  // namespace detail

/// All leaf-labelled trivalent topologies for pi, (2l-5)!! of them, by the
/// standard leaf-insertion recursion. Topologies that coincide under equal
/// leaf labels are retained.
inline std::vector<TreeModel> enumerate_models(const Partition& pi) {
  if (pi.length() < 3) throw validation_error("enumerate_models needs length >= 3");
  const auto& parts = pi.parts();
  std::vector<TreeModel> current{detail::three_leaf_star({parts[0], parts[1], parts[2]})};
  for (std::size_t next = 3; next < parts.size(); ++next) {
    std::vector<TreeModel> grown;
    for (const TreeModel& t : current)
      for (auto [u, v] : t.edges()) grown.push_back(detail::insert_leaf(t, u, v, parts[next]));
    current = std::move(grown);
  }
  for (auto& t : current) t.validate();
  return current;
}

/// The path-backbone model: internal vertices in a path, two leaves at each
/// end, leaves attached in sorted-parts order.
inline TreeModel caterpillar_model(const Partition& pi) {
  const int l = pi.length();
  if (l < 3) throw validation_error("caterpillar_model needs length >= 3");
  const auto& parts = pi.parts();
  TreeModel t;
  t.leaf_labels = parts;
  t.adjacency.assign(static_cast<std::size_t>(2 * l - 2), {});
  auto connect = [&](int a, int b) {
    t.adjacency[a].push_back(b);
    t.adjacency[b].push_back(a);
  };
  // internal vertices l .. 2l-3 form the backbone
  for (int j = l; j + 1 <= 2 * l - 3; ++j) connect(j, j + 1);
  connect(0, l);
  connect(1, l);
  for (int leaf = 2; leaf < l - 1; ++leaf) connect(leaf, l + leaf - 1);
  connect(l - 1, 2 * l - 3);
  t.validate();
  return t;
}

/// The 3-part partition read off an internal vertex: component-wise sums of
/// leaf labels in T minus v. Weight is preserved.
inline Partition vertex_partition(const TreeModel& model, int v) {
  if (!model.is_internal(v)) throw validation_error("vertex_partition needs an internal vertex");
  std::vector<int> sums;
  for (int start : model.adjacency[v]) {
    int sum = 0;
    std::vector<bool> seen(model.adjacency.size(), false);
    seen[v] = true;
    seen[start] = true;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x < model.num_leaves()) sum += model.leaf_labels[x];
      for (int u : model.adjacency[x])
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    sums.push_back(sum);
  }
  return Partition(std::move(sums));
}

}  // namespace schubert2
