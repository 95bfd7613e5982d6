#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "schubert2/error.hpp"
#include "schubert2/matroid.hpp"
#include "schubert2/partition.hpp"
#include "schubert2/schubert.hpp"
#include "schubert2/tree_model.hpp"

namespace schubert2 {

/// Cohomology class of the torus-orbit closure of type pi in G(2,n).
/// Rigid case (length <= 3): gamma(pi). Otherwise the orbit class decomposes
/// over the internal vertices of a tree model (default: caterpillar), each
/// vertex contributing the class of a rigid 3-part degeneration.
inline ClassVector orbit_class(int n, const Partition& pi,
                               const std::optional<TreeModel>& model = std::nullopt) {
  if (!pi.is_partial_partition(n))
    throw validation_error("orbit_class: partition is not in Pi_n");
  if (model) {
    if (model->num_leaves() != pi.length())
      throw validation_error("orbit_class: model leaf count does not match partition length");
    auto want = pi.parts();
    auto got = model->leaf_labels;
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got)
      throw validation_error("orbit_class: model leaf labels do not match partition parts");
  }
  if (pi.length() <= 3) return gamma(n, pi);
  TreeModel tree = model ? *model : caterpillar_model(pi);
  ClassVector out(n, Grading::Cohomology);
  for (int v = tree.num_leaves(); v < tree.num_vertices(); ++v)
    out += gamma(n, vertex_partition(tree, v));
  return out;
}

struct ModelIndependenceReport {
  int models = 0;
  bool agree = true;
  ClassVector common;
  // set when agree is false; would indicate an implementation bug
  std::optional<std::pair<int, int>> counterexample;
};

/// Recompute the orbit class over every tree model and compare.
inline ModelIndependenceReport verify_model_independence(int n, const Partition& pi) {
  if (pi.length() < 4)
    throw validation_error("verify_model_independence needs length >= 4 (non-rigid)");
  auto models = enumerate_models(pi);
  ModelIndependenceReport report{static_cast<int>(models.size()), true,
                                 orbit_class(n, pi, models.front()), std::nullopt};
  for (std::size_t i = 1; i < models.size(); ++i) {
    if (!(orbit_class(n, pi, models[i]) == report.common)) {
      report.agree = false;
      report.counterexample = {0, static_cast<int>(i)};
      break;
    }
  }
  return report;
}

/// Homology class of the orbit closure: the dual of orbit_class.
inline ClassVector orbit_homology(int n, const Partition& pi,
                                  const std::optional<TreeModel>& model = std::nullopt) {
  return poincare_dual(orbit_class(n, pi, model));
}

/// Hook coefficient of the orbit class against the brute-force beta invariant
/// of M_pi, evaluated looplessly (n = w(pi)). The two must agree.
inline std::pair<long long, long long> hook_beta_check(const Partition& pi) {
  if (pi.length() < 3)
    throw validation_error("hook_beta_check needs length >= 3 (connected matroid)");
  const int n = pi.weight();
  ClassVector h = orbit_homology(n, pi);
  long long hook_coeff = h.coefficient({n - 2, 1});
  long long beta = rank2_from_partition(n, pi).as_basis_matroid().beta_invariant();
  return {hook_coeff, beta};
}

}  // namespace schubert2
