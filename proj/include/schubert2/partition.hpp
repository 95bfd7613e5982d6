#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schubert2/error.hpp"

namespace schubert2 {

using bigint = boost::multiprecision::cpp_int;

/// An integer partition, stored with parts sorted non-increasing.
/// When used as an element of Pi_n (a "partial partition") it additionally
/// satisfies 2 <= length() <= weight() <= n.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int k : parts_) {
      if (k < 1) throw validation_error("partition parts must be >= 1");
    }
    if (parts_.empty()) throw validation_error("partition must have at least one part");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Multiplicity of each distinct part, keyed by part value (descending).
  std::map<int, int, std::greater<int>> multiplicities() const {
    std::map<int, int, std::greater<int>> m;
    for (int k : parts_) ++m[k];
    return m;
  }

  bool is_partial_partition(int n) const {
    return length() >= 2 && weight() <= n;
  }

  /// True for the shapes (k, 1^{m-k}), 1 <= k < m, which label Schubert varieties.
  bool is_schubert() const {
    if (length() < 2) return false;
    for (std::size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i] != 1) return false;
    return true;
  }

  friend auto operator<=>(const Partition& a, const Partition& b) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

/// Parses "2,1,1" or exponent notation "3^2,2^3,1" into a canonical partition.
inline Partition parse_partition(std::string_view text) {
  if (text.empty()) throw validation_error("empty partition text");
  std::vector<int> parts;
  std::size_t pos = 0;
  auto parse_int = [&](std::string_view tok) -> int {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw validation_error("malformed partition token '" + std::string(tok) + "'");
    return value;
  };
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (tok.empty()) throw validation_error("empty partition token");
    int part, mult = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      part = parse_int(tok.substr(0, caret));
      mult = parse_int(tok.substr(caret + 1));
    } else {
      part = parse_int(tok);
    }
    if (part < 1) throw validation_error("partition parts must be >= 1");
    if (mult < 1) throw validation_error("part multiplicity must be >= 1");
    parts.insert(parts.end(), mult, part);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

namespace detail {
inline void enumerate_rec(int remaining, int max_part, std::vector<int>& acc,
                          std::vector<Partition>& out) {
  if (remaining == 0) {
    if (acc.size() >= 2) out.push_back(Partition(acc));
    return;
  }
  // largest first part first: yields reverse-lexicographic order per weight
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    acc.push_back(k);
    enumerate_rec(remaining - k, k, acc, out);
    acc.pop_back();
  }
}
}  // namespace detail

/// All of Pi_n: partitions with 2 <= length <= weight <= n, ordered by
/// weight ascending and then reverse-lexicographically on the parts.
inline std::vector<Partition> enumerate_partial_partitions(int n) {
  if (n < 2) throw validation_error("enumerate_partial_partitions requires n >= 2");
  std::vector<Partition> out;
  std::vector<int> acc;
  for (int w = 2; w <= n; ++w) detail::enumerate_rec(w, w - 1, acc, out);
  return out;
}

inline bigint factorial(int n) {
  bigint r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline bigint binomial(const bigint& n, int k) {
  if (k < 0) return 0;
  bigint num = 1;
  for (int i = 0; i < k; ++i) num *= n - i;
  return num / factorial(k);
}

/// tau_n(pi) = #(S_n . M_pi): the number of rank-2 matroids on [n] in the
/// symmetric-group orbit labelled by pi.
inline bigint orbit_count(int n, const Partition& pi) {
  if (!pi.is_partial_partition(n))
    throw validation_error("orbit_count: partition is not in Pi_n (need 2 <= length <= weight <= n)");
  bigint denom = factorial(n - pi.weight());
  for (auto [part, mult] : pi.multiplicities()) {
    bigint f = factorial(part);
    for (int j = 0; j < mult; ++j) denom *= f;
    denom *= factorial(mult);
  }
  return factorial(n) / denom;
}

/// Dimension of the matroid polytope of M_pi.
inline int polytope_dim(const Partition& pi) {
  if (pi.length() < 2) throw validation_error("polytope_dim needs length >= 2");
  return pi.length() == 2 ? pi.weight() - 2 : pi.weight() - 1;
}

enum class BaseKind { Point, Moduli };

/// Dimension data of the thin Schubert cell G_pi as a torus bundle over its
/// parameter space (a point for length 2, M_{0,l} otherwise).
struct StratumGeometry {
  int n = 0;
  int torus_dim = 0;
  BaseKind base_kind = BaseKind::Point;
  int moduli_marks = 0;  // l when base_kind == Moduli
  int base_dim = 0;
  int cell_dim = 0;
  bool rigid = false;
};

inline StratumGeometry stratum_geometry(int n, const Partition& pi) {
  if (!pi.is_partial_partition(n))
    throw validation_error("stratum_geometry: partition is not in Pi_n");
  StratumGeometry g;
  g.n = n;
  const int w = pi.weight(), l = pi.length();
  g.torus_dim = (l == 2) ? w - 2 : w - 1;
  if (l == 2) {
    g.base_kind = BaseKind::Point;
    g.base_dim = 0;
  } else {
    g.base_kind = BaseKind::Moduli;
    g.moduli_marks = l;
    g.base_dim = l - 3;
  }
  g.cell_dim = w + l - 4;
  g.rigid = l <= 3;
  return g;
}

/// Dimension of the invariant subvariety V_pi(y) where e = codim of the base
/// subvariety y in the parameter space.
inline int invariant_subvariety_dim(int n, const Partition& pi, int e) {
  if (!pi.is_partial_partition(n))
    throw validation_error("invariant_subvariety_dim: partition is not in Pi_n");
  const int l = pi.length();
  if (l <= 3) {
    if (e != 0) throw validation_error("invariant_subvariety_dim: rigid case requires e = 0");
  } else if (e < 0 || e > l - 3) {
    throw validation_error("invariant_subvariety_dim: need 0 <= e <= length - 3");
  }
  return pi.weight() + l - 4 - e;
}

/// The canonical set partition of [w(pi)] into consecutive intervals, block of
/// size k_l first (smallest starting index). Block i here corresponds to the
/// index l-i in the P_1..P_l convention where P_1 is largest.
inline std::vector<std::vector<int>> canonical_set_partition(const Partition& pi) {
  std::vector<std::vector<int>> blocks;
  int next = 1;
  const auto& parts = pi.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    std::vector<int> block(*it);
    std::iota(block.begin(), block.end(), next);
    next += *it;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

/// Index bijection R between Schubert pairs (a1,a2) and Schubert partitions.
inline Partition schubert_pair_to_partition(int n, int a1, int a2) {
  if (!(n - 2 >= a1 && a1 >= a2 && a2 >= 0))
    throw validation_error("schubert_pair_to_partition: need n-2 >= a1 >= a2 >= 0");
  std::vector<int> parts;
  parts.push_back(a1 - a2 + 1);
  parts.insert(parts.end(), n - a1 - 1, 1);
  return Partition(std::move(parts));
}

inline std::pair<int, int> partition_to_schubert_pair(int n, const Partition& pi) {
  if (!pi.is_partial_partition(n) || !pi.is_schubert())
    throw validation_error("partition_to_schubert_pair: partition is not Schubert in Pi_n");
  return {n - pi.length(), n - pi.weight()};
}

}  // namespace schubert2
