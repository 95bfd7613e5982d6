#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schubert2/error.hpp"
#include "schubert2/orbit.hpp"
#include "schubert2/partition.hpp"
#include "schubert2/schubert.hpp"

namespace schubert2 {

/// One irreducible T-invariant p-cycle type: a partition pi together with the
/// codimension e of the base subvariety in the parameter space. Rows with
/// e = 0 carry the class of the stratum closure.
struct FixedLocusRow {
  Partition pi;
  int e = 0;
  StratumGeometry geometry;
  std::optional<ClassVector> class_if_orbit;  // gamma(n, pi) when e == 0
};

/// All (pi, e) with pi in Pi_n and dim V_pi(y) = p, sorted by length, weight,
/// then parts.
inline std::vector<FixedLocusRow> fixed_locus_table(int n, int p) {
  if (n < 2) throw validation_error("fixed_locus_table: n >= 2 required");
  if (p < 0 || p > 2 * (n - 2)) throw validation_error("fixed_locus_table: p out of range");
  std::vector<FixedLocusRow> rows;
  for (const Partition& pi : enumerate_partial_partitions(n)) {
    const int emax = std::max(pi.length() - 3, 0);
    for (int e = 0; e <= emax; ++e) {
      if (invariant_subvariety_dim(n, pi, e) != p) continue;
      FixedLocusRow row{pi, e, stratum_geometry(n, pi), std::nullopt};
      if (e == 0) row.class_if_orbit = gamma(n, pi);
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const FixedLocusRow& a, const FixedLocusRow& b) {
    return std::tuple(a.pi.length(), a.pi.weight(), a.pi.parts()) <
           std::tuple(b.pi.length(), b.pi.weight(), b.pi.parts());
  });
  return rows;
}

/// chi(M_{0,l}) = prod_{j=4}^{l} (3-j) = (-1)^{l-3} (l-3)!.
inline long long moduli_euler_char(int l) {
  if (l < 3) throw validation_error("moduli_euler_char needs l >= 3");
  long long chi = 1;
  for (int j = 4; j <= l; ++j) chi *= 3 - j;
  return chi;
}

/// Euler characteristic of the m-th symmetric power of a space with Euler
/// characteristic chi: (-1)^m C(-chi, m), i.e. the t^m coefficient of
/// (1-t)^{-chi}.
inline bigint sym_power_euler(long long chi, int m) {
  if (m < 0) throw validation_error("sym_power_euler needs m >= 0");
  bigint b = binomial(bigint(-chi), m);
  return (m % 2 == 0) ? b : -b;
}

struct NonIsolatedFixedLocus : validation_error {
  explicit NonIsolatedFixedLocus(const std::string& what) : validation_error(what) {}
};

/// Coefficients of an Euler-Chow series over the monoid of degree vectors.
/// Degrees are exponent vectors against the homology basis generators of
/// H_{2p}; when there is a single generator, dense() gives the usual list.
struct SeriesCoefficients {
  int n = 0;
  int p = 0;
  int max_degree = 0;
  std::vector<SchubertIndex> generators;                      // descending (a1,a2)
  std::map<std::vector<int>, bigint> entries;                 // lex ascending

  std::vector<bigint> dense() const {
    if (generators.size() != 1)
      throw validation_error("dense series view requires a single generator");
    std::vector<bigint> out(static_cast<std::size_t>(max_degree) + 1, 0);
    for (auto& [v, c] : entries) out[static_cast<std::size_t>(v[0])] = c;
    return out;
  }
};

namespace detail {

inline std::vector<SchubertIndex> homology_generators(int n, int p) {
  // s_{a1,a2} has homology dimension a1+a2
  std::vector<SchubertIndex> gens;
  for (int a1 = n - 2; a1 >= 0; --a1) {
    int a2 = p - a1;
    if (a2 >= 0 && a2 <= a1) gens.push_back({a1, a2});
  }
  return gens;
}

/// Multiply a truncated multivariate series by 1/(1 - t^step) in place.
/// Works because states are visited in ascending lex order and step > 0.
inline void geometric_factor(std::map<std::vector<int>, bigint>& coeffs,
                             const std::vector<int>& step, int max_degree) {
  if (std::all_of(step.begin(), step.end(), [](int x) { return x == 0; }))
    throw invariant_error("zero degree vector in series factor");
  for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
    std::vector<int> next = it->first;
    bool in_box = true;
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] += step[i];
      if (next[i] > max_degree) in_box = false;
    }
    if (in_box && it->second != 0) coeffs[next] += it->second;
  }
}

}  // namespace detail

/// Euler-Chow coefficients for (n, p) when the fixed locus is a finite set of
/// orbit closures (every row rigid): the product over fixed subvarieties Y of
/// 1/(1 - t^{[Y]}), each orbit type repeated tau_n(pi) times.
inline SeriesCoefficients isolated_series(int n, int p, int max_degree) {
  if (max_degree < 0) throw validation_error("isolated_series: max_degree >= 0 required");
  auto rows = fixed_locus_table(n, p);
  std::string offending;
  for (const auto& row : rows)
    if (row.pi.length() > 3) offending += row.pi.to_string() + " ";
  if (!offending.empty())
    throw NonIsolatedFixedLocus("fixed locus not isolated; positive-dimensional rows: " + offending);

  SeriesCoefficients s;
  s.n = n;
  s.p = p;
  s.max_degree = max_degree;
  s.generators = detail::homology_generators(n, p);
  const std::size_t g = s.generators.size();
  s.entries[std::vector<int>(g, 0)] = 1;
  for (const auto& row : rows) {
    ClassVector h = orbit_homology(n, row.pi);
    std::vector<int> step(g, 0);
    for (std::size_t i = 0; i < g; ++i) {
      long long c = h.coefficient(s.generators[i]);
      if (c < 0) throw invariant_error("negative degree component in fixed-locus class");
      step[i] = static_cast<int>(c);
    }
    bigint count = orbit_count(n, row.pi);
    for (bigint rep = 0; rep < count; ++rep)
      detail::geometric_factor(s.entries, step, max_degree);
  }
  std::erase_if(s.entries, [](const auto& kv) { return kv.second == 0; });
  return s;
}

/// Degree-d coefficients of the 3-cycle Euler-Chow series of G(2,4), via the
/// fixed-locus pipeline: six degree-1 orbit families plus a one-parameter
/// family of degree-2 orbits whose symmetric powers contribute through
/// chi(M_{0,4}) = -1. Closed form: C(d+5,5) - C(d+3,5).
inline SeriesCoefficients g24_threecycle_coefficients(int max_degree) {
  if (max_degree < 0) throw validation_error("max_degree >= 0 required");
  SeriesCoefficients s;
  s.n = 4;
  s.p = 3;
  s.max_degree = max_degree;
  s.generators = detail::homology_generators(4, 3);  // single generator s_{2,1}
  const long long chi_base = moduli_euler_char(4);
  for (int d = 0; d <= max_degree; ++d) {
    bigint total = 0;
    for (int m = 0; 2 * m <= d; ++m) {
      // number of 6-tuples of nonnegative integers summing to d - 2m
      bigint tuples = binomial(bigint(d - 2 * m + 5), 5);
      total += sym_power_euler(chi_base, m) * tuples;
    }
    if (total != 0) s.entries[{d}] = total;
  }
  return s;
}

}  // namespace schubert2
