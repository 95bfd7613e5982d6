#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "schubert2/error.hpp"
#include "schubert2/schubert.hpp"

namespace schubert2 {

/// Shapes here are plain partitions as weakly decreasing part lists; the empty
/// list is the unit s_{()} = 1.
using Shape = std::vector<int>;

/// Symmetric polynomial in nvars variables, exponent vector -> coefficient.
/// Lex-greatest exponent first, so begin() is the leading monomial.
using SymPoly = std::map<std::vector<int>, long long, std::greater<std::vector<int>>>;

namespace detail {

/// Enumerate semistandard tableaux of the given shape with entries in
/// 1..nvars, accumulating one monomial per tableau.
inline void ssyt_rec(const Shape& shape, int nvars, std::vector<std::vector<int>>& tab,
                     int row, int col, std::vector<int>& content, SymPoly& out) {
  if (row == static_cast<int>(shape.size())) {
    out[content] += 1;
    return;
  }
  if (col == shape[static_cast<std::size_t>(row)]) {
    ssyt_rec(shape, nvars, tab, row + 1, 0, content, out);
    return;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, tab[row][col - 1]);        // rows weakly increase
  if (row > 0) lo = std::max(lo, tab[row - 1][col] + 1);    // columns strictly increase
  for (int v = lo; v <= nvars; ++v) {
    tab[row][col] = v;
    ++content[v - 1];
    ssyt_rec(shape, nvars, tab, row, col + 1, content, out);
    --content[v - 1];
  }
}

}  // namespace detail

/// Schur polynomial s_shape(x_1..x_nvars) by direct tableau enumeration.
inline SymPoly schur_polynomial(const Shape& shape, int nvars) {
  for (std::size_t i = 0; i + 1 < shape.size(); ++i)
    if (shape[i] < shape[i + 1]) throw validation_error("shape must be weakly decreasing");
  if (!shape.empty() && shape.back() < 1) throw validation_error("shape parts must be positive");
  SymPoly out;
  if (static_cast<int>(shape.size()) > nvars) return out;  // vanishes
  std::vector<std::vector<int>> tab;
  for (int len : shape) tab.emplace_back(len);
  std::vector<int> content(nvars, 0);
  detail::ssyt_rec(shape, nvars, tab, 0, 0, content, out);
  return out;
}

/// Expansion of an arbitrary symmetric polynomial in the Schur basis by
/// leading-monomial elimination (the lex-leading monomial of s_lambda is
/// x^lambda).
inline std::map<Shape, long long> schur_expand(SymPoly poly, int nvars) {
  std::map<Shape, long long> out;
  while (!poly.empty()) {
    auto [expo, coeff] = *poly.begin();
    Shape shape;
    for (std::size_t i = 0; i + 1 < expo.size(); ++i)
      if (expo[i] < expo[i + 1])
        throw invariant_error("leading exponent not a partition; input not symmetric?");
    for (int e : expo)
      if (e > 0) shape.push_back(e);
    for (auto& [mono, c] : schur_polynomial(shape, nvars)) poly[mono] -= coeff * c;
    std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
    out[shape] += coeff;
  }
  return out;
}

/// Littlewood-Richardson product s_lam * s_mu as a Schur expansion, computed
/// purely by tableau enumeration in enough variables that nothing vanishes.
/// Bounded (|lam|+|mu| <= 8); used as an independent test oracle.
inline std::map<Shape, long long> schur_product_oracle(const Shape& lam, const Shape& mu,
                                                       int nvars = 0) {
  const int total = std::accumulate(lam.begin(), lam.end(), 0) +
                    std::accumulate(mu.begin(), mu.end(), 0);
  if (total > 8) throw validation_error("schur_product_oracle: combined size must be <= 8");
  if (nvars == 0) nvars = std::max(total, 1);
  if (nvars < total) throw validation_error("schur_product_oracle: nvars too small, truncation would occur");
  SymPoly a = schur_polynomial(lam, nvars);
  SymPoly b = schur_polynomial(mu, nvars);
  SymPoly prod;
  for (auto& [m1, c1] : a)
    for (auto& [m2, c2] : b) {
      std::vector<int> m(m1.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
      prod[m] += c1 * c2;
    }
  return schur_expand(std::move(prod), nvars);
}

/// Whether a shape is a hook (second row of length <= 1, nonempty).
inline bool shape_is_hook(const Shape& s) {
  return !s.empty() && (s.size() < 2 || s[1] <= 1);
}

/// Hook shape (m-d+1, 1^{d-1}) <-> HookTerm translation.
inline Shape hook_shape(const HookTerm& h) {
  Shape s{h.m - h.d + 1};
  s.insert(s.end(), static_cast<std::size_t>(h.d - 1), 1);
  return s;
}

inline HookTerm hook_from_shape(const Shape& s) {
  if (!shape_is_hook(s)) throw validation_error("shape is not a hook");
  int d = static_cast<int>(s.size());
  int m = std::accumulate(s.begin(), s.end(), 0);
  return HookTerm(d, m);
}

}  // namespace schubert2
