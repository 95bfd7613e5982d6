#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schubert2/error.hpp"
#include "schubert2/partition.hpp"

namespace schubert2 {

/// Index (a1, a2) of a Schubert class in G(2,n), n-2 >= a1 >= a2 >= 0.
struct SchubertIndex {
  int a1 = 0;
  int a2 = 0;
  int degree() const { return a1 + a2; }
  friend auto operator<=>(const SchubertIndex&, const SchubertIndex&) = default;
};

struct IndexDescending {
  bool operator()(const SchubertIndex& x, const SchubertIndex& y) const {
    return std::pair(x.a1, x.a2) > std::pair(y.a1, y.a2);
  }
};

enum class Grading { Cohomology, Homology };

/// A homogeneous integer combination of Schubert indices for a fixed n.
/// The same index set serves cohomology classes sigma_a and homology classes
/// s_a = delta(sigma_a); the grading flag records which convention is meant.
class ClassVector {
 public:
  using Terms = std::map<SchubertIndex, long long, IndexDescending>;

  ClassVector(int n, Grading grading) : n_(n), grading_(grading) {
    if (n < 2) throw validation_error("ClassVector requires n >= 2");
  }

  static ClassVector single(int n, Grading g, SchubertIndex idx, long long coeff = 1) {
    ClassVector v(n, g);
    v.add_term(idx, coeff);
    return v;
  }

  static ClassVector unit(int n) {
    return single(n, Grading::Cohomology, {0, 0});
  }

  int ambient_n() const { return n_; }
  Grading grading() const { return grading_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Common a1+a2 of the terms; meaningful only when nonzero.
  int degree() const {
    if (terms_.empty()) throw invariant_error("degree of zero class");
    return terms_.begin()->first.degree();
  }

  void add_term(SchubertIndex idx, long long coeff) {
    if (coeff == 0) return;
    if (!(n_ - 2 >= idx.a1 && idx.a1 >= idx.a2 && idx.a2 >= 0))
      throw validation_error("index out of range for ambient n");
    if (!terms_.empty() && idx.degree() != degree())
      throw invariant_error("class vector must be homogeneous");
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
      terms_.emplace(idx, coeff);
    } else if ((it->second += coeff) == 0) {
      terms_.erase(it);
    }
  }

  ClassVector& operator+=(const ClassVector& other) {
    if (other.n_ != n_ || other.grading_ != grading_)
      throw validation_error("cannot add classes with different ambient n or grading");
    for (auto& [idx, c] : other.terms_) add_term(idx, c);
    return *this;
  }

  ClassVector& operator*=(long long scalar) {
    if (scalar == 0) {
      terms_.clear();
    } else {
      for (auto& [idx, c] : terms_) c *= scalar;
    }
    return *this;
  }

  long long coefficient(SchubertIndex idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? 0 : it->second;
  }

  friend bool operator==(const ClassVector& a, const ClassVector& b) {
    return a.n_ == b.n_ && a.grading_ == b.grading_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    const char* sym = grading_ == Grading::Cohomology ? "sigma" : "s";
    for (auto& [idx, c] : terms_) {
      if (!s.empty()) s += "+";
      if (c != 1) s += std::to_string(c) + "*";
      s += std::string(sym) + "(" + std::to_string(idx.a1) + "," + std::to_string(idx.a2) + ")";
    }
    return s;
  }

 private:
  int n_;
  Grading grading_;
  Terms terms_;
};

/// sigma_k(m): the class of the Schubert variety of lines W in G(2,m) with
/// W meeting the (m-k)-th flag space, as an element of H^*(G(2,n)).
inline ClassVector sigma(int k, int m, int n) {
  if (!(1 <= k && k < m && m <= n))
    throw validation_error("sigma: need 1 <= k < m <= n");
  return ClassVector::single(n, Grading::Cohomology, {k + n - m - 1, n - m});
}

/// Pieri-type closed form for d = 2: sigma_a sigma_b = sum of sigma_c with
/// |c| = |a| + |b| and a1+b1 >= c1 >= a1+b2 (after arranging a1-a2 >= b1-b2),
/// truncating terms with c1 > n-2.
inline ClassVector multiply(const ClassVector& u, const ClassVector& v) {
  if (u.ambient_n() != v.ambient_n())
    throw validation_error("multiply: mismatched ambient n");
  if (u.grading() != Grading::Cohomology || v.grading() != Grading::Cohomology)
    throw validation_error("multiply: both factors must be cohomology classes");
  const int n = u.ambient_n();
  ClassVector out(n, Grading::Cohomology);
  for (auto& [a, ca] : u.terms()) {
    for (auto& [b, cb] : v.terms()) {
      SchubertIndex x = a, y = b;
      if (x.a1 - x.a2 < y.a1 - y.a2) std::swap(x, y);
      const int total = x.degree() + y.degree();
      for (int c1 = x.a1 + y.a2; c1 <= x.a1 + y.a1; ++c1) {
        if (c1 > n - 2) continue;
        out.add_term({c1, total - c1}, ca * cb);
      }
    }
  }
  return out;
}

/// Polynomial in Z[x,y], exponent pair -> coefficient.
class BivariatePoly {
 public:
  using Monomial = std::pair<int, int>;  // (i, j) for x^i y^j
  using Terms = std::map<Monomial, long long, std::greater<Monomial>>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(Monomial m, long long c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else if ((it->second += c) == 0) {
      terms_.erase(it);
    }
  }

  BivariatePoly operator*(const BivariatePoly& other) const {
    BivariatePoly out;
    for (auto& [m1, c1] : terms_)
      for (auto& [m2, c2] : other.terms_)
        out.add({m1.first + m2.first, m1.second + m2.second}, c1 * c2);
    return out;
  }

  BivariatePoly& operator+=(const BivariatePoly& other) {
    for (auto& [m, c] : other.terms_) add(m, c);
    return *this;
  }

  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

/// s_{a1,a2} = sum_{i=a2}^{a1} x^{a1+a2-i} y^i, extended linearly.
inline BivariatePoly schur_poly(const ClassVector& u) {
  if (u.grading() != Grading::Cohomology)
    throw validation_error("schur_poly expects a cohomology class");
  BivariatePoly p;
  for (auto& [idx, c] : u.terms())
    for (int i = idx.a2; i <= idx.a1; ++i) p.add({idx.degree() - i, i}, c);
  return p;
}

struct NonSchurExpressible : validation_error {
  explicit NonSchurExpressible(const std::string& what) : validation_error(what) {}
};

/// Inverse of schur_poly by leading-term elimination: the lex-leading monomial
/// of s_{a,b} is x^a y^b with a >= b, so repeatedly strip coeff * s_{a,b}.
inline ClassVector expand_poly(const BivariatePoly& p, int n) {
  ClassVector out(n, Grading::Cohomology);
  BivariatePoly rest = p;
  while (!rest.is_zero()) {
    auto [mono, coeff] = *rest.terms().begin();
    auto [a, b] = mono;
    if (a < b) throw NonSchurExpressible("leading monomial is asymmetric");
    if (a > n - 2) throw NonSchurExpressible("leading exponent exceeds n-2");
    out.add_term({a, b}, coeff);
    BivariatePoly sub = schur_poly(ClassVector::single(n, Grading::Cohomology, {a, b}, -coeff));
    rest += sub;
  }
  return out;
}

/// Same elimination carried out in the untruncated ring (indices unbounded);
/// returns list of (index, coeff) with a1 possibly > n-2 for any n.
inline std::vector<std::pair<SchubertIndex, long long>> expand_poly_unbounded(const BivariatePoly& p) {
  std::vector<std::pair<SchubertIndex, long long>> out;
  BivariatePoly rest = p;
  while (!rest.is_zero()) {
    auto [mono, coeff] = *rest.terms().begin();
    auto [a, b] = mono;
    if (a < b) throw NonSchurExpressible("leading monomial is asymmetric");
    out.push_back({{a, b}, coeff});
    for (int i = b; i <= a; ++i) rest.add({a + b - i, i}, -coeff);
  }
  return out;
}

/// Cohomology class of the closed thin Schubert cell for pi:
/// gamma(pi) = sigma_1(n-1)^{n-w} * prod_i sigma_{k_i}(n).
inline ClassVector gamma(int n, const Partition& pi) {
  if (!pi.is_partial_partition(n))
    throw validation_error("gamma: partition is not in Pi_n");
  ClassVector acc = ClassVector::unit(n);
  for (int rep = pi.weight(); rep < n; ++rep) acc = multiply(acc, sigma(1, n - 1, n));
  for (int k : pi.parts())
    if (k > 1) acc = multiply(acc, sigma(k, n, n));
  const int expected = 2 * n - pi.weight() - pi.length();
  for (auto& [idx, c] : acc.terms()) {
    (void)c;
    if (idx.degree() != expected)
      throw invariant_error("gamma: term of unexpected codimension");
  }
  return acc;
}

/// Poincare duality as an index flip (a1,a2) -> (n-2-a2, n-2-a1); an involution
/// exchanging the cohomology and homology conventions.
inline ClassVector poincare_dual(const ClassVector& u) {
  const int n = u.ambient_n();
  ClassVector out(n, u.grading() == Grading::Cohomology ? Grading::Homology : Grading::Cohomology);
  for (auto& [idx, c] : u.terms()) out.add_term({n - 2 - idx.a2, n - 2 - idx.a1}, c);
  return out;
}

/// True iff some term s_{c1,c2} has c2 <= 1 and (c1,c2) != (0,0). Hook terms
/// certify torus-orbit closures.
inline bool contains_hook(const ClassVector& u) {
  if (u.grading() != Grading::Homology)
    throw validation_error("contains_hook expects a homology class; dualize first");
  for (auto& [idx, c] : u.terms()) {
    (void)c;
    if (idx.a2 <= 1 && !(idx.a1 == 0 && idx.a2 == 0)) return true;
  }
  return false;
}

/// The hook s_{h(d,m)}: shape (m-d+1, 1^{d-1}) of size m.
struct HookTerm {
  int d = 1;
  int m = 1;
  HookTerm(int d, int m) : d(d), m(m) {
    if (!(m >= d && d >= 1)) throw validation_error("hook needs m >= d >= 1");
  }
  friend auto operator<=>(const HookTerm&, const HookTerm&) = default;
};

using HookMultiset = std::map<HookTerm, long long>;

/// Iterated product of hooks modulo the ideal I spanned by s_a with a2 >= 2,
/// via s_{h(d,m)} s_{h(d',m')} = s_{h(d+d'-1,m+m')} + s_{h(d+d',m+m')} mod I.
inline HookMultiset hook_product_mod_I(const std::vector<HookTerm>& hooks) {
  if (hooks.empty()) throw validation_error("hook_product_mod_I: empty product");
  HookMultiset acc{{hooks.front(), 1}};
  for (std::size_t i = 1; i < hooks.size(); ++i) {
    const HookTerm& h = hooks[i];
    HookMultiset next;
    for (auto& [g, c] : acc) {
      next[HookTerm(g.d + h.d - 1, g.m + h.m)] += c;
      next[HookTerm(g.d + h.d, g.m + h.m)] += c;
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace schubert2
