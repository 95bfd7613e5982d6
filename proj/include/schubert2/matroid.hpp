#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "schubert2/error.hpp"
#include "schubert2/partition.hpp"

namespace schubert2 {

/// One d-subset of [n], as a bitmask over bits 0..n-1 (element i -> bit i-1).
using Subset = std::uint64_t;

inline Subset subset_from_elements(const std::vector<int>& elems) {
  Subset s = 0;
  for (int e : elems) s |= Subset{1} << (e - 1);
  return s;
}

inline std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

struct exchange_violation : validation_error {
  exchange_violation(Subset I, Subset J, int i)
      : validation_error("basis exchange fails for I=" + describe(I) + ", J=" + describe(J) +
                         ", i=" + std::to_string(i)),
        I(I), J(J), i(i) {}
  static std::string describe(Subset s) {
    std::string r = "{";
    for (int e : subset_elements(s)) r += std::to_string(e) + ",";
    if (r.size() > 1) r.pop_back();
    return r + "}";
  }
  Subset I, J;
  int i;
};

/// A matroid given by an explicit family of bases, validated against the
/// exchange property on construction. Ground sets up to 64 elements;
/// everything here is sized for exhaustive small-case work (n <= 16 or so).
class BasisMatroid {
 public:
  static BasisMatroid from_bases(int n, int d, const std::vector<Subset>& bases) {
    if (n < 1 || n > 64) throw validation_error("ground set size must be in 1..64");
    if (d < 1 || d >= n) throw validation_error("rank must satisfy 0 < d < n");
    if (bases.empty()) throw validation_error("basis family must be non-empty");
    std::vector<Subset> b = bases;
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    for (Subset s : b) {
      if (std::popcount(s) != d) throw validation_error("basis of wrong cardinality");
      if (s >> n) throw validation_error("basis element outside ground set");
    }
    // exhaustive exchange check
    for (Subset I : b) {
      for (Subset J : b) {
        Subset only_I = I & ~J;
        for (Subset rest = only_I; rest;) {
          int bit = std::countr_zero(rest);
          rest &= rest - 1;
          Subset without = I & ~(Subset{1} << bit);
          bool found = false;
          for (Subset cand = J & ~I; cand;) {
            int jbit = std::countr_zero(cand);
            cand &= cand - 1;
            if (std::binary_search(b.begin(), b.end(), without | (Subset{1} << jbit))) {
              found = true;
              break;
            }
          }
          if (!found) throw exchange_violation(I, J, bit + 1);
        }
      }
    }
    return BasisMatroid(n, d, std::move(b));
  }

  int ground_size() const { return n_; }
  int rank() const { return d_; }
  const std::vector<Subset>& bases() const { return bases_; }  // sorted

  bool is_basis(Subset s) const {
    return std::binary_search(bases_.begin(), bases_.end(), s);
  }

  /// loops: elements in no basis; coloops: elements in every basis.
  std::pair<std::vector<int>, std::vector<int>> classify_elements() const {
    Subset in_some = 0, in_all = ~Subset{0};
    for (Subset b : bases_) {
      in_some |= b;
      in_all &= b;
    }
    Subset all = (n_ == 64) ? ~Subset{0} : (Subset{1} << n_) - 1;
    return {subset_elements(all & ~in_some), subset_elements(in_all & all)};
  }

  /// Connected components: classes of the transitive closure of the exchange
  /// relation i ~ j when (I \ i) u j is again a basis.
  std::vector<std::vector<int>> components() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (Subset I : bases_) {
      for (Subset J : bases_) {
        Subset diff = I ^ J;
        if (std::popcount(diff) == 2) {
          auto e = subset_elements(diff);
          int a = find(e[0] - 1), b = find(e[1] - 1);
          if (a != b) parent[a] = b;
        }
      }
    }
    std::vector<std::vector<int>> comps(n_);
    for (int i = 0; i < n_; ++i) comps[find(i)].push_back(i + 1);
    std::erase_if(comps, [](const auto& c) { return c.empty(); });
    return comps;
  }

  int polytope_dimension() const { return n_ - static_cast<int>(components().size()); }

  /// Rank of a subset: max intersection with a basis.
  int subset_rank(Subset a) const {
    int r = 0;
    for (Subset b : bases_) r = std::max(r, std::popcount(a & b));
    return r;
  }

  /// Beta invariant by the corank-nullity brute force over all 2^n subsets.
  /// Oracle-grade: meant for n <= 12.
  long long beta_invariant() const {
    long long sum = 0;
    Subset all = (n_ == 64) ? ~Subset{0} : (Subset{1} << n_) - 1;
    for (Subset a = 0;; ++a) {
      int sign = (std::popcount(a) % 2 == 0) ? 1 : -1;
      sum += sign * subset_rank(a);
      if (a == all) break;
    }
    return (d_ % 2 == 0 ? 1 : -1) * sum;
  }

 private:
  BasisMatroid(int n, int d, std::vector<Subset> bases)
      : n_(n), d_(d), bases_(std::move(bases)) {}
  int n_, d_;
  std::vector<Subset> bases_;
};

/// Schubert matroid for an index sequence n-d >= a_1 >= ... >= a_d >= 0:
/// bases are the d-subsets termwise below P(a) = (n-d+1-a_1, n-d+2-a_2, ...).
inline BasisMatroid schubert_matroid(int n, int d, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != d) throw validation_error("index sequence must have d entries");
  int prev = n - d;
  for (int ai : a) {
    if (ai > prev || ai < 0) throw validation_error("need n-d >= a_1 >= ... >= a_d >= 0");
    prev = ai;
  }
  std::vector<int> cap(d);
  for (int k = 0; k < d; ++k) cap[k] = n - d + 1 + k - a[k];
  std::vector<Subset> bases;
  std::vector<int> tuple(d);
  // enumerate increasing d-tuples below the cap
  auto rec = [&](auto&& self, int k, int low) -> void {
    if (k == d) {
      bases.push_back(subset_from_elements(tuple));
      return;
    }
    for (int v = low; v <= cap[k]; ++v) {
      tuple[k] = v;
      self(self, k + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
  return BasisMatroid::from_bases(n, d, bases);
}

/// A rank-2 matroid in structured form: parallel classes plus loops.
class Rank2Matroid {
 public:
  Rank2Matroid(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (blocks_.size() < 2) throw validation_error("rank-2 matroid needs at least 2 parallel classes");
    Subset seen = 0;
    for (auto& blk : blocks_) {
      if (blk.empty()) throw validation_error("empty parallel class");
      std::sort(blk.begin(), blk.end());
      for (int e : blk) {
        if (e < 1 || e > n) throw validation_error("element outside ground set");
        Subset bit = Subset{1} << (e - 1);
        if (seen & bit) throw validation_error("parallel classes must be disjoint");
        seen |= bit;
      }
    }
    std::sort(blocks_.begin(), blocks_.end());
  }

  int ground_size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  std::vector<int> loops() const {
    std::vector<bool> used(n_ + 1, false);
    for (const auto& blk : blocks_)
      for (int e : blk) used[e] = true;
    std::vector<int> out;
    for (int e = 1; e <= n_; ++e)
      if (!used[e]) out.push_back(e);
    return out;
  }

  /// The partial 2-transversals: pairs across distinct blocks.
  std::vector<Subset> bases() const {
    std::vector<Subset> out;
    for (std::size_t p = 0; p < blocks_.size(); ++p)
      for (std::size_t q = p + 1; q < blocks_.size(); ++q)
        for (int i : blocks_[p])
          for (int j : blocks_[q])
            out.push_back((Subset{1} << (i - 1)) | (Subset{1} << (j - 1)));
    std::sort(out.begin(), out.end());
    return out;
  }

  BasisMatroid as_basis_matroid() const {
    return BasisMatroid::from_bases(n_, 2, bases());
  }

  /// The partition of the non-loop weight by block sizes.
  Partition shape() const {
    std::vector<int> parts;
    for (const auto& blk : blocks_) parts.push_back(static_cast<int>(blk.size()));
    return Partition(std::move(parts));
  }

  friend bool operator==(const Rank2Matroid& a, const Rank2Matroid& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend bool operator<(const Rank2Matroid& a, const Rank2Matroid& b) {
    return std::tie(a.n_, a.blocks_) < std::tie(b.n_, b.blocks_);
  }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;  // kept sorted for canonical equality
};

/// The canonical representative M_pi on [n]: consecutive-interval blocks on
/// [w(pi)] and loops w(pi)+1..n.
inline Rank2Matroid rank2_from_partition(int n, const Partition& pi) {
  if (!pi.is_partial_partition(n))
    throw validation_error("rank2_from_partition: partition is not in Pi_n");
  return Rank2Matroid(n, canonical_set_partition(pi));
}

/// Recovers the parallel-class structure from a validated rank-2 basis family.
inline Rank2Matroid rank2_structure(const BasisMatroid& m) {
  if (m.rank() != 2) throw validation_error("rank2_structure needs a rank-2 matroid");
  auto [loops, coloops] = m.classify_elements();
  (void)coloops;
  Subset loop_mask = subset_from_elements(loops);
  const int n = m.ground_size();
  // parallelism: non-loops i,j with {i,j} not a basis
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 1; i <= n; ++i) {
    if (loop_mask & (Subset{1} << (i - 1))) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (loop_mask & (Subset{1} << (j - 1))) continue;
      Subset pair = (Subset{1} << (i - 1)) | (Subset{1} << (j - 1));
      if (!m.is_basis(pair)) parent[find(i - 1)] = find(j - 1);
    }
  }
  std::vector<std::vector<int>> classes(n);
  for (int i = 1; i <= n; ++i)
    if (!(loop_mask & (Subset{1} << (i - 1)))) classes[find(i - 1)].push_back(i);
  std::erase_if(classes, [](const auto& c) { return c.empty(); });
  return Rank2Matroid(n, std::move(classes));
}

/// Degeneration move F^-: turn non-loop i into a loop.
inline Rank2Matroid f_minus(const Rank2Matroid& m, int i) {
  auto blocks = m.blocks();
  for (auto it = blocks.begin(); it != blocks.end(); ++it) {
    auto pos = std::find(it->begin(), it->end(), i);
    if (pos == it->end()) continue;
    it->erase(pos);
    if (it->empty()) {
      if (blocks.size() <= 2)
        throw validation_error("f_minus would leave fewer than 2 parallel classes");
      blocks.erase(it);
    }
    return Rank2Matroid(m.ground_size(), std::move(blocks));
  }
  throw validation_error("f_minus: element is a loop");
}

/// Degeneration move B^-: merge parallel classes p and q (indices into blocks()).
inline Rank2Matroid b_minus(const Rank2Matroid& m, std::size_t p, std::size_t q) {
  auto blocks = m.blocks();
  if (blocks.size() < 3) throw validation_error("b_minus needs at least 3 parallel classes");
  if (p == q || p >= blocks.size() || q >= blocks.size())
    throw validation_error("b_minus: bad block indices");
  if (p > q) std::swap(p, q);
  blocks[p].insert(blocks[p].end(), blocks[q].begin(), blocks[q].end());
  blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(q));
  return Rank2Matroid(m.ground_size(), std::move(blocks));
}

/// Weak order: true iff every basis of lo is a basis of hi. Equivalent to
/// reachability of lo from hi by F^-/B^- moves.
inline bool lies_below(const Rank2Matroid& lo, const Rank2Matroid& hi) {
  if (lo.ground_size() != hi.ground_size())
    throw validation_error("lies_below: mismatched ground sets");
  auto bl = lo.bases(), bh = hi.bases();
  return std::includes(bh.begin(), bh.end(), bl.begin(), bl.end());
}

}  // namespace schubert2
