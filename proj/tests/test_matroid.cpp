#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "schubert2/matroid.hpp"

using namespace schubert2;

namespace {

// every rank-2 matroid on [n]: choose the non-loop support, partition it into
// at least two parallel classes
std::vector<Rank2Matroid> all_rank2(int n) {
  std::vector<Rank2Matroid> out;
  for (Subset support = 0; support < (Subset{1} << n); ++support) {
    auto elems = subset_elements(support);
    if (elems.size() < 2) continue;
    // enumerate set partitions by restricted growth strings
    std::vector<int> rgs(elems.size(), 0);
    auto emit = [&]() {
      int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
      if (blocks < 2) return;
      std::vector<std::vector<int>> parts(blocks);
      for (std::size_t i = 0; i < elems.size(); ++i) parts[rgs[i]].push_back(elems[i]);
      out.push_back(Rank2Matroid(n, parts));
    };
    auto rec = [&](auto&& self, std::size_t i, int maxv) -> void {
      if (i == elems.size()) {
        emit();
        return;
      }
      for (int v = 0; v <= maxv + 1; ++v) {
        rgs[i] = v;
        self(self, i + 1, std::max(maxv, v));
      }
    };
    rec(rec, 1, 0);
  }
  return out;
}

}  // namespace

TEST_CASE("subset round trip") {
  std::vector<int> e{1, 3, 6};
  CHECK(subset_elements(subset_from_elements(e)) == e);
}

TEST_CASE("from_bases rejects non-matroids") {
  // {1,2} and {3,4} alone violate exchange
  CHECK_THROWS_AS(BasisMatroid::from_bases(
                      4, 2, {subset_from_elements({1, 2}), subset_from_elements({3, 4})}),
                  exchange_violation);
  CHECK_THROWS_AS(BasisMatroid::from_bases(3, 2, {subset_from_elements({1, 2, 3})}),
                  validation_error);
  CHECK_THROWS_AS(BasisMatroid::from_bases(3, 2, {}), validation_error);
}

TEST_CASE("uniform U_{2,4} basics") {
  std::vector<Subset> bases;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) bases.push_back(subset_from_elements({i, j}));
  auto m = BasisMatroid::from_bases(4, 2, bases);
  CHECK(m.bases().size() == 6);
  auto [loops, coloops] = m.classify_elements();
  CHECK(loops.empty());
  CHECK(coloops.empty());
  CHECK(m.components().size() == 1);
  CHECK(m.polytope_dimension() == 3);
  CHECK(m.beta_invariant() == 2);
}

TEST_CASE("beta invariant of canonical matroids") {
  // beta(M_pi) for loopless pi: U_{2,3} -> 1, (2,1,1) -> 1
  CHECK(rank2_from_partition(3, Partition({1, 1, 1})).as_basis_matroid().beta_invariant() == 1);
  CHECK(rank2_from_partition(4, Partition({2, 1, 1})).as_basis_matroid().beta_invariant() == 1);
  CHECK(rank2_from_partition(5, Partition({1, 1, 1, 1, 1})).as_basis_matroid().beta_invariant() ==
        3);
  // with only two parallel classes the matroid disconnects: beta = 0
  CHECK(rank2_from_partition(4, Partition({2, 2})).as_basis_matroid().beta_invariant() == 0);
}

TEST_CASE("rank2_from_partition produces interval blocks and loops") {
  auto m = rank2_from_partition(6, Partition({2, 2, 1}));
  CHECK(m.blocks() == std::vector<std::vector<int>>{{1}, {2, 3}, {4, 5}});
  CHECK(m.loops() == std::vector<int>{6});
  CHECK(m.shape() == Partition({2, 2, 1}));
  CHECK(m.bases().size() == 8);
}

TEST_CASE("rank2 structure recovery round trips") {
  for (const Partition& pi : enumerate_partial_partitions(5)) {
    auto m = rank2_from_partition(5, pi);
    CHECK(rank2_structure(m.as_basis_matroid()) == m);
  }
}

TEST_CASE("schubert matroid bases lie under the cap") {
  // n=4, d=2, a=(1,0): P(a) = (2,4); bases are pairs (i,j), i <= 2
  auto m = schubert_matroid(4, 2, {1, 0});
  std::vector<Subset> want;
  for (int i = 1; i <= 2; ++i)
    for (int j = i + 1; j <= 4; ++j) want.push_back(subset_from_elements({i, j}));
  std::sort(want.begin(), want.end());
  CHECK(m.bases() == want);
  CHECK_THROWS_AS(schubert_matroid(4, 2, {3, 0}), validation_error);
  CHECK_THROWS_AS(schubert_matroid(4, 2, {0, 1}), validation_error);
}

TEST_CASE("schubert matroids are rank-2 of Schubert shape") {
  // the Schubert matroid for (a1,a2) has parallel-class shape R(a1,a2)
  for (int n = 3; n <= 6; ++n) {
    for (int a1 = 0; a1 <= n - 2; ++a1) {
      for (int a2 = 0; a2 <= a1; ++a2) {
        auto m = schubert_matroid(n, 2, {a1, a2});
        CHECK(rank2_structure(m).shape() == schubert_pair_to_partition(n, a1, a2));
        CHECK(static_cast<int>(m.classify_elements().first.size()) == a2);
      }
    }
  }
}

TEST_CASE("degeneration moves") {
  auto m = rank2_from_partition(5, Partition({2, 2, 1}));  // blocks {1},{2,3},{4,5}
  auto f = f_minus(m, 1);
  CHECK(f.blocks() == std::vector<std::vector<int>>{{2, 3}, {4, 5}});
  CHECK(f.loops() == std::vector<int>{1});
  CHECK(lies_below(f, m));
  CHECK_FALSE(lies_below(m, f));

  auto b = b_minus(m, 0, 1);
  CHECK(b.blocks() == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}});
  CHECK(lies_below(b, m));

  CHECK_THROWS_AS(f_minus(rank2_from_partition(2, Partition({1, 1})), 1), validation_error);
  CHECK_THROWS_AS(b_minus(rank2_from_partition(4, Partition({2, 2})), 0, 1), validation_error);
  // loops cannot be degenerated again
  CHECK_THROWS_AS(f_minus(rank2_from_partition(6, Partition({2, 2, 1})), 6), validation_error);
}

TEST_CASE("f_minus on the final block element") {
  auto m = rank2_from_partition(5, Partition({2, 2, 1}));
  auto f = f_minus(m, 5);
  CHECK(f.blocks() == std::vector<std::vector<int>>{{1}, {2, 3}, {4}});
}

TEST_CASE("rank-2 matroid census matches tau sums") {
  for (int n = 2; n <= 5; ++n) {
    auto census = all_rank2(n);
    std::set<Rank2Matroid> distinct(census.begin(), census.end());
    bigint total = 0;
    for (const Partition& pi : enumerate_partial_partitions(n)) total += orbit_count(n, pi);
    CHECK(bigint(distinct.size()) == total);
  }
}

TEST_CASE("every rank-2 matroid validates as a basis matroid") {
  for (const auto& m : all_rank2(4)) CHECK_NOTHROW(m.as_basis_matroid());
}
