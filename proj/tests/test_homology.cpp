#include <random>

#include "catch_amalgamated.hpp"
#include "mfc/mfc.hpp"
#include "oracles.hpp"

using namespace mfc;

namespace {

SparseMatrix dense_to_sparse(const std::vector<std::vector<std::int64_t>>& a) {
  SparseMatrix m(a.size(), a.empty() ? 0 : a[0].size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a[r].size(); ++c)
      if (a[r][c]) m.add(static_cast<std::uint32_t>(r), c, a[r][c]);
  m.normalize();
  return m;
}

// Six-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane() {
  return build_complex(std::vector<std::vector<long long>>{{1, 2, 4}, {2, 3, 4}, {1, 3, 5}, {2, 3, 5}, {1, 4, 5},
                                                           {1, 2, 6}, {1, 3, 6}, {3, 4, 6}, {4, 5, 6}, {2, 5, 6}});
}

}  // namespace

TEST_CASE("Smith normal form") {
  auto s = smith(dense_to_sparse({{2}}));
  CHECK(s.rank == 1);
  REQUIRE(s.torsion.size() == 1);
  CHECK(s.torsion[0] == 2);
  auto t = smith(dense_to_sparse({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  CHECK(t.rank == 3);
  CHECK(t.torsion == std::vector<BigInt>{2, 6, 12});
  auto z = smith(dense_to_sparse({{0, 0}, {0, 0}}));
  CHECK(z.rank == 0);
  CHECK(z.torsion.empty());
}

TEST_CASE("64-bit and arbitrary-precision Smith forms agree") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = std::uniform_int_distribution<int>(1, 7)(rng), c = std::uniform_int_distribution<int>(1, 7)(rng);
    std::vector<std::vector<std::int64_t>> a(r, std::vector<std::int64_t>(c));
    for (auto& row : a)
      for (auto& v : row) v = std::uniform_int_distribution<int>(-3, 3)(rng);
    auto m = dense_to_sparse(a);
    auto fast = smith(m), slow = smith_bigint(m);
    CHECK(fast.rank == slow.rank);
    CHECK(fast.torsion == slow.torsion);
    CHECK(fast.rank == oracle::rank_mod_p(a));
  }
}

TEST_CASE("Smith form survives 64-bit overflow") {
  const std::int64_t big = std::int64_t{1} << 40;
  auto m = dense_to_sparse({{big, big + 2, 3}, {big - 1, big, 5}, {7, big + 3, big}});
  auto s = smith(m);
  auto ref = smith_bigint(m);
  CHECK(s.rank == ref.rank);
  CHECK(s.torsion == ref.torsion);
}

TEST_CASE("mod-2 rank matches the dense oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = std::uniform_int_distribution<int>(1, 70)(rng), c = std::uniform_int_distribution<int>(1, 70)(rng);
    SparseMatrix m(r, c);
    std::vector<std::vector<std::uint64_t>> bits(c, std::vector<std::uint64_t>((r + 63) / 64, 0));
    for (int j = 0; j < c; ++j)
      for (int i = 0; i < r; ++i)
        if (rng() % 4 == 0) {
          m.add(i, j, 1);
          bits[j][i / 64] |= std::uint64_t{1} << (i % 64);
        }
    m.normalize();
    CHECK(rank_mod2(m) == oracle::rank_f2(bits));
  }
}

TEST_CASE("small chain complexes") {
  ChainComplex single;
  single.lowest_degree = 3;
  single.dims = {1};
  single.boundaries.emplace_back(0, 1);
  CHECK(homology_mod2(single).rank(3) == 1);
  auto point = generate("simplex:0");
  CHECK(simplicial_homology_mod2(point, false).ranks == std::map<std::pair<int, int>, std::size_t>{{{0, 0}, 1}});
  CHECK(simplicial_homology_mod2(point, true).total_rank() == 0);
  auto empty = SimplicialComplex::from_closed({}, {});
  CHECK(simplicial_homology_integer(empty, true).rank(-1) == 1);
  CHECK(simplicial_homology_integer(empty, false).total_rank() == 0);
}

TEST_CASE("boundary maps must compose to zero") {
  ChainComplex bad;
  bad.dims = {1, 1, 1};
  bad.boundaries.emplace_back(0, 1);
  SparseMatrix a(1, 1), b(1, 1);
  a.add(0, 0, 1);
  b.add(0, 0, 1);
  bad.boundaries.push_back(a);
  bad.boundaries.push_back(b);
  CHECK_THROWS_AS(homology_mod2(bad), InternalError);
  CHECK_THROWS_AS(homology_integer(bad), InternalError);
}

TEST_CASE("simplicial homology") {
  auto hollow = generate("cycle:3");
  auto h = simplicial_homology_integer(hollow, false);
  CHECK(h.rank(0) == 1);
  CHECK(h.rank(1) == 1);
  CHECK(h.torsion_free());
  auto rp2 = projective_plane();
  auto hz = simplicial_homology_integer(rp2, true);
  CHECK(hz.total_rank() == 0);
  REQUIRE(hz.torsion.count(1));
  CHECK(hz.torsion.at(1) == std::vector<BigInt>{2});
  auto h2 = simplicial_homology_mod2(rp2, true);
  CHECK(h2.rank(1) == 1);
  CHECK(h2.rank(2) == 1);
}

TEST_CASE("homology of matching complexes") {
  auto M = matching_complex(generate("complete:3"));
  auto h = simplicial_homology_mod2(M, false);
  CHECK(h.rank(0) == 1);
  CHECK(h.rank(1) == 2);
  CHECK(h.total_rank() == 3);
  auto t = filtered_homology(generate("complete:3"), 1);
  CHECK(t.ranks == std::map<std::pair<int, int>, std::size_t>{{{1, 0}, 2}});
  CHECK(filtered_homology(generate("simplex:2"), 0).rank(1) == 4);
  CHECK(filtered_homology(generate("simplex:2"), 1).rank(1) == 2);
  auto k5 = filtered_homology(generate("complete:5"), 1);
  CHECK(k5.rank(3) == 5);
  CHECK(k5.rank(4) == 23);
}

TEST_CASE("integer and mod-2 Betti numbers agree without torsion") {
  for (auto spec : {"cycle:5", "complete:4", "simplex:2", "pseudotree:4:0,1"}) {
    auto X = generate(spec);
    for (int k = 0; k <= 1; ++k) {
      auto M = filtration_complex(X, k);
      auto z = simplicial_homology_integer(M, true);
      auto f = simplicial_homology_mod2(M, true);
      REQUIRE(z.torsion_free());
      CHECK(z.ranks == f.ranks);
      std::vector<std::vector<int>> simplices;
      for (const auto& s : M.simplices()) simplices.emplace_back(s.begin(), s.end());
      std::map<int, std::size_t> mine;
      for (const auto& [key, r] : z.ranks) mine[key.first] = r;
      CHECK(mine == oracle::reduced_betti(simplices, false));
    }
  }
}
