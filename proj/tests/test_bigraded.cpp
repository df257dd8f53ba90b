#include "catch_amalgamated.hpp"
#include "mfc/mfc.hpp"
#include "oracles.hpp"

using namespace mfc;

namespace {

using Ranks = std::map<std::pair<int, int>, std::size_t>;

}  // namespace

TEST_CASE("bigraded cells of the triangle") {
  auto cc = BigradedChainComplex::build(generate("cycle:3"));
  CHECK(cc.dim(-1, 0) == 1);
  CHECK(cc.dim(0, 0) == 6);
  CHECK(cc.dim(1, 0) == 9);
  CHECK(cc.dim(2, 1) == 2);
  CHECK(cc.dim(2, 0) == 0);
  CHECK(cc.max_filtration() == 1);
  CHECK(cc.max_degree() == 2);
}

TEST_CASE("horizontal homology examples") {
  const Ranks expected{{{0, 0}, 1}, {{1, 0}, 4}, {{2, 1}, 2}};
  CHECK(horizontal_homology(generate("cycle:3")).ranks == expected);
  CHECK(horizontal_homology(generate("simplex:2")).ranks == expected);
  auto reduced = horizontal_homology(generate("cycle:3"), true);
  CHECK(reduced.ranks == Ranks{{{1, 0}, 4}, {{2, 1}, 2}});
  for (auto spec : {"path:5", "star:4", "pseudotree:3:0"}) {
    auto X = generate(spec);
    if (eta(X) != 0) continue;
    Ranks morse;
    for (const auto& [key, r] : simplicial_homology_mod2(morse_complex(X), false).ranks) morse[key] = r;
    CHECK(horizontal_homology(X).ranks == morse);
  }
}

TEST_CASE("diagonal homology examples") {
  CHECK(diagonal_homology(generate("cycle:3")).ranks == Ranks{{{0, 0}, 6}, {{1, 0}, 7}});
  for (auto spec : {"path:4", "star:3", "path:6"}) {
    auto T = generate(spec);
    auto f = morse_complex(T).f_vector();
    Ranks expected;
    for (std::size_t d = 0; d < f.size(); ++d) expected[{static_cast<int>(d), 0}] = f[d];
    CHECK(diagonal_homology(T).ranks == expected);
  }
  CHECK_THROWS_AS(diagonal_homology(generate("simplex:2")), PreconditionError);
}

TEST_CASE("block structure of the differentials") {
  for (auto spec : {"cycle:4", "complete:4", "simplex:2", "pseudotree:3:0,3"}) {
    auto X = generate(spec);
    auto cc = BigradedChainComplex::build(X);
    const auto& cells = cc.cells();
    for (std::size_t s = 1; s < cells.level_count(); ++s)
      for (std::size_t i = 0; i < cells.count(s); ++i) {
        const int j = cc.filtration(s, i);
        cc.for_each_face(Differential::horizontal, s, i, [&](std::size_t f, int) { CHECK(cc.filtration(s - 1, f) == j); });
        cc.for_each_face(Differential::diagonal, s, i, [&](std::size_t f, int) {
          CHECK(cc.filtration(s - 1, f) < j);
          if (X.is_graph()) CHECK(cc.filtration(s - 1, f) == j - 1);
        });
        std::size_t full = 0, parts = 0;
        cc.for_each_face(Differential::full, s, i, [&](std::size_t, int) { ++full; });
        cc.for_each_face(Differential::horizontal, s, i, [&](std::size_t, int) { ++parts; });
        cc.for_each_face(Differential::diagonal, s, i, [&](std::size_t, int) { ++parts; });
        CHECK(full == s);
        CHECK(parts == s);
      }
  }
}

TEST_CASE("differentials square to zero") {
  for (auto spec : {"cycle:5", "complete:4", "simplex:2", "pseudotree:4:0,1", "simplex:3"}) {
    auto X = generate(spec);
    auto r = verify_differentials(BigradedChainComplex::build(X));
    CHECK(r.full_squared_zero);
    CHECK(r.full_squared_zero_integer);
    CHECK(r.horizontal_squared_zero);
    if (X.is_graph()) CHECK(r.diagonal_squared_zero);
  }
}

TEST_CASE("the diagonal part fails to square to zero on the 4-simplex") {
  auto w = find_diagonal_square_witness(generate("simplex:4"));
  REQUIRE(w.has_value());
  CHECK(w->overlapping_cycles);
  CHECK(w->cell_j >= 2);
  CHECK(w->face.size() + 2 == w->cell.size());
  CHECK_FALSE(find_diagonal_square_witness(generate("complete:5")).has_value());
}

TEST_CASE("Euler characteristics are preserved") {
  for (auto spec : {"cycle:6", "complete:5", "simplex:2", "pseudotree:3:0"}) {
    auto X = generate(spec);
    auto cc = BigradedChainComplex::build(X);
    auto hh = horizontal_homology(cc);
    long long total_cells = 0;
    for (int j = 0; j <= cc.max_filtration(); ++j) {
      long long cells = 0, homology = 0;
      for (int i = 0; i <= cc.max_degree(); ++i) {
        cells += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(cc.dim(i, j));
        homology += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(hh.rank(i, j));
      }
      CHECK(cells == homology);
      total_cells += cells;
    }
    if (X.is_graph()) {
      long long dh = 0;
      for (const auto& [key, r] : diagonal_homology(cc).ranks) dh += (key.first % 2 == 0 ? 1 : -1) * static_cast<long long>(r);
      CHECK(dh == total_cells);
    }
  }
}

TEST_CASE("filtered homology from blocks matches the explicit subcomplex") {
  for (auto spec : {"cycle:4", "complete:5", "simplex:3", "pseudotree:3:0,3"}) {
    auto X = generate(spec);
    auto cc = BigradedChainComplex::build(X);
    for (int k = -1; k <= cc.max_filtration() + 1; ++k) {
      CHECK(filtered_homology_mod2(cc, k, true).ranks == simplicial_homology_mod2(filtration_complex(X, k), true).ranks);
      CHECK(filtered_homology_mod2(cc, k, false).ranks == simplicial_homology_mod2(filtration_complex(X, k), false).ranks);
    }
  }
}

TEST_CASE("2-factor lower bound on horizontal homology") {
  for (auto spec : {"cycle:5", "complete:4", "complete:5", "complete:6"}) {
    auto G = generate(spec);
    std::size_t bound = 0;
    for (const auto& c : two_factors(G)) bound += std::size_t{1} << c.size();
    CHECK(horizontal_homology(G).total_rank() >= bound);
  }
}

TEST_CASE("threads never change bigraded output") {
  auto X = generate("complete:5");
  CHECK(horizontal_homology(X, false, Limits{40, 1}) == horizontal_homology(X, false, Limits{40, 3}));
  CHECK(diagonal_homology(X, Limits{40, 1}) == diagonal_homology(X, Limits{40, 2}));
}
