#include <sstream>

#include "catch_amalgamated.hpp"
#include "mfc/mfc.hpp"
#include "oracles.hpp"

using namespace mfc;

TEST_CASE("closure of a single facet") {
  auto X = build_complex(std::vector<std::vector<long long>>{{0, 1, 2}});
  CHECK(X.f_vector() == std::vector<std::size_t>{3, 3, 1});
  CHECK(X.size() == 7);
  CHECK(X.dimension() == 2);
  CHECK_FALSE(X.is_graph());
  auto T = generate("simplex:3");
  CHECK(T.f_vector() == std::vector<std::size_t>{4, 6, 4, 1});
}

TEST_CASE("vertex labels sort numerically when all are integers") {
  auto X = build_complex(std::vector<std::vector<std::string>>{{"10", "2"}, {"2", "3"}});
  REQUIRE(X.vertex_count() == 3);
  CHECK(X.label(0) == "2");
  CHECK(X.label(1) == "3");
  CHECK(X.label(2) == "10");
  auto Y = build_complex(std::vector<std::vector<std::string>>{{"b", "a"}, {"c"}});
  CHECK(Y.label(0) == "a");
  CHECK(Y.f_vector() == std::vector<std::size_t>{3, 1});
}

TEST_CASE("facet files") {
  std::istringstream in("# triangle with a tail\n0 1 2\n\n2 3\n");
  auto X = build_complex(read_facets(in));
  CHECK(X.f_vector() == std::vector<std::size_t>{4, 4, 1});
  CHECK(X.contains({0, 1, 2}));
  CHECK_FALSE(X.contains({1, 3}));
  CHECK_THROWS_AS(load_facet_file("/nonexistent/facets.txt"), InputError);
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(build_complex(std::vector<std::vector<long long>>{{0, 1}, {}}), InputError);
  std::vector<long long> huge(25);
  for (int i = 0; i < 25; ++i) huge[i] = i;
  CHECK_THROWS_AS(build_complex(std::vector<std::vector<long long>>{huge}), ResourceError);
  for (auto bad : {"cycle:2", "cycle", "simplex:-1", "sphere:3", "complete:x", "pseudotree:3:9", "pseudotree:2"})
    CHECK_THROWS_AS(generate(bad), InputError);
  CHECK_THROWS_AS(SimplicialComplex::from_closed({"a", "b"}, {{0}, {1}, {0, 1, 2}}), InputError);
  CHECK_THROWS_AS(SimplicialComplex::from_closed({"a", "b", "c"}, {{0}, {1}, {2}, {0, 1, 2}}), InputError);
}

TEST_CASE("generated families") {
  CHECK(generate("cycle:5").f_vector() == std::vector<std::size_t>{5, 5});
  CHECK(generate("complete:5").f_vector() == std::vector<std::size_t>{5, 10});
  CHECK(generate("complete:1").f_vector() == std::vector<std::size_t>{1});
  CHECK(generate("path:4").f_vector() == std::vector<std::size_t>{4, 3});
  CHECK(generate("star:3").f_vector() == std::vector<std::size_t>{4, 3});
  CHECK(generate("star:0").f_vector() == std::vector<std::size_t>{1});
  CHECK(generate("pseudotree:3:0").f_vector() == std::vector<std::size_t>{4, 4});
  CHECK(generate("pseudotree:4:0,1").f_vector() == std::vector<std::size_t>{6, 6});
  CHECK(generate("simplex:0").f_vector() == std::vector<std::size_t>{1});
  auto P = generate("pseudotree:3:0,3");
  CHECK(P.contains({0, 3}));
  CHECK(P.contains({3, 4}));
}

TEST_CASE("face poset sizes") {
  FacePoset F2(generate("simplex:2"));
  CHECK(F2.node_count() == 7);
  CHECK(F2.arc_count() == 9);
  FacePoset F3(generate("simplex:3"));
  CHECK(F3.node_count() == 15);
  CHECK(F3.arc_count() == 28);
  for (const auto& a : F3.arcs()) CHECK(F3.dim(a.upper) == F3.dim(a.lower) + 1);
  FacePoset F4(generate("simplex:4"));
  CHECK(F4.node_count() == 31);
  CHECK(F4.arc_count() == 75);
}

TEST_CASE("face poset agrees with the bitmask oracle") {
  for (auto spec : {"simplex:3", "complete:5", "pseudotree:4:0,1", "cycle:7", "simplex:1"}) {
    auto X = generate(spec);
    FacePoset F(X);
    auto P = oracle::poset_of(X);
    CHECK(F.node_count() == P.faces.size());
    CHECK(F.arc_count() == P.arcs.size());
  }
}

TEST_CASE("face poset of a triangle is a hexagon") {
  FacePoset F(generate("cycle:3"));
  REQUIRE(F.node_count() == 6);
  REQUIRE(F.arc_count() == 6);
  for (NodeId v = 0; v < 6; ++v) CHECK(F.down_arcs(v).size() + F.up_arcs(v).size() == 2);
  std::vector<NodeId> start{0};
  auto H = complement_of_nodes(F, start);
  CHECK(H.nodes().size() == 5);
  CHECK(H.arcs().size() == 4);
  CHECK_FALSE(H.contains_node(0));
}

TEST_CASE("arc lookup") {
  FacePoset F(generate("simplex:2"));
  auto X = F.complex();
  const auto tri = *X.find({0, 1, 2});
  const auto edge = *X.find({0, 1});
  const auto v2 = *X.find({2});
  CHECK(F.find_arc(tri, edge).has_value());
  CHECK(F.arc_between(edge, tri) == F.find_arc(tri, edge));
  CHECK_FALSE(F.find_arc(edge, v2).has_value());
}

TEST_CASE("directed simple cycles") {
  Digraph complete(4);
  for (std::uint32_t u = 0; u < 4; ++u)
    for (std::uint32_t v = 0; v < 4; ++v)
      if (u != v) complete[u].push_back(v);
  // 6 two-cycles, 8 three-cycles, 6 four-cycles.
  CHECK(simple_cycles(complete).size() == 20);
  CHECK_FALSE(is_dag(complete));
  Digraph chain{{1}, {2}, {}};
  CHECK(is_dag(chain));
  CHECK(simple_cycles(chain).empty());
  Digraph loop{{1}, {2}, {0}};
  auto c = simple_cycles(loop);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == std::vector<std::uint32_t>{0, 1, 2});
}
