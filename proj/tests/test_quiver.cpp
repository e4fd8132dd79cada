#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "qim/quiver.hpp"

using namespace qim;

namespace {

template <typename F>
errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a qim::Error");
  return errc::syntax_error;
}

}  // namespace

TEST_CASE("from_arrows builds an oriented tree") {
  Quiver q = fx::branch6();
  CHECK(q.vertex_count() == 6);
  CHECK(q.arrows() == std::vector<Arrow>{{1, 2}, {3, 2}, {4, 3}, {4, 5}, {5, 6}});
  CHECK(q.out_neighbors(4) == VertexList{3, 5});
  CHECK(q.in_neighbors(2) == VertexList{1, 3});
  CHECK(q.neighbors(5) == VertexList{4, 6});
  CHECK(q.degree(4) == 2);
  CHECK(q.in_degree(2) == 2);
  CHECK(q.out_degree(2) == 0);
  CHECK(q.is_sink(2));
  CHECK(q.is_source(4));
  CHECK(!q.is_sink(5));
  CHECK(q.has_arrow(4, 5));
  CHECK(!q.has_arrow(5, 4));
}

TEST_CASE("from_arrows rejects malformed input") {
  CHECK(code_of([] { Quiver::from_arrows(3, {{1, 2}, {2, 3}, {3, 1}}); }) ==
        errc::not_a_tree);
  CHECK(code_of([] { Quiver::from_arrows(4, {{1, 2}, {3, 4}}); }) == errc::not_a_tree);
  CHECK(code_of([] { Quiver::from_arrows(2, {{1, 1}}); }) == errc::not_a_tree);
  CHECK(code_of([] { Quiver::from_arrows(3, {{1, 2}, {1, 2}}); }) == errc::not_a_tree);
  CHECK(code_of([] { Quiver::from_arrows(2, {{1, 3}}); }) == errc::bad_vertex_index);
  CHECK(code_of([] { Quiver::from_arrows(2, {{0, 1}}); }) == errc::bad_vertex_index);
  CHECK(code_of([] { Quiver::from_arrows(1, {}); }) == errc::syntax_error);
  CHECK(code_of([] { fx::a2().degree(3); }) == errc::bad_vertex_index);
}

TEST_CASE("reachability and successors") {
  Quiver q = fx::branch6();
  CHECK(q.reaches(4, 2));
  CHECK(q.reaches(4, 6));
  CHECK(q.reaches(4, 4));
  CHECK(!q.reaches(2, 4));
  CHECK(!q.reaches(1, 6));
  CHECK(q.successors(4) == VertexList{2, 3, 4, 5, 6});
  CHECK(q.successors(1) == VertexList{1, 2});
  CHECK(q.successors(2) == VertexList{2});
  CHECK(q.successor_mask(5).count() == 2);
}

TEST_CASE("boundary and split vertices") {
  Quiver q = fx::branch6();
  CHECK(q.boundary() == VertexList{1, 2, 4, 6});
  CHECK(q.split_vertices() == VertexList{2, 4});
  CHECK(q.is_split_vertex(2));
  CHECK(!q.is_split_vertex(1));
  CHECK(!q.is_split_vertex(3));
  CHECK(q.admissible());

  Quiver star = fx::star4_in();
  CHECK(star.boundary() == VertexList{1, 2, 3, 4});
  CHECK(star.split_vertices() == VertexList{2});
  CHECK(star.admissible());

  // a degree-3 vertex that is neither sink nor source breaks admissibility
  Quiver bad = fx::quiver(4, {{1, 2}, {2, 3}, {2, 4}});
  CHECK(!bad.admissible());
  CHECK(bad.split_vertices().empty());
}

TEST_CASE("maximal chains are the unextendable directed paths") {
  Quiver q = fx::branch6();
  std::vector<Chain> want{{{1, 2}}, {{4, 3, 2}}, {{4, 5, 6}}};
  CHECK(q.maximal_chains() == want);
  CHECK(q.maximal_chains()[1].source() == 4);
  CHECK(q.maximal_chains()[1].sink() == 2);

  CHECK(fx::star4_in().maximal_chains() ==
        std::vector<Chain>{{{1, 2}}, {{3, 2}}, {{4, 2}}});
  CHECK(fx::a3_uniform().maximal_chains() == std::vector<Chain>{{{1, 2, 3}}});
}

TEST_CASE("components_without splits the tree at a vertex") {
  Quiver q = fx::branch6();
  CHECK(q.components_without(4) ==
        std::vector<VertexList>{{1, 2, 3}, {5, 6}});
  CHECK(q.components_without(2) ==
        std::vector<VertexList>{{1}, {3, 4, 5, 6}});
  CHECK(q.components_without(1) == std::vector<VertexList>{{2, 3, 4, 5, 6}});
  CHECK(q.components_without(5).size() == 2);
}

TEST_CASE("validate reports structure without throwing") {
  ValidationReport ok = validate(6, fx::branch6().arrows());
  CHECK(ok.connected);
  CHECK(ok.tree);
  CHECK(ok.admissible);
  CHECK(ok.offending_vertices.empty());

  ValidationReport cyc = validate(3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK(cyc.connected);
  CHECK(!cyc.tree);
  CHECK(!cyc.admissible);

  ValidationReport disc = validate(4, {{1, 2}, {3, 4}});
  CHECK(!disc.connected);
  CHECK(!disc.tree);

  ValidationReport off = validate(4, {{1, 2}, {2, 3}, {2, 4}});
  CHECK(off.tree);
  CHECK(!off.admissible);
  CHECK(off.offending_vertices == VertexList{2});
}

TEST_CASE("parse_quiver accepts JSON and line formats") {
  Quiver a = parse_quiver("{\"vertices\": 6, \"arrows\": "
                          "[[1,2],[3,2],[4,3],[4,5],[5,6]]}");
  Quiver b = parse_quiver("6  1 2  3 2  4 3  4 5  5 6");
  CHECK(a == b);
  CHECK(a == fx::branch6());

  CHECK(code_of([] { parse_quiver(""); }) == errc::syntax_error);
  CHECK(code_of([] { parse_quiver("not json"); }) == errc::syntax_error);
  CHECK(code_of([] { parse_quiver("{\"vertices\": 2}"); }) == errc::syntax_error);
  CHECK(code_of([] { parse_quiver("3 1 2 2"); }) == errc::syntax_error);
  CHECK(code_of([] { parse_quiver("2 1 2 x"); }) == errc::syntax_error);
  CHECK(code_of([] { parse_quiver("3 1 2 2 3 3 1"); }) == errc::not_a_tree);
  CHECK(code_of([] { load_quiver("/nonexistent/q.txt"); }) == errc::syntax_error);
}

TEST_CASE("parse_quiver_data keeps non-tree input") {
  QuiverData d = parse_quiver_data("3 1 2 2 3 3 1");
  CHECK(d.vertex_count == 3);
  CHECK(d.arrows.size() == 3);
  CHECK(!validate(d.vertex_count, d.arrows).tree);
}

TEST_CASE("subgraph operations") {
  Subgraph s = Subgraph::of({5, 4, 5, 6}, {{5, 6}, {4, 5}, {5, 6}});
  CHECK(s.vertices == VertexList{4, 5, 6});
  CHECK(s.edges == std::vector<Arrow>{{4, 5}, {5, 6}});
  CHECK(s.contains_vertex(5));
  CHECK(!s.contains_vertex(1));
  CHECK(s.degree(5) == 2);
  CHECK(s.degree(6) == 1);
  CHECK(s.connected());
  CHECK(Subgraph{}.connected());
  CHECK(!Subgraph::of({1, 3}, {}).connected());

  Subgraph t = Subgraph::of({1, 2, 3, 4, 5, 6}, fx::branch6().arrows());
  CHECK(s.subgraph_of(t));
  CHECK(!t.subgraph_of(s));
  CHECK(s.vertex_disjoint(Subgraph::of({1, 2}, {{1, 2}})));
  CHECK(!s.vertex_disjoint(t));
  CHECK(Subgraph::intersection(s, t) == s);
  CHECK(Subgraph::intersection(s, Subgraph::of({1, 2}, {{1, 2}})).empty());
}
