#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "fixtures.hpp"
#include "qim/families.hpp"
#include "qim/special.hpp"

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

int val(const VertexFunction& a, int v) { return a[static_cast<std::size_t>(v - 1)]; }

// Oracle, straight from the definition and independent of classify():
//  - path: alpha(i) lies on a path starting at i (or is 0)
//  - monotone over all ordered reachable pairs, not just arrows
//  - support (union of chains X containing some i with alpha(i) in X) connected
//  - boundary vertices in the support with value 0 meet only one chain
bool oracle_special(const Quiver& q, const VertexFunction& alpha) {
  const int n = q.vertex_count();
  for (int i = 1; i <= n; ++i)
    if (val(alpha, i) != 0 && !q.reaches(i, val(alpha, i))) return false;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || !q.reaches(i, j) || val(alpha, j) == 0) continue;
      if (val(alpha, i) == 0 || !q.reaches(val(alpha, i), val(alpha, j))) return false;
    }
  VertexList verts;
  std::vector<Arrow> edges;
  for (const Chain& c : q.maximal_chains()) {
    bool in = false;
    for (int i : c.vertices)
      in = in || (val(alpha, i) != 0 &&
                  std::count(c.vertices.begin(), c.vertices.end(), val(alpha, i)));
    if (!in) continue;
    for (std::size_t p = 0; p < c.vertices.size(); ++p) {
      verts.push_back(c.vertices[p]);
      if (p + 1 < c.vertices.size()) edges.push_back({c.vertices[p], c.vertices[p + 1]});
    }
  }
  Subgraph supp = Subgraph::of(std::move(verts), std::move(edges));
  if (!supp.connected()) return false;
  for (int v : q.boundary())
    if (supp.contains_vertex(v) && val(alpha, v) == 0 && supp.degree(v) != 1)
      return false;
  return true;
}

// Oracle: filter all (n+1)^n vertex functions. Exponential; n <= 6 only.
std::vector<VertexFunction> oracle_enumerate(const Quiver& q) {
  const int n = q.vertex_count();
  REQUIRE(n <= 6);
  std::vector<VertexFunction> out;
  VertexFunction alpha(static_cast<std::size_t>(n), 0);
  while (true) {
    if (oracle_special(q, alpha)) out.push_back(alpha);
    std::size_t p = 0;
    while (p < alpha.size() && alpha[p] == n) alpha[p++] = 0;
    if (p == alpha.size()) break;
    ++alpha[p];
  }
  return out;
}

std::set<VertexFunction> as_set(const std::vector<VertexFunction>& v) {
  return {v.begin(), v.end()};
}

std::set<VertexFunction> with_support(const Quiver& q,
                                      const std::vector<VertexFunction>& v,
                                      const VertexList& supp) {
  std::set<VertexFunction> out;
  for (const auto& a : v)
    if (function_support(q, a).vertices == supp) out.insert(a);
  return out;
}

}  // namespace

TEST_CASE("classification flags") {
  Quiver d4 = fx::star4_in();
  Classification c = classify(d4, {2, 2, 3, 2});
  CHECK(c.is_path);
  CHECK(c.is_monotone);
  CHECK(c.support.vertices == VertexList{1, 2, 3, 4});
  CHECK(c.support_connected);
  CHECK(c.sink_degrees_ok);
  CHECK(c.is_special);

  // sink of the support with undefined value but two incident chains
  c = classify(d4, {1, 0, 3, 0});
  CHECK(c.is_path);
  CHECK(c.is_monotone);
  CHECK(c.support_connected);
  CHECK(!c.sink_degrees_ok);
  CHECK(!c.is_special);

  // value off the path from its vertex
  c = classify(d4, {3, 0, 0, 0});
  CHECK(!c.is_path);
  CHECK(!c.is_special);

  // defined target with undefined source
  c = classify(d4, {0, 2, 0, 0});
  CHECK(c.is_path);
  CHECK(!c.is_monotone);
  CHECK(!c.is_special);

  // two support islands at the far ends of the zigzag
  c = classify(fx::zigzag9(), {1, 0, 0, 0, 0, 0, 0, 0, 8});
  CHECK(c.is_path);
  CHECK(c.is_monotone);
  CHECK(c.support.vertices == VertexList{1, 2, 3, 8, 9});
  CHECK(!c.support_connected);
  CHECK(!c.is_special);

  CHECK(code_of([&] { classify(d4, {0, 0, 0}); }) == errc::bad_value);
  CHECK(code_of([&] { classify(d4, {0, 0, 0, 5}); }) == errc::bad_value);
  CHECK(code_of([&] { classify(d4, {0, 0, 0, -1}); }) == errc::bad_value);
  CHECK(code_of([] {
          classify(fx::quiver(4, {{1, 2}, {2, 3}, {2, 4}}), {0, 0, 0, 0});
        }) == errc::not_admissible);
  CHECK(code_of([] {
          enumerate_special(fx::quiver(4, {{1, 2}, {2, 3}, {2, 4}}));
        }) == errc::not_admissible);
}

TEST_CASE("census over the three-arrow star") {
  Quiver d4 = fx::star4_in();
  auto census = enumerate_special(d4);
  CHECK(census.size() == 15);
  CHECK(as_set(census) == as_set(oracle_enumerate(d4)));

  CHECK(with_support(d4, census, {1, 2, 3, 4}) ==
        std::set<VertexFunction>{{1, 2, 3, 4}, {2, 2, 3, 4}, {1, 2, 2, 4},
                                 {1, 2, 3, 2}, {2, 2, 2, 4}, {1, 2, 2, 2},
                                 {2, 2, 3, 2}, {2, 2, 2, 2}});
  CHECK(with_support(d4, census, {1, 2}) ==
        std::set<VertexFunction>{{1, 0, 0, 0}, {2, 0, 0, 0}});
  CHECK(with_support(d4, census, {}) == std::set<VertexFunction>{{0, 0, 0, 0}});

  // ordered by support, then values
  CHECK(census.front() == VertexFunction{0, 0, 0, 0});
  CHECK(std::is_sorted(census.begin(), census.end(), [&](const auto& a, const auto& b) {
    auto sa = function_support(d4, a).vertices, sb = function_support(d4, b).vertices;
    return sa != sb ? sa < sb : a < b;
  }));
}

TEST_CASE("census over the three-vertex quivers") {
  Quiver in = fx::a3_in();
  auto census_in = enumerate_special(in);
  CHECK(census_in.size() == 9);
  CHECK(as_set(census_in) == as_set(oracle_enumerate(in)));
  CHECK(with_support(in, census_in, {1, 2, 3}) ==
        std::set<VertexFunction>{{1, 2, 3}, {1, 2, 2}, {2, 2, 3}, {2, 2, 2}});
  CHECK(with_support(in, census_in, {1, 2}) ==
        std::set<VertexFunction>{{1, 0, 0}, {2, 0, 0}});
  CHECK(with_support(in, census_in, {2, 3}) ==
        std::set<VertexFunction>{{0, 0, 2}, {0, 0, 3}});

  Quiver out = fx::a3_out();
  auto census_out = enumerate_special(out);
  CHECK(census_out.size() == 9);
  CHECK(as_set(census_out) == as_set(oracle_enumerate(out)));
  CHECK(with_support(out, census_out, {1, 2, 3}) ==
        std::set<VertexFunction>{{1, 2, 3}, {1, 2, 0}, {0, 2, 3}, {0, 2, 0}});
  CHECK(with_support(out, census_out, {1, 2}) ==
        std::set<VertexFunction>{{1, 1, 0}, {0, 1, 0}});
  CHECK(with_support(out, census_out, {2, 3}) ==
        std::set<VertexFunction>{{0, 3, 0}, {0, 3, 3}});
}

TEST_CASE("census matches the oracle on every admissible tree up to 5") {
  for (const Quiver& q : admissible_tree_family(5))
    CHECK(as_set(enumerate_special(q)) == as_set(oracle_enumerate(q)));
}

TEST_CASE("ideal of a function lists the successor cones") {
  auto alg = fx::algebra(fx::zigzag9());
  Subbimodule b = ideal_of_function(alg, {0, 0, 0, 3, 5, 7, 8, 8, 8});
  CHECK(b.pairs() == std::vector<PathPair>{{3, 4}, {3, 5}, {4, 5}, {5, 5}, {6, 5},
                                           {7, 5}, {8, 5}, {7, 6}, {8, 6}, {8, 7},
                                           {8, 8}, {8, 9}});
  CHECK(classifying_function(b) == VertexFunction{0, 0, 0, 3, 5, 7, 8, 8, 8});

  auto a2 = fx::algebra(fx::a2());
  CHECK(ideal_of_function(a2, {0, 0}) == zero_ideal(a2));
  CHECK(ideal_of_function(a2, {1, 2}) == identity_ideal(a2));
  CHECK(classifying_function(zero_ideal(a2)) == VertexFunction{0, 0});
  CHECK(classifying_function(identity_ideal(a2)) == VertexFunction{1, 2});

  CHECK(code_of([&] { ideal_of_function(fx::algebra(fx::a3_in()), {1, 0, 3}); }) ==
        errc::not_special);
  CHECK(code_of([] {
          classifying_function(vertex_ideal(fx::algebra(fx::branch6()), 4));
        }) == errc::not_indecomposable);
}

TEST_CASE("functions and indecomposables are inverse bijections") {
  for (const Quiver& q : admissible_tree_family(5)) {
    auto alg = fx::algebra(q);
    std::set<std::string> seen;
    for (const VertexFunction& a : enumerate_special(q)) {
      Subbimodule b = ideal_of_function(alg, a);
      CHECK(decompose(b).size() <= 1);
      CHECK(classifying_function(b) == a);
      CHECK(function_support(q, a).vertices == support(b).vertices);
      seen.insert(b.key());
    }
    std::size_t indecomposable_or_zero = 0;
    for (const Subbimodule& b : enumerate_subbimodules(alg))
      if (decompose(b).size() <= 1) {
        ++indecomposable_or_zero;
        CHECK(seen.count(b.key()) == 1);
        CHECK(ideal_of_function(alg, classifying_function(b)) == b);
      }
    CHECK(indecomposable_or_zero == seen.size());
  }
}

TEST_CASE("vertex ideal summands carry the expected functions") {
  auto alg = fx::algebra(fx::branch6());
  auto parts = decompose(vertex_ideal(alg, 4));
  REQUIRE(parts.size() == 2);
  CHECK(classifying_function(parts[0]) == VertexFunction{1, 2, 3, 3, 0, 0});
  CHECK(classifying_function(parts[1]) == VertexFunction{0, 0, 0, 5, 5, 6});
  CHECK(function_support(alg->quiver(), {1, 2, 3, 3, 0, 0}).vertices ==
        VertexList{1, 2, 3, 4});
  CHECK(function_support(alg->quiver(), {0, 0, 0, 5, 5, 6}).vertices ==
        VertexList{4, 5, 6});
}

TEST_CASE("catalan numbers") {
  std::vector<long> want{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (std::size_t m = 0; m < want.size(); ++m)
    CHECK(catalan(static_cast<int>(m)) == want[m]);

  // convolution recurrence as an independent check, exact over big integers
  std::vector<mpz_class> c{1};
  for (int m = 1; m <= 40; ++m) {
    mpz_class s = 0;
    for (int i = 0; i < m; ++i) s += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    c.push_back(s);
    CHECK(catalan(m) == s);
  }
  CHECK(catalan(40).get_str().size() > 19);  // past the 64-bit range

  CatalanTriple t = catalan_numbers(4);
  CHECK(t.cat == 14);
  REQUIRE(t.cat1.has_value());
  CHECK(*t.cat1 == 9);
  REQUIRE(t.cat2.has_value());
  CHECK(*t.cat2 == 6);
  CHECK(!catalan_numbers(0).cat1.has_value());
  CHECK(!catalan_numbers(1).cat2.has_value());
  CHECK(code_of([] { catalan(-1); }) == errc::domain_error);
}

TEST_CASE("type-A shape walks the path") {
  TypeAShape s = type_a_shape(fx::branch6_in());
  CHECK(s.walk == VertexList{1, 2, 3, 4, 5, 6});
  CHECK(s.marks == std::vector<int>{1, 2, 4, 5, 6});
  CHECK(type_a_shape(fx::a2()).marks == std::vector<int>{1, 2});
  CHECK(type_a_shape(fx::quiver(2, {{2, 1}})).walk == VertexList{1, 2});
  CHECK(code_of([] { type_a_shape(fx::star4_in()); }) == errc::not_type_a);
}

TEST_CASE("segment counts over a zigzag path") {
  Quiver q = fx::branch6_in();
  CHECK(count_type_a(q, 2, 4) == 3);
  CHECK(count_type_a(q, 2, 3) == 5);

  auto census = enumerate_special(q);
  CHECK(with_support(q, census, {2, 3, 4, 5}) ==
        std::set<VertexFunction>{{0, 0, 3, 4, 0, 0},
                                 {0, 0, 2, 4, 0, 0},
                                 {0, 0, 0, 4, 0, 0}});

  CHECK(count_type_a(fx::a2(), 1, 2) == 4);

  CHECK(code_of([&] { count_type_a(q, 0, 2); }) == errc::bad_value);
  CHECK(code_of([&] { count_type_a(q, 2, 2); }) == errc::bad_value);
  CHECK(code_of([&] { count_type_a(q, 1, 6); }) == errc::bad_value);
  CHECK(code_of([] { count_type_a(fx::star4_in(), 1, 2); }) == errc::not_type_a);
}

TEST_CASE("segment counts match the census on every orientation up to 6") {
  for (int n = 2; n <= 6; ++n)
    for (const Quiver& q : type_a_orientations(n)) {
      TypeAShape shape = type_a_shape(q);
      auto census = enumerate_special(q);
      const int k = static_cast<int>(shape.marks.size());
      for (int i = 1; i < k; ++i)
        for (int j = i + 1; j <= k; ++j) {
          VertexList seg(shape.walk.begin() + (shape.marks[static_cast<std::size_t>(i - 1)] - 1),
                         shape.walk.begin() + shape.marks[static_cast<std::size_t>(j - 1)]);
          std::sort(seg.begin(), seg.end());
          CHECK(count_type_a(q, i, j) ==
                static_cast<long>(with_support(q, census, seg).size()));
        }
    }
}
