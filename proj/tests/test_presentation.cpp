#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "qim/presentation.hpp"

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

TEST_CASE("single-arrow presentation enumerates five elements") {
  MonoidPresentation p = hk_presentation(fx::a2());
  CHECK(p.generators == std::vector<std::string>{"J1", "J2"});
  CHECK(!p.zero.has_value());
  CHECK(p.relations.size() == 4);  // two idempotents, two absorption identities

  FiniteMonoid m = enumerate_presented(p);
  REQUIRE(m.size() == 5);
  CHECK(std::set<std::string>(m.keys.begin(), m.keys.end()) ==
        std::set<std::string>{"1", "J1", "J2", "J1 J2", "J2 J1"});
  CHECK(m.identity == 0);
  CHECK(m.keys[0] == "1");
  CHECK(m.is_associative());
  REQUIRE(m.zero >= 0);
  CHECK(m.keys[static_cast<std::size_t>(m.zero)] == "J2 J1");

  int j1 = m.generator_element("J1"), j2 = m.generator_element("J2");
  CHECK(m.mul(j2, j1) == m.zero);
  CHECK(m.mul(j1, j2) != m.zero);
  CHECK(m.mul(j1, m.mul(j2, j1)) == m.zero);
}

TEST_CASE("block presentation sizes") {
  MonoidPresentation p = ind_presentation(fx::star4_in());
  CHECK(p.zero == std::optional<std::string>{"0"});
  CHECK(p.generators.size() == 6);
  CHECK(p.relations.size() == 66);
  CHECK(enumerate_presented(p).size() == 15);

  // without split vertices the block alphabet degenerates to the vertex one
  MonoidPresentation uni = ind_presentation(fx::a3_uniform());
  CHECK(!uni.zero.has_value());
  CHECK(uni.generators == hk_presentation(fx::a3_uniform()).generators);
  CHECK(uni.relations.size() == hk_presentation(fx::a3_uniform()).relations.size());
  CHECK(enumerate_presented(uni).size() == 14);

  CHECK(code_of([] { ind_presentation(fx::quiver(4, {{1, 2}, {2, 3}, {2, 4}})); }) ==
        errc::not_admissible);
}

TEST_CASE("enumeration is invariant under relation order") {
  MonoidPresentation p = ind_presentation(fx::star4_in());
  FiniteMonoid base = enumerate_presented(p);
  std::reverse(p.relations.begin(), p.relations.end());
  FiniteMonoid rev = enumerate_presented(p);
  CHECK(base.keys == rev.keys);
  CHECK(base.table == rev.table);
  CHECK(base.zero == rev.zero);
}

TEST_CASE("renaming generators gives an isomorphic monoid") {
  MonoidPresentation p = hk_presentation(fx::a3_in());
  MonoidPresentation renamed = p;
  auto rename = [](std::string& s) {
    if (s == "J1") s = "a";
    if (s == "J2") s = "b";
    if (s == "J3") s = "c";
  };
  for (auto& g : renamed.generators) rename(g);
  for (auto& r : renamed.relations) {
    for (auto& s : r.lhs) rename(s);
    for (auto& s : r.rhs) rename(s);
  }
  FiniteMonoid a = enumerate_presented(renamed);
  FiniteMonoid b = enumerate_presented(p);
  IsomorphismReport rep =
      check_isomorphism(a, b, {{"a", "J1"}, {"b", "J2"}, {"c", "J3"}});
  CHECK(rep.isomorphic);

  // swapping the two generators of the single-arrow monoid is no isomorphism
  FiniteMonoid m = enumerate_presented(hk_presentation(fx::a2()));
  IsomorphismReport swapped =
      check_isomorphism(m, m, {{"J1", "J2"}, {"J2", "J1"}});
  CHECK(!swapped.isomorphic);
  CHECK(!swapped.witness.empty());
  CHECK(check_isomorphism(m, m, identity_pairing(m)).isomorphic);
  CHECK(code_of([&] { check_isomorphism(m, m, {{"J1", "J1"}}); }) ==
        errc::generator_mismatch);
  CHECK(code_of([&] {
          check_isomorphism(m, m, {{"J1", "J1"}, {"J1", "J2"}});
        }) == errc::generator_mismatch);
}

TEST_CASE("degenerate presentations") {
  MonoidPresentation idem;
  idem.generators = {"g"};
  idem.relations = {{"idempotent", {"g", "g"}, {"g"}}};
  CHECK(enumerate_presented(idem).size() == 2);

  MonoidPresentation trivial;
  CHECK(enumerate_presented(trivial).size() == 1);
  CHECK(enumerate_presented(trivial).keys == std::vector<std::string>{"1"});

  MonoidPresentation free_plus_zero;
  free_plus_zero.generators = {"g"};
  free_plus_zero.zero = "0";
  CHECK(code_of([&] { enumerate_presented(free_plus_zero, 50); }) ==
        errc::budget_exceeded);
  CHECK(code_of([] { enumerate_presented(ind_presentation(fx::star4_in()), 5); }) ==
        errc::budget_exceeded);
  CHECK(code_of([] {
          enumerate_presented(ind_presentation(fx::star4_in()), 100000, 3);
        }) == errc::budget_exceeded);

  MonoidPresentation bad;
  bad.generators = {"g", "g"};
  CHECK(code_of([&] { enumerate_presented(bad); }) == errc::generator_mismatch);
  MonoidPresentation unknown;
  unknown.generators = {"g"};
  unknown.relations = {{"rule", {"g", "h"}, {"g"}}};
  CHECK(code_of([&] { enumerate_presented(unknown); }) == errc::generator_mismatch);
}

TEST_CASE("decategorified generators over a single arrow") {
  auto alg = fx::algebra(fx::a2());
  IntMatrix m1 = decategorify(vertex_ideal(alg, 1));
  IntMatrix m2 = decategorify(vertex_ideal(alg, 2));
  CHECK(m1.key() == "0,0,1,1");
  CHECK(m2.key() == "1,0,0,0");
  CHECK(decategorify(identity_ideal(alg)) == IntMatrix::identity(2));
  CHECK(decategorify(zero_ideal(alg)).key() == "0,0,0,0");
  CHECK((m1 * m2).key() == "0,0,1,0");
  CHECK(m1 * m2 == decategorify(product(vertex_ideal(alg, 1), vertex_ideal(alg, 2))));
  CHECK((m2 * m1).key() == "0,0,0,0");

  auto closed = matrix_monoid(alg, ideal_generators(alg));
  CHECK(closed.monoid.size() == 5);
  CHECK(closed.monoid.zero >= 0);
}

TEST_CASE("decategorification is a faithful homomorphism on the tree") {
  for (Quiver q : {fx::star4_in(), fx::branch6()}) {
    auto alg = fx::algebra(std::move(q));
    auto census = enumerate_subbimodules(alg);
    std::set<std::string> keys;
    for (const auto& b : census) keys.insert(decategorify(b).key());
    CHECK(keys.size() == census.size());  // injective
    for (std::size_t i = 0; i < census.size(); i += 3)
      for (std::size_t j = 0; j < census.size(); j += 3)
        CHECK(decategorify(product(census[i], census[j])) ==
              decategorify(census[i]) * decategorify(census[j]));
  }
}

TEST_CASE("exact integer matrices") {
  IntMatrix big(2);
  mpz_class huge("1208925819614629174706176");  // 2^80
  big.at(0, 0) = huge;
  big.at(1, 1) = 3;
  IntMatrix sq = big * big;
  CHECK(sq.at(0, 0) == huge * huge);
  CHECK(sq.at(1, 1) == 9);
  CHECK(sq.at(0, 1) == 0);
  CHECK(IntMatrix::identity(3).key() == "1,0,0,0,1,0,0,0,1");
  CHECK(IntMatrix::identity(3) * IntMatrix::identity(3) == IntMatrix::identity(3));
}

TEST_CASE("the three realizations agree") {
  RealizationCheck a2 = check_realizations(fx::algebra(fx::a2()), RelationFamily::ideal);
  CHECK(a2.all_pass());
  CHECK(a2.presented == 5);
  CHECK(a2.computed == 5);
  CHECK(a2.matrices == 5);
  CHECK(a2.witness.empty());

  RealizationCheck d4 =
      check_realizations(fx::algebra(fx::star4_in()), RelationFamily::ideal);
  CHECK(d4.all_pass());
  CHECK(d4.presented == 35);
  CHECK(d4.matrices == 35);

  RealizationCheck ind =
      check_realizations(fx::algebra(fx::star4_in()), RelationFamily::indecomposable);
  CHECK(ind.all_pass());
  CHECK(ind.presented == 15);
  CHECK(ind.computed == 15);
  CHECK(ind.matrices == 0);  // no matrix leg for the block family
  CHECK(ind.matrices_isomorphic);

  CHECK(check_realizations(fx::algebra(fx::branch6()), RelationFamily::indecomposable)
            .all_pass());
  CHECK(code_of([] {
          check_realizations(fx::algebra(fx::star4_in()), RelationFamily::ideal, 4);
        }) == errc::budget_exceeded);
}
