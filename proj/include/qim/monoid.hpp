#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qim/bimodule.hpp"

namespace qim {

// Multiplication table of a finite monoid with named generators. Elements
// are opaque; keys give them stable labels. word_link records, for every
// non-identity element, its shortest generator word as (predecessor element,
// generator ordinal), with ties broken by generator order.
struct FiniteMonoid {
  std::vector<std::string> keys;
  std::vector<int> table;  // row-major
  int identity = 0;
  int zero = -1;  // absorbing element, -1 when absent
  std::vector<std::pair<std::string, int>> generators;
  std::vector<std::pair<int, int>> word_link;

  std::size_t size() const { return keys.size(); }
  int mul(int a, int b) const {
    return table[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)];
  }
  std::vector<int> word_of(int e) const;               // generator ordinals
  std::vector<std::string> word_names(int e) const;    // generator names
  int generator_element(const std::string& name) const;  // -1 when unknown
  int find_absorbing() const;
  bool is_associative() const;  // exhaustive; meant for small monoids
};

template <typename T>
struct GeneratedMonoid {
  FiniteMonoid monoid;
  std::vector<T> elements;
};

// BFS closure of named generators under `mul`, shortest words first, ties by
// generator order; fills the full multiplication table. Throws
// budget_exceeded past max_elements.
template <typename T, typename Mul, typename KeyFn>
GeneratedMonoid<T> generate_closure(const T& identity,
                                    const std::vector<std::pair<std::string, T>>& gens,
                                    Mul mul, KeyFn key_of, std::size_t max_elements) {
  GeneratedMonoid<T> out;
  std::unordered_map<std::string, int> index;
  auto intern = [&](const T& value) {
    std::string key = key_of(value);
    auto it = index.find(key);
    if (it != index.end()) return std::pair<int, bool>{it->second, false};
    if (out.elements.size() >= max_elements)
      fail(errc::budget_exceeded,
           "monoid closure exceeded " + std::to_string(max_elements) + " elements");
    int id = static_cast<int>(out.elements.size());
    out.elements.push_back(value);
    out.monoid.keys.push_back(std::move(key));
    index.emplace(out.monoid.keys.back(), id);
    return std::pair<int, bool>{id, true};
  };

  intern(identity);
  out.monoid.word_link.push_back({-1, -1});

  const int g = static_cast<int>(gens.size());
  std::vector<int> gen_col;  // element x generator products, row-major
  for (int x = 0; x < static_cast<int>(out.elements.size()); ++x) {
    for (int gi = 0; gi < g; ++gi) {
      T prod = mul(out.elements[static_cast<std::size_t>(x)],
                   gens[static_cast<std::size_t>(gi)].second);
      auto [id, fresh] = intern(prod);
      if (fresh) out.monoid.word_link.push_back({x, gi});
      gen_col.push_back(id);
    }
  }

  for (int gi = 0; gi < g; ++gi) {
    int el = gen_col[static_cast<std::size_t>(gi)];  // identity * gen
    out.monoid.generators.emplace_back(gens[static_cast<std::size_t>(gi)].first, el);
  }

  const int m = static_cast<int>(out.elements.size());
  out.monoid.table.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), -1);
  for (int x = 0; x < m; ++x) {
    out.monoid.table[static_cast<std::size_t>(x) * m + 0] = x;  // identity is element 0
    for (int y = 1; y < m; ++y) {
      auto [pred, gi] = out.monoid.word_link[static_cast<std::size_t>(y)];
      int xp = out.monoid.table[static_cast<std::size_t>(x) * m + pred];
      out.monoid.table[static_cast<std::size_t>(x) * m + y] =
          gen_col[static_cast<std::size_t>(xp) * g + gi];
    }
  }
  out.monoid.identity = 0;
  out.monoid.zero = out.monoid.find_absorbing();
  return out;
}

std::vector<std::pair<std::string, Subbimodule>> ideal_generators(const AlgebraPtr& alg);
std::vector<std::pair<std::string, Subbimodule>> indecomposable_generators(
    const AlgebraPtr& alg);

// closure of the vertex ideals: the monoid of all subbimodules
GeneratedMonoid<Subbimodule> ideal_monoid(const AlgebraPtr& alg,
                                          std::size_t max_elements = 1'000'000);
// closure of the block generators: indecomposables plus zero and identity;
// requires admissibility
GeneratedMonoid<Subbimodule> indecomposable_monoid(const AlgebraPtr& alg,
                                                   std::size_t max_elements = 1'000'000);

// product in the indecomposable monoid: list of summands of b*d (empty for
// zero, one entry otherwise); operands must not be decomposable
std::vector<Subbimodule> star(const Subbimodule& b, const Subbimodule& d);

enum class RelationFamily {
  ideal,            // relations among the vertex ideals J_s
  indecomposable,   // relations among the block generators
};

struct RelationInstance {
  std::string rule;
  std::vector<std::string> lhs, rhs;  // generator words; {"0"} denotes zero
};

struct RelationFailure {
  RelationInstance instance;
  std::string lhs_key, rhs_key;
};

struct RelationReport {
  RelationFamily family = RelationFamily::ideal;
  std::size_t total = 0;
  std::vector<RelationFailure> failures;
  bool all_pass() const { return failures.empty(); }
};

// all schema instances for the family over this quiver
std::vector<RelationInstance> relation_instances(const AlgebraPtr& alg,
                                                 RelationFamily family);
// fold a generator word into a subbimodule ("0" words evaluate to zero)
Subbimodule evaluate_word(const AlgebraPtr& alg,
                          const std::vector<std::pair<std::string, Subbimodule>>& gens,
                          const std::vector<std::string>& word);
RelationReport check_relations(const AlgebraPtr& alg, RelationFamily family);

// drop-one generating test over the table: name -> essential
std::vector<std::pair<std::string, bool>> minimal_generating_check(
    const FiniteMonoid& m, const std::vector<std::string>& generator_names);

// the unique inclusion-largest indecomposable with support omega (a special
// subtree); requires admissibility
Subbimodule maximal_ideal_with_support(const AlgebraPtr& alg, const Subgraph& omega);

// inclusion-maximal full-support indecomposables below the identity:
// the vertex ideals at non-split vertices
std::vector<Subbimodule> maximal_indecomposables(const AlgebraPtr& alg);

}  // namespace qim
