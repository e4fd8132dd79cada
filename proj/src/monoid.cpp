#include "qim/monoid.hpp"

#include <algorithm>
#include <cassert>

#include "qim/special.hpp"

namespace qim {

std::vector<int> FiniteMonoid::word_of(int e) const {
  std::vector<int> w;
  while (e != identity) {
    auto [pred, gi] = word_link[static_cast<std::size_t>(e)];
    w.push_back(gi);
    e = pred;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<std::string> FiniteMonoid::word_names(int e) const {
  std::vector<std::string> w;
  for (int gi : word_of(e)) w.push_back(generators[static_cast<std::size_t>(gi)].first);
  return w;
}

int FiniteMonoid::generator_element(const std::string& name) const {
  for (const auto& [n, el] : generators)
    if (n == name) return el;
  return -1;
}

int FiniteMonoid::find_absorbing() const {
  const int m = static_cast<int>(size());
  for (int e = 0; e < m; ++e) {
    bool absorbing = true;
    for (int x = 0; x < m && absorbing; ++x)
      if (mul(e, x) != e || mul(x, e) != e) absorbing = false;
    if (absorbing) return e;
  }
  return -1;
}

bool FiniteMonoid::is_associative() const {
  const int m = static_cast<int>(size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  return true;
}

std::vector<std::pair<std::string, Subbimodule>> ideal_generators(const AlgebraPtr& alg) {
  std::vector<std::pair<std::string, Subbimodule>> gens;
  for (int s = 1; s <= alg->quiver().vertex_count(); ++s)
    gens.emplace_back("J" + std::to_string(s), vertex_ideal(alg, s));
  return gens;
}

std::vector<std::pair<std::string, Subbimodule>> indecomposable_generators(
    const AlgebraPtr& alg) {
  const Quiver& q = alg->quiver();
  if (!q.admissible())
    fail(errc::not_admissible, "block generators need an admissible quiver");
  std::vector<std::pair<std::string, Subbimodule>> gens;
  for (int v = 1; v <= q.vertex_count(); ++v)
    if (!q.is_split_vertex(v))
      gens.emplace_back("J" + std::to_string(v), vertex_ideal(alg, v));
  for (int s : q.split_vertices()) {
    int m = q.degree(s);
    for (int c = 1; c <= m; ++c)
      gens.emplace_back("J" + std::to_string(s) + "." + std::to_string(c),
                        vertex_ideal_block(alg, s, c));
  }
  return gens;
}

namespace {

GeneratedMonoid<Subbimodule> close_subbimodules(
    const AlgebraPtr& alg, const std::vector<std::pair<std::string, Subbimodule>>& gens,
    std::size_t max_elements) {
  return generate_closure(
      identity_ideal(alg), gens,
      [](const Subbimodule& a, const Subbimodule& b) { return product(a, b); },
      [](const Subbimodule& a) { return a.key(); }, max_elements);
}

}  // namespace

GeneratedMonoid<Subbimodule> ideal_monoid(const AlgebraPtr& alg, std::size_t max_elements) {
  return close_subbimodules(alg, ideal_generators(alg), max_elements);
}

GeneratedMonoid<Subbimodule> indecomposable_monoid(const AlgebraPtr& alg,
                                                   std::size_t max_elements) {
  return close_subbimodules(alg, indecomposable_generators(alg), max_elements);
}

std::vector<Subbimodule> star(const Subbimodule& b, const Subbimodule& d) {
  if (decompose(b).size() > 1 || decompose(d).size() > 1)
    fail(errc::not_indecomposable, "star needs indecomposable operands");
  return decompose(product(b, d));
}

namespace {

using Word = std::vector<std::string>;

void emit(std::vector<RelationInstance>& out, const char* rule, Word lhs, Word rhs) {
  out.push_back({rule, std::move(lhs), std::move(rhs)});
}

// idempotents, commutations for non-adjacent pairs, and the two absorption
// identities per arrow; shared by both generator families
void whole_ideal_rules(const Quiver& q, const VertexList& vertices,
                       std::vector<RelationInstance>& out) {
  auto name = [](int v) { return "J" + std::to_string(v); };
  for (int v : vertices) emit(out, "idempotent", {name(v), name(v)}, {name(v)});
  for (int a : vertices)
    for (int b : vertices) {
      if (a >= b) continue;
      if (!q.has_arrow(a, b) && !q.has_arrow(b, a))
        emit(out, "commute", {name(a), name(b)}, {name(b), name(a)});
    }
  for (int a : vertices)
    for (int b : vertices) {
      if (!q.has_arrow(a, b)) continue;
      emit(out, "sandwich_target", {name(b), name(a), name(b)}, {name(b), name(a)});
      emit(out, "sandwich_source", {name(a), name(b), name(a)}, {name(b), name(a)});
    }
}

}  // namespace

std::vector<RelationInstance> relation_instances(const AlgebraPtr& alg,
                                                 RelationFamily family) {
  const Quiver& q = alg->quiver();
  std::vector<RelationInstance> out;

  if (family == RelationFamily::ideal) {
    VertexList all;
    for (int v = 1; v <= q.vertex_count(); ++v) all.push_back(v);
    whole_ideal_rules(q, all, out);
    return out;
  }

  if (!q.admissible())
    fail(errc::not_admissible, "block relations need an admissible quiver");

  VertexList whole;  // vertices whose ideal stays in one block
  for (int v = 1; v <= q.vertex_count(); ++v)
    if (!q.is_split_vertex(v)) whole.push_back(v);
  const VertexList& split = q.split_vertices();

  auto jn = [](int v) { return "J" + std::to_string(v); };
  auto bn = [](int s, int c) {
    return "J" + std::to_string(s) + "." + std::to_string(c);
  };
  auto blocks = [&](int s) { return q.degree(s); };
  std::vector<std::vector<Subgraph>> supp(static_cast<std::size_t>(q.vertex_count()) + 1);
  for (int s : split)
    for (int c = 1; c <= blocks(s); ++c)
      supp[static_cast<std::size_t>(s)].push_back(
          support(vertex_ideal_block(alg, s, c)));
  auto supp_of = [&](int s, int c) -> const Subgraph& {
    return supp[static_cast<std::size_t>(s)][static_cast<std::size_t>(c - 1)];
  };

  whole_ideal_rules(q, whole, out);

  for (int s : split)
    for (int c = 1; c <= blocks(s); ++c)
      emit(out, "idempotent_split", {bn(s, c), bn(s, c)}, {bn(s, c)});

  for (int s : split)
    for (int c = 1; c <= blocks(s); ++c)
      for (int c2 = 1; c2 <= blocks(s); ++c2)
        if (c2 != c) emit(out, "zero_same_vertex", {bn(s, c), bn(s, c2)}, {"0"});

  for (int s : split)
    for (int t : split) {
      if (s >= t || q.has_arrow(s, t) || q.has_arrow(t, s)) continue;
      for (int cs = 1; cs <= blocks(s); ++cs)
        for (int ct = 1; ct <= blocks(t); ++ct)
          emit(out, "commute_split", {bn(s, cs), bn(t, ct)}, {bn(t, ct), bn(s, cs)});
    }

  for (int s : split)
    for (int i : whole) {
      if (q.has_arrow(s, i) || q.has_arrow(i, s)) continue;
      for (int cs = 1; cs <= blocks(s); ++cs)
        emit(out, "commute_split_whole", {bn(s, cs), jn(i)}, {jn(i), bn(s, cs)});
    }

  for (int s : split)
    for (int t : split) {
      if (!q.has_arrow(s, t)) continue;
      for (int cs = 1; cs <= blocks(s); ++cs)
        for (int ct = 1; ct <= blocks(t); ++ct) {
          emit(out, "sandwich_split", {bn(t, ct), bn(s, cs), bn(t, ct)},
               {bn(t, ct), bn(s, cs)});
          emit(out, "sandwich_split", {bn(s, cs), bn(t, ct), bn(s, cs)},
               {bn(t, ct), bn(s, cs)});
        }
    }

  for (int t : split)
    for (int i : whole) {
      for (int ct = 1; ct <= blocks(t); ++ct) {
        if (q.has_arrow(i, t)) {
          emit(out, "sandwich_split_in", {bn(t, ct), jn(i), bn(t, ct)},
               {bn(t, ct), jn(i)});
          emit(out, "sandwich_split_in", {jn(i), bn(t, ct), jn(i)}, {bn(t, ct), jn(i)});
        }
        if (q.has_arrow(t, i)) {
          emit(out, "sandwich_split_out", {bn(t, ct), jn(i), bn(t, ct)},
               {jn(i), bn(t, ct)});
          emit(out, "sandwich_split_out", {jn(i), bn(t, ct), jn(i)}, {jn(i), bn(t, ct)});
        }
      }
    }

  for (int t : split)
    for (int s : split) {
      if (s == t || (!q.has_arrow(s, t) && !q.has_arrow(t, s))) continue;
      for (int cs = 1; cs <= blocks(s); ++cs)
        for (int p = 1; p <= blocks(t); ++p)
          for (int p2 = 1; p2 <= blocks(t); ++p2)
            if (p2 != p)
              emit(out, "zero_sandwich_split", {bn(t, p), bn(s, cs), bn(t, p2)}, {"0"});
    }

  for (int t : split)
    for (int i : whole) {
      if (!q.has_arrow(i, t) && !q.has_arrow(t, i)) continue;
      for (int p = 1; p <= blocks(t); ++p)
        for (int p2 = 1; p2 <= blocks(t); ++p2)
          if (p2 != p) emit(out, "zero_sandwich_whole", {bn(t, p), jn(i), bn(t, p2)}, {"0"});
    }

  for (int s : split)
    for (int t : split) {
      if (s == t) continue;
      for (int cs = 1; cs <= blocks(s); ++cs)
        for (int ct = 1; ct <= blocks(t); ++ct) {
          if (supp_of(t, ct).subgraph_of(supp_of(s, cs)))
            emit(out, "absorb_contained", {bn(s, cs), bn(t, ct)}, {bn(t, ct)});
          if (supp_of(s, cs).vertex_disjoint(supp_of(t, ct)))
            emit(out, "zero_disjoint", {bn(s, cs), bn(t, ct)}, {"0"});
        }
    }

  for (int s : split)
    for (int i : whole)
      for (int cs = 1; cs <= blocks(s); ++cs) {
        if (supp_of(s, cs).contains_vertex(i)) continue;
        emit(out, "absorb_outside", {bn(s, cs), jn(i)}, {bn(s, cs)});
        emit(out, "absorb_outside", {jn(i), bn(s, cs)}, {bn(s, cs)});
      }

  // The factors along a maximal uniform chain multiply to zero.  A chain runs
  // from a tail (split vertex or leaf) through whole flow-through vertices to
  // a head (split vertex or leaf); split ends contribute the block facing the
  // chain, leaf ends the whole-vertex ideal, and the word reads head to tail.
  // A chain with two leaf ends only occurs when the quiver is a uniform path,
  // where the product is already forced; those instances are skipped.
  auto facing_block = [&](int s, int toward) {
    const auto comps = q.components_without(s);
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (std::binary_search(comps[c].begin(), comps[c].end(), toward))
        return bn(s, static_cast<int>(c) + 1);
    fail(errc::bad_component_index,
         "no component of " + std::to_string(s) + " contains " + std::to_string(toward));
  };
  for (int v = 1; v <= q.vertex_count(); ++v) {
    if (!q.is_split_vertex(v) && q.degree(v) != 1) continue;
    for (int first : q.out_neighbors(v)) {
      std::vector<int> path{v, first};
      while (!q.is_split_vertex(path.back()) && q.degree(path.back()) == 2)
        path.push_back(q.out_neighbors(path.back()).front());
      int head = path.back();
      if (!q.is_split_vertex(head) && !q.is_split_vertex(v)) continue;
      std::vector<std::string> word;
      word.push_back(q.is_split_vertex(head)
                         ? facing_block(head, path[path.size() - 2])
                         : jn(head));
      for (std::size_t k = path.size() - 2; k >= 1; --k)
        word.push_back(jn(path[k]));
      word.push_back(q.is_split_vertex(v) ? facing_block(v, first) : jn(v));
      emit(out, "zero_chain", word, {"0"});
    }
  }

  return out;
}

Subbimodule evaluate_word(const AlgebraPtr& alg,
                          const std::vector<std::pair<std::string, Subbimodule>>& gens,
                          const std::vector<std::string>& word) {
  Subbimodule acc = identity_ideal(alg);
  for (const std::string& sym : word) {
    if (sym == "0") return zero_ideal(alg);
    const Subbimodule* g = nullptr;
    for (const auto& [name, value] : gens)
      if (name == sym) g = &value;
    if (!g) fail(errc::generator_mismatch, "unknown generator " + sym);
    acc = product(acc, *g);
  }
  return acc;
}

RelationReport check_relations(const AlgebraPtr& alg, RelationFamily family) {
  RelationReport report;
  report.family = family;
  auto gens = family == RelationFamily::ideal ? ideal_generators(alg)
                                              : indecomposable_generators(alg);
  for (const RelationInstance& inst : relation_instances(alg, family)) {
    ++report.total;
    Subbimodule lhs = evaluate_word(alg, gens, inst.lhs);
    Subbimodule rhs = evaluate_word(alg, gens, inst.rhs);
    if (!(lhs == rhs)) report.failures.push_back({inst, lhs.key(), rhs.key()});
  }
  return report;
}

std::vector<std::pair<std::string, bool>> minimal_generating_check(
    const FiniteMonoid& m, const std::vector<std::string>& generator_names) {
  std::vector<int> gen_elements;
  for (const std::string& name : generator_names) {
    int el = m.generator_element(name);
    if (el < 0) fail(errc::generator_mismatch, "unknown generator " + name);
    gen_elements.push_back(el);
  }
  auto reachable_count = [&](std::size_t dropped) {
    std::vector<bool> seen(m.size(), false);
    std::vector<int> stack{m.identity};
    seen[static_cast<std::size_t>(m.identity)] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (std::size_t gi = 0; gi < gen_elements.size(); ++gi) {
        if (gi == dropped) continue;
        int y = m.mul(x, gen_elements[gi]);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
    return count;
  };
  std::vector<std::pair<std::string, bool>> out;
  for (std::size_t gi = 0; gi < gen_elements.size(); ++gi)
    out.emplace_back(generator_names[gi], reachable_count(gi) < m.size());
  return out;
}

Subbimodule maximal_ideal_with_support(const AlgebraPtr& alg, const Subgraph& omega) {
  const Quiver& q = alg->quiver();
  if (!q.admissible())
    fail(errc::not_admissible, "special subtrees need an admissible quiver");

  bool known = false;
  for (const VertexFunction& alpha : enumerate_special(q))
    if (function_support(q, alpha) == omega) {
      known = true;
      break;
    }
  if (!known)
    fail(errc::not_special_subtree, "the subgraph is not the support of any special function");

  if (omega.empty()) return zero_ideal(alg);

  Subbimodule acc = identity_ideal(alg);
  auto apply_factors = [&](bool sources) {
    for (int v : q.split_vertices()) {
      if (!omega.contains_vertex(v) || omega.degree(v) != 1) continue;
      if (q.is_source(v) != sources) continue;
      int other = 0;  // the unique omega-neighbour of v
      for (const Arrow& e : omega.edges) {
        if (e.source == v) other = e.target;
        if (e.target == v) other = e.source;
      }
      auto comps = q.components_without(v);
      for (std::size_t c = 0; c < comps.size(); ++c)
        if (std::binary_search(comps[c].begin(), comps[c].end(), other)) {
          acc = product(acc, vertex_ideal_block(alg, v, static_cast<int>(c) + 1));
          break;
        }
    }
  };
  apply_factors(true);   // source-side factors first
  apply_factors(false);  // then sink-side factors
  return acc;
}

std::vector<Subbimodule> maximal_indecomposables(const AlgebraPtr& alg) {
  std::vector<Subbimodule> out;
  for (int v = 1; v <= alg->quiver().vertex_count(); ++v)
    if (!alg->quiver().is_split_vertex(v)) out.push_back(vertex_ideal(alg, v));
  return out;
}

}  // namespace qim
