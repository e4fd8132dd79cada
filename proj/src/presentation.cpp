#include "qim/presentation.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace qim {

namespace {

void dedupe_relations(std::vector<RelationInstance>& rels) {
  std::set<std::pair<std::vector<std::string>, std::vector<std::string>>> seen;
  std::vector<RelationInstance> out;
  for (RelationInstance& r : rels)
    if (seen.emplace(r.lhs, r.rhs).second) out.push_back(std::move(r));
  rels = std::move(out);
}

}  // namespace

MonoidPresentation hk_presentation(const Quiver& q) {
  MonoidPresentation p;
  for (int v = 1; v <= q.vertex_count(); ++v)
    p.generators.push_back("J" + std::to_string(v));
  p.relations = relation_instances(PathAlgebra::make(q), RelationFamily::ideal);
  dedupe_relations(p.relations);
  return p;
}

MonoidPresentation ind_presentation(const Quiver& q) {
  AlgebraPtr alg = PathAlgebra::make(q);
  MonoidPresentation p;
  for (const auto& [name, b] : indecomposable_generators(alg))
    p.generators.push_back(name);
  if (!q.split_vertices().empty()) p.zero = "0";
  p.relations = relation_instances(alg, RelationFamily::indecomposable);
  dedupe_relations(p.relations);
  return p;
}

IntMatrix IntMatrix::identity(int size) {
  IntMatrix m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  IntMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const mpz_class& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  return out;
}

std::string IntMatrix::key() const {
  std::string s;
  for (const mpz_class& v : a) {
    if (!s.empty()) s += ',';
    s += v.get_str();
  }
  return s;
}

IntMatrix decategorify(const Subbimodule& b) {
  const PathAlgebra& alg = b.algebra();
  const Quiver& q = alg.quiver();
  const int n = q.vertex_count();
  IntMatrix m(n);
  for (int s = 1; s <= n; ++s) {
    VertexList targets;
    for (int i = alg.column_begin(s); i < alg.column_end(s); ++i)
      if (b.bits().test(static_cast<std::size_t>(i)))
        targets.push_back(alg.basis()[static_cast<std::size_t>(i)].target);
    for (int t : targets) {
      bool minimal = true;
      for (int u : targets)
        if (u != t && q.reaches(u, t)) {
          minimal = false;
          break;
        }
      if (minimal) m.at(t - 1, s - 1) = 1;
    }
  }
  return m;
}

GeneratedMonoid<IntMatrix> matrix_monoid(
    const AlgebraPtr& alg, const std::vector<std::pair<std::string, Subbimodule>>& gens,
    std::size_t max_elements) {
  std::vector<std::pair<std::string, IntMatrix>> images;
  images.reserve(gens.size());
  for (const auto& [name, b] : gens) images.emplace_back(name, decategorify(b));
  return generate_closure(
      IntMatrix::identity(alg->quiver().vertex_count()), images,
      [](const IntMatrix& x, const IntMatrix& y) { return x * y; },
      [](const IntMatrix& x) { return x.key(); }, max_elements);
}

FiniteMonoid enumerate_presented(const MonoidPresentation& p, std::size_t max_elements,
                                 std::size_t max_steps) {
  std::vector<std::string> symbols = p.generators;
  if (p.zero) symbols.push_back(*p.zero);
  const int g = static_cast<int>(symbols.size());
  std::unordered_map<std::string, int> ordinal;
  for (int i = 0; i < g; ++i)
    if (!ordinal.emplace(symbols[static_cast<std::size_t>(i)], i).second)
      fail(errc::generator_mismatch,
           "duplicate generator name " + symbols[static_cast<std::size_t>(i)]);

  if (g == 0) {  // the trivial monoid
    FiniteMonoid m;
    m.keys = {"1"};
    m.table = {0};
    m.word_link = {{-1, -1}};
    m.zero = 0;
    return m;
  }

  auto compile = [&](const std::vector<std::string>& word) {
    std::vector<int> out;
    out.reserve(word.size());
    for (const std::string& sym : word) {
      auto it = ordinal.find(sym);
      if (it == ordinal.end())
        fail(errc::generator_mismatch, "relation uses unknown symbol " + sym);
      out.push_back(it->second);
    }
    return out;
  };

  std::vector<std::pair<std::vector<int>, std::vector<int>>> relations;
  for (const RelationInstance& r : p.relations)
    relations.emplace_back(compile(r.lhs), compile(r.rhs));
  if (p.zero) {
    const int z = g - 1;  // the zero symbol is absorbing
    for (int sym = 0; sym < g; ++sym) {
      relations.push_back({{z, sym}, {z}});
      relations.push_back({{sym, z}, {z}});
    }
  }

  // Partial right Cayley graph over state classes. Entries may point at dead
  // states; every read goes through find().
  std::vector<int> table;   // states x symbols, -1 undefined
  std::vector<int> parent;  // union-find
  std::size_t live = 0, steps = 0;

  auto new_state = [&]() {
    if (live >= max_elements)
      fail(errc::budget_exceeded,
           "presented monoid exceeded " + std::to_string(max_elements) + " elements");
    int id = static_cast<int>(parent.size());
    parent.push_back(id);
    table.resize(table.size() + static_cast<std::size_t>(g), -1);
    ++live;
    return id;
  };
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto slot = [&](int x, int sym) -> int& {
    return table[static_cast<std::size_t>(x) * static_cast<std::size_t>(g) +
                 static_cast<std::size_t>(sym)];
  };
  auto bump = [&]() {
    if (++steps > max_steps)
      fail(errc::budget_exceeded,
           "presented monoid exceeded " + std::to_string(max_steps) + " steps");
  };

  // identify two states and fold their outgoing rows together
  auto merge = [&](int a, int b) {
    std::vector<std::pair<int, int>> queue{{a, b}};
    while (!queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (y < x) std::swap(x, y);  // the older state survives
      parent[static_cast<std::size_t>(y)] = x;
      --live;
      for (int sym = 0; sym < g; ++sym) {
        int ty = slot(y, sym);
        if (ty == -1) continue;
        int& tx = slot(x, sym);
        if (tx == -1)
          tx = ty;
        else
          queue.emplace_back(tx, ty);
      }
    }
  };

  // trace a word from a live state, defining missing transitions
  auto walk = [&](int x, const std::vector<int>& word) {
    for (int sym : word) {
      bump();
      x = find(x);
      int t = slot(x, sym);
      if (t == -1) {
        t = new_state();
        slot(x, sym) = t;
      }
      x = t;
    }
    return find(x);
  };

  new_state();  // state 0: the empty word; it never loses a merge
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t defined = parent.size();
    for (int x = 0; x < static_cast<int>(defined); ++x) {
      if (find(x) != x) continue;
      for (int sym = 0; sym < g; ++sym) {  // keep every live row total
        bump();
        if (slot(x, sym) == -1) {
          int t = new_state();
          slot(x, sym) = t;
          changed = true;
        }
      }
      for (const auto& [lhs, rhs] : relations) {
        int a = walk(x, lhs);
        int b = walk(x, rhs);
        if (a != b) {
          merge(a, b);
          changed = true;
        }
        if (find(x) != x) break;  // x died; its class is revisited next sweep
      }
    }
    if (parent.size() != defined) changed = true;
  }

  // canonical relabel: breadth-first from the identity, symbols in order
  std::vector<int> label(parent.size(), -1);
  std::vector<int> order{0};
  label[0] = 0;
  FiniteMonoid m;
  m.word_link.push_back({-1, -1});
  std::vector<int> gen_col;  // new ids, BFS-order rows x symbols
  for (std::size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (int sym = 0; sym < g; ++sym) {
      int t = find(slot(x, sym));
      if (label[static_cast<std::size_t>(t)] == -1) {
        label[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
        order.push_back(t);
        m.word_link.push_back({static_cast<int>(i), sym});
      }
      gen_col.push_back(label[static_cast<std::size_t>(t)]);
    }
  }

  const int total = static_cast<int>(order.size());
  m.keys.resize(static_cast<std::size_t>(total));
  m.keys[0] = "1";
  for (int e = 1; e < total; ++e) {
    auto [pred, gi] = m.word_link[static_cast<std::size_t>(e)];
    const std::string& name = symbols[static_cast<std::size_t>(gi)];
    m.keys[static_cast<std::size_t>(e)] =
        pred == 0 ? name : m.keys[static_cast<std::size_t>(pred)] + " " + name;
  }

  m.table.assign(static_cast<std::size_t>(total) * static_cast<std::size_t>(total), -1);
  for (int x = 0; x < total; ++x) {
    m.table[static_cast<std::size_t>(x) * total] = x;
    for (int y = 1; y < total; ++y) {
      auto [pred, gi] = m.word_link[static_cast<std::size_t>(y)];
      int xp = m.table[static_cast<std::size_t>(x) * total + pred];
      m.table[static_cast<std::size_t>(x) * total + y] =
          gen_col[static_cast<std::size_t>(xp) * static_cast<std::size_t>(g) + gi];
    }
  }
  for (int sym = 0; sym < g; ++sym)
    m.generators.emplace_back(symbols[static_cast<std::size_t>(sym)],
                              gen_col[static_cast<std::size_t>(sym)]);
  m.identity = 0;
  m.zero = m.find_absorbing();
  return m;
}

std::vector<std::pair<std::string, std::string>> identity_pairing(
    const FiniteMonoid& m) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [name, el] : m.generators) out.emplace_back(name, name);
  return out;
}

IsomorphismReport check_isomorphism(
    const FiniteMonoid& a, const FiniteMonoid& b,
    const std::vector<std::pair<std::string, std::string>>& pairing) {
  std::unordered_map<std::string, int> aord, bord;
  for (std::size_t i = 0; i < a.generators.size(); ++i)
    aord.emplace(a.generators[i].first, static_cast<int>(i));
  for (std::size_t i = 0; i < b.generators.size(); ++i)
    bord.emplace(b.generators[i].first, static_cast<int>(i));
  if (pairing.size() != a.generators.size() || pairing.size() != b.generators.size())
    fail(errc::generator_mismatch, "pairing must cover both generator alphabets");
  std::vector<int> amap(a.generators.size(), -1);  // a ordinal -> b ordinal
  std::vector<bool> bused(b.generators.size(), false);
  for (const auto& [an, bn] : pairing) {
    auto ai = aord.find(an);
    auto bi = bord.find(bn);
    if (ai == aord.end())
      fail(errc::generator_mismatch, "pairing names unknown generator " + an);
    if (bi == bord.end())
      fail(errc::generator_mismatch, "pairing names unknown generator " + bn);
    if (amap[static_cast<std::size_t>(ai->second)] != -1 ||
        bused[static_cast<std::size_t>(bi->second)])
      fail(errc::generator_mismatch, "pairing repeats generator " + an);
    amap[static_cast<std::size_t>(ai->second)] = bi->second;
    bused[static_cast<std::size_t>(bi->second)] = true;
  }

  if (a.size() != b.size())
    return {false, "different cardinality: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size())};

  // extend along shortest words; word_link predecessors precede their elements
  const int n = static_cast<int>(a.size());
  std::vector<int> f(static_cast<std::size_t>(n), -1);
  f[static_cast<std::size_t>(a.identity)] = b.identity;
  for (int e = 0; e < n; ++e) {
    if (e == a.identity) continue;
    auto [pred, gi] = a.word_link[static_cast<std::size_t>(e)];
    int image = b.generators[static_cast<std::size_t>(
                                 amap[static_cast<std::size_t>(gi)])].second;
    f[static_cast<std::size_t>(e)] = b.mul(f[static_cast<std::size_t>(pred)], image);
  }

  for (std::size_t i = 0; i < a.generators.size(); ++i)
    if (f[static_cast<std::size_t>(a.generators[i].second)] !=
        b.generators[static_cast<std::size_t>(amap[i])].second)
      return {false, "generator " + a.generators[i].first + " misses its partner"};

  std::vector<int> preimage(static_cast<std::size_t>(n), -1);
  for (int e = 0; e < n; ++e) {
    int& seen = preimage[static_cast<std::size_t>(f[static_cast<std::size_t>(e)])];
    if (seen != -1)
      return {false, "not injective: '" + a.keys[static_cast<std::size_t>(seen)] +
                         "' and '" + a.keys[static_cast<std::size_t>(e)] +
                         "' share an image"};
    seen = e;
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f[static_cast<std::size_t>(a.mul(x, y))] !=
          b.mul(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]))
        return {false, "product mismatch at '" + a.keys[static_cast<std::size_t>(x)] +
                           "' * '" + a.keys[static_cast<std::size_t>(y)] + "'"};

  return {true, "bijection on " + std::to_string(n) + " elements"};
}

RealizationCheck check_realizations(const AlgebraPtr& alg, RelationFamily family,
                                    std::size_t max_elements, std::size_t max_steps) {
  const Quiver& q = alg->quiver();
  RealizationCheck out;

  if (family == RelationFamily::ideal) {
    FiniteMonoid presented =
        enumerate_presented(hk_presentation(q), max_elements, max_steps);
    GeneratedMonoid<Subbimodule> computed = ideal_monoid(alg, max_elements);
    GeneratedMonoid<IntMatrix> matrices =
        matrix_monoid(alg, ideal_generators(alg), max_elements);
    out.presented = presented.size();
    out.computed = computed.monoid.size();
    out.matrices = matrices.monoid.size();
    IsomorphismReport pi =
        check_isomorphism(presented, computed.monoid, identity_pairing(presented));
    IsomorphismReport mi = check_isomorphism(computed.monoid, matrices.monoid,
                                             identity_pairing(computed.monoid));
    out.presented_isomorphic = pi.isomorphic;
    out.matrices_isomorphic = mi.isomorphic;
    if (!pi.isomorphic)
      out.witness = "presented vs computed: " + pi.witness;
    else if (!mi.isomorphic)
      out.witness = "computed vs matrices: " + mi.witness;
    return out;
  }

  MonoidPresentation p = ind_presentation(q);
  FiniteMonoid presented = enumerate_presented(p, max_elements, max_steps);
  auto gens = indecomposable_generators(alg);
  if (p.zero) gens.emplace_back(*p.zero, zero_ideal(alg));
  GeneratedMonoid<Subbimodule> computed = generate_closure(
      identity_ideal(alg), gens,
      [](const Subbimodule& x, const Subbimodule& y) { return product(x, y); },
      [](const Subbimodule& x) { return x.key(); }, max_elements);
  out.presented = presented.size();
  out.computed = computed.monoid.size();
  out.matrices = 0;
  IsomorphismReport pi =
      check_isomorphism(presented, computed.monoid, identity_pairing(presented));
  out.presented_isomorphic = pi.isomorphic;
  out.matrices_isomorphic = true;  // no matrix leg for this family
  if (!pi.isomorphic) out.witness = "presented vs computed: " + pi.witness;
  return out;
}

}  // namespace qim
