#include "qim/bimodule.hpp"

#include <algorithm>
#include <cassert>

namespace qim {

std::shared_ptr<const PathAlgebra> PathAlgebra::make(Quiver q) {
  std::shared_ptr<PathAlgebra> a(new PathAlgebra(std::move(q)));
  const Quiver& quiv = a->q_;
  int n = quiv.vertex_count();

  a->idx_.assign(static_cast<std::size_t>(n) + 1,
                 std::vector<int>(static_cast<std::size_t>(n) + 1, -1));
  a->col_.assign(static_cast<std::size_t>(n) + 2, 0);
  for (int s = 1; s <= n; ++s) {
    a->col_[static_cast<std::size_t>(s)] = static_cast<int>(a->basis_.size());
    for (int t : quiv.successors(s)) {
      a->idx_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] =
          static_cast<int>(a->basis_.size());
      a->basis_.push_back(PathPair{t, s});
    }
  }
  a->col_[static_cast<std::size_t>(n) + 1] = static_cast<int>(a->basis_.size());

  a->moves_.resize(a->basis_.size());
  for (std::size_t i = 0; i < a->basis_.size(); ++i) {
    const PathPair& p = a->basis_[i];
    for (int y : quiv.out_neighbors(p.target)) a->moves_[i].push_back(a->index(y, p.source));
    for (int x : quiv.in_neighbors(p.source)) a->moves_[i].push_back(a->index(p.target, x));
    std::sort(a->moves_[i].begin(), a->moves_[i].end());
    a->moves_[i].erase(std::unique(a->moves_[i].begin(), a->moves_[i].end()),
                       a->moves_[i].end());
  }
  return a;
}

int PathAlgebra::index_checked(int target, int source) const {
  if (source < 1 || source > q_.vertex_count() || target < 1 || target > q_.vertex_count())
    fail(errc::bad_vertex_index, "path pair endpoint outside the vertex range");
  int i = index(target, source);
  if (i < 0)
    fail(errc::invalid_path_pair, "no path " + std::to_string(source) + " -> " +
                                      std::to_string(target));
  return i;
}

Subbimodule::Subbimodule(AlgebraPtr algebra, Bitset bits)
    : alg_(std::move(algebra)), bits_(std::move(bits)) {
  assert(bits_.size() == alg_->dimension());
}

std::vector<PathPair> Subbimodule::pairs() const {
  std::vector<PathPair> r;
  bits_.for_each([&](std::size_t i) { r.push_back(alg_->basis()[i]); });
  return r;
}

std::string Subbimodule::key() const {
  std::string k;
  bits_.for_each([&](std::size_t i) {
    const PathPair& p = alg_->basis()[i];
    if (!k.empty()) k += ',';
    k += std::to_string(p.target);
    k += ':';
    k += std::to_string(p.source);
  });
  return k;
}

Subbimodule zero_ideal(const AlgebraPtr& alg) {
  return Subbimodule(alg, Bitset(alg->dimension()));
}

Subbimodule identity_ideal(const AlgebraPtr& alg) {
  Bitset b(alg->dimension());
  for (std::size_t i = 0; i < alg->dimension(); ++i) b.set(i);
  return Subbimodule(alg, b);
}

Subbimodule closure(const AlgebraPtr& alg, const std::vector<PathPair>& seed) {
  Bitset b(alg->dimension());
  std::vector<int> stack;
  for (const PathPair& p : seed) {
    int i = alg->index_checked(p.target, p.source);
    if (!b.test(static_cast<std::size_t>(i))) {
      b.set(static_cast<std::size_t>(i));
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j : alg->moves(i))
      if (!b.test(static_cast<std::size_t>(j))) {
        b.set(static_cast<std::size_t>(j));
        stack.push_back(j);
      }
  }
  return Subbimodule(alg, std::move(b));
}

namespace {

bool closed(const PathAlgebra& alg, const Bitset& b) {
  bool ok = true;
  b.for_each([&](std::size_t i) {
    for (int j : alg.moves(static_cast<int>(i)))
      if (!b.test(static_cast<std::size_t>(j))) ok = false;
  });
  return ok;
}

void require_same_algebra(const Subbimodule& b, const Subbimodule& d) {
  if (b.algebra_ptr() == d.algebra_ptr()) return;
  if (!(b.algebra().quiver() == d.algebra().quiver()))
    fail(errc::quiver_mismatch, "operands live over different quivers");
}

}  // namespace

bool is_subbimodule(const AlgebraPtr& alg, const std::vector<PathPair>& pairs) {
  Bitset b(alg->dimension());
  for (const PathPair& p : pairs) b.set(static_cast<std::size_t>(alg->index_checked(p.target, p.source)));
  return closed(*alg, b);
}

Subbimodule product(const Subbimodule& b, const Subbimodule& d) {
  require_same_algebra(b, d);
  const PathAlgebra& alg = b.algebra();
  const Quiver& q = alg.quiver();
  int n = q.vertex_count();

  Bitset result(alg.dimension());
  Bitset targets(static_cast<std::size_t>(n));  // scratch, vertex space
  for (int s = 1; s <= n; ++s) {
    targets.clear();
    bool hit = false;
    for (int pos = alg.column_begin(s); pos < alg.column_end(s); ++pos) {
      if (!d.bits().test(static_cast<std::size_t>(pos))) continue;
      int k = alg.basis()[static_cast<std::size_t>(pos)].target;  // (k, s) in d
      for (int kpos = alg.column_begin(k); kpos < alg.column_end(k); ++kpos)
        if (b.bits().test(static_cast<std::size_t>(kpos))) {
          targets.set(static_cast<std::size_t>(
              alg.basis()[static_cast<std::size_t>(kpos)].target - 1));
          hit = true;
        }
    }
    if (hit)
      targets.for_each([&](std::size_t t) {
        result.set(static_cast<std::size_t>(alg.index(static_cast<int>(t) + 1, s)));
      });
  }
  assert(closed(alg, result));
  return Subbimodule(b.algebra_ptr(), std::move(result));
}

Subbimodule vertex_ideal(const AlgebraPtr& alg, int s) {
  Subbimodule full = identity_ideal(alg);
  Bitset b = full.bits();
  b.reset(static_cast<std::size_t>(alg->index_checked(s, s)));
  return Subbimodule(alg, std::move(b));
}

Subbimodule vertex_ideal_block(const AlgebraPtr& alg, int s, int q) {
  const Quiver& quiv = alg->quiver();
  if (!quiv.is_split_vertex(s))
    fail(errc::not_split_vertex, "vertex " + std::to_string(s) +
                                     " is not a boundary vertex of degree >= 2");
  auto comps = quiv.components_without(s);
  if (q < 1 || q > static_cast<int>(comps.size()))
    fail(errc::bad_component_index, "component index " + std::to_string(q) +
                                        " outside 1.." + std::to_string(comps.size()));
  Bitset inside(static_cast<std::size_t>(quiv.vertex_count()));
  for (int v : comps[static_cast<std::size_t>(q - 1)]) inside.set(static_cast<std::size_t>(v - 1));
  inside.set(static_cast<std::size_t>(s - 1));

  Bitset b(alg->dimension());
  int ss = alg->index(s, s);
  for (std::size_t i = 0; i < alg->dimension(); ++i) {
    if (static_cast<int>(i) == ss) continue;
    const PathPair& p = alg->basis()[i];
    if (inside.test(static_cast<std::size_t>(p.source - 1)) &&
        inside.test(static_cast<std::size_t>(p.target - 1)))
      b.set(i);
  }
  return Subbimodule(alg, std::move(b));
}

std::vector<Subbimodule> decompose(const Subbimodule& b) {
  const PathAlgebra& alg = b.algebra();
  // action edges are one-directional; summands are components of the
  // undirected action graph restricted to b
  std::vector<std::vector<int>> undirected(alg.dimension());
  for (std::size_t i = 0; i < alg.dimension(); ++i)
    for (int j : alg.moves(static_cast<int>(i))) {
      undirected[i].push_back(j);
      undirected[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
    }
  std::vector<Subbimodule> blocks;
  Bitset seen(alg.dimension());
  b.bits().for_each([&](std::size_t start) {
    if (seen.test(start)) return;
    Bitset block(alg.dimension());
    std::vector<std::size_t> stack{start};
    seen.set(start);
    block.set(start);
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (int j : undirected[i])
        if (b.bits().test(static_cast<std::size_t>(j)) &&
            !seen.test(static_cast<std::size_t>(j))) {
          seen.set(static_cast<std::size_t>(j));
          block.set(static_cast<std::size_t>(j));
          stack.push_back(static_cast<std::size_t>(j));
        }
    }
    blocks.emplace_back(b.algebra_ptr(), std::move(block));
  });
  return blocks;
}

Subgraph support(const Subbimodule& b) {
  const Quiver& q = b.algebra().quiver();
  VertexList vertices;
  std::vector<Arrow> edges;
  for (const Chain& c : q.maximal_chains()) {
    if (!b.contains(c.sink(), c.source())) continue;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      vertices.push_back(c.vertices[i]);
      if (i + 1 < c.vertices.size()) edges.push_back({c.vertices[i], c.vertices[i + 1]});
    }
  }
  return Subgraph::of(std::move(vertices), std::move(edges));
}

std::vector<Subbimodule> enumerate_subbimodules(const AlgebraPtr& alg,
                                                std::size_t max_count) {
  const std::size_t m = alg->dimension();
  // Deciding membership in an order where every move target is decided first
  // lets closedness be checked locally: include i only if all moves of i are
  // already in. Moves strictly increase path length, so decreasing length is
  // such an order.
  std::vector<int> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<int>(i);
  auto length = [&](int i) {
    const PathPair& p = alg->basis()[static_cast<std::size_t>(i)];
    int steps = 0, cur = p.source;
    while (cur != p.target) {
      for (int y : alg->quiver().out_neighbors(cur))
        if (alg->quiver().reaches(y, p.target)) {
          cur = y;
          break;
        }
      ++steps;
    }
    return steps;
  };
  std::vector<int> len(m);
  for (std::size_t i = 0; i < m; ++i) len[i] = length(static_cast<int>(i));
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return len[a] > len[b]; });

  std::vector<Subbimodule> out;
  Bitset cur(m);
  auto dfs = [&](auto&& self, std::size_t k) -> void {
    if (k == m) {
      if (out.size() >= max_count)
        fail(errc::budget_exceeded, "subbimodule enumeration exceeded " +
                                        std::to_string(max_count) + " elements");
      out.emplace_back(alg, cur);
      return;
    }
    int e = order[k];
    self(self, k + 1);  // exclude e
    bool can = true;
    for (int j : alg->moves(e))
      if (!cur.test(static_cast<std::size_t>(j))) can = false;
    if (can) {
      cur.set(static_cast<std::size_t>(e));
      self(self, k + 1);
      cur.reset(static_cast<std::size_t>(e));
    }
  };
  dfs(dfs, 0);

  std::sort(out.begin(), out.end(), [](const Subbimodule& a, const Subbimodule& b) {
    return Bitset::canonical_less(a.bits(), b.bits());
  });
  return out;
}

}  // namespace qim
