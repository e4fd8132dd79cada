#include "qim/special.hpp"

#include <algorithm>
#include <cassert>

namespace qim {

namespace {

void require_admissible(const Quiver& q) {
  if (!q.admissible())
    fail(errc::not_admissible,
         "every vertex of degree >= 3 must be a sink or a source");
}

void check_values(const Quiver& q, const VertexFunction& alpha) {
  if (static_cast<int>(alpha.size()) != q.vertex_count())
    fail(errc::bad_value, "expected one value per vertex");
  for (int v : alpha)
    if (v < 0 || v > q.vertex_count())
      fail(errc::bad_value, "function values must lie in 0..n");
}

int value(const VertexFunction& alpha, int v) {
  return alpha[static_cast<std::size_t>(v - 1)];
}

}  // namespace

// X in supp(alpha) iff some i in X has alpha(i) in X
Subgraph function_support(const Quiver& q, const VertexFunction& alpha) {
  VertexList vertices;
  std::vector<Arrow> edges;
  for (const Chain& c : q.maximal_chains()) {
    bool in_supp = false;
    for (int i : c.vertices) {
      int a = value(alpha, i);
      if (a != 0 && std::find(c.vertices.begin(), c.vertices.end(), a) != c.vertices.end()) {
        in_supp = true;
        break;
      }
    }
    if (!in_supp) continue;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      vertices.push_back(c.vertices[i]);
      if (i + 1 < c.vertices.size())
        edges.push_back({c.vertices[i], c.vertices[i + 1]});
    }
  }
  return Subgraph::of(std::move(vertices), std::move(edges));
}

namespace {

bool sink_degrees_ok(const Quiver& q, const VertexFunction& alpha, const Subgraph& supp) {
  for (int v : q.boundary())
    if (supp.contains_vertex(v) && value(alpha, v) == 0 && supp.degree(v) != 1)
      return false;
  return true;
}

}  // namespace

Classification classify(const Quiver& q, const VertexFunction& alpha) {
  require_admissible(q);
  check_values(q, alpha);

  Classification c;
  c.is_path = true;
  for (int v = 1; v <= q.vertex_count(); ++v) {
    int a = value(alpha, v);
    if (a != 0 && !q.reaches(v, a)) c.is_path = false;
  }

  c.is_monotone = true;
  for (const Arrow& e : q.arrows()) {
    int at = value(alpha, e.target);
    if (at == 0) continue;
    int as = value(alpha, e.source);
    if (as == 0 || !q.reaches(as, at)) c.is_monotone = false;
  }

  c.support = function_support(q, alpha);
  c.support_connected = c.support.connected();
  c.sink_degrees_ok = sink_degrees_ok(q, alpha, c.support);
  c.is_special = c.is_path && c.is_monotone && c.support_connected && c.sink_degrees_ok;
  return c;
}

std::vector<VertexFunction> enumerate_special(const Quiver& q) {
  require_admissible(q);
  const int n = q.vertex_count();

  // topological order: in-neighbors precede their targets
  VertexList topo;
  {
    std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) indeg[static_cast<std::size_t>(v)] = q.in_degree(v);
    VertexList queue;
    for (int v = 1; v <= n; ++v)
      if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      topo.push_back(u);
      for (int w : q.out_neighbors(u))
        if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
  }

  std::vector<VertexFunction> out;
  VertexFunction alpha(static_cast<std::size_t>(n), 0);
  // assign along topo order; the monotonicity constraints of a vertex only
  // involve its in-neighbors, which are already assigned
  auto dfs = [&](auto&& self, std::size_t k) -> void {
    if (k == topo.size()) {
      Subgraph supp = function_support(q, alpha);
      if (supp.connected() && sink_degrees_ok(q, alpha, supp)) out.push_back(alpha);
      return;
    }
    int v = topo[k];
    alpha[static_cast<std::size_t>(v - 1)] = 0;
    self(self, k + 1);
    for (int x : q.successors(v)) {
      bool ok = true;
      for (int u : q.in_neighbors(v)) {
        int au = value(alpha, u);
        if (au == 0 || !q.reaches(au, x)) ok = false;
      }
      if (!ok) continue;
      alpha[static_cast<std::size_t>(v - 1)] = x;
      self(self, k + 1);
    }
    alpha[static_cast<std::size_t>(v - 1)] = 0;
  };
  dfs(dfs, 0);

  std::vector<std::pair<VertexList, std::size_t>> keyed;
  keyed.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Subgraph supp = function_support(q, out[i]);
    keyed.emplace_back(std::move(supp.vertices), i);
  }
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return out[a.second] < out[b.second];
  });
  std::vector<VertexFunction> sorted;
  sorted.reserve(out.size());
  for (const auto& [supp, i] : keyed) sorted.push_back(out[i]);
  return sorted;
}

VertexFunction classifying_function(const Subbimodule& b) {
  const PathAlgebra& alg = b.algebra();
  const Quiver& q = alg.quiver();
  require_admissible(q);
  if (decompose(b).size() > 1)
    fail(errc::not_indecomposable, "subbimodule has more than one summand");

  VertexFunction alpha(static_cast<std::size_t>(q.vertex_count()), 0);
  for (int s = 1; s <= q.vertex_count(); ++s) {
    VertexList column;
    for (int pos = alg.column_begin(s); pos < alg.column_end(s); ++pos)
      if (b.bits().test(static_cast<std::size_t>(pos)))
        column.push_back(alg.basis()[static_cast<std::size_t>(pos)].target);
    if (column.empty()) continue;
    int generator = 0;
    for (int t : column) {
      bool minimal = true;
      for (int y : column)
        if (y != t && q.reaches(y, t)) minimal = false;
      if (minimal) {
        if (generator != 0)
          fail(errc::no_unique_generator,
               "column " + std::to_string(s) + " has several minimal paths");
        generator = t;
      }
    }
    if (static_cast<int>(column.size()) !=
        static_cast<int>(q.successor_mask(generator).count()))
      fail(errc::no_unique_generator,
           "column " + std::to_string(s) + " is not a full successor cone");
    alpha[static_cast<std::size_t>(s - 1)] = generator;
  }
  return alpha;
}

Subbimodule ideal_of_function(const AlgebraPtr& alg, const VertexFunction& alpha) {
  const Quiver& q = alg->quiver();
  Classification c = classify(q, alpha);
  if (!c.is_special)
    fail(errc::not_special, "the function is not special over this quiver");

  Bitset bits(alg->dimension());
  for (int s = 1; s <= q.vertex_count(); ++s) {
    int a = alpha[static_cast<std::size_t>(s - 1)];
    if (a == 0) continue;
    for (int t : q.successors(a))
      bits.set(static_cast<std::size_t>(alg->index(t, s)));
  }
  return Subbimodule(alg, std::move(bits));
}

mpz_class catalan(int m) {
  if (m < 0) fail(errc::domain_error, "catalan undefined for negative index");
  mpz_class c = 1;
  for (int i = 1; i <= m; ++i) {
    c *= 2 * (2 * i - 1);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return c;
}

CatalanTriple catalan_numbers(int m) {
  CatalanTriple t;
  t.m = m;
  t.cat = catalan(m);
  if (m >= 1) t.cat1 = t.cat - catalan(m - 1);
  if (m >= 2) t.cat2 = t.cat - 2 * catalan(m - 1) + catalan(m - 2);
  return t;
}

TypeAShape type_a_shape(const Quiver& q) {
  const int n = q.vertex_count();
  VertexList ends;
  for (int v = 1; v <= n; ++v) {
    if (q.degree(v) > 2)
      fail(errc::not_type_a, "vertex " + std::to_string(v) + " has degree > 2");
    if (q.degree(v) == 1) ends.push_back(v);
  }
  assert(ends.size() == 2);

  TypeAShape shape;
  int prev = 0, cur = *std::min_element(ends.begin(), ends.end());
  while (true) {
    shape.walk.push_back(cur);
    int next = 0;
    for (int w : q.neighbors(cur))
      if (w != prev) next = w;
    if (next == 0) break;
    prev = cur;
    cur = next;
  }
  assert(static_cast<int>(shape.walk.size()) == n);
  for (int pos = 1; pos <= n; ++pos) {
    int v = shape.walk[static_cast<std::size_t>(pos - 1)];
    if (q.is_sink(v) || q.is_source(v)) shape.marks.push_back(pos);
  }
  return shape;
}

mpz_class count_type_a(const Quiver& q, int i, int j) {
  TypeAShape shape = type_a_shape(q);
  const int k = static_cast<int>(shape.marks.size());
  const int n = q.vertex_count();
  if (i < 1 || j <= i || j > k)
    fail(errc::bad_value, "need 1 <= i < j <= " + std::to_string(k));

  auto l = [&](int idx) { return shape.marks[static_cast<std::size_t>(idx - 1)]; };
  auto und = [](const mpz_class& v) { return mpz_class(v - 1); };
  auto cat1 = [](int m) { return mpz_class(catalan(m) - catalan(m - 1)); };
  auto cat2 = [](int m) {
    return mpz_class(catalan(m) - 2 * catalan(m - 1) + catalan(m - 2));
  };
  auto chain_product = [&](int from, int to) {  // prod over s in [from, to]
    mpz_class p = 1;
    for (int s = from; s <= to; ++s) p *= catalan(l(s + 1) - l(s));
    return p;
  };

  if (k == 2) return und(catalan(n + 1));
  if (i == 1 && j == 2) return und(cat1(l(2) - l(1) + 2));
  if (i == k - 1 && j == k) return und(cat1(l(k) - l(k - 1) + 2));
  if (i == 1 && j == k)
    return catalan(l(2)) * catalan(l(k) - l(k - 1) + 1) * chain_product(2, k - 2);
  if (i == 1 && 3 <= j && j <= k - 1)
    return catalan(l(2)) * cat1(l(j) - l(j - 1) + 1) * chain_product(2, j - 2);
  if (j == k && 2 <= i && i <= k - 2)
    return catalan(l(k) - l(k - 1) + 1) * cat1(l(i + 1) - l(i) + 1) *
           chain_product(i + 1, k - 2);
  if (j == i + 1 && 2 <= i && i <= k - 2) return und(cat2(l(i + 1) - l(i) + 2));
  if (2 <= i && j > i + 1 && j <= k - 1)
    return cat1(l(i + 1) - l(i) + 1) * cat1(l(j) - l(j - 1) + 1) *
           chain_product(i + 1, j - 2);
  fail(errc::case_not_covered, "no counting case matches (i, j) = (" +
                                   std::to_string(i) + ", " + std::to_string(j) + ")");
}

}  // namespace qim
