#include "qim/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qim {

namespace {

// union-find over 0..n-1
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

void check_raw(int n, const std::vector<Arrow>& arrows, bool& connected, bool& tree) {
  Dsu dsu(n);
  bool acyclic = true;
  std::set<std::pair<int, int>> seen;
  for (const auto& a : arrows) {
    int lo = std::min(a.source, a.target), hi = std::max(a.source, a.target);
    if (lo == hi || !seen.insert({lo, hi}).second || !dsu.unite(lo - 1, hi - 1))
      acyclic = false;
  }
  int roots = 0;
  for (int v = 0; v < n; ++v) roots += dsu.find(v) == v;
  connected = roots == 1;
  tree = connected && acyclic && static_cast<int>(arrows.size()) == n - 1;
}

}  // namespace

Quiver Quiver::from_arrows(int n, std::vector<Arrow> arrows) {
  if (n < 2) fail(errc::syntax_error, "a quiver needs at least 2 vertices");
  for (const auto& a : arrows)
    if (a.source < 1 || a.source > n || a.target < 1 || a.target > n)
      fail(errc::bad_vertex_index, "arrow endpoint outside 1.." + std::to_string(n));

  bool connected = false, tree = false;
  check_raw(n, arrows, connected, tree);
  if (!tree)
    fail(errc::not_a_tree, connected ? "the underlying graph has a cycle or repeated edge"
                                     : "the underlying graph is not connected");

  Quiver q;
  q.n_ = n;
  std::sort(arrows.begin(), arrows.end());
  q.arrows_ = std::move(arrows);
  q.out_.assign(n + 1, {});
  q.in_.assign(n + 1, {});
  q.adj_.assign(n + 1, {});
  for (const auto& a : q.arrows_) {
    q.out_[a.source].push_back(a.target);
    q.in_[a.target].push_back(a.source);
    q.adj_[a.source].push_back(a.target);
    q.adj_[a.target].push_back(a.source);
  }
  for (int v = 1; v <= n; ++v) {
    std::sort(q.out_[v].begin(), q.out_[v].end());
    std::sort(q.in_[v].begin(), q.in_[v].end());
    std::sort(q.adj_[v].begin(), q.adj_[v].end());
  }

  q.succ_.assign(n + 1, Bitset(static_cast<std::size_t>(n)));
  for (int v = 1; v <= n; ++v) {
    std::vector<int> stack{v};
    q.succ_[v].set(static_cast<std::size_t>(v - 1));
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : q.out_[u])
        if (!q.succ_[v].test(static_cast<std::size_t>(w - 1))) {
          q.succ_[v].set(static_cast<std::size_t>(w - 1));
          stack.push_back(w);
        }
    }
  }

  q.admissible_ = true;
  for (int v = 1; v <= n; ++v) {
    bool in_boundary = q.in_[v].empty() || q.out_[v].empty();
    if (in_boundary) {
      q.boundary_.push_back(v);
      if (q.adj_[v].size() >= 2) q.split_.push_back(v);
    } else if (q.adj_[v].size() >= 3) {
      q.admissible_ = false;
    }
  }

  // maximal chains: every source-to-sink directed path, depth-first along
  // ascending out-neighbors
  for (int s : q.boundary_) {
    if (!q.is_source(s)) continue;
    VertexList path{s};
    auto dfs = [&](auto&& self, int u) -> void {
      if (q.out_[u].empty()) {
        q.chains_.push_back(Chain{path});
        return;
      }
      for (int w : q.out_[u]) {
        path.push_back(w);
        self(self, w);
        path.pop_back();
      }
    };
    dfs(dfs, s);
  }
  std::sort(q.chains_.begin(), q.chains_.end(), [](const Chain& a, const Chain& b) {
    return a.source() != b.source() ? a.source() < b.source() : a.sink() < b.sink();
  });
  return q;
}

bool Quiver::has_arrow(int s, int t) const {
  const auto& out = out_neighbors(s);
  return std::binary_search(out.begin(), out.end(), (check(t), t));
}

VertexList Quiver::successors(int v) const {
  VertexList r;
  successor_mask(v).for_each([&](std::size_t i) { r.push_back(static_cast<int>(i) + 1); });
  return r;
}

bool Quiver::is_split_vertex(int v) const {
  check(v);
  return std::binary_search(split_.begin(), split_.end(), v);
}

std::vector<VertexList> Quiver::components_without(int v) const {
  check(v);
  std::vector<VertexList> comps;
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  seen[static_cast<std::size_t>(v)] = true;
  for (int start = 1; start <= n_; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    VertexList comp;
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : adj_[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool operator==(const Quiver& a, const Quiver& b) {
  return a.n_ == b.n_ && a.arrows_ == b.arrows_;
}

ValidationReport validate(int n, const std::vector<Arrow>& arrows) {
  ValidationReport r;
  if (n < 1) return r;
  for (const auto& a : arrows)
    if (a.source < 1 || a.source > n || a.target < 1 || a.target > n) return r;
  check_raw(n, arrows, r.connected, r.tree);

  std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0), din(deg), dout(deg);
  for (const auto& a : arrows) {
    ++deg[static_cast<std::size_t>(a.source)];
    ++deg[static_cast<std::size_t>(a.target)];
    ++dout[static_cast<std::size_t>(a.source)];
    ++din[static_cast<std::size_t>(a.target)];
  }
  for (int v = 1; v <= n; ++v)
    if (deg[static_cast<std::size_t>(v)] >= 3 && din[static_cast<std::size_t>(v)] > 0 &&
        dout[static_cast<std::size_t>(v)] > 0)
      r.offending_vertices.push_back(v);
  r.admissible = r.tree && r.offending_vertices.empty();
  return r;
}

ValidationReport validate(const Quiver& q) {
  return validate(q.vertex_count(), q.arrows());
}

namespace {

QuiverData parse_json_quiver(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::syntax_error, e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows") ||
      !j["vertices"].is_number_integer() || !j["arrows"].is_array())
    fail(errc::syntax_error, "expected {\"vertices\": n, \"arrows\": [[s,t], ...]}");
  QuiverData data{j["vertices"].get<int>(), {}};
  for (const auto& e : j["arrows"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      fail(errc::syntax_error, "each arrow must be a pair of integers");
    data.arrows.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return data;
}

QuiverData parse_line_quiver(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  if (!(in >> n)) fail(errc::syntax_error, "expected a vertex count");
  std::vector<Arrow> arrows;
  long long s = 0, t = 0;
  while (in >> s) {
    if (!(in >> t)) fail(errc::syntax_error, "dangling arrow source without target");
    arrows.push_back({static_cast<int>(s), static_cast<int>(t)});
  }
  if (!in.eof()) fail(errc::syntax_error, "unexpected non-integer token");
  if (n < 0 || n > 1'000'000) fail(errc::syntax_error, "unreasonable vertex count");
  return QuiverData{static_cast<int>(n), std::move(arrows)};
}

}  // namespace

QuiverData parse_quiver_data(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json_quiver(text) : parse_line_quiver(text);
  }
  fail(errc::syntax_error, "empty quiver description");
}

QuiverData load_quiver_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::syntax_error, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_quiver_data(buf.str());
}

Quiver parse_quiver(std::string_view text) {
  QuiverData data = parse_quiver_data(text);
  return Quiver::from_arrows(data.vertex_count, std::move(data.arrows));
}

Quiver load_quiver(const std::string& path) {
  QuiverData data = load_quiver_data(path);
  return Quiver::from_arrows(data.vertex_count, std::move(data.arrows));
}

Subgraph Subgraph::of(VertexList vertices, std::vector<Arrow> edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Subgraph{std::move(vertices), std::move(edges)};
}

bool Subgraph::contains_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

int Subgraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges) d += (e.source == v) + (e.target == v);
  return d;
}

bool Subgraph::connected() const {
  if (vertices.empty()) return true;
  Dsu dsu(static_cast<int>(vertices.size()));
  auto idx = [&](int v) {
    return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), v) -
                            vertices.begin());
  };
  for (const auto& e : edges) dsu.unite(idx(e.source), idx(e.target));
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (dsu.find(static_cast<int>(i)) != dsu.find(0)) return false;
  return true;
}

bool Subgraph::subgraph_of(const Subgraph& o) const {
  return std::includes(o.vertices.begin(), o.vertices.end(), vertices.begin(),
                       vertices.end()) &&
         std::includes(o.edges.begin(), o.edges.end(), edges.begin(), edges.end());
}

bool Subgraph::vertex_disjoint(const Subgraph& o) const {
  std::vector<int> common;
  std::set_intersection(vertices.begin(), vertices.end(), o.vertices.begin(),
                        o.vertices.end(), std::back_inserter(common));
  return common.empty();
}

Subgraph Subgraph::intersection(const Subgraph& a, const Subgraph& b) {
  Subgraph r;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                        b.vertices.end(), std::back_inserter(r.vertices));
  std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                        std::back_inserter(r.edges));
  return r;
}

}  // namespace qim
