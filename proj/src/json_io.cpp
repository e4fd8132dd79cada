#include "qim/json_io.hpp"

#include <limits>

namespace qim {

namespace {

int read_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    fail(errc::syntax_error, std::string("expected an integer for ") + what);
  return j.get<int>();
}

Json big_json(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

mpz_class big_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  fail(errc::syntax_error, "expected an integer or a decimal string");
}

}  // namespace

Json quiver_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({a.source, a.target});
  return Json{{"vertices", q.vertex_count()}, {"arrows", std::move(arrows)}};
}

Quiver quiver_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
    fail(errc::syntax_error, "quiver JSON needs \"vertices\" and \"arrows\"");
  int n = read_int(j["vertices"], "vertices");
  std::vector<Arrow> arrows;
  for (const Json& e : j["arrows"]) {
    if (!e.is_array() || e.size() != 2)
      fail(errc::syntax_error, "each arrow must be a [source, target] pair");
    arrows.push_back({read_int(e[0], "arrow source"), read_int(e[1], "arrow target")});
  }
  return Quiver::from_arrows(n, arrows);
}

Json subgraph_json(const Subgraph& s) {
  Json edges = Json::array();
  for (const Arrow& e : s.edges) edges.push_back({e.source, e.target});
  return Json{{"vertices", s.vertices}, {"edges", std::move(edges)}};
}

Json subbimodule_json(const Subbimodule& b) {
  Json pairs = Json::array();
  for (const PathPair& p : b.pairs()) pairs.push_back({p.target, p.source});
  return Json{{"pairs", std::move(pairs)}};
}

Subbimodule subbimodule_from_json(const AlgebraPtr& alg, const Json& j) {
  if (!j.is_object() || !j.contains("pairs"))
    fail(errc::syntax_error, "subbimodule JSON needs \"pairs\"");
  Bitset bits(static_cast<std::size_t>(alg->dimension()));
  for (const Json& e : j["pairs"]) {
    if (!e.is_array() || e.size() != 2)
      fail(errc::syntax_error, "each pair must be [target, source]");
    int t = read_int(e[0], "pair target");
    int s = read_int(e[1], "pair source");
    bits.set(static_cast<std::size_t>(alg->index_checked(t, s)));
  }
  Subbimodule b(alg, std::move(bits));
  if (!is_subbimodule(alg, b.pairs()))
    fail(errc::domain_error, "the stored pair set is not action-closed");
  return b;
}

Json function_json(const VertexFunction& alpha) { return Json(alpha); }

VertexFunction function_from_json(const Json& j) {
  if (!j.is_array()) fail(errc::syntax_error, "function JSON must be an array");
  VertexFunction alpha;
  for (const Json& v : j) alpha.push_back(read_int(v, "function value"));
  return alpha;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.n; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.n; ++c) row.push_back(big_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) fail(errc::syntax_error, "matrix JSON must be an array of rows");
  const int n = static_cast<int>(j.size());
  IntMatrix m(n);
  for (int r = 0; r < n; ++r) {
    if (!j[static_cast<std::size_t>(r)].is_array() ||
        static_cast<int>(j[static_cast<std::size_t>(r)].size()) != n)
      fail(errc::syntax_error, "matrix rows must be square");
    for (int c = 0; c < n; ++c)
      m.at(r, c) = big_from_json(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  return m;
}

Json monoid_json(const FiniteMonoid& m) {
  const int size = static_cast<int>(m.size());
  Json table = Json::array();
  for (int x = 0; x < size; ++x) {
    Json row = Json::array();
    for (int y = 0; y < size; ++y) row.push_back(m.mul(x, y));
    table.push_back(std::move(row));
  }
  Json generators = Json::object();
  for (const auto& [name, el] : m.generators) generators[name] = el;
  return Json{{"elements", m.keys},
              {"table", std::move(table)},
              {"identity", m.identity},
              {"zero", m.zero < 0 ? Json(nullptr) : Json(m.zero)},
              {"generators", std::move(generators)}};
}

std::string monoid_table_csv(const FiniteMonoid& m) {
  const int size = static_cast<int>(m.size());
  std::string out;
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      if (y) out += ',';
      out += std::to_string(m.mul(x, y));
    }
    out += '\n';
  }
  return out;
}

Json presentation_json(const MonoidPresentation& p) {
  Json relations = Json::array();
  for (const RelationInstance& r : p.relations)
    relations.push_back(Json::array({r.lhs, r.rhs}));
  return Json{{"generators", p.generators},
              {"zero", p.zero ? Json(*p.zero) : Json(nullptr)},
              {"relations", std::move(relations)}};
}

MonoidPresentation presentation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("relations"))
    fail(errc::syntax_error, "presentation JSON needs \"generators\" and \"relations\"");
  MonoidPresentation p;
  for (const Json& g : j["generators"]) {
    if (!g.is_string()) fail(errc::syntax_error, "generator names must be strings");
    p.generators.push_back(g.get<std::string>());
  }
  if (j.contains("zero") && !j["zero"].is_null())
    p.zero = j["zero"].get<std::string>();
  auto word = [](const Json& w) {
    std::vector<std::string> out;
    if (!w.is_array()) fail(errc::syntax_error, "relation words must be arrays");
    for (const Json& sym : w) out.push_back(sym.get<std::string>());
    return out;
  };
  for (const Json& r : j["relations"]) {
    if (!r.is_array() || r.size() != 2)
      fail(errc::syntax_error, "each relation must be a [lhs, rhs] pair");
    p.relations.push_back({"", word(r[0]), word(r[1])});
  }
  return p;
}

}  // namespace qim
