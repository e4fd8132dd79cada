// Batch front end: load a quiver (or sweep a generated family), run one
// analysis, emit a deterministic report. Exit 0 = success / all-pass,
// 1 = verification failure, 2 = usage or budget error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qim/bimodule.hpp"
#include "qim/errors.hpp"
#include "qim/families.hpp"
#include "qim/json_io.hpp"
#include "qim/monoid.hpp"
#include "qim/presentation.hpp"
#include "qim/quiver.hpp"
#include "qim/special.hpp"

namespace {

using namespace qim;

struct RunConfig {
  std::string quiver_path;
  std::string command;
  std::string format = "text";  // json | csv | text
  std::string out_path;         // empty = stdout
  std::string which = "I";      // monoid table selector: I | Iind
  std::optional<std::size_t> max_elements;  // unset = per-operation default
  std::optional<std::size_t> max_steps;
  int all_orientations = 0;  // > 0: run over the generated family instead
  unsigned seed = 0;         // reserved for sampled suites
};

// one command run on one quiver, rendered for every format up front
struct Record {
  Json json;
  std::string text;
  std::string csv;
  std::string summary;  // one line for suite mode
  bool pass = true;
};

std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string arrows_text(const Quiver& q) {
  std::string out;
  for (const Arrow& a : q.arrows()) {
    if (!out.empty()) out += " ";
    out += std::to_string(a.source) + "->" + std::to_string(a.target);
  }
  return out;
}

std::string pairs_text(const Subbimodule& b) {
  std::string out = "{";
  bool first = true;
  for (const PathPair& p : b.pairs()) {
    if (!first) out += " ";
    first = false;
    out += "(" + std::to_string(p.target) + "," + std::to_string(p.source) + ")";
  }
  return out + "}";
}

// key() uses commas; CSV cells use semicolons instead
std::string pairs_csv(const Subbimodule& b) {
  std::string k = b.key();
  for (char& c : k)
    if (c == ',') c = ';';
  return k;
}

Json mpz_json(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json word_json(const std::vector<std::string>& w) { return Json(w); }

std::string word_text(const std::vector<std::string>& w) {
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += " ";
    out += s;
  }
  return out;
}

// ---------------------------------------------------------------- validate

Record cmd_validate(const QuiverData& data, const RunConfig&) {
  ValidationReport r = validate(data.vertex_count, data.arrows);
  Record rec;
  Json arrows = Json::array();
  for (const Arrow& a : data.arrows) arrows.push_back({a.source, a.target});
  rec.json = {{"vertices", data.vertex_count},
              {"arrows", arrows},
              {"connected", r.connected},
              {"tree", r.tree},
              {"admissible", r.admissible},
              {"offending_vertices", r.offending_vertices}};
  if (r.tree) {
    Quiver q = Quiver::from_arrows(data.vertex_count, data.arrows);
    rec.json["boundary"] = q.boundary();
    rec.json["split_vertices"] = q.split_vertices();
  }
  std::ostringstream t;
  t << "vertices " << data.vertex_count << ", arrows " << data.arrows.size() << "\n"
    << "connected: " << (r.connected ? "yes" : "no") << "\n"
    << "tree: " << (r.tree ? "yes" : "no") << "\n"
    << "admissible: " << (r.admissible ? "yes" : "no") << "\n";
  if (!r.offending_vertices.empty())
    t << "offending vertices: " << join_ints(r.offending_vertices) << "\n";
  if (r.tree) {
    t << "boundary: " << join_ints(rec.json["boundary"].get<std::vector<int>>()) << "\n"
      << "split vertices: "
      << join_ints(rec.json["split_vertices"].get<std::vector<int>>()) << "\n";
  }
  rec.text = t.str();
  std::ostringstream c;
  c << "field,value\nvertices," << data.vertex_count << "\narrows," << data.arrows.size()
    << "\nconnected," << r.connected << "\ntree," << r.tree << "\nadmissible,"
    << r.admissible << "\n";
  rec.csv = c.str();
  rec.summary = std::string("tree ") + (r.tree ? "yes" : "no") + ", admissible " +
                (r.admissible ? "yes" : "no");
  rec.pass = r.tree;
  return rec;
}

// ------------------------------------------------------------------- basis

Record cmd_basis(const Quiver& q, const RunConfig&) {
  auto alg = PathAlgebra::make(q);
  Record rec;
  Json pairs = Json::array();
  std::ostringstream t, c;
  c << "target,source\n";
  for (const PathPair& p : alg->basis()) {
    pairs.push_back({p.target, p.source});
    t << "(" << p.target << "," << p.source << ")\n";
    c << p.target << "," << p.source << "\n";
  }
  rec.json = {{"quiver", quiver_json(q)},
              {"dimension", alg->dimension()},
              {"pairs", pairs}};
  rec.text = "dimension " + std::to_string(alg->dimension()) + "\n" + t.str();
  rec.csv = c.str();
  rec.summary = "dimension " + std::to_string(alg->dimension());
  return rec;
}

// ------------------------------------------------------------------ ideals

Record cmd_ideals(const Quiver& q, const RunConfig& cfg) {
  auto alg = PathAlgebra::make(q);
  auto all = cfg.max_elements ? enumerate_subbimodules(alg, *cfg.max_elements)
                              : enumerate_subbimodules(alg);
  Record rec;
  Json list = Json::array();
  std::ostringstream t, c;
  t << all.size() << " subbimodules\n";
  c << "index,dimension,pairs\n";
  for (std::size_t i = 0; i < all.size(); ++i) {
    Json e = subbimodule_json(all[i]);
    e["dimension"] = all[i].dimension();
    list.push_back(std::move(e));
    t << pairs_text(all[i]) << "\n";
    c << i << "," << all[i].dimension() << "," << pairs_csv(all[i]) << "\n";
  }
  rec.json = {{"quiver", quiver_json(q)}, {"count", all.size()}, {"ideals", list}};
  rec.text = t.str();
  rec.csv = c.str();
  rec.summary = std::to_string(all.size()) + " subbimodules";
  return rec;
}

// ---------------------------------------------------------- indecomposables

Record cmd_indecomposables(const Quiver& q, const RunConfig& cfg) {
  auto alg = PathAlgebra::make(q);
  auto all = cfg.max_elements ? enumerate_subbimodules(alg, *cfg.max_elements)
                              : enumerate_subbimodules(alg);
  Record rec;
  Json list = Json::array();
  std::ostringstream t, c;
  c << "index,dimension,function,support,pairs\n";
  std::size_t count = 0;
  for (const Subbimodule& b : all) {
    if (decompose(b).size() > 1) continue;
    Json e = subbimodule_json(b);
    e["dimension"] = b.dimension();
    if (b.dimension() == 0) {
      e["function"] = nullptr;
      e["support"] = subgraph_json(Subgraph{});
      t << "zero\n";
      c << count << ",0,,," << "\n";
    } else {
      VertexFunction alpha = classifying_function(b);
      Subgraph omega = support(b);
      e["function"] = function_json(alpha);
      e["support"] = subgraph_json(omega);
      t << "(" << join_ints(alpha, ",") << ")  support {" << join_ints(omega.vertices)
        << "}  " << pairs_text(b) << "\n";
      c << count << "," << b.dimension() << "," << join_ints(alpha) << ","
        << join_ints(omega.vertices) << "," << pairs_csv(b) << "\n";
    }
    list.push_back(std::move(e));
    ++count;
  }
  rec.json = {{"quiver", quiver_json(q)}, {"count", count}, {"elements", list}};
  rec.text = std::to_string(count) + " elements (indecomposables plus zero)\n" + t.str();
  rec.csv = c.str();
  rec.summary = std::to_string(count) + " elements";
  return rec;
}

// --------------------------------------------------------- special-functions

Record cmd_special_functions(const Quiver& q, const RunConfig&) {
  auto functions = enumerate_special(q);
  Record rec;
  Json groups = Json::array();
  std::ostringstream t, c;
  c << "values,support\n";
  Subgraph current;
  Json* bucket = nullptr;
  for (const VertexFunction& f : functions) {
    Subgraph s = function_support(q, f);
    if (!bucket || !(s == current)) {
      groups.push_back({{"support", subgraph_json(s)}, {"functions", Json::array()}});
      bucket = &groups.back()["functions"];
      current = s;
      t << "support {" << join_ints(s.vertices) << "}\n";
    }
    bucket->push_back(function_json(f));
    t << "  (" << join_ints(f, ",") << ")\n";
    c << join_ints(f) << "," << join_ints(s.vertices) << "\n";
  }
  rec.json = {{"quiver", quiver_json(q)}, {"count", functions.size()}, {"groups", groups}};
  rec.text = std::to_string(functions.size()) + " special functions\n" + t.str();
  rec.csv = c.str();
  rec.summary = std::to_string(functions.size()) + " special functions";
  return rec;
}

// ----------------------------------------------------------- catalan-check

Record cmd_catalan_check(const Quiver& q, const RunConfig&) {
  TypeAShape shape = type_a_shape(q);  // throws not_type_a for branching trees
  auto functions = enumerate_special(q);
  int k = static_cast<int>(shape.marks.size());
  Record rec;
  Json checks = Json::array();
  std::ostringstream t, c;
  c << "i,j,formula,brute,match\n";
  bool all = true;
  for (int i = 1; i < k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      mpz_class formula = count_type_a(q, i, j);
      // the segment between the two marked positions, as a subgraph
      VertexList verts;
      std::vector<Arrow> edges;
      for (int p = shape.marks[static_cast<std::size_t>(i - 1)];
           p <= shape.marks[static_cast<std::size_t>(j - 1)]; ++p) {
        int v = shape.walk[static_cast<std::size_t>(p - 1)];
        if (!verts.empty()) {
          int u = verts.back();
          edges.push_back(q.has_arrow(u, v) ? Arrow{u, v} : Arrow{v, u});
        }
        verts.push_back(v);
      }
      Subgraph segment = Subgraph::of(verts, edges);
      mpz_class brute = 0;
      for (const VertexFunction& f : functions)
        if (function_support(q, f) == segment) ++brute;
      bool ok = formula == brute;
      all = all && ok;
      checks.push_back({{"i", i},
                        {"j", j},
                        {"formula", mpz_json(formula)},
                        {"brute_force", mpz_json(brute)},
                        {"match", ok}});
      t << "C(" << i << "," << j << "): formula " << formula.get_str() << ", brute force "
        << brute.get_str() << (ok ? "" : "  MISMATCH") << "\n";
      c << i << "," << j << "," << formula.get_str() << "," << brute.get_str() << ","
        << ok << "\n";
    }
  rec.json = {{"quiver", quiver_json(q)},
              {"boundary_positions", shape.marks},
              {"checks", checks},
              {"all_pass", all}};
  rec.text = t.str() + (all ? "all window counts match brute force\n" : "");
  rec.csv = c.str();
  rec.summary = std::to_string(checks.size()) + " windows, " +
                (all ? "all match" : "MISMATCH");
  rec.pass = all;
  return rec;
}

// ------------------------------------------------------------------ monoid

Record cmd_monoid(const Quiver& q, const RunConfig& cfg) {
  auto alg = PathAlgebra::make(q);
  std::size_t budget = cfg.max_elements.value_or(1'000'000);
  GeneratedMonoid<Subbimodule> gm = cfg.which == "I" ? ideal_monoid(alg, budget)
                                                     : indecomposable_monoid(alg, budget);
  Record rec;
  rec.json = {{"quiver", quiver_json(q)},
              {"which", cfg.which},
              {"monoid", monoid_json(gm.monoid)}};
  std::ostringstream t;
  t << "order " << gm.monoid.size() << "\n";
  t << "generators:";
  for (const auto& [name, el] : gm.monoid.generators) t << " " << name << "=" << el;
  t << "\nzero element: " << gm.monoid.zero << "\n";
  for (std::size_t e = 0; e < gm.monoid.size(); ++e)
    t << e << ": " << gm.monoid.keys[e] << "\n";
  rec.text = t.str();
  rec.csv = monoid_table_csv(gm.monoid);
  rec.summary = "order " + std::to_string(gm.monoid.size());
  return rec;
}

// --------------------------------------------------------------- relations

Json relation_report_json(const RelationReport& rep) {
  Json failures = Json::array();
  for (const RelationFailure& f : rep.failures)
    failures.push_back({{"rule", f.instance.rule},
                        {"lhs", word_json(f.instance.lhs)},
                        {"rhs", word_json(f.instance.rhs)},
                        {"lhs_value", f.lhs_key},
                        {"rhs_value", f.rhs_key}});
  return {{"total", rep.total}, {"failures", failures}};
}

Record cmd_relations(const Quiver& q, const RunConfig&) {
  auto alg = PathAlgebra::make(q);
  RelationReport ideal = check_relations(alg, RelationFamily::ideal);
  std::optional<RelationReport> ind;
  if (q.admissible()) ind = check_relations(alg, RelationFamily::indecomposable);
  Record rec;
  rec.pass = ideal.all_pass() && (!ind || ind->all_pass());
  rec.json = {{"quiver", quiver_json(q)},
              {"ideal", relation_report_json(ideal)},
              {"indecomposable", ind ? relation_report_json(*ind) : Json(nullptr)},
              {"all_pass", rec.pass}};
  std::ostringstream t, c;
  c << "family,total,failures\n";
  auto show = [&](const char* name, const RelationReport& rep) {
    t << name << " relations: " << rep.total << " instances, " << rep.failures.size()
      << " failures\n";
    for (const RelationFailure& f : rep.failures)
      t << "  " << f.instance.rule << ": " << word_text(f.instance.lhs) << " = "
        << word_text(f.instance.rhs) << " evaluates [" << f.lhs_key << "] vs ["
        << f.rhs_key << "]\n";
    c << name << "," << rep.total << "," << rep.failures.size() << "\n";
  };
  show("ideal", ideal);
  if (ind) show("indecomposable", *ind);
  rec.text = t.str();
  rec.csv = c.str();
  rec.summary = rec.pass ? "all relations hold" : "relation failures";
  return rec;
}

// -------------------------------------------------------------- generators

Record cmd_generators(const Quiver& q, const RunConfig& cfg) {
  auto alg = PathAlgebra::make(q);
  std::size_t budget = cfg.max_elements.value_or(1'000'000);
  auto census = cfg.max_elements ? enumerate_subbimodules(alg, *cfg.max_elements)
                                 : enumerate_subbimodules(alg);
  std::size_t ind_census = 0;
  for (const Subbimodule& b : census)
    if (decompose(b).size() <= 1) ++ind_census;

  Record rec;
  std::ostringstream t, c;
  c << "family,generator,essential\n";
  bool pass = true;
  auto run_family = [&](const char* name, GeneratedMonoid<Subbimodule> gm,
                        std::size_t expected) {
    std::vector<std::string> names;
    for (const auto& [gname, el] : gm.monoid.generators) names.push_back(gname);
    auto essential = minimal_generating_check(gm.monoid, names);
    bool generates = gm.monoid.size() == expected;
    bool minimal = true;
    Json ess = Json::array();
    for (const auto& [gname, is_essential] : essential) {
      minimal = minimal && is_essential;
      ess.push_back({{"name", gname}, {"essential", is_essential}});
      c << name << "," << gname << "," << is_essential << "\n";
    }
    pass = pass && generates && minimal;
    t << name << ": closure " << gm.monoid.size() << ", census " << expected << " -> "
      << (generates ? "generates" : "DOES NOT GENERATE") << "; "
      << (minimal ? "every generator essential" : "REDUNDANT GENERATOR") << "\n";
    return Json{{"generator_count", names.size()},
                {"closure_size", gm.monoid.size()},
                {"census_size", expected},
                {"generates", generates},
                {"minimal", minimal},
                {"essential", ess}};
  };
  rec.json = {{"quiver", quiver_json(q)},
              {"ideal", run_family("ideal", ideal_monoid(alg, budget), census.size())},
              {"indecomposable",
               q.admissible()
                   ? run_family("indecomposable", indecomposable_monoid(alg, budget),
                                ind_census)
                   : Json(nullptr)}};
  rec.json["all_pass"] = pass;
  rec.pass = pass;
  rec.text = t.str();
  rec.csv = c.str();
  rec.summary = pass ? "generating sets minimal" : "generator check FAILED";
  return rec;
}

// ------------------------------------------------------- presentation-check

Json realization_json(const RealizationCheck& rc) {
  return {{"presented", rc.presented},
          {"computed", rc.computed},
          {"matrices", rc.matrices},
          {"presented_isomorphic", rc.presented_isomorphic},
          {"matrices_isomorphic", rc.matrices_isomorphic},
          {"witness", rc.witness}};
}

Record cmd_presentation_check(const Quiver& q, const RunConfig& cfg) {
  auto alg = PathAlgebra::make(q);
  std::size_t max_el = cfg.max_elements.value_or(100'000);
  std::size_t max_st = cfg.max_steps.value_or(10'000'000);
  RealizationCheck ideal = check_realizations(alg, RelationFamily::ideal, max_el, max_st);
  std::optional<RealizationCheck> ind;
  if (q.admissible())
    ind = check_realizations(alg, RelationFamily::indecomposable, max_el, max_st);
  Record rec;
  rec.pass = ideal.all_pass() && (!ind || ind->all_pass());
  rec.json = {{"quiver", quiver_json(q)},
              {"ideal", realization_json(ideal)},
              {"indecomposable", ind ? realization_json(*ind) : Json(nullptr)},
              {"all_pass", rec.pass}};
  std::ostringstream t, c;
  c << "family,presented,computed,matrices,presented_isomorphic,matrices_isomorphic\n";
  auto show = [&](const char* name, const RealizationCheck& rc) {
    t << name << ": presented " << rc.presented << ", computed " << rc.computed;
    if (rc.matrices > 0) t << ", matrices " << rc.matrices;
    t << " -> " << (rc.all_pass() ? "isomorphic" : "NOT ISOMORPHIC (" + rc.witness + ")")
      << "\n";
    c << name << "," << rc.presented << "," << rc.computed << "," << rc.matrices << ","
      << rc.presented_isomorphic << "," << rc.matrices_isomorphic << "\n";
  };
  show("ideal", ideal);
  if (ind) show("indecomposable", *ind);
  rec.text = t.str();
  rec.csv = c.str();
  rec.summary = rec.pass ? "presentations realized" : "presentation check FAILED";
  return rec;
}

// ------------------------------------------------------------ decategorify

Record cmd_decategorify(const Quiver& q, const RunConfig&) {
  auto alg = PathAlgebra::make(q);
  Record rec;
  std::ostringstream t, c;
  c << "family,generator,row,col,value\n";
  auto emit = [&](const char* family, const std::vector<std::pair<std::string, Subbimodule>>& gens) {
    Json list = Json::array();
    for (const auto& [name, b] : gens) {
      IntMatrix m = decategorify(b);
      list.push_back({{"name", name}, {"matrix", matrix_json(m)}});
      t << family << " " << name << ":\n";
      for (int r = 0; r < m.n; ++r) {
        t << " ";
        for (int col = 0; col < m.n; ++col) {
          t << " " << m.at(r, col).get_str();
          c << family << "," << name << "," << r << "," << col << ","
            << m.at(r, col).get_str() << "\n";
        }
        t << "\n";
      }
    }
    return list;
  };
  rec.json = {{"quiver", quiver_json(q)},
              {"dimension", q.vertex_count()},
              {"ideal", emit("ideal", ideal_generators(alg))},
              {"indecomposable", q.admissible()
                                     ? emit("indecomposable", indecomposable_generators(alg))
                                     : Json(nullptr)}};
  rec.text = t.str();
  rec.csv = c.str();
  rec.summary = "matrices emitted";
  return rec;
}

// ----------------------------------------------------------------- b-omega

Record cmd_b_omega(const Quiver& q, const RunConfig& cfg) {
  auto alg = PathAlgebra::make(q);
  auto census = cfg.max_elements ? enumerate_subbimodules(alg, *cfg.max_elements)
                                 : enumerate_subbimodules(alg);
  std::map<Subgraph, std::vector<Subbimodule>> by_support;
  for (const Subbimodule& b : census)
    if (b.dimension() > 0 && decompose(b).size() == 1)
      by_support[support(b)].push_back(b);

  Record rec;
  Json subtrees = Json::array();
  std::ostringstream t, c;
  c << "support,b_omega_dimension,matches\n";
  bool all = true;
  for (const auto& [omega, group] : by_support) {
    Subbimodule bw = maximal_ideal_with_support(alg, omega);
    bool matches = support(bw) == omega;
    for (const Subbimodule& g : group)
      matches = matches && g.bits().is_subset_of(bw.bits());
    bool in_census = false;
    for (const Subbimodule& g : group) in_census = in_census || g == bw;
    matches = matches && in_census;
    all = all && matches;
    subtrees.push_back({{"support", subgraph_json(omega)},
                        {"b_omega", subbimodule_json(bw)},
                        {"candidates", group.size()},
                        {"matches_census_maximum", matches}});
    t << "support {" << join_ints(omega.vertices) << "}: product dimension "
      << bw.dimension() << ", " << group.size() << " candidates"
      << (matches ? "" : "  MISMATCH") << "\n";
    c << join_ints(omega.vertices) << "," << bw.dimension() << "," << matches << "\n";
  }
  rec.json = {{"quiver", quiver_json(q)},
              {"count", subtrees.size()},
              {"subtrees", subtrees},
              {"all_pass", all}};
  rec.text = t.str() + (all ? "every product is the census maximum\n" : "");
  rec.csv = c.str();
  rec.summary = std::to_string(subtrees.size()) + " subtrees, " +
                (all ? "all match" : "MISMATCH");
  rec.pass = all;
  return rec;
}

// -------------------------------------------------------------- dispatcher

Record run_command(const QuiverData& raw, const RunConfig& cfg) {
  if (cfg.command == "validate") return cmd_validate(raw, cfg);
  Quiver q = Quiver::from_arrows(raw.vertex_count, raw.arrows);
  if (cfg.command == "basis") return cmd_basis(q, cfg);
  if (cfg.command == "ideals") return cmd_ideals(q, cfg);
  if (cfg.command == "indecomposables") return cmd_indecomposables(q, cfg);
  if (cfg.command == "special-functions") return cmd_special_functions(q, cfg);
  if (cfg.command == "catalan-check") return cmd_catalan_check(q, cfg);
  if (cfg.command == "monoid") return cmd_monoid(q, cfg);
  if (cfg.command == "relations") return cmd_relations(q, cfg);
  if (cfg.command == "generators") return cmd_generators(q, cfg);
  if (cfg.command == "presentation-check") return cmd_presentation_check(q, cfg);
  if (cfg.command == "decategorify") return cmd_decategorify(q, cfg);
  if (cfg.command == "b-omega") return cmd_b_omega(q, cfg);
  fail(errc::case_not_covered, "unknown command " + cfg.command);
}

std::vector<Quiver> suite_family(const RunConfig& cfg) {
  if (cfg.command == "catalan-check") {
    std::vector<Quiver> out;
    for (int n = 2; n <= cfg.all_orientations; ++n)
      for (Quiver& q : type_a_orientations(n)) out.push_back(std::move(q));
    return out;
  }
  return admissible_tree_family(cfg.all_orientations);
}

Record run_suite(const RunConfig& cfg) {
  Record rec;
  Json records = Json::array();
  std::ostringstream t, c;
  c << "quiver,pass\n";
  bool all = true;
  std::size_t count = 0;
  for (const Quiver& q : suite_family(cfg)) {
    Record one = run_command(QuiverData{q.vertex_count(), q.arrows()}, cfg);
    all = all && one.pass;
    ++count;
    Json entry = {{"quiver", quiver_json(q)}, {"pass", one.pass}};
    entry["report"] = std::move(one.json);
    records.push_back(std::move(entry));
    t << "[" << arrows_text(q) << "] " << one.summary << "\n";
    c << arrows_text(q) << "," << one.pass << "\n";
  }
  t << count << " quivers, " << (all ? "all pass" : "FAILURES") << "\n";
  rec.json = {{"command", cfg.command},
              {"orientations_up_to", cfg.all_orientations},
              {"count", count},
              {"all_pass", all},
              {"runs", records}};
  rec.text = t.str();
  rec.csv = c.str();
  rec.pass = all;
  return rec;
}

int emit(const Record& rec, const RunConfig& cfg) {
  std::string body = cfg.format == "json"  ? rec.json.dump(2) + "\n"
                     : cfg.format == "csv" ? rec.csv
                                           : rec.text;
  if (cfg.out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(cfg.out_path);
    if (!out) {
      std::cerr << "cannot write " << cfg.out_path << "\n";
      return 2;
    }
    out << body;
  }
  return rec.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for the ideal monoid of a tree path algebra"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::pair<const char*, const char*> commands[] = {
      {"validate", "structural report on a quiver file"},
      {"basis", "path-pair basis of the algebra"},
      {"ideals", "enumerate every subbimodule"},
      {"indecomposables", "census of indecomposables with classifying functions"},
      {"special-functions", "special functions grouped by support"},
      {"catalan-check", "window counting formulas vs brute force (type A only)"},
      {"monoid", "multiplication table of I or Iind"},
      {"relations", "verify the defining relations on actual ideals"},
      {"generators", "generating sets and drop-one minimality"},
      {"presentation-check", "presented vs computed vs matrix monoid"},
      {"decategorify", "integer matrices of all generators"},
      {"b-omega", "maximal ideal with given support vs census maximum"},
  };

  std::size_t max_elements_raw = 0, max_steps_raw = 0;
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--quiver", cfg.quiver_path, "quiver file (JSON or line format)");
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", cfg.out_path, "write the report to a file");
    sub->add_option("--max-elements", max_elements_raw,
                    "budget for enumeration/closure element counts")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-steps", max_steps_raw, "budget for enumeration steps")
        ->check(CLI::PositiveNumber);
    sub->add_option("--all-orientations", cfg.all_orientations,
                    "run over every admissible orientation of every tree on <= n vertices")
        ->check(CLI::Range(2, 16));
    sub->add_option("--seed", cfg.seed, "seed for sampled suites (reserved)");
    if (std::string(name) == "monoid")
      sub->add_option("--which", cfg.which, "which monoid to tabulate")
          ->check(CLI::IsMember({"I", "Iind"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0, every usage problem exits 2
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  if (sub->count("--max-elements")) cfg.max_elements = max_elements_raw;
  if (sub->count("--max-steps")) cfg.max_steps = max_steps_raw;
  if (!cfg.max_elements) {
    if (const char* env = std::getenv("QIM_BUDGET_ELEMENTS")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0' || v == 0) {
        std::cerr << "QIM_BUDGET_ELEMENTS must be a positive integer, got \"" << env
                  << "\"\n";
        return 2;
      }
      cfg.max_elements = static_cast<std::size_t>(v);
    }
  }

  bool suite = sub->count("--all-orientations") > 0;
  if (suite == !cfg.quiver_path.empty()) {
    std::cerr << "give exactly one of --quiver and --all-orientations\n";
    return 2;
  }

  try {
    Record rec = suite ? run_suite(cfg) : run_command(load_quiver_data(cfg.quiver_path), cfg);
    return emit(rec, cfg);
  } catch (const qim::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
