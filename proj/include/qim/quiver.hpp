#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qim/bitset.hpp"
#include "qim/errors.hpp"

namespace qim {

using VertexList = std::vector<int>;

struct Arrow {
  int source = 0;
  int target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend bool operator<(const Arrow& a, const Arrow& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  }
};

// A maximal linearly oriented subtree, stored as its vertex sequence along
// the arrows. source() and sink() are the two ends.
struct Chain {
  VertexList vertices;

  int source() const { return vertices.front(); }
  int sink() const { return vertices.back(); }
  friend bool operator==(const Chain&, const Chain&) = default;
};

struct ValidationReport {
  bool connected = false;
  bool tree = false;
  bool admissible = false;
  VertexList offending_vertices;  // degree >= 3 vertices that are neither sink nor source
};

// Oriented tree on vertices 1..n. Immutable after construction; all derived
// data (reachability, boundary, chains) is precomputed, so const access is
// thread-safe.
class Quiver {
 public:
  // Validates and builds; throws Error(not_a_tree / bad_vertex_index /
  // syntax_error) on malformed input.
  static Quiver from_arrows(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  const VertexList& out_neighbors(int v) const { return check(v), out_[v]; }
  const VertexList& in_neighbors(int v) const { return check(v), in_[v]; }
  const VertexList& neighbors(int v) const { return check(v), adj_[v]; }

  int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
  int in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool is_sink(int v) const { return out_degree(v) == 0; }
  bool is_source(int v) const { return in_degree(v) == 0; }

  bool has_arrow(int s, int t) const;

  // true iff `to` is reachable from `from` along arrows (reflexive)
  bool reaches(int from, int to) const {
    return check(to), successor_mask(from).test(static_cast<std::size_t>(to - 1));
  }
  // bit v-1 set iff v reachable from `v`; includes the vertex itself
  const Bitset& successor_mask(int v) const { return check(v), succ_[v]; }
  VertexList successors(int v) const;

  // K(Q): all sinks and sources (equivalently deg_in * deg_out = 0)
  const VertexList& boundary() const { return boundary_; }
  // K'(Q): boundary vertices of degree >= 2
  const VertexList& split_vertices() const { return split_; }
  bool is_split_vertex(int v) const;

  bool admissible() const { return admissible_; }

  // canonically ordered by (source, sink)
  const std::vector<Chain>& maximal_chains() const { return chains_; }

  // connected components of the underlying graph minus v, each sorted,
  // ordered by smallest contained vertex; exactly degree(v) many
  std::vector<VertexList> components_without(int v) const;

  friend bool operator==(const Quiver&, const Quiver&);

 private:
  Quiver() = default;
  void check(int v) const {
    if (v < 1 || v > n_)
      fail(errc::bad_vertex_index,
           "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }

  int n_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<VertexList> out_, in_, adj_;  // index 0 unused
  std::vector<Bitset> succ_;
  VertexList boundary_, split_;
  bool admissible_ = false;
  std::vector<Chain> chains_;
};

// Report on raw data that may fail the tree requirements; never throws for
// structural problems (only for nonsensical vertex counts).
ValidationReport validate(int vertex_count, const std::vector<Arrow>& arrows);
ValidationReport validate(const Quiver& q);

// Raw parse result before the tree requirements are enforced.
struct QuiverData {
  int vertex_count = 0;
  std::vector<Arrow> arrows;
};

// Accepts either the JSON object {"vertices": n, "arrows": [[s,t], ...]} or
// a whitespace-separated line format (first integer n, then source/target
// pairs). The *_data variants stop after syntax checks (for validation
// reports); the Quiver variants also throw bad_vertex_index / not_a_tree.
QuiverData parse_quiver_data(std::string_view text);
QuiverData load_quiver_data(const std::string& path);
Quiver parse_quiver(std::string_view text);
Quiver load_quiver(const std::string& path);

// Subgraph of a quiver: explicit vertex and edge lists (supports are not
// induced subgraphs in general). Kept sorted and deduplicated.
struct Subgraph {
  VertexList vertices;
  std::vector<Arrow> edges;

  static Subgraph of(VertexList vertices, std::vector<Arrow> edges);

  bool empty() const { return vertices.empty(); }
  bool contains_vertex(int v) const;
  int degree(int v) const;  // within the subgraph's edge set
  bool connected() const;   // empty subgraph counts as connected
  bool subgraph_of(const Subgraph& o) const;
  bool vertex_disjoint(const Subgraph& o) const;
  static Subgraph intersection(const Subgraph& a, const Subgraph& b);

  friend bool operator==(const Subgraph&, const Subgraph&) = default;
  friend bool operator<(const Subgraph& a, const Subgraph& b) {
    return a.vertices != b.vertices ? a.vertices < b.vertices : a.edges < b.edges;
  }
};

}  // namespace qim
