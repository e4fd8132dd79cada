#include "qim/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qim {

namespace {

using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

// lexicographically smallest relabeling; set `undirected` to forget
// orientations while comparing
EdgeList certificate(int n, const EdgeList& edges, bool undirected) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  EdgeList best;
  do {
    EdgeList relabeled;
    relabeled.reserve(edges.size());
    for (auto [s, t] : edges) {
      int a = perm[static_cast<std::size_t>(s - 1)];
      int b = perm[static_cast<std::size_t>(t - 1)];
      if (undirected && b < a) std::swap(a, b);
      relabeled.emplace_back(a, b);
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (best.empty() || relabeled < best) best = std::move(relabeled);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

EdgeList prufer_decode(int n, const std::vector<int>& code) {
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int v : code) ++degree[static_cast<std::size_t>(v)];
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  EdgeList edges;
  for (int v : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    if (--degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  }
  int a = *leaves.begin();
  int b = *leaves.rbegin();
  edges.emplace_back(std::min(a, b), std::max(a, b));
  return edges;
}

// undirected trees on n vertices up to isomorphism, canonically labeled
std::vector<EdgeList> tree_shapes(int n) {
  std::set<EdgeList> shapes;
  if (n == 2) {
    shapes.insert({{1, 2}});
  } else {
    std::vector<int> code(static_cast<std::size_t>(n - 2), 1);
    while (true) {
      shapes.insert(certificate(n, prufer_decode(n, code), true));
      std::size_t pos = code.size();
      while (pos > 0 && code[pos - 1] == n) code[--pos] = 1;
      if (pos == 0) break;
      ++code[pos - 1];
    }
  }
  return {shapes.begin(), shapes.end()};
}

}  // namespace

std::vector<Quiver> admissible_tree_family(int max_n) {
  if (max_n < 2) fail(errc::bad_value, "the family starts at two vertices");
  std::vector<Quiver> out;
  for (int n = 2; n <= max_n; ++n) {
    std::set<EdgeList> seen;
    for (const EdgeList& shape : tree_shapes(n)) {
      const int m = static_cast<int>(shape.size());
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        EdgeList arrows;
        for (int e = 0; e < m; ++e) {
          auto [a, b] = shape[static_cast<std::size_t>(e)];
          if (mask & (1u << e))
            arrows.emplace_back(a, b);
          else
            arrows.emplace_back(b, a);
        }
        seen.insert(certificate(n, arrows, false));
      }
    }
    for (const EdgeList& cert : seen) {
      std::vector<Arrow> arrows;
      for (auto [s, t] : cert) arrows.push_back({s, t});
      Quiver q = Quiver::from_arrows(n, arrows);
      if (q.admissible()) out.push_back(std::move(q));
    }
  }
  return out;
}

std::vector<Quiver> type_a_orientations(int n) {
  if (n < 2) fail(errc::bad_value, "paths need at least two vertices");
  std::vector<Quiver> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<Arrow> arrows;
    for (int e = 0; e < n - 1; ++e) {
      if (mask & (1u << e))
        arrows.push_back({e + 1, e + 2});
      else
        arrows.push_back({e + 2, e + 1});
    }
    out.push_back(Quiver::from_arrows(n, arrows));
  }
  return out;
}

}  // namespace qim
