#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qim/bitset.hpp"
#include "qim/quiver.hpp"

namespace qim {

// Basis path of the path algebra: the unique path source -> target. The
// stationary paths are the pairs with source == target.
struct PathPair {
  int target = 0;
  int source = 0;

  friend bool operator==(const PathPair&, const PathPair&) = default;
  // canonical basis order: by (source, target)
  friend bool operator<(const PathPair& a, const PathPair& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  }
};

// Path basis of a tree quiver plus the index tables used by the bimodule
// operations. Immutable; shared by the subbimodules built over it.
class PathAlgebra {
 public:
  static std::shared_ptr<const PathAlgebra> make(Quiver q);

  const Quiver& quiver() const { return q_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<PathPair>& basis() const { return basis_; }

  // basis position of (target, source), or -1 when no such path exists
  int index(int target, int source) const {
    return idx_[static_cast<std::size_t>(source)][static_cast<std::size_t>(target)];
  }
  int index_checked(int target, int source) const;

  // pairs with a fixed source are contiguous: [column_begin(s), column_end(s))
  int column_begin(int source) const { return col_[static_cast<std::size_t>(source)]; }
  int column_end(int source) const { return col_[static_cast<std::size_t>(source) + 1]; }

  // action moves on basis positions: left multiplication by an arrow extends
  // the target, right multiplication extends the source backwards
  const std::vector<int>& moves(int basis_index) const {
    return moves_[static_cast<std::size_t>(basis_index)];
  }

 private:
  explicit PathAlgebra(Quiver q) : q_(std::move(q)) {}

  Quiver q_;
  std::vector<PathPair> basis_;
  std::vector<std::vector<int>> idx_;
  std::vector<int> col_;
  std::vector<std::vector<int>> moves_;
};

using AlgebraPtr = std::shared_ptr<const PathAlgebra>;

// Subbimodule of the identity bimodule: a successor-closed set of basis
// paths, stored as a bit-vector over the path basis.
class Subbimodule {
 public:
  Subbimodule(AlgebraPtr algebra, Bitset bits);

  const PathAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const Bitset& bits() const { return bits_; }

  std::size_t dimension() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(int target, int source) const {
    int i = alg_->index(target, source);
    return i >= 0 && bits_.test(static_cast<std::size_t>(i));
  }
  std::vector<PathPair> pairs() const;  // in canonical basis order
  bool contains_all(const Subbimodule& o) const { return o.bits_.is_subset_of(bits_); }

  // compact canonical key, e.g. "2:1,2:2" (target:source pairs)
  std::string key() const;

  friend bool operator==(const Subbimodule& a, const Subbimodule& b) {
    return a.bits_ == b.bits_;
  }

 private:
  AlgebraPtr alg_;
  Bitset bits_;
};

Subbimodule zero_ideal(const AlgebraPtr& alg);
Subbimodule identity_ideal(const AlgebraPtr& alg);

// smallest subbimodule containing the seed pairs
Subbimodule closure(const AlgebraPtr& alg, const std::vector<PathPair>& seed);
bool is_subbimodule(const AlgebraPtr& alg, const std::vector<PathPair>& pairs);

Subbimodule product(const Subbimodule& b, const Subbimodule& d);

// the maximal ideal missing only the stationary path at s
Subbimodule vertex_ideal(const AlgebraPtr& alg, int s);
// block of vertex_ideal(s) supported on the q-th component of Q minus s
// (components_without order, q is 1-based); s must be a split vertex
Subbimodule vertex_ideal_block(const AlgebraPtr& alg, int s, int q);

// direct summands: connected components of the action graph restricted to b,
// ordered by least basis index; empty input yields an empty list
std::vector<Subbimodule> decompose(const Subbimodule& b);

// union of the maximal chains whose full path lies in b, as a subgraph
Subgraph support(const Subbimodule& b);

// all subbimodules, ordered by (dimension, canonical bit order)
std::vector<Subbimodule> enumerate_subbimodules(const AlgebraPtr& alg,
                                                std::size_t max_count = 5'000'000);

}  // namespace qim
