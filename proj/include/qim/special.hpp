#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "qim/bimodule.hpp"
#include "qim/quiver.hpp"

namespace qim {

// vertex function alpha: values[i-1] = alpha(i), with 0 meaning "undefined"
using VertexFunction = std::vector<int>;

struct Classification {
  bool is_path = false;       // alpha(i) in successors(i) or 0, for all i
  bool is_monotone = false;   // checked arrow-locally (equivalent to all pairs)
  Subgraph support;           // union of maximal chains X with some i in X, alpha(i) in X
  bool support_connected = false;
  bool sink_degrees_ok = false;  // alpha(i)=0, i boundary vertex in support => degree 1 there
  bool is_special = false;
};

// requires an admissible quiver; values outside 0..n raise bad_value
Classification classify(const Quiver& q, const VertexFunction& alpha);

// support subgraph of an arbitrary vertex function (no admissibility needed)
Subgraph function_support(const Quiver& q, const VertexFunction& alpha);

// all special functions, ordered by (support vertex list, values); requires
// admissibility
std::vector<VertexFunction> enumerate_special(const Quiver& q);

// classifying function of an indecomposable (or zero / identity) subbimodule:
// column i empty -> 0, otherwise the unique x with column i = successors(x)
VertexFunction classifying_function(const Subbimodule& b);

// subbimodule attached to a special function: pairs (t, s) with alpha(s) != 0
// and t in successors(alpha(s))
Subbimodule ideal_of_function(const AlgebraPtr& alg, const VertexFunction& alpha);

struct CatalanTriple {
  int m = 0;
  mpz_class cat;                   // C(2m, m) / (m + 1)
  std::optional<mpz_class> cat1;   // cat(m) - cat(m-1), m >= 1
  std::optional<mpz_class> cat2;   // cat(m) - 2 cat(m-1) + cat(m-2), m >= 2
};

mpz_class catalan(int m);
CatalanTriple catalan_numbers(int m);

// number of special functions supported on the segment between the i-th and
// j-th boundary vertex of a type-A quiver (1 <= i < j <= k, positions along
// the path); requires every vertex degree <= 2
mpz_class count_type_a(const Quiver& q, int i, int j);

// boundary vertices of a type-A quiver as positions along the path, walking
// from the smaller-labelled endpoint; also the vertex labels in walk order
struct TypeAShape {
  VertexList walk;        // vertex labels along the path
  std::vector<int> marks; // positions (1-based along walk) of boundary vertices
};
TypeAShape type_a_shape(const Quiver& q);

}  // namespace qim
