#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qim/monoid.hpp"

namespace qim {

// Finitely presented monoid. `zero`, when set, names an absorbing symbol that
// is not repeated in `generators`; the relations z*g = g*z = z*z = z are
// implied and added during enumeration. Relation words may use the symbol.
struct MonoidPresentation {
  std::vector<std::string> generators;
  std::optional<std::string> zero;
  std::vector<RelationInstance> relations;  // deduplicated on (lhs, rhs)
};

// Presentation of the ideal monoid on the alphabet {J_1..J_n}: idempotents,
// commutations for non-adjacent pairs, and the two absorption identities
// J_t J_s J_t = J_t J_s, J_s J_t J_s = J_t J_s per arrow s -> t.
MonoidPresentation hk_presentation(const Quiver& q);

// Presentation of the indecomposable monoid on the block-generator alphabet,
// with an adjoined "0" when the quiver has split vertices (without them it
// degenerates to hk_presentation). Requires admissibility.
MonoidPresentation ind_presentation(const Quiver& q);

// Square matrix with exact nonnegative integer entries, 0-indexed.
struct IntMatrix {
  int n = 0;
  std::vector<mpz_class> a;  // row-major

  IntMatrix() = default;
  explicit IntMatrix(int size)
      : n(size), a(static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {}
  static IntMatrix identity(int size);

  mpz_class& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  const mpz_class& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * n + c];
  }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const { return n == rhs.n && a == rhs.a; }
  std::string key() const;  // row-major, comma separated
};

// Endomorphism of the free abelian group on the vertex classes: column r
// lists the successor-minimal generators of {t : (t, r) in B}. Sends the
// identity bimodule to the identity matrix and the zero ideal to zero, and
// turns the ideal product into matrix multiplication.
IntMatrix decategorify(const Subbimodule& b);

// closure of the decategorified generators under matrix multiplication
GeneratedMonoid<IntMatrix> matrix_monoid(
    const AlgebraPtr& alg, const std::vector<std::pair<std::string, Subbimodule>>& gens,
    std::size_t max_elements = 1'000'000);

// Element enumeration of a finitely presented monoid: completes a partial
// right Cayley graph, merging states via union-find whenever a relation
// instance forces equality, until stable. Returns the monoid with canonical
// shortest-word labels (identity = "1"), deterministic given the
// presentation; the result is invariant under relation reordering. Throws
// budget_exceeded past the element or step budget (inconclusive — the
// presented monoid may still be finite).
FiniteMonoid enumerate_presented(const MonoidPresentation& p,
                                 std::size_t max_elements = 100'000,
                                 std::size_t max_steps = 10'000'000);

struct IsomorphismReport {
  bool isomorphic = false;
  std::string witness;  // first mismatch, or a summary when isomorphic
};

// Whether the generator pairing (lhs names in a, rhs names in b) extends to a
// monoid isomorphism; the extension is computed along shortest words. Throws
// generator_mismatch when the pairing is not a bijection of the two
// generator name sets.
IsomorphismReport check_isomorphism(
    const FiniteMonoid& a, const FiniteMonoid& b,
    const std::vector<std::pair<std::string, std::string>>& pairing);

// name -> same name, for monoids sharing a generator alphabet
std::vector<std::pair<std::string, std::string>> identity_pairing(
    const FiniteMonoid& m);

// Cross-check of the three realizations of a monoid of ideals: presented
// (relation schemas), computed (subbimodule closure), and for the ideal
// family the matrix image. For the indecomposable family the matrix leg is
// skipped and reported vacuously true; the computed closure then carries "0"
// as an extra named generator so that the alphabets match.
struct RealizationCheck {
  std::size_t presented = 0;
  std::size_t computed = 0;
  std::size_t matrices = 0;
  bool presented_isomorphic = false;
  bool matrices_isomorphic = false;
  std::string witness;  // first failure, empty when all pass
  bool all_pass() const { return presented_isomorphic && matrices_isomorphic; }
};

RealizationCheck check_realizations(const AlgebraPtr& alg, RelationFamily family,
                                    std::size_t max_elements = 100'000,
                                    std::size_t max_steps = 10'000'000);

}  // namespace qim
