#include "qim/errors.hpp"

namespace qim {

const char* errc_name(errc code) {
  switch (code) {
    case errc::syntax_error: return "SyntaxError";
    case errc::not_a_tree: return "NotATree";
    case errc::bad_vertex_index: return "BadVertexIndex";
    case errc::bad_value: return "BadValue";
    case errc::invalid_path_pair: return "InvalidPathPair";
    case errc::quiver_mismatch: return "QuiverMismatch";
    case errc::not_split_vertex: return "NotSplitVertex";
    case errc::bad_component_index: return "BadComponentIndex";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::not_admissible: return "NotAdmissible";
    case errc::not_indecomposable: return "NotIndecomposable";
    case errc::no_unique_generator: return "NoUniqueGenerator";
    case errc::not_special: return "NotSpecial";
    case errc::not_type_a: return "NotTypeA";
    case errc::case_not_covered: return "CaseNotCovered";
    case errc::not_special_subtree: return "NotSpecialSubtree";
    case errc::generator_mismatch: return "GeneratorMismatch";
    case errc::domain_error: return "DomainError";
  }
  return "UnknownError";
}

}  // namespace qim
