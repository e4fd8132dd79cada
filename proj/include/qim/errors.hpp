#pragma once

#include <stdexcept>
#include <string>

namespace qim {

// Failure categories surfaced by the library. The CLI maps budget/usage
// categories to exit code 2 and verification mismatches to exit code 1.
enum class errc {
  syntax_error,
  not_a_tree,
  bad_vertex_index,
  bad_value,
  invalid_path_pair,
  quiver_mismatch,
  not_split_vertex,
  bad_component_index,
  budget_exceeded,
  not_admissible,
  not_indecomposable,
  no_unique_generator,
  not_special,
  not_type_a,
  case_not_covered,
  not_special_subtree,
  generator_mismatch,
  domain_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qim
