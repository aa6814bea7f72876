#pragma once

#include <stdexcept>
#include <string>

namespace bdg {

enum class Errc {
  same_class_arc,
  index_out_of_range,
  parse_error,
  unbalanced_input,
  not_a_violator,
  empty_region,
  precondition_violated,
  not_disjoint,
  bad_length,
  too_large,
  invalid_params,
  search_failed,
  theorem_violation,
  matching_absent,
  internal_error,
};

const char* errc_name(Errc c);

/// Single error type for the whole library; the code tells callers which
/// contract was broken.  Parse errors additionally carry a 1-based input line.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message, int line = -1);

  Errc code() const noexcept { return code_; }
  int line() const noexcept { return line_; }

private:
  Errc code_;
  int line_;
};

[[noreturn]] void raise(Errc code, const std::string& message, int line = -1);

}  // namespace bdg
