#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kzero {

/// Failure kinds raised by the library. Parse-type errors are bad input text;
/// everything else is a violated precondition of a computation.
enum class Errc {
  parse_error,
  missing_variable,
  non_unit_constant_term,
  vertex_out_of_range,
  empty_complex,
  d_out_of_range,
  dimension_condition_violated,
  too_few_components,
  component_is_single_simplex,
  single_simplex,
  degree_too_large,
  order_cap_exceeded,
  dimension_mismatch,
  order_exceeds_table,
  invalid_argument,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  bool is_parse_error() const noexcept { return code_ == Errc::parse_error; }

 private:
  Errc code_;
};

}  // namespace kzero
