#pragma once

#include <stdexcept>
#include <string>

namespace wildcert {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Presentation closure did not certifiably stabilize below the degree bound.
struct non_terminating_error : error {
  using error::error;
};

// The unit is contained in the relation ideal.
struct inconsistent_relations_error : error {
  using error::error;
};

struct not_a_group_error : error {
  using error::error;
};

// Radical (or an operation needing it) requested outside the supported
// algebra classes.
struct unsupported_class_error : error {
  using error::error;
};

struct algebra_mismatch_error : error {
  using error::error;
};

struct relation_violation_error : error {
  using error::error;
};

struct not_idempotent_error : error {
  using error::error;
};

// Neither the trace-form route nor exhaustive classification is feasible.
struct unsupported_size_error : error {
  using error::error;
};

struct not_automorphism_error : error {
  using error::error;
};

struct no_form_found_error : error {
  no_form_found_error(const std::string& msg, bool exhausted_)
      : error(msg), exhausted(exhausted_) {}
  bool exhausted;  // true when every functional was tried
};

struct not_a_cocycle_error : error {
  using error::error;
};

struct zero_cocycle_error : error {
  using error::error;
};

struct table_too_short_error : error {
  using error::error;
};

struct unstable_growth_error : error {
  unstable_growth_error(const std::string& msg, std::string diag)
      : error(msg), diagnostics(std::move(diag)) {}
  std::string diagnostics;
};

struct quotient_mismatch_error : error {
  using error::error;
};

struct strategy_mismatch_error : error {
  using error::error;
};

struct parse_error : error {
  using error::error;
};

}  // namespace wildcert
