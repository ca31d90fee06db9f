#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperjump {

enum class ErrorCode {
  duplicate_edge,
  repeated_vertex_in_triple,
  index_out_of_range,
  cap_exceeded,
  dimension_mismatch,
  domain_error,
  support_error,
  hypothesis_violated,
  unsupported_order,
  wrong_residue,
  not_a_bijection,
  precondition_failed,
  format_error,
  schema_error,
  io_error,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base of every exception raised by the library. The code identifies the
/// failure class so callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

template <ErrorCode Code>
class ErrorOf : public Error {
 public:
  explicit ErrorOf(const std::string& what) : Error(Code, what) {}
};

using DuplicateEdge = ErrorOf<ErrorCode::duplicate_edge>;
using RepeatedVertexInTriple = ErrorOf<ErrorCode::repeated_vertex_in_triple>;
using IndexOutOfRange = ErrorOf<ErrorCode::index_out_of_range>;
using CapExceeded = ErrorOf<ErrorCode::cap_exceeded>;
using DimensionMismatch = ErrorOf<ErrorCode::dimension_mismatch>;
using DomainError = ErrorOf<ErrorCode::domain_error>;
using SupportError = ErrorOf<ErrorCode::support_error>;
using HypothesisViolated = ErrorOf<ErrorCode::hypothesis_violated>;
using UnsupportedOrder = ErrorOf<ErrorCode::unsupported_order>;
using WrongResidue = ErrorOf<ErrorCode::wrong_residue>;
using NotABijection = ErrorOf<ErrorCode::not_a_bijection>;
using PreconditionFailed = ErrorOf<ErrorCode::precondition_failed>;
using FormatError = ErrorOf<ErrorCode::format_error>;
using SchemaError = ErrorOf<ErrorCode::schema_error>;
using IoError = ErrorOf<ErrorCode::io_error>;

}  // namespace hyperjump
