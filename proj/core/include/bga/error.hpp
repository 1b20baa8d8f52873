#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bga {

enum class ErrorCode {
  DuplicateLabel,
  CrossSideEdge,
  UnknownEndpoint,
  UnknownVertex,
  UnknownEdge,
  EdgeNotLoose,
  InvalidHypergraph,
  SizeBoundExceeded,
  NotABijection,
  ParameterOutOfRange,
  NotAQuadruple,
  GraphMismatch,
  EmptySum,
  SideMismatch,
  NotASubgraph,
  WitnessInvalid,
  SideCountMismatch,
  NotConnected,
  Nonconvergence,
  DegenerateBlock,
  InvariantViolation,
  RankMismatch,
  NotGenericPosition,
  NotK22,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// JSON input failure; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorCode::ParseError, what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace bga
