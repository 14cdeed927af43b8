#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monograph {

enum class ErrorKind {
  DanglingEdge,
  EmptyEdgeId,
  NotClosed,
  ParentMismatch,
  LengthMismatch,
  AdjacencyMismatch,
  Untotal,
  UnknownSource,
  UnknownTarget,
  CompositionMismatch,
  ImageEscapes,
  NotBijective,
  NotParallel,
  NotStandard,
  TraceEscapesO,
  PreconditionViolated,
  GluingViolated,
  NotMonadic,
  InvalidSignature,
  InvalidAlgebra,
  SignatureMismatch,
  OperatorClash,
  CarrierMismatch,
  NotStabilizing,
  TooManyTips,
  ParseError,
  UnresolvedReference,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace monograph
