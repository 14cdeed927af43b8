#include "monograph/error.hpp"

namespace monograph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DanglingEdge: return "DanglingEdge";
    case ErrorKind::EmptyEdgeId: return "EmptyEdgeId";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::AdjacencyMismatch: return "AdjacencyMismatch";
    case ErrorKind::Untotal: return "Untotal";
    case ErrorKind::UnknownSource: return "UnknownSource";
    case ErrorKind::UnknownTarget: return "UnknownTarget";
    case ErrorKind::CompositionMismatch: return "CompositionMismatch";
    case ErrorKind::ImageEscapes: return "ImageEscapes";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::NotParallel: return "NotParallel";
    case ErrorKind::NotStandard: return "NotStandard";
    case ErrorKind::TraceEscapesO: return "TraceEscapesO";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::GluingViolated: return "GluingViolated";
    case ErrorKind::NotMonadic: return "NotMonadic";
    case ErrorKind::InvalidSignature: return "InvalidSignature";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::OperatorClash: return "OperatorClash";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::NotStabilizing: return "NotStabilizing";
    case ErrorKind::TooManyTips: return "TooManyTips";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnresolvedReference: return "UnresolvedReference";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::ParseError,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace monograph
