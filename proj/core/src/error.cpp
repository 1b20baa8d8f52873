#include "bga/error.hpp"

namespace bga {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::CrossSideEdge: return "CrossSideEdge";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::EdgeNotLoose: return "EdgeNotLoose";
    case ErrorCode::InvalidHypergraph: return "InvalidHypergraph";
    case ErrorCode::SizeBoundExceeded: return "SizeBoundExceeded";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::NotAQuadruple: return "NotAQuadruple";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::EmptySum: return "EmptySum";
    case ErrorCode::SideMismatch: return "SideMismatch";
    case ErrorCode::NotASubgraph: return "NotASubgraph";
    case ErrorCode::WitnessInvalid: return "WitnessInvalid";
    case ErrorCode::SideCountMismatch: return "SideCountMismatch";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::Nonconvergence: return "Nonconvergence";
    case ErrorCode::DegenerateBlock: return "DegenerateBlock";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotGenericPosition: return "NotGenericPosition";
    case ErrorCode::NotK22: return "NotK22";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace bga
