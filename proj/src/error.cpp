#include "ivpareto/error.hpp"

namespace ivpareto {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::NotAContraction: return "NotAContraction";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::InconsistentRelation: return "InconsistentRelation";
    case ErrorCode::WrongVariant: return "WrongVariant";
    case ErrorCode::NotEliminated: return "NotEliminated";
    case ErrorCode::SamePair: return "SamePair";
    case ErrorCode::ContradictoryInformation: return "ContradictoryInformation";
    case ErrorCode::StaleSequence: return "StaleSequence";
    case ErrorCode::EmptyLog: return "EmptyLog";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ReplayError: return "ReplayError";
  }
  return "Unknown";
}

}  // namespace ivpareto
