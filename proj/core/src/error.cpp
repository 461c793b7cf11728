#include "soficshift/error.hpp"

namespace soficshift {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::NotEssential: return "NotEssential";
    case ErrorCode::PredSepRequiresEssential: return "PredSepRequiresEssential";
    case ErrorCode::EmptyAfterTrim: return "EmptyAfterTrim";
    case ErrorCode::FreshSymbolClash: return "FreshSymbolClash";
    case ErrorCode::EmptyInducedAlphabet: return "EmptyInducedAlphabet";
    case ErrorCode::AlphabetOverlap: return "AlphabetOverlap";
    case ErrorCode::StateCapExceeded: return "StateCapExceeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidRay: return "InvalidRay";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NoCoverExists: return "NoCoverExists";
    case ErrorCode::InvalidDag: return "InvalidDag";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace soficshift
