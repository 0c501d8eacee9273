#include "soltes/error.hpp"

namespace soltes {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidHypergraph: return "INVALID_HYPERGRAPH";
    case ErrorCode::kInvalidGraph: return "INVALID_GRAPH";
    case ErrorCode::kNotConnected: return "NOT_CONNECTED";
    case ErrorCode::kParamOutOfRange: return "PARAM_OUT_OF_RANGE";
    case ErrorCode::kBadConvention: return "BAD_CONVENTION";
    case ErrorCode::kNegativeWeight: return "NEGATIVE_WEIGHT";
    case ErrorCode::kAllZero: return "ALL_ZERO";
    case ErrorCode::kParse: return "PARSE_ERROR";
    case ErrorCode::kInvariantViolated: return "INVARIANT_VIOLATED";
  }
  return "UNKNOWN";
}

}  // namespace soltes
