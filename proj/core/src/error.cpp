#include "alphastab/error.hpp"

namespace alphastab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return "PARSE_ERROR";
    case ErrorCode::invalid_argument: return "INVALID_ARGUMENT";
    case ErrorCode::vertex_out_of_range: return "VERTEX_OUT_OF_RANGE";
    case ErrorCode::not_bipartite: return "NOT_BIPARTITE";
    case ErrorCode::not_connected: return "NOT_CONNECTED";
    case ErrorCode::not_chordal: return "NOT_CHORDAL";
    case ErrorCode::invalid_peo: return "INVALID_PEO";
    case ErrorCode::not_a_tree: return "NOT_A_TREE";
    case ErrorCode::order_too_small: return "ORDER_TOO_SMALL";
    case ErrorCode::no_perfect_matching: return "NO_PERFECT_MATCHING";
    case ErrorCode::not_perfect: return "NOT_PERFECT";
    case ErrorCode::not_bistable: return "NOT_BISTABLE";
    case ErrorCode::not_alpha_plus: return "NOT_ALPHA_PLUS";
    case ErrorCode::unsupported_class: return "UNSUPPORTED_CLASS";
    case ErrorCode::budget_exceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::bad_size: return "BAD_SIZE";
    case ErrorCode::parity_violation: return "PARITY_VIOLATION";
    case ErrorCode::endpoint_not_attached: return "ENDPOINT_NOT_ATTACHED";
  }
  return "UNKNOWN";
}

}  // namespace alphastab
