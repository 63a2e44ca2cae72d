#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace alphastab {

enum class ErrorCode {
  parse_error,
  invalid_argument,
  vertex_out_of_range,
  not_bipartite,
  not_connected,
  not_chordal,
  invalid_peo,
  not_a_tree,
  order_too_small,
  no_perfect_matching,
  not_perfect,
  not_bistable,
  not_alpha_plus,
  unsupported_class,
  budget_exceeded,
  bad_size,
  parity_violation,
  endpoint_not_attached,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace alphastab
