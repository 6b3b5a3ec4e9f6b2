#pragma once

#include <stdexcept>
#include <string>

namespace waring {

enum class ErrorCode {
  kInvalidInput,
  kRankBudgetExceeded,        // r(n+1) exceeds the dimension of the ambient space
  kSupergenericRank,          // r is not strictly below binom(n+d,d)/(n+1)
  kFlatteningRankDeficient,   // normal-space test needs rank(flattening) == r
  kUnknownCase,
};

const char* to_string(ErrorCode code);

class WaringError : public std::runtime_error {
 public:
  WaringError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "INVALID_INPUT";
    case ErrorCode::kRankBudgetExceeded: return "RANK_BUDGET_EXCEEDED";
    case ErrorCode::kSupergenericRank: return "SUPERGENERIC_RANK";
    case ErrorCode::kFlatteningRankDeficient: return "FLATTENING_RANK_DEFICIENT";
    case ErrorCode::kUnknownCase: return "UNKNOWN_CASE";
  }
  return "UNKNOWN";
}

}  // namespace waring
