#pragma once

#include <string>

namespace zipkit {

// Why a computation stopped. Carried by every failed effect; catch/try inspect
// nothing but the fact of failure, callers may inspect the code.
enum class FailureCode {
  MoveOutOfBounds,
  EmptyContainer,
  ActionDisabled,
  UnificationFailed,
  UserAbort,
  Other,
};

inline const char* to_string(FailureCode c) {
  switch (c) {
    case FailureCode::MoveOutOfBounds: return "MoveOutOfBounds";
    case FailureCode::EmptyContainer: return "EmptyContainer";
    case FailureCode::ActionDisabled: return "ActionDisabled";
    case FailureCode::UnificationFailed: return "UnificationFailed";
    case FailureCode::UserAbort: return "UserAbort";
    case FailureCode::Other: return "Other";
  }
  return "Other";
}

struct Failure {
  FailureCode code = FailureCode::Other;
  std::string message;
};

inline bool operator==(const Failure& a, const Failure& b) {
  return a.code == b.code && a.message == b.message;
}

}  // namespace zipkit
