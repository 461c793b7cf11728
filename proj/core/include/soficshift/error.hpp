#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace soficshift {

enum class ErrorCode {
  Parse,
  InvalidGraph,
  InvalidArgument,
  GraphMismatch,
  NotEssential,
  PredSepRequiresEssential,
  EmptyAfterTrim,
  FreshSymbolClash,
  EmptyInducedAlphabet,
  AlphabetOverlap,
  StateCapExceeded,
  CapExceeded,
  InvalidRay,
  NotIrreducible,
  NoCoverExists,
  InvalidDag,
  UnknownFixture,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

  /// True for the resource-limit family (subset/monoid/lattice caps).
  bool is_resource_limit() const noexcept {
    return code_ == ErrorCode::StateCapExceeded || code_ == ErrorCode::CapExceeded;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace soficshift
