#pragma once

#include <stdexcept>
#include <string>

namespace strata {

// Failure categories. exit_code() groups them for the command line:
// 2 = invalid input, 3 = unsupported ring / resource limit,
// 4 = internal invariant failure.
enum class Errc {
  InvalidParameter,
  InvalidIdeal,
  ZeroIdeal,
  InvalidSubsemigroup,
  UnsupportedRing,
  InfiniteQuotient,
  NotPrincipal,
  ResourceLimit,
  FactorisationFailure,
  SemilatticeViolation,
  InternalCheck,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

int exit_code(Errc code) noexcept;

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace strata
