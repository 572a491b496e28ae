#include "strata/errors.hpp"

namespace strata {

int exit_code(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidParameter:
    case Errc::InvalidIdeal:
    case Errc::ZeroIdeal:
    case Errc::InvalidSubsemigroup:
      return 2;
    case Errc::UnsupportedRing:
    case Errc::InfiniteQuotient:
    case Errc::ResourceLimit:
      return 3;
    case Errc::NotPrincipal:
    case Errc::FactorisationFailure:
    case Errc::SemilatticeViolation:
    case Errc::InternalCheck:
      return 4;
  }
  return 4;
}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace strata
