#pragma once

#include <stdexcept>
#include <string>

namespace satsemi {

  enum class ErrorCode {
    NotClosed,
    FrobeniusViolated,
    GcdNotOne,
    NotAMember,
    NotRepresentable,
    OutOfRange,
    WouldChangeFrobenius,
    PreconditionViolated,
    ResidueClassMissing,
    NotASatFSet,
    NotSaturated,
    WrongFrobenius,
    NotASatSequence,
    TooLarge,
  };

  char const* to_string(ErrorCode code) noexcept;

  // Every domain failure in the library is reported through this type; the
  // code lets callers (and the CLI) distinguish the failure without parsing
  // the message.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& detail);

    ErrorCode code() const noexcept {
      return code_;
    }

   private:
    ErrorCode code_;
  };

}  // namespace satsemi
