#include "satsemi/errors.hpp"

namespace satsemi {

  char const* to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::NotClosed: return "NotClosed";
      case ErrorCode::FrobeniusViolated: return "FrobeniusViolated";
      case ErrorCode::GcdNotOne: return "GcdNotOne";
      case ErrorCode::NotAMember: return "NotAMember";
      case ErrorCode::NotRepresentable: return "NotRepresentable";
      case ErrorCode::OutOfRange: return "OutOfRange";
      case ErrorCode::WouldChangeFrobenius: return "WouldChangeFrobenius";
      case ErrorCode::PreconditionViolated: return "PreconditionViolated";
      case ErrorCode::ResidueClassMissing: return "ResidueClassMissing";
      case ErrorCode::NotASatFSet: return "NotASatFSet";
      case ErrorCode::NotSaturated: return "NotSaturated";
      case ErrorCode::WrongFrobenius: return "WrongFrobenius";
      case ErrorCode::NotASatSequence: return "NotASatSequence";
      case ErrorCode::TooLarge: return "TooLarge";
    }
    return "Unknown";
  }

  Error::Error(ErrorCode code, std::string const& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

}  // namespace satsemi
