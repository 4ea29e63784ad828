#include "blindsc/error.hpp"

namespace blindsc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::RngFailure: return "RngFailure";
    case Errc::NotPrime: return "NotPrime";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::BadGenerator: return "BadGenerator";
    case Errc::GenerationTimeout: return "GenerationTimeout";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::TagMismatch: return "TagMismatch";
    case Errc::BadCommit: return "BadCommit";
    case Errc::BadChallenge: return "BadChallenge";
    case Errc::InvalidState: return "InvalidState";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::InconsistentPair: return "InconsistentPair";
    case Errc::BadMagic: return "BadMagic";
    case Errc::UnknownType: return "UnknownType";
    case Errc::Truncated: return "Truncated";
    case Errc::NonCanonicalInteger: return "NonCanonicalInteger";
    case Errc::TrailingBytes: return "TrailingBytes";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::BadArmor: return "BadArmor";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

Error::Error(Errc code) : std::runtime_error(std::string(errc_name(code))), code_(code) {}

}  // namespace blindsc
