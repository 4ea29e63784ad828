#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blindsc {

enum class Errc {
  // group_math
  ZeroInverse,
  RngFailure,
  NotPrime,
  OrderMismatch,
  BadGenerator,
  GenerationTimeout,
  OutOfRange,
  // schemes
  TagMismatch,
  BadCommit,
  BadChallenge,
  InvalidState,
  DegenerateDenominator,
  InconsistentPair,
  // wire_codec
  BadMagic,
  UnknownType,
  Truncated,
  NonCanonicalInteger,
  TrailingBytes,
  UnknownSuite,
  BadArmor,
  // generic precondition violation
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  explicit Error(Errc code);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace blindsc
