#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <span>
#include <string_view>

#include "blindsc/bigint.hpp"

namespace blindsc {

/// Source of randomness for nonces and key generation. Implementations
/// report failure by throwing Error(Errc::RngFailure).
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  virtual void fill(std::span<std::uint8_t> out) = 0;

  /// Uniform integer in the closed range [lo, hi]. The default draws
  /// from fill() by rejection sampling.
  virtual BigInt uniform(const BigInt& lo, const BigInt& hi);
};

/// Operating-system entropy.
class OsRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

/// Deterministic generator for test mode: SHA-256 over
/// (seed || label || block counter). Same seed and label, same stream.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed, std::string_view label = {});

  void fill(std::span<std::uint8_t> out) override;

 private:
  void refill();

  Bytes key_;
  std::uint64_t counter_ = 0;
  std::array<std::uint8_t, 32> block_{};
  std::size_t offset_ = 32;
};

/// Replays a fixed list of integers from uniform(), in order. Used to pin
/// protocol nonces to worked vectors. Once the script is exhausted, draws go
/// to `fallback` if one was given, otherwise RngFailure.
class ScriptedRandom final : public RandomSource {
 public:
  explicit ScriptedRandom(std::initializer_list<long> values, RandomSource* fallback = nullptr);
  explicit ScriptedRandom(std::deque<BigInt> values, RandomSource* fallback = nullptr);

  void fill(std::span<std::uint8_t> out) override;
  BigInt uniform(const BigInt& lo, const BigInt& hi) override;

  std::size_t remaining() const { return script_.size(); }

 private:
  std::deque<BigInt> script_;
  RandomSource* fallback_;
};

}  // namespace blindsc
