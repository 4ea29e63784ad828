#include "blindsc/random.hpp"

#include <algorithm>
#include <cstring>

#include <openssl/rand.h>
#include <openssl/sha.h>

#include "blindsc/error.hpp"

namespace blindsc {

BigInt RandomSource::uniform(const BigInt& lo, const BigInt& hi) {
  if (hi < lo) throw Error(Errc::InvalidArgument, "empty range");
  const BigInt span = hi - lo + 1;
  const std::size_t bits = bit_length(span - 1);
  if (bits == 0) return lo;
  const std::size_t nbytes = (bits + 7) / 8;
  const unsigned top_mask = 0xffu >> (nbytes * 8 - bits);
  Bytes buf(nbytes);
  for (;;) {
    fill(buf);
    buf[0] &= static_cast<std::uint8_t>(top_mask);
    BigInt candidate = from_bytes(buf);
    if (candidate < span) return lo + candidate;
  }
}

void OsRandom::fill(std::span<std::uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw Error(Errc::RngFailure, "RAND_bytes failed");
  }
}

SeededRandom::SeededRandom(std::uint64_t seed, std::string_view label) {
  for (int i = 7; i >= 0; --i) key_.push_back(static_cast<std::uint8_t>(seed >> (8 * i)));
  key_.insert(key_.end(), label.begin(), label.end());
}

void SeededRandom::refill() {
  Bytes input = key_;
  for (int i = 7; i >= 0; --i) input.push_back(static_cast<std::uint8_t>(counter_ >> (8 * i)));
  ++counter_;
  SHA256(input.data(), input.size(), block_.data());
  offset_ = 0;
}

void SeededRandom::fill(std::span<std::uint8_t> out) {
  std::size_t pos = 0;
  while (pos < out.size()) {
    if (offset_ == block_.size()) refill();
    std::size_t n = std::min(out.size() - pos, block_.size() - offset_);
    std::memcpy(out.data() + pos, block_.data() + offset_, n);
    pos += n;
    offset_ += n;
  }
}

ScriptedRandom::ScriptedRandom(std::initializer_list<long> values, RandomSource* fallback)
    : fallback_(fallback) {
  for (long v : values) script_.emplace_back(v);
}

ScriptedRandom::ScriptedRandom(std::deque<BigInt> values, RandomSource* fallback)
    : script_(std::move(values)), fallback_(fallback) {}

void ScriptedRandom::fill(std::span<std::uint8_t> out) {
  if (!fallback_) throw Error(Errc::RngFailure, "scripted source has no byte stream");
  fallback_->fill(out);
}

BigInt ScriptedRandom::uniform(const BigInt& lo, const BigInt& hi) {
  if (script_.empty()) {
    if (!fallback_) throw Error(Errc::RngFailure, "script exhausted");
    return fallback_->uniform(lo, hi);
  }
  BigInt v = script_.front();
  script_.pop_front();
  if (v < lo || v > hi) {
    throw Error(Errc::InvalidArgument,
                "scripted value " + v.get_str() + " outside [" + lo.get_str() + ", " + hi.get_str() + "]");
  }
  return v;
}

}  // namespace blindsc
