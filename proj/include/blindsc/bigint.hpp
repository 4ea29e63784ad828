#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace blindsc {

using BigInt = mpz_class;
using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Minimal big-endian encoding; zero encodes as the empty string.
Bytes to_bytes(const BigInt& v);

/// Big-endian encoding left-padded to exactly `width` bytes. Throws
/// Errc::OutOfRange if `v` needs more than `width` bytes.
Bytes to_bytes_fixed(const BigInt& v, std::size_t width);

BigInt from_bytes(ByteView bytes);

std::size_t byte_length(const BigInt& v);
std::size_t bit_length(const BigInt& v);

std::string to_hex(ByteView bytes);
Bytes from_hex(std::string_view hex);

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace blindsc
