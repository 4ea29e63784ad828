#include "blindsc/suite.hpp"

#include <algorithm>
#include <memory>

#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/sha.h>

#include "blindsc/error.hpp"

namespace blindsc {

namespace {

Digest sha256(ByteView data) {
  Digest out{};
  SHA256(data.data(), data.size(), out.data());
  return out;
}

Digest hmac_sha256(ByteView key, ByteView msg) {
  Digest out{};
  unsigned int len = 0;
  if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), msg.data(), msg.size(), out.data(), &len) ==
          nullptr ||
      len != out.size()) {
    throw Error(Errc::InvalidArgument, "HMAC-SHA-256 failed");
  }
  return out;
}

void append_u64(Bytes& out, std::uint64_t v) {
  for (int i = 7; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

// Keystream made of fixed-size blocks, block i = F(key || u64be(i)).
template <typename BlockFn>
Bytes counter_keystream(ByteView key, std::size_t n, std::size_t block_size, BlockFn block) {
  Bytes out;
  out.reserve(n);
  Bytes input(key.begin(), key.end());
  const std::size_t key_len = input.size();
  for (std::uint64_t counter = 0; out.size() < n; ++counter) {
    input.resize(key_len);
    append_u64(input, counter);
    Bytes chunk = block(ByteView(input), block_size);
    std::size_t take = std::min(block_size, n - out.size());
    out.insert(out.end(), chunk.begin(), chunk.begin() + static_cast<std::ptrdiff_t>(take));
  }
  return out;
}

Bytes shake256(ByteView input, std::size_t out_len) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  Bytes out(out_len);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), input.data(), input.size()) != 1 ||
      EVP_DigestFinalXOF(ctx.get(), out.data(), out.size()) != 1) {
    throw Error(Errc::InvalidArgument, "SHAKE256 failed");
  }
  return out;
}

constexpr std::size_t kShakeBlock = 136;

Bytes xor_with(ByteView data, const Bytes& keystream) {
  Bytes out(data.begin(), data.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= keystream[i];
  return out;
}

}  // namespace

CryptoSuite::CryptoSuite(std::string id, HashFn hash, KeyedHashFn keyed_hash, KeystreamFn keystream)
    : id_(std::move(id)),
      hash_(std::move(hash)),
      keyed_hash_(std::move(keyed_hash)),
      keystream_(std::move(keystream)) {}

Bytes CryptoSuite::encrypt(ByteView k1, ByteView plaintext) const {
  return xor_with(plaintext, keystream_(k1, plaintext.size()));
}

Bytes CryptoSuite::decrypt(ByteView k1, ByteView ciphertext) const {
  return xor_with(ciphertext, keystream_(k1, ciphertext.size()));
}

CryptoSuite std_suite() {
  return CryptoSuite(std::string(kStdSuiteId), sha256, hmac_sha256, [](ByteView key, std::size_t n) {
    return counter_keystream(key, n, kShakeBlock, shake256);
  });
}

CryptoSuite toy_suite(ToyStubs stubs) {
  auto table = std::make_shared<const ToyStubs>(std::move(stubs));
  auto hash = [table](ByteView data) {
    auto it = table->hash.find(Bytes(data.begin(), data.end()));
    return it != table->hash.end() ? it->second : sha256(data);
  };
  auto keyed = [table](ByteView key, ByteView msg) {
    auto it = table->keyed_hash.find({Bytes(key.begin(), key.end()), Bytes(msg.begin(), msg.end())});
    return it != table->keyed_hash.end() ? it->second : hmac_sha256(key, msg);
  };
  auto keystream = [](ByteView key, std::size_t n) {
    return counter_keystream(key, n, 32, [](ByteView in, std::size_t) {
      Digest d = sha256(in);
      return Bytes(d.begin(), d.end());
    });
  };
  return CryptoSuite(std::string(kToySuiteId), hash, keyed, keystream);
}

CryptoSuite suite_by_id(std::string_view id) {
  if (id == kStdSuiteId) return std_suite();
  if (id == kToySuiteId) return toy_suite();
  throw Error(Errc::UnknownSuite, "unknown suite '" + std::string(id) + "'");
}

Digest digest_of(const BigInt& v) {
  Bytes raw = to_bytes_fixed(v, 32);
  Digest out{};
  std::copy(raw.begin(), raw.end(), out.begin());
  return out;
}

SplitKeys derive_keys(const GroupElement& shared, const GroupParams& params, const CryptoSuite& suite) {
  Bytes input;
  input.reserve(params.element_width() + 1);
  input.push_back(0x01);
  Bytes encoded = canonical_bytes(shared, params);
  input.insert(input.end(), encoded.begin(), encoded.end());
  SplitKeys keys;
  keys.k1 = suite.hash(input);
  input[0] = 0x02;
  keys.k2 = suite.hash(input);
  return keys;
}

Scalar hash_to_scalar(ByteView input, const GroupParams& params, const CryptoSuite& suite) {
  Digest d = suite.hash(input);
  return reduce_scalar(from_bytes(d), params);
}

Bytes element_message_preimage(const GroupElement& e, ByteView m, const GroupParams& params) {
  Bytes out = canonical_bytes(e, params);
  out.insert(out.end(), m.begin(), m.end());
  return out;
}

Bytes tag_preimage(ByteView m, ByteView bind_info) {
  Bytes out;
  out.reserve(4 + m.size() + bind_info.size());
  const auto len = static_cast<std::uint32_t>(m.size());
  for (int i = 3; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(len >> (8 * i)));
  out.insert(out.end(), m.begin(), m.end());
  out.insert(out.end(), bind_info.begin(), bind_info.end());
  return out;
}

Scalar keyed_tag(const Digest& k2, ByteView m, ByteView bind_info, const GroupParams& params,
                 const CryptoSuite& suite) {
  Digest d = suite.keyed_hash(k2, tag_preimage(m, bind_info));
  return reduce_scalar(from_bytes(d), params);
}

Bytes default_bind_info(const GroupElement& recipient_pub, const GroupParams& params) {
  return canonical_bytes(recipient_pub, params);
}

}  // namespace blindsc
