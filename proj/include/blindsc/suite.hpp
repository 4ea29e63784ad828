#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "blindsc/bigint.hpp"
#include "blindsc/group.hpp"

namespace blindsc {

using Digest = std::array<std::uint8_t, 32>;

/// The symmetric primitives a scheme runs over: one-way hash h, keyed hash
/// KH and a stream cipher (E, D). Immutable once built; copies share state.
class CryptoSuite {
 public:
  using HashFn = std::function<Digest(ByteView)>;
  using KeyedHashFn = std::function<Digest(ByteView key, ByteView msg)>;
  /// Produces `n` keystream bytes under `key`.
  using KeystreamFn = std::function<Bytes(ByteView key, std::size_t n)>;

  CryptoSuite(std::string id, HashFn hash, KeyedHashFn keyed_hash, KeystreamFn keystream);

  const std::string& id() const { return id_; }

  Digest hash(ByteView data) const { return hash_(data); }
  Digest keyed_hash(ByteView key, ByteView msg) const { return keyed_hash_(key, msg); }

  Bytes encrypt(ByteView k1, ByteView plaintext) const;
  Bytes decrypt(ByteView k1, ByteView ciphertext) const;

 private:
  std::string id_;
  HashFn hash_;
  KeyedHashFn keyed_hash_;
  KeystreamFn keystream_;
};

inline constexpr std::string_view kStdSuiteId = "std-v1";
inline constexpr std::string_view kToySuiteId = "toy-v1";

/// SHA-256, HMAC-SHA-256, SHAKE256(k1 || counter) keystream.
CryptoSuite std_suite();

/// Fixed outputs that replace the toy suite's hash / keyed hash on an exact
/// preimage match. Unmatched inputs fall through to SHA-256 / HMAC-SHA-256.
struct ToyStubs {
  std::map<Bytes, Digest> hash;
  std::map<std::pair<Bytes, Bytes>, Digest> keyed_hash;  // (key, msg)
};

/// Test suite with stubbable hashes and an XOR cipher whose keystream is
/// SHA-256(k1 || counter).
CryptoSuite toy_suite(ToyStubs stubs = {});

/// Looks up "std-v1" or "toy-v1" (without stubs). Throws UnknownSuite.
CryptoSuite suite_by_id(std::string_view id);

/// A digest whose big-endian value is `v`; hash_to_scalar of it yields v mod q.
Digest digest_of(const BigInt& v);

struct SplitKeys {
  Digest k1;  // cipher key
  Digest k2;  // keyed-hash key
};

/// k1 = h(0x01 || bytes(shared)), k2 = h(0x02 || bytes(shared)).
SplitKeys derive_keys(const GroupElement& shared, const GroupParams& params, const CryptoSuite& suite);

/// h(input) read as a big-endian integer, reduced mod q.
Scalar hash_to_scalar(ByteView input, const GroupParams& params, const CryptoSuite& suite);

/// Preimage used for h(element, m): bytes(element) || m.
Bytes element_message_preimage(const GroupElement& e, ByteView m, const GroupParams& params);

/// Keyed-hash preimage for (m, bind_info): u32be(|m|) || m || bind_info.
Bytes tag_preimage(ByteView m, ByteView bind_info);

/// KH_{k2}(m, bind_info) reduced mod q. This is the r of both signcryption
/// schemes.
Scalar keyed_tag(const Digest& k2, ByteView m, ByteView bind_info, const GroupParams& params,
                 const CryptoSuite& suite);

/// Default bind_info: canonical encoding of the recipient's public key.
Bytes default_bind_info(const GroupElement& recipient_pub, const GroupParams& params);

}  // namespace blindsc
