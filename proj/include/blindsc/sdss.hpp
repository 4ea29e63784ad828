#pragma once

#include "blindsc/group.hpp"
#include "blindsc/random.hpp"
#include "blindsc/suite.hpp"

namespace blindsc {

/// Secret x in [1, q-1] and public y = g^x mod p.
struct KeyPair {
  Scalar x;
  GroupElement y;

  friend bool operator==(const KeyPair&, const KeyPair&) = default;
};

KeyPair keygen(const GroupParams& params, RandomSource& rng);

/// Builds the pair for a known secret. InvalidArgument if x = 0 mod q.
KeyPair keypair_from_secret(const Scalar& x, const GroupParams& params);

namespace sdss {

struct Signature {
  Scalar r;
  Scalar s;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// r = h(bytes(g^k) || m), s = k / (r + x) mod q. A fresh k is drawn
/// whenever r = 0 or r + x = 0 mod q.
Signature sign(ByteView m, const KeyPair& key, const GroupParams& params, const CryptoSuite& suite,
               RandomSource& rng);

/// K = (y * g^r)^s mod p. For an honest signature this is the signer's g^k.
GroupElement recover_commitment(const Signature& sig, const GroupElement& y, const GroupParams& params);

/// Accepts iff h(bytes(K) || m) = r.
bool verify(ByteView m, const Signature& sig, const GroupElement& y, const GroupParams& params,
            const CryptoSuite& suite);

}  // namespace sdss
}  // namespace blindsc
