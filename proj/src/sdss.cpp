#include "blindsc/sdss.hpp"

#include "blindsc/error.hpp"

namespace blindsc {

KeyPair keygen(const GroupParams& params, RandomSource& rng) {
  Scalar x = rand_scalar_nonzero(rng, params.q());
  return KeyPair{x, pow_g(x, params)};
}

KeyPair keypair_from_secret(const Scalar& x, const GroupParams& params) {
  Scalar reduced = checked_scalar(x.value(), params);
  if (reduced.is_zero()) throw Error(Errc::InvalidArgument, "secret key must be nonzero mod q");
  return KeyPair{reduced, pow_g(reduced, params)};
}

namespace sdss {

Signature sign(ByteView m, const KeyPair& key, const GroupParams& params, const CryptoSuite& suite,
               RandomSource& rng) {
  for (;;) {
    Scalar k = rand_scalar_nonzero(rng, params.q());
    GroupElement commitment = pow_g(k, params);
    Scalar r = hash_to_scalar(element_message_preimage(commitment, m, params), params, suite);
    Scalar denom = scalar_add(r, key.x, params);
    if (r.is_zero() || denom.is_zero()) continue;
    Scalar s = scalar_mul(k, modinv(denom, params.q()), params);
    return Signature{r, s};
  }
}

GroupElement recover_commitment(const Signature& sig, const GroupElement& y, const GroupParams& params) {
  return modexp(element_mul(y, pow_g(sig.r, params), params), sig.s, params);
}

bool verify(ByteView m, const Signature& sig, const GroupElement& y, const GroupParams& params,
            const CryptoSuite& suite) {
  if (sig.r.is_zero() || sig.s.is_zero()) return false;
  if (sig.r.value() >= params.q() || sig.s.value() >= params.q()) return false;
  GroupElement k = recover_commitment(sig, y, params);
  return hash_to_scalar(element_message_preimage(k, m, params), params, suite) == sig.r;
}

}  // namespace sdss
}  // namespace blindsc
