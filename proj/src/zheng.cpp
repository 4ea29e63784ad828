#include "blindsc/zheng.hpp"

#include "blindsc/error.hpp"

namespace blindsc::zheng {

SigncryptedText signcrypt(ByteView m, const KeyPair& sender, const GroupElement& recipient_pub,
                          ByteView bind_info, const GroupParams& params, const CryptoSuite& suite,
                          RandomSource& rng) {
  for (;;) {
    Scalar k = rand_scalar_nonzero(rng, params.q());
    SplitKeys keys = derive_keys(modexp(recipient_pub, k, params), params, suite);
    Scalar r = keyed_tag(keys.k2, m, bind_info, params, suite);
    Scalar denom = scalar_add(r, sender.x, params);
    if (r.is_zero() || denom.is_zero()) continue;
    Scalar s = scalar_mul(k, modinv(denom, params.q()), params);
    return SigncryptedText{suite.encrypt(keys.k1, m), r, s};
  }
}

Bytes unsigncrypt(const SigncryptedText& ct, const KeyPair& recipient, const GroupElement& sender_pub,
                  ByteView bind_info, const GroupParams& params, const CryptoSuite& suite) {
  if (ct.r.value() >= params.q() || ct.s.value() >= params.q()) {
    throw Error(Errc::TagMismatch, "signcrypted text fields out of range");
  }
  GroupElement base = element_mul(sender_pub, pow_g(ct.r, params), params);
  GroupElement shared = modexp(base, scalar_mul(ct.s, recipient.x, params), params);
  SplitKeys keys = derive_keys(shared, params, suite);
  Bytes m = suite.decrypt(keys.k1, ct.c);
  if (keyed_tag(keys.k2, m, bind_info, params, suite) != ct.r) {
    throw Error(Errc::TagMismatch, "keyed hash does not match r");
  }
  return m;
}

}  // namespace blindsc::zheng
