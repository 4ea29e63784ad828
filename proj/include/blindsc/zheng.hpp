#pragma once

#include "blindsc/sdss.hpp"

namespace blindsc::zheng {

/// (c, r, s) as delivered to the recipient.
struct SigncryptedText {
  Bytes c;
  Scalar r;
  Scalar s;

  friend bool operator==(const SigncryptedText&, const SigncryptedText&) = default;
};

/// Zheng signcryption: shared = y_B^k, (K1, K2) split from it,
/// r = KH_K2(m, bind_info), s = k / (r + x_A), c = E_K1(m).
SigncryptedText signcrypt(ByteView m, const KeyPair& sender, const GroupElement& recipient_pub,
                          ByteView bind_info, const GroupParams& params, const CryptoSuite& suite,
                          RandomSource& rng);

/// Recomputes shared = (y_A * g^r)^(s * x_B mod q) and returns m only when the
/// keyed-hash check passes. Throws TagMismatch otherwise; no partial output.
Bytes unsigncrypt(const SigncryptedText& ct, const KeyPair& recipient, const GroupElement& sender_pub,
                  ByteView bind_info, const GroupParams& params, const CryptoSuite& suite);

}  // namespace blindsc::zheng
