#pragma once

#include "blindsc/blind_sdss.hpp"

namespace blindsc::bsc {

using blind::ChallengeMsg;
using blind::CommitMsg;
using blind::ResponseMsg;
using blind::SignerSession;

/// (c, r, s, T) as delivered to the recipient C.
struct SigncryptedText {
  Bytes c;
  Scalar r;
  Scalar s;
  GroupElement T;

  friend bool operator==(const SigncryptedText&, const SigncryptedText&) = default;
};

// The signer's side is exactly the blind SDSS signer.
inline std::pair<SignerSession, CommitMsg> signer_commit(const GroupParams& params, RandomSource& rng) {
  return blind::signer_commit(params, rng);
}

inline ResponseMsg signer_respond(SignerSession& session, const ChallengeMsg& challenge, const KeyPair& key,
                                  const GroupParams& params) {
  return blind::signer_respond(session, challenge, key, params);
}

class RequesterSession {
 public:
  struct Snapshot {
    blind::Blinding blinding;
    SplitKeys keys;
    Bytes c;
    Bytes bind_info;
    blind::RequesterState state = blind::RequesterState::AwaitCommit;
  };

  blind::RequesterState state() const { return snap_.state; }
  const blind::Blinding& blinding() const { return snap_.blinding; }
  const SplitKeys& keys() const { return snap_.keys; }
  const Bytes& ciphertext() const { return snap_.c; }
  const Bytes& bind_info() const { return snap_.bind_info; }

  const Snapshot& snapshot() const { return snap_; }
  static RequesterSession restore(Snapshot snap);

 private:
  friend std::pair<RequesterSession, ChallengeMsg> requester_challenge(ByteView, const CommitMsg&,
                                                                       const GroupElement&, ByteView,
                                                                       const GroupParams&, const CryptoSuite&,
                                                                       RandomSource&);
  friend SigncryptedText requester_finalize(RequesterSession&, const ResponseMsg&, const GroupParams&);

  Snapshot snap_;
};

/// Requester B: draws u, shared = y_C^u, (K1, K2) from shared, c = E_K1(m),
/// r = KH_K2(m, bind_info) mod q (fresh u while r = 0), then blinds r exactly
/// as in blind SDSS. BadCommit on a bad z.
std::pair<RequesterSession, ChallengeMsg> requester_challenge(ByteView m, const CommitMsg& commit,
                                                              const GroupElement& recipient_pub,
                                                              ByteView bind_info, const GroupParams& params,
                                                              const CryptoSuite& suite, RandomSource& rng);

/// s = u / (r + s_bar + alpha); emits (c, r, s, T).
SigncryptedText requester_finalize(RequesterSession& session, const ResponseMsg& response,
                                   const GroupParams& params);

/// Recipient C: shared = (y_A * T * g^r)^(s * x_C mod q), m = D_K1(c), and
/// m is returned only if KH_K2(m, bind_info) reduces to r. TagMismatch
/// otherwise.
Bytes unsigncrypt(const SigncryptedText& ct, const KeyPair& recipient, const GroupElement& signer_pub,
                  ByteView bind_info, const GroupParams& params, const CryptoSuite& suite);

/// The (r, s, T) part of a signcrypted text.
inline blind::Signature signature_part(const SigncryptedText& ct) { return {ct.r, ct.s, ct.T}; }

}  // namespace blindsc::bsc
