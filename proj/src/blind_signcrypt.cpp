#include "blindsc/blind_signcrypt.hpp"

#include "blindsc/error.hpp"

namespace blindsc::bsc {

RequesterSession RequesterSession::restore(Snapshot snap) {
  RequesterSession s;
  s.snap_ = std::move(snap);
  return s;
}

std::pair<RequesterSession, ChallengeMsg> requester_challenge(ByteView m, const CommitMsg& commit,
                                                              const GroupElement& recipient_pub,
                                                              ByteView bind_info, const GroupParams& params,
                                                              const CryptoSuite& suite, RandomSource& rng) {
  blind::detail::check_commit(commit, params);

  RequesterSession session;
  auto& st = session.snap_;
  Scalar u;
  Scalar r;
  do {
    u = rand_scalar_nonzero(rng, params.q());
    st.keys = derive_keys(modexp(recipient_pub, u, params), params, suite);
    r = keyed_tag(st.keys.k2, m, bind_info, params, suite);
  } while (r.is_zero());
  st.c = suite.encrypt(st.keys.k1, m);
  st.bind_info.assign(bind_info.begin(), bind_info.end());
  st.blinding = blind::detail::blind(u, r, commit.z, params, rng);
  st.state = blind::RequesterState::Challenged;
  return {session, ChallengeMsg{st.blinding.r_bar}};
}

SigncryptedText requester_finalize(RequesterSession& session, const ResponseMsg& response,
                                   const GroupParams& params) {
  auto& st = session.snap_;
  if (st.state != blind::RequesterState::Challenged) {
    throw Error(Errc::InvalidState, "requester session is not awaiting a response");
  }
  st.state = blind::RequesterState::Done;
  Scalar s = blind::detail::unblind(st.blinding, reduce_scalar(response.s_bar.value(), params), params);
  return SigncryptedText{st.c, st.blinding.r, s, st.blinding.T};
}

Bytes unsigncrypt(const SigncryptedText& ct, const KeyPair& recipient, const GroupElement& signer_pub,
                  ByteView bind_info, const GroupParams& params, const CryptoSuite& suite) {
  if (ct.r.value() >= params.q() || ct.s.value() >= params.q() || ct.T.value() < 1 ||
      ct.T.value() >= params.p()) {
    throw Error(Errc::TagMismatch, "signcrypted text fields out of range");
  }
  GroupElement base = element_mul(element_mul(signer_pub, ct.T, params), pow_g(ct.r, params), params);
  GroupElement shared = modexp(base, scalar_mul(ct.s, recipient.x, params), params);
  SplitKeys keys = derive_keys(shared, params, suite);
  Bytes m = suite.decrypt(keys.k1, ct.c);
  if (keyed_tag(keys.k2, m, bind_info, params, suite) != ct.r) {
    throw Error(Errc::TagMismatch, "keyed hash does not match r");
  }
  return m;
}

}  // namespace blindsc::bsc
