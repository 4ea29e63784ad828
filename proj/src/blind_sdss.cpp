#include "blindsc/blind_sdss.hpp"

#include "blindsc/error.hpp"

namespace blindsc::blind {

namespace detail {

void check_commit(const CommitMsg& commit, const GroupParams& params) {
  const BigInt& z = commit.z.value();
  if (z < 1 || z >= params.p()) throw Error(Errc::BadCommit, "z not in [1, p-1]");
  // q is prime, so gcd(z, q) = 1 exactly when q does not divide z.
  if (mpz_divisible_p(z.get_mpz_t(), params.q().get_mpz_t())) {
    throw Error(Errc::BadCommit, "gcd(z, q) != 1");
  }
}

Blinding blind(const Scalar& u, const Scalar& r, const GroupElement& z, const GroupParams& params,
               RandomSource& rng) {
  Blinding b;
  b.u = u;
  b.r = r;
  do {
    b.beta = rand_scalar(rng, params.q());
    b.r_bar = scalar_add(r, b.beta, params);
  } while (b.r_bar.is_zero());
  b.alpha = rand_scalar(rng, params.q());
  // z^r * z^beta * g^alpha, evaluated as z^r_bar * g^alpha.
  b.T = element_mul(modexp(z, b.r_bar, params), pow_g(b.alpha, params), params);
  return b;
}

Scalar unblind(const Blinding& b, const Scalar& s_bar, const GroupParams& params) {
  Scalar denom = scalar_add(scalar_add(b.r, s_bar, params), b.alpha, params);
  if (denom.is_zero()) throw Error(Errc::DegenerateDenominator, "r + s_bar + alpha = 0 mod q");
  return scalar_mul(b.u, modinv(denom, params.q()), params);
}

}  // namespace detail

SignerSession SignerSession::restore(const Snapshot& snap) {
  SignerSession s;
  s.k_tilde_ = snap.k_tilde;
  s.z_ = snap.z;
  s.state_ = snap.state;
  return s;
}

std::pair<SignerSession, CommitMsg> signer_commit(const GroupParams& params, RandomSource& rng) {
  SignerSession session;
  for (;;) {
    session.k_tilde_ = rand_scalar_nonzero(rng, params.q());
    session.z_ = pow_g(session.k_tilde_, params);
    if (!mpz_divisible_p(session.z_.value().get_mpz_t(), params.q().get_mpz_t())) break;
  }
  session.state_ = SignerState::Committed;
  return {session, CommitMsg{session.z_}};
}

ResponseMsg signer_respond(SignerSession& session, const ChallengeMsg& challenge, const KeyPair& key,
                           const GroupParams& params) {
  if (session.state_ != SignerState::Committed) {
    throw Error(Errc::InvalidState, "signer session is not awaiting a challenge");
  }
  if (challenge.r_bar.is_zero() || challenge.r_bar.value() >= params.q()) {
    throw Error(Errc::BadChallenge, "r_bar must be in [1, q-1]");
  }
  Scalar s_bar = scalar_add(key.x, scalar_mul(challenge.r_bar, session.k_tilde_, params), params);
  session.state_ = SignerState::Responded;
  session.k_tilde_ = Scalar();
  return ResponseMsg{s_bar};
}

RequesterSession RequesterSession::restore(const Snapshot& snap) {
  RequesterSession s;
  s.blinding_ = snap.blinding;
  s.m_ = snap.m;
  s.state_ = snap.state;
  return s;
}

std::pair<RequesterSession, ChallengeMsg> requester_challenge(ByteView m, const CommitMsg& commit,
                                                              const GroupParams& params, const CryptoSuite& suite,
                                                              RandomSource& rng) {
  detail::check_commit(commit, params);
  Scalar u;
  Scalar r;
  do {
    u = rand_scalar_nonzero(rng, params.q());
    r = hash_to_scalar(element_message_preimage(pow_g(u, params), m, params), params, suite);
  } while (r.is_zero());

  RequesterSession session;
  session.blinding_ = detail::blind(u, r, commit.z, params, rng);
  session.m_.assign(m.begin(), m.end());
  session.state_ = RequesterState::Challenged;
  return {session, ChallengeMsg{session.blinding_.r_bar}};
}

Signature requester_finalize(RequesterSession& session, const ResponseMsg& response, const GroupParams& params) {
  if (session.state_ != RequesterState::Challenged) {
    throw Error(Errc::InvalidState, "requester session is not awaiting a response");
  }
  session.state_ = RequesterState::Done;
  Scalar s = detail::unblind(session.blinding_, reduce_scalar(response.s_bar.value(), params), params);
  return Signature{session.blinding_.r, s, session.blinding_.T};
}

GroupElement recover_commitment(const Signature& sig, const GroupElement& signer_pub, const GroupParams& params) {
  GroupElement base = element_mul(element_mul(signer_pub, sig.T, params), pow_g(sig.r, params), params);
  return modexp(base, sig.s, params);
}

bool verify(ByteView m, const Signature& sig, const GroupElement& signer_pub, const GroupParams& params,
            const CryptoSuite& suite) {
  if (sig.r.is_zero() || sig.s.is_zero()) return false;
  if (sig.r.value() >= params.q() || sig.s.value() >= params.q()) return false;
  if (sig.T.value() < 1 || sig.T.value() >= params.p()) return false;
  GroupElement k = recover_commitment(sig, signer_pub, params);
  return hash_to_scalar(element_message_preimage(k, m, params), params, suite) == sig.r;
}

BlindingFactors recover_blinding_factors(const View& view, const Signature& sig, const Scalar& u,
                                         const GroupParams& params) {
  if (sig.s.is_zero()) throw Error(Errc::InconsistentPair, "s = 0 has no inverse");
  BlindingFactors f;
  f.beta = scalar_sub(view.r_bar, sig.r, params);
  Scalar u_over_s = scalar_mul(modinv(sig.s, params.q()), u, params);
  f.alpha = scalar_sub(u_over_s, scalar_add(sig.r, view.s_bar, params), params);

  GroupElement expected_T = element_mul(
      element_mul(modexp(view.z, sig.r, params), modexp(view.z, f.beta, params), params), pow_g(f.alpha, params),
      params);
  if (expected_T != sig.T) throw Error(Errc::InconsistentPair, "T != z^r * z^beta * g^alpha");

  Scalar denom = scalar_add(scalar_add(sig.r, view.s_bar, params), f.alpha, params);
  if (denom.is_zero() || scalar_mul(u, modinv(denom, params.q()), params) != sig.s) {
    throw Error(Errc::InconsistentPair, "s != u / (r + s_bar + alpha)");
  }
  return f;
}

}  // namespace blindsc::blind
