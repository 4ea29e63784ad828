#pragma once

#include <optional>
#include <utility>

#include "blindsc/sdss.hpp"

namespace blindsc::blind {

// Protocol messages.
struct CommitMsg {
  GroupElement z;
  friend bool operator==(const CommitMsg&, const CommitMsg&) = default;
};
struct ChallengeMsg {
  Scalar r_bar;
  friend bool operator==(const ChallengeMsg&, const ChallengeMsg&) = default;
};
struct ResponseMsg {
  Scalar s_bar;
  friend bool operator==(const ResponseMsg&, const ResponseMsg&) = default;
};

/// (r, s, T). T is part of the signature because verification needs it.
struct Signature {
  Scalar r;
  Scalar s;
  GroupElement T;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// What the signer sees in one run. k_tilde is only filled in test mode.
struct View {
  GroupElement z;
  Scalar r_bar;
  Scalar s_bar;
  std::optional<Scalar> k_tilde;
};

/// The requester's secret draws for one run and the values derived from them.
/// r_bar = r + beta (mod q), T = z^r_bar * g^alpha (mod p).
struct Blinding {
  Scalar u;
  Scalar alpha;
  Scalar beta;
  Scalar r;
  Scalar r_bar;
  GroupElement T;

  friend bool operator==(const Blinding&, const Blinding&) = default;
};

enum class SignerState { Init, Committed, Responded };
enum class RequesterState { AwaitCommit, Challenged, Done };

/// Signer-side state. One-shot: the nonce k_tilde answers exactly one
/// challenge.
class SignerSession {
 public:
  struct Snapshot {
    Scalar k_tilde;
    GroupElement z;
    SignerState state = SignerState::Init;
  };

  SignerSession() = default;

  SignerState state() const { return state_; }
  const GroupElement& z() const { return z_; }
  const Scalar& k_tilde() const { return k_tilde_; }

  Snapshot snapshot() const { return {k_tilde_, z_, state_}; }
  static SignerSession restore(const Snapshot& snap);

 private:
  friend std::pair<SignerSession, CommitMsg> signer_commit(const GroupParams&, RandomSource&);
  friend ResponseMsg signer_respond(SignerSession&, const ChallengeMsg&, const KeyPair&, const GroupParams&);

  Scalar k_tilde_;
  GroupElement z_;
  SignerState state_ = SignerState::Init;
};

/// Draws k_tilde in Z_q^* and z = g^k_tilde, redrawing while z = 0 mod q.
std::pair<SignerSession, CommitMsg> signer_commit(const GroupParams& params, RandomSource& rng);

/// s_bar = x_A + r_bar * k_tilde mod q. InvalidState unless Committed,
/// BadChallenge for r_bar = 0 mod q.
ResponseMsg signer_respond(SignerSession& session, const ChallengeMsg& challenge, const KeyPair& key,
                           const GroupParams& params);

class RequesterSession {
 public:
  struct Snapshot {
    Blinding blinding;
    Bytes m;
    RequesterState state = RequesterState::AwaitCommit;
  };

  RequesterState state() const { return state_; }
  const Blinding& blinding() const { return blinding_; }
  const Bytes& message() const { return m_; }

  Snapshot snapshot() const { return {blinding_, m_, state_}; }
  static RequesterSession restore(const Snapshot& snap);

 private:
  friend std::pair<RequesterSession, ChallengeMsg> requester_challenge(ByteView, const CommitMsg&,
                                                                       const GroupParams&, const CryptoSuite&,
                                                                       RandomSource&);
  friend Signature requester_finalize(RequesterSession&, const ResponseMsg&, const GroupParams&);

  Blinding blinding_;
  Bytes m_;
  RequesterState state_ = RequesterState::AwaitCommit;
};

/// Draws u (until r = h(bytes(g^u) || m) != 0), then beta (until
/// r_bar != 0), then alpha, and computes T = z^r_bar * g^alpha.
/// BadCommit if z = 0 mod q or z is not in [1, p-1].
std::pair<RequesterSession, ChallengeMsg> requester_challenge(ByteView m, const CommitMsg& commit,
                                                              const GroupParams& params, const CryptoSuite& suite,
                                                              RandomSource& rng);

/// s = u / (r + s_bar + alpha) mod q. A zero denominator aborts the session
/// with DegenerateDenominator; the caller starts over.
Signature requester_finalize(RequesterSession& session, const ResponseMsg& response, const GroupParams& params);

/// K = (y_A * T * g^r)^s mod p; equals g^u for honest signatures.
GroupElement recover_commitment(const Signature& sig, const GroupElement& signer_pub, const GroupParams& params);

bool verify(ByteView m, const Signature& sig, const GroupElement& signer_pub, const GroupParams& params,
            const CryptoSuite& suite);

struct BlindingFactors {
  Scalar alpha;
  Scalar beta;
};

/// Solves for the blinding factors that would link `view` to `sig`:
///   beta  = r_bar - r
///   alpha = u / s - (r + s_bar)
/// then checks T = z^r * z^beta * g^alpha and s = u / (r + s_bar + alpha).
/// InconsistentPair when either check fails.
BlindingFactors recover_blinding_factors(const View& view, const Signature& sig, const Scalar& u,
                                         const GroupParams& params);

namespace detail {

void check_commit(const CommitMsg& commit, const GroupParams& params);

/// Draws beta and alpha for a fixed (u, r) and computes r_bar, T.
Blinding blind(const Scalar& u, const Scalar& r, const GroupElement& z, const GroupParams& params,
               RandomSource& rng);

/// s = u / (r + s_bar + alpha) mod q; throws DegenerateDenominator.
Scalar unblind(const Blinding& b, const Scalar& s_bar, const GroupParams& params);

}  // namespace detail
}  // namespace blindsc::blind
