#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "blindsc/blind_signcrypt.hpp"

// In-process three-party runner. Produces full-knowledge transcripts (the
// signer's view plus every requester secret) so that algebraic relations
// and blindness can be checked mechanically.
namespace blindsc::harness {

enum class Scheme { BlindSdss, BlindSigncrypt };

struct FullTranscript {
  blind::View view;
  blind::Blinding requester_secrets;
  std::variant<blind::Signature, bsc::SigncryptedText> output;
  Bytes message;

  /// (r, s, T) of the output, whichever scheme produced it.
  blind::Signature signature() const;
};

struct SessionConfig {
  std::optional<KeyPair> signer;
  std::optional<KeyPair> recipient;
  /// Message for session i is messages[i % size]; random 0..256 bytes when empty.
  std::vector<Bytes> messages;
  /// Defaults to the canonical encoding of the recipient's public key.
  std::optional<Bytes> bind_info;
  std::size_t max_restarts = 16;
};

struct Run {
  Scheme scheme = Scheme::BlindSigncrypt;
  KeyPair signer;
  KeyPair recipient;
  Bytes bind_info;
  std::vector<FullTranscript> transcripts;
  /// Sessions restarted after DegenerateDenominator.
  std::size_t degenerate_restarts = 0;
};

/// Runs n independent honest sessions. Every transcript is checked with
/// check_transcript() before it is returned. InvalidArgument for n = 0.
Run run_honest_sessions(std::size_t n, Scheme scheme, const GroupParams& params, const CryptoSuite& suite,
                        RandomSource& rng, const SessionConfig& config = {});

/// Asserts the honest-run relations, throwing InconsistentPair:
///   s_bar = x_A + r_bar * k_tilde, r_bar = r + beta, T = z^r_bar * g^alpha,
///   (y_A * T * g^r)^s = g^u, and for signcryption
///   y_C^u = (y_A * T * g^r)^(s * x_C) with C recovering the message.
void check_transcript(const Run& run, const FullTranscript& t, const GroupParams& params, const CryptoSuite& suite);

/// N x N matrix, entry (i, j) = recover_blinding_factors(view_i, sig_j, u_j)
/// succeeded.
struct CrossPairingReport {
  std::size_t n = 0;
  std::vector<std::uint8_t> pass;  // row-major: view i, signature j

  bool at(std::size_t i, std::size_t j) const { return pass[i * n + j] != 0; }
  std::size_t passed() const;
  bool all_pass() const { return passed() == n * n; }
  bool column_passes(std::size_t j) const;

  std::string to_text() const;
  /// Header "pair_i,pair_j,pass" then one row per pairing.
  std::string to_csv() const;
};

/// InvalidArgument for fewer than two transcripts.
CrossPairingReport cross_pairing_check(std::span<const FullTranscript> transcripts, const GroupParams& params);

enum class TamperScope { AllFields, CipherOnly };

struct TamperReport {
  std::size_t trials = 0;
  std::size_t rejections = 0;  // TagMismatch outcomes
  bool control_accepted = false;

  bool all_rejected() const { return rejections == trials; }
};

/// Flips one uniformly chosen bit of c || r || s || T (fixed-width fields)
/// per trial and runs C's unsigncryption. The untouched text is run first
/// as a control.
TamperReport tamper_suite(const Run& run, const FullTranscript& t, std::size_t trials, RandomSource& rng,
                          const GroupParams& params, const CryptoSuite& suite,
                          TamperScope scope = TamperScope::AllFields);

/// Group exponentiations per protocol step in one honest session.
struct ExpCounts {
  std::uint64_t a_commit = 0;
  std::uint64_t a_respond = 0;
  std::uint64_t b_challenge = 0;
  std::uint64_t b_finalize = 0;
  std::uint64_t c_receive = 0;  // verify or unsigncrypt

  std::uint64_t party_a() const { return a_commit + a_respond; }
  std::uint64_t party_b() const { return b_challenge + b_finalize; }
  std::uint64_t party_c() const { return c_receive; }
};

/// Counts with the per-step separate exponentiation strategy (no
/// simultaneous multi-exponentiation). Expected: A 1, B 3, C 2.
ExpCounts count_exponentiations(Scheme scheme, const GroupParams& params, const CryptoSuite& suite,
                                RandomSource& rng);

}  // namespace blindsc::harness
