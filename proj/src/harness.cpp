#include "blindsc/harness.hpp"

#include <sstream>

#include "blindsc/error.hpp"

namespace blindsc::harness {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::InconsistentPair, what);
}

Bytes random_message(RandomSource& rng) {
  auto len = rng.uniform(0, 256).get_ui();
  Bytes m(len);
  rng.fill(m);
  return m;
}

FullTranscript run_one(const Run& run, ByteView m, const GroupParams& params, const CryptoSuite& suite,
                       RandomSource& rng) {
  auto [signer, commit] = blind::signer_commit(params, rng);
  FullTranscript t;
  t.message.assign(m.begin(), m.end());
  t.view.z = commit.z;
  t.view.k_tilde = signer.k_tilde();

  if (run.scheme == Scheme::BlindSdss) {
    auto [requester, challenge] = blind::requester_challenge(m, commit, params, suite, rng);
    auto response = blind::signer_respond(signer, challenge, run.signer, params);
    t.view.r_bar = challenge.r_bar;
    t.view.s_bar = response.s_bar;
    t.requester_secrets = requester.blinding();
    t.output = blind::requester_finalize(requester, response, params);
  } else {
    auto [requester, challenge] =
        bsc::requester_challenge(m, commit, run.recipient.y, run.bind_info, params, suite, rng);
    auto response = bsc::signer_respond(signer, challenge, run.signer, params);
    t.view.r_bar = challenge.r_bar;
    t.view.s_bar = response.s_bar;
    t.requester_secrets = requester.blinding();
    t.output = bsc::requester_finalize(requester, response, params);
  }
  return t;
}

}  // namespace

blind::Signature FullTranscript::signature() const {
  if (const auto* sig = std::get_if<blind::Signature>(&output)) return *sig;
  return bsc::signature_part(std::get<bsc::SigncryptedText>(output));
}

Run run_honest_sessions(std::size_t n, Scheme scheme, const GroupParams& params, const CryptoSuite& suite,
                        RandomSource& rng, const SessionConfig& config) {
  if (n == 0) throw Error(Errc::InvalidArgument, "need at least one session");
  Run run;
  run.scheme = scheme;
  run.signer = config.signer ? *config.signer : keygen(params, rng);
  run.recipient = config.recipient ? *config.recipient : keygen(params, rng);
  run.bind_info = config.bind_info ? *config.bind_info : default_bind_info(run.recipient.y, params);
  run.transcripts.reserve(n);

  for (std::size_t i = 0; i < n; ++i) {
    Bytes m = config.messages.empty() ? random_message(rng) : config.messages[i % config.messages.size()];
    for (std::size_t attempt = 0;; ++attempt) {
      try {
        run.transcripts.push_back(run_one(run, m, params, suite, rng));
        break;
      } catch (const Error& e) {
        if (e.code() != Errc::DegenerateDenominator || attempt + 1 >= config.max_restarts) throw;
        ++run.degenerate_restarts;
      }
    }
    check_transcript(run, run.transcripts.back(), params, suite);
  }
  return run;
}

void check_transcript(const Run& run, const FullTranscript& t, const GroupParams& params, const CryptoSuite& suite) {
  const auto& b = t.requester_secrets;
  const auto& v = t.view;
  const blind::Signature sig = t.signature();

  if (v.k_tilde) {
    require(v.s_bar == scalar_add(run.signer.x, scalar_mul(v.r_bar, *v.k_tilde, params), params),
            "s_bar != x_A + r_bar * k_tilde");
    require(v.z == pow_g(*v.k_tilde, params), "z != g^k_tilde");
  }
  require(v.r_bar == b.r_bar, "view and requester disagree on r_bar");
  require(b.r_bar == scalar_add(b.r, b.beta, params), "r_bar != r + beta");
  require(b.T == element_mul(modexp(v.z, b.r_bar, params), pow_g(b.alpha, params), params),
          "T != z^r_bar * g^alpha");
  require(sig.r == b.r && sig.T == b.T, "output does not carry the session's r and T");

  const GroupElement k = blind::recover_commitment(sig, run.signer.y, params);
  require(k == pow_g(b.u, params), "(y_A * T * g^r)^s != g^u");

  if (run.scheme == Scheme::BlindSdss) {
    require(blind::verify(t.message, sig, run.signer.y, params, suite), "signature does not verify");
    return;
  }

  const auto& ct = std::get<bsc::SigncryptedText>(t.output);
  GroupElement base = element_mul(element_mul(run.signer.y, ct.T, params), pow_g(ct.r, params), params);
  require(modexp(run.recipient.y, b.u, params) == modexp(base, scalar_mul(ct.s, run.recipient.x, params), params),
          "y_C^u != (y_A * T * g^r)^(s * x_C)");
  require(bsc::unsigncrypt(ct, run.recipient, run.signer.y, run.bind_info, params, suite) == t.message,
          "recipient recovered a different message");
}

std::size_t CrossPairingReport::passed() const {
  std::size_t count = 0;
  for (auto p : pass) count += p;
  return count;
}

bool CrossPairingReport::column_passes(std::size_t j) const {
  for (std::size_t i = 0; i < n; ++i) {
    if (!at(i, j)) return false;
  }
  return true;
}

std::string CrossPairingReport::to_text() const {
  std::ostringstream out;
  out << "cross-pairing: " << passed() << "/" << n * n << " pairings admit consistent blinding factors\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out << (at(i, j) ? '.' : 'X');
    out << '\n';
  }
  return out.str();
}

std::string CrossPairingReport::to_csv() const {
  std::ostringstream out;
  out << "pair_i,pair_j,pass\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out << i << ',' << j << ',' << (at(i, j) ? 1 : 0) << '\n';
  }
  return out.str();
}

CrossPairingReport cross_pairing_check(std::span<const FullTranscript> transcripts, const GroupParams& params) {
  if (transcripts.size() < 2) throw Error(Errc::InvalidArgument, "need at least two transcripts");
  CrossPairingReport report;
  report.n = transcripts.size();
  report.pass.assign(report.n * report.n, 0);
  for (std::size_t i = 0; i < report.n; ++i) {
    for (std::size_t j = 0; j < report.n; ++j) {
      try {
        blind::recover_blinding_factors(transcripts[i].view, transcripts[j].signature(),
                                        transcripts[j].requester_secrets.u, params);
        report.pass[i * report.n + j] = 1;
      } catch (const Error& e) {
        if (e.code() != Errc::InconsistentPair && e.code() != Errc::ZeroInverse) throw;
      }
    }
  }
  return report;
}

TamperReport tamper_suite(const Run& run, const FullTranscript& t, std::size_t trials, RandomSource& rng,
                          const GroupParams& params, const CryptoSuite& suite, TamperScope scope) {
  const auto* original = std::get_if<bsc::SigncryptedText>(&t.output);
  if (!original) throw Error(Errc::InvalidArgument, "tamper suite needs a blind signcryption transcript");
  if (scope == TamperScope::CipherOnly && original->c.empty()) {
    throw Error(Errc::InvalidArgument, "no ciphertext bits to flip");
  }

  auto attempt = [&](const bsc::SigncryptedText& ct) -> bool {
    try {
      bsc::unsigncrypt(ct, run.recipient, run.signer.y, run.bind_info, params, suite);
      return true;
    } catch (const Error& e) {
      if (e.code() != Errc::TagMismatch) throw;
      return false;
    }
  };

  TamperReport report;
  report.trials = trials;
  report.control_accepted = attempt(*original);

  const std::size_t c_bits = original->c.size() * 8;
  const std::size_t scalar_bits = params.scalar_width() * 8;
  const std::size_t element_bits = params.element_width() * 8;
  const std::size_t total = scope == TamperScope::CipherOnly ? c_bits : c_bits + 2 * scalar_bits + element_bits;

  auto flip = [](const BigInt& v, std::size_t bit) {
    BigInt out = v;
    mpz_combit(out.get_mpz_t(), bit);
    return out;
  };

  for (std::size_t i = 0; i < trials; ++i) {
    bsc::SigncryptedText ct = *original;
    std::size_t bit = rng.uniform(0, total - 1).get_ui();
    if (bit < c_bits) {
      ct.c[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    } else if ((bit -= c_bits) < scalar_bits) {
      ct.r = Scalar(flip(ct.r.value(), bit));
    } else if ((bit -= scalar_bits) < scalar_bits) {
      ct.s = Scalar(flip(ct.s.value(), bit));
    } else {
      bit -= scalar_bits;
      ct.T = GroupElement(flip(ct.T.value(), bit));
    }
    if (!attempt(ct)) ++report.rejections;
  }
  return report;
}

ExpCounts count_exponentiations(Scheme scheme, const GroupParams& params, const CryptoSuite& suite,
                                RandomSource& rng) {
  const KeyPair signer = keygen(params, rng);
  const KeyPair recipient = keygen(params, rng);
  const Bytes bind_info = default_bind_info(recipient.y, params);
  const Bytes m = random_message(rng);

  for (;;) {
    ExpCounts counts;
    try {
      ExpCounter a1;
      auto [session, commit] = blind::signer_commit(params, rng);
      counts.a_commit = a1.count();

      if (scheme == Scheme::BlindSdss) {
        ExpCounter b1;
        auto [requester, challenge] = blind::requester_challenge(m, commit, params, suite, rng);
        counts.b_challenge = b1.count();
        ExpCounter a2;
        auto response = blind::signer_respond(session, challenge, signer, params);
        counts.a_respond = a2.count();
        ExpCounter b2;
        auto sig = blind::requester_finalize(requester, response, params);
        counts.b_finalize = b2.count();
        ExpCounter c1;
        require(blind::verify(m, sig, signer.y, params, suite), "benchmark signature does not verify");
        counts.c_receive = c1.count();
      } else {
        ExpCounter b1;
        auto [requester, challenge] =
            bsc::requester_challenge(m, commit, recipient.y, bind_info, params, suite, rng);
        counts.b_challenge = b1.count();
        ExpCounter a2;
        auto response = bsc::signer_respond(session, challenge, signer, params);
        counts.a_respond = a2.count();
        ExpCounter b2;
        auto ct = bsc::requester_finalize(requester, response, params);
        counts.b_finalize = b2.count();
        ExpCounter c1;
        bsc::unsigncrypt(ct, recipient, signer.y, bind_info, params, suite);
        counts.c_receive = c1.count();
      }
      return counts;
    } catch (const Error& e) {
      if (e.code() != Errc::DegenerateDenominator) throw;
    }
  }
}

}  // namespace blindsc::harness
