#include <gtest/gtest.h>

#include "blindsc/harness.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace blindsc;
using harness::Scheme;
using testutil::bytes_of;
using testutil::error_of;

namespace {

const Bytes kMsg = bytes_of("ballot: yes");

harness::SessionConfig toy_config() {
  harness::SessionConfig cfg;
  cfg.signer = keypair_from_secret(Scalar(3), toy23());
  cfg.recipient = keypair_from_secret(Scalar(4), toy23());
  cfg.messages = {kMsg};
  return cfg;
}

}  // namespace

TEST(Harness, SingleSessionWorkedVector) {
  const auto cfg = toy_config();
  const Bytes bind = default_bind_info(cfg.recipient->y, toy23());
  SplitKeys keys = derive_keys(GroupElement(9), toy23(), toy_suite());
  ToyStubs stubs;
  stubs.keyed_hash[{Bytes(keys.k2.begin(), keys.k2.end()), tag_preimage(kMsg, bind)}] = digest_of(7);
  const CryptoSuite suite = toy_suite(stubs);

  ScriptedRandom rng{5, 4, 2, 6};
  auto run = harness::run_honest_sessions(1, Scheme::BlindSigncrypt, toy23(), suite, rng, cfg);
  ASSERT_EQ(run.transcripts.size(), 1u);
  const auto& t = run.transcripts[0];
  EXPECT_EQ(t.view.z, GroupElement(9));
  EXPECT_EQ(t.view.r_bar, Scalar(9));
  EXPECT_EQ(t.view.s_bar, Scalar(4));
  EXPECT_EQ(t.requester_secrets,
            (blind::Blinding{Scalar(4), Scalar(6), Scalar(2), Scalar(7), Scalar(9), GroupElement(13)}));
  const auto& ct = std::get<bsc::SigncryptedText>(t.output);
  EXPECT_EQ(ct.r, Scalar(7));
  EXPECT_EQ(ct.s, Scalar(8));
  EXPECT_EQ(ct.T, GroupElement(13));
  EXPECT_EQ(ct.c, suite.encrypt(keys.k1, kMsg));
  EXPECT_EQ(run.degenerate_restarts, 0u);
}

TEST(Harness, ZeroSessionsRejected) {
  SeededRandom rng(1);
  EXPECT_EQ(error_of([&] { harness::run_honest_sessions(0, Scheme::BlindSdss, toy23(), std_suite(), rng); }),
            Errc::InvalidArgument);
}

TEST(Harness, DegenerateSessionsAreRestarted) {
  // alpha = 0 makes the first attempt degenerate; the second attempt draws
  // k_tilde = 5, u = 4, beta = 2, alpha = 6 again.
  const auto cfg = toy_config();
  ToyStubs stubs;
  stubs.hash[element_message_preimage(GroupElement(16), kMsg, toy23())] = digest_of(7);
  ScriptedRandom rng{5, 4, 2, 0, 5, 4, 2, 6};
  auto run = harness::run_honest_sessions(1, Scheme::BlindSdss, toy23(), toy_suite(stubs), rng, cfg);
  EXPECT_EQ(run.degenerate_restarts, 1u);
  EXPECT_EQ(run.transcripts[0].signature(), (blind::Signature{Scalar(7), Scalar(8), GroupElement(13)}));
}

TEST(Harness, CheckTranscriptCatchesInconsistency) {
  SeededRandom rng(2);
  auto run = harness::run_honest_sessions(1, Scheme::BlindSigncrypt, desk512(), std_suite(), rng);
  auto t = run.transcripts[0];
  t.view.s_bar = scalar_add(t.view.s_bar, Scalar(1), desk512());
  EXPECT_EQ(error_of([&] { harness::check_transcript(run, t, desk512(), std_suite()); }), Errc::InconsistentPair);
}

TEST(Harness, CrossPairingAllPass) {
  for (Scheme scheme : {Scheme::BlindSdss, Scheme::BlindSigncrypt}) {
    SeededRandom rng(91);
    auto run = harness::run_honest_sessions(32, scheme, desk512(), std_suite(), rng);
    auto report = harness::cross_pairing_check(run.transcripts, desk512());
    EXPECT_EQ(report.passed(), 1024u);
    EXPECT_TRUE(report.all_pass());
  }
}

TEST(Harness, DiagonalRecoversActualDraws) {
  SeededRandom rng(92);
  auto run = harness::run_honest_sessions(8, Scheme::BlindSigncrypt, desk512(), std_suite(), rng);
  for (const auto& t : run.transcripts) {
    auto f = blind::recover_blinding_factors(t.view, t.signature(), t.requester_secrets.u, desk512());
    EXPECT_EQ(f.alpha, t.requester_secrets.alpha);
    EXPECT_EQ(f.beta, t.requester_secrets.beta);
  }
}

TEST(Harness, ForgedColumnFails) {
  SeededRandom rng(93);
  auto run = harness::run_honest_sessions(6, Scheme::BlindSigncrypt, desk512(), std_suite(), rng);
  auto& forged = std::get<bsc::SigncryptedText>(run.transcripts[2].output);
  forged.s = scalar_add(forged.s, Scalar(1), desk512());
  auto report = harness::cross_pairing_check(run.transcripts, desk512());
  EXPECT_FALSE(report.column_passes(2));
  for (std::size_t i = 0; i < report.n; ++i) EXPECT_FALSE(report.at(i, 2)) << "row " << i;
  EXPECT_EQ(report.passed(), 30u);
}

TEST(Harness, CrossPairingNeedsTwoTranscripts) {
  SeededRandom rng(94);
  auto run = harness::run_honest_sessions(1, Scheme::BlindSdss, toy23(), std_suite(), rng);
  EXPECT_EQ(error_of([&] { harness::cross_pairing_check(run.transcripts, toy23()); }), Errc::InvalidArgument);
}

TEST(Harness, ReportFormats) {
  SeededRandom rng(95);
  auto run = harness::run_honest_sessions(2, Scheme::BlindSdss, toy23(), std_suite(), rng);
  auto report = harness::cross_pairing_check(run.transcripts, toy23());
  EXPECT_EQ(report.to_csv(), "pair_i,pair_j,pass\n0,0,1\n0,1,1\n1,0,1\n1,1,1\n");
  EXPECT_NE(report.to_text().find("4/4"), std::string::npos);
}

TEST(Harness, TamperSuiteRejectsAllFlips) {
  SeededRandom rng(96);
  harness::SessionConfig cfg;
  cfg.messages = {bytes_of("the quick brown fox jumps over the lazy dog")};
  auto run = harness::run_honest_sessions(1, Scheme::BlindSigncrypt, desk512(), std_suite(), rng, cfg);
  for (auto scope : {harness::TamperScope::AllFields, harness::TamperScope::CipherOnly}) {
    auto report = harness::tamper_suite(run, run.transcripts[0], 100, rng, desk512(), std_suite(), scope);
    EXPECT_TRUE(report.control_accepted);
    EXPECT_EQ(report.trials, 100u);
    EXPECT_EQ(report.rejections, 100u);
    EXPECT_TRUE(report.all_rejected());
  }
}

TEST(Harness, TamperSuiteNeedsSigncryption) {
  SeededRandom rng(97);
  auto run = harness::run_honest_sessions(1, Scheme::BlindSdss, toy23(), std_suite(), rng);
  EXPECT_EQ(error_of([&] { harness::tamper_suite(run, run.transcripts[0], 1, rng, toy23(), std_suite()); }),
            Errc::InvalidArgument);
}

TEST(Harness, SignerViewMarginalsLookUniform) {
  // r_bar is uniform on Z_q^*, s_bar = x_A + r_bar * k_tilde is uniform on Z_q \ {x_A}.
  SeededRandom rng(98);
  auto run = harness::run_honest_sessions(5000, Scheme::BlindSigncrypt, toy23(), std_suite(), rng);
  std::vector<std::uint64_t> r_bar(10, 0);
  std::vector<std::uint64_t> s_bar(10, 0);
  const auto x = run.signer.x.value().get_ui();
  for (const auto& t : run.transcripts) {
    ++r_bar[t.view.r_bar.value().get_ui() - 1];
    auto s = t.view.s_bar.value().get_ui();
    ASSERT_NE(s, x);
    ++s_bar[s < x ? s : s - 1];
  }
  EXPECT_LT(oracle::chi_square_uniform(r_bar), oracle::kChi2Crit_df9);
  EXPECT_LT(oracle::chi_square_uniform(s_bar), oracle::kChi2Crit_df9);
}

TEST(Harness, ExponentiationCounts) {
  for (Scheme scheme : {Scheme::BlindSdss, Scheme::BlindSigncrypt}) {
    SeededRandom rng(99);
    auto c = harness::count_exponentiations(scheme, desk512(), std_suite(), rng);
    EXPECT_EQ(c.a_commit, 1u);
    EXPECT_EQ(c.a_respond, 0u);
    EXPECT_EQ(c.party_a(), 1u);
    EXPECT_EQ(c.b_challenge, 3u);
    EXPECT_EQ(c.b_finalize, 0u);
    EXPECT_EQ(c.party_b(), 3u);
    EXPECT_EQ(c.party_c(), 2u);
  }
}
