#include <gtest/gtest.h>

#include "blindsc/wire.hpp"
#include "test_util.hpp"

using namespace blindsc;
using testutil::bytes_of;
using testutil::error_of;
using wire::Envelope;
using wire::MsgType;

namespace {

Bytes envelope_bytes(MsgType type, std::string_view suite, const Bytes& body) {
  Bytes out = bytes_of("BSC1");
  out.push_back(static_cast<std::uint8_t>(type));
  out.push_back(static_cast<std::uint8_t>(suite.size() >> 8));
  out.push_back(static_cast<std::uint8_t>(suite.size()));
  out.insert(out.end(), suite.begin(), suite.end());
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

BigInt random_int(RandomSource& rng) {
  // Zero and one-byte values are over-represented; the rest reach 600 bits.
  switch (rng.uniform(0, 3).get_ui()) {
    case 0: return 0;
    case 1: return rng.uniform(1, 255);
    default: {
      BigInt hi = (BigInt(1) << static_cast<mp_bitcnt_t>(rng.uniform(8, 600).get_ui())) - 1;
      return rng.uniform(0, hi);
    }
  }
}

Bytes random_bytes(RandomSource& rng, std::size_t max_len) {
  Bytes b(rng.uniform(0, max_len).get_ui());
  rng.fill(b);
  return b;
}

wire::Value random_value(std::size_t index, RandomSource& rng) {
  auto s = [&] { return Scalar(random_int(rng)); };
  auto e = [&] { return GroupElement(random_int(rng)); };
  switch (index) {
    case 0: return ParamsTriple{random_int(rng), random_int(rng), random_int(rng)};
    case 1: return wire::PubKey{e()};
    case 2: return blind::CommitMsg{e()};
    case 3: return blind::ChallengeMsg{s()};
    case 4: return blind::ResponseMsg{s()};
    case 5: return sdss::Signature{s(), s()};
    case 6: return zheng::SigncryptedText{random_bytes(rng, 300), s(), s()};
    case 7: return bsc::SigncryptedText{random_bytes(rng, 300), s(), s(), e()};
    case 8: return blind::Signature{s(), s(), e()};
    case 9: return KeyPair{s(), e()};
    default:
      return wire::SealedState{static_cast<std::uint8_t>(rng.uniform(0, 255).get_ui()), random_bytes(rng, 300)};
  }
}

bool is_decode_error(Errc c) {
  return c == Errc::BadMagic || c == Errc::UnknownType || c == Errc::Truncated ||
         c == Errc::NonCanonicalInteger || c == Errc::TrailingBytes;
}

}  // namespace

TEST(Wire, CommitLayout) {
  Envelope env{"toy-v1", blind::CommitMsg{GroupElement(9)}};
  Bytes expected = envelope_bytes(MsgType::Commit, "toy-v1", {0x00, 0x01, 0x09});
  EXPECT_EQ(wire::encode(env), expected);
  EXPECT_EQ(wire::decode(expected), env);
}

TEST(Wire, ZeroEncodesAsEmptyMagnitude) {
  Envelope env{"std-v1", blind::ChallengeMsg{Scalar(0)}};
  EXPECT_EQ(wire::encode(env), envelope_bytes(MsgType::Challenge, "std-v1", {0x00, 0x00}));
}

TEST(Wire, ByteFieldsUseFourByteLength) {
  Envelope env{"", zheng::SigncryptedText{Bytes{0xaa, 0xbb}, Scalar(7), Scalar(6)}};
  EXPECT_EQ(wire::encode(env),
            envelope_bytes(MsgType::SigncryptedText, "", {0, 0, 0, 2, 0xaa, 0xbb, 0, 1, 7, 0, 1, 6}));
}

TEST(Wire, NamedErrors) {
  const Bytes good = envelope_bytes(MsgType::Commit, "toy-v1", {0x00, 0x01, 0x09});

  Bytes bad_magic = good;
  bad_magic[3] = '2';
  EXPECT_EQ(error_of([&] { wire::decode(bad_magic); }), Errc::BadMagic);

  for (std::uint8_t t : {0x00, 0x0c, 0xff}) {
    Bytes unknown = good;
    unknown[4] = t;
    EXPECT_EQ(error_of([&] { wire::decode(unknown); }), Errc::UnknownType);
  }

  for (std::size_t n = 0; n < good.size(); ++n) {
    Bytes cut(good.begin(), good.begin() + static_cast<std::ptrdiff_t>(n));
    EXPECT_EQ(error_of([&] { wire::decode(cut); }), Errc::Truncated) << "prefix " << n;
  }

  EXPECT_EQ(error_of([&] { wire::decode(envelope_bytes(MsgType::Commit, "toy-v1", {0x00, 0x02, 0x00, 0x09})); }),
            Errc::NonCanonicalInteger);
  EXPECT_EQ(error_of([&] { wire::decode(envelope_bytes(MsgType::Commit, "toy-v1", {0x00, 0x01, 0x00})); }),
            Errc::NonCanonicalInteger);

  Bytes trailing = good;
  trailing.push_back(0);
  EXPECT_EQ(error_of([&] { wire::decode(trailing); }), Errc::TrailingBytes);
}

TEST(Wire, RoundtripEveryType) {
  SeededRandom rng(71);
  for (std::size_t index = 0; index < std::variant_size_v<wire::Value>; ++index) {
    for (int i = 0; i < 10000; ++i) {
      Envelope env{rng.uniform(0, 1) == 0 ? "std-v1" : "toy-v1", random_value(index, rng)};
      ASSERT_EQ(static_cast<std::size_t>(wire::type_of(env.value)), index + 1);
      Bytes enc = wire::encode(env);
      ASSERT_EQ(wire::decode(enc), env);
      // Canonical: re-encoding the decoded value reproduces the bytes.
      ASSERT_EQ(wire::encode(wire::decode(enc)), enc);
    }
  }
}

TEST(Wire, RandomInputsOnlyRaiseDecodeErrors) {
  SeededRandom rng(72);
  for (int i = 0; i < 100000; ++i) {
    Bytes in = random_bytes(rng, 64);
    // Half the inputs get a valid magic and type so the body parser is exercised.
    if (i % 2 == 0 && in.size() >= 5) {
      std::copy(wire::kMagic.begin(), wire::kMagic.end(), in.begin());
      in[4] = static_cast<std::uint8_t>(rng.uniform(1, 11).get_ui());
    }
    try {
      Envelope env = wire::decode(in);
      ASSERT_EQ(wire::encode(env), in);
    } catch (const Error& e) {
      ASSERT_TRUE(is_decode_error(e.code())) << errc_name(e.code());
    }
  }
}

TEST(Wire, MutatedEnvelopesOnlyRaiseDecodeErrors) {
  SeededRandom rng(73);
  for (int i = 0; i < 100000; ++i) {
    Bytes enc = wire::encode({"std-v1", random_value(rng.uniform(0, 10).get_ui(), rng)});
    switch (rng.uniform(0, 2).get_ui()) {
      case 0: enc[rng.uniform(0, enc.size() - 1).get_ui()] ^= static_cast<std::uint8_t>(rng.uniform(1, 255).get_ui()); break;
      case 1: enc.resize(rng.uniform(0, enc.size() - 1).get_ui()); break;
      default: enc.push_back(static_cast<std::uint8_t>(rng.uniform(0, 255).get_ui()));
    }
    try {
      Envelope env = wire::decode(enc);
      ASSERT_EQ(wire::encode(env), enc);
    } catch (const Error& e) {
      ASSERT_TRUE(is_decode_error(e.code())) << errc_name(e.code());
    }
  }
}

TEST(Wire, RangeChecksAreSeparateFromDecoding) {
  const auto& p = toy23();
  Envelope env = wire::decode(wire::encode({"toy-v1", blind::CommitMsg{GroupElement(23)}}));
  EXPECT_EQ(error_of([&] { wire::check_ranges(env.value, p); }), Errc::OutOfRange);
  EXPECT_EQ(error_of([&] { wire::check_ranges(blind::CommitMsg{GroupElement(0)}, p); }), Errc::OutOfRange);
  EXPECT_EQ(error_of([&] { wire::check_ranges(blind::ResponseMsg{Scalar(11)}, p); }), Errc::OutOfRange);
  EXPECT_NO_THROW(wire::check_ranges(blind::ResponseMsg{Scalar(10)}, p));
  EXPECT_NO_THROW(wire::check_ranges(blind::Signature{Scalar(7), Scalar(8), GroupElement(13)}, p));
}

TEST(Wire, ArmorRoundtrip) {
  SeededRandom rng(74);
  for (int i = 0; i < 200; ++i) {
    Bytes enc = wire::encode({"std-v1", random_value(rng.uniform(0, 10).get_ui(), rng)});
    std::string text = wire::armor(enc);
    EXPECT_TRUE(text.starts_with("-----BEGIN BSC1 "));
    EXPECT_EQ(wire::dearmor(text), enc);
    EXPECT_EQ(wire::unwrap(as_bytes(text)), enc);
    EXPECT_EQ(wire::unwrap(enc), enc);
  }
}

TEST(Wire, ArmorLayout) {
  Bytes enc = wire::encode({"toy-v1", blind::CommitMsg{GroupElement(9)}});
  EXPECT_EQ(wire::armor(enc),
            "-----BEGIN BSC1 COMMIT-----\n" + to_hex(enc) + "\n-----END BSC1 COMMIT-----\n");

  Bytes big = wire::encode({"std-v1", zheng::SigncryptedText{Bytes(100, 0x5a), Scalar(1), Scalar(2)}});
  std::string text = wire::armor(big);
  std::size_t start = text.find('\n') + 1;
  EXPECT_EQ(text.find('\n', start) - start, 64u);
}

TEST(Wire, MalformedArmorRejected) {
  Bytes enc = wire::encode({"toy-v1", blind::CommitMsg{GroupElement(9)}});
  std::string text = wire::armor(enc);
  EXPECT_EQ(error_of([&] { wire::dearmor("no header\n"); }), Errc::BadArmor);
  EXPECT_EQ(error_of([&] { wire::dearmor(text.substr(0, text.find("-----END"))); }), Errc::BadArmor);

  std::string wrong_end = text;
  wrong_end.replace(wrong_end.find("END BSC1 COMMIT"), 15, "END BSC1 PUBKEY");
  EXPECT_EQ(error_of([&] { wire::dearmor(wrong_end); }), Errc::BadArmor);

  std::string bad_hex = text;
  bad_hex[bad_hex.find('\n') + 1] = 'z';
  EXPECT_EQ(error_of([&] { wire::dearmor(bad_hex); }), Errc::BadArmor);
}
