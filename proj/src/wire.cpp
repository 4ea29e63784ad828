#include "blindsc/wire.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "blindsc/error.hpp"

namespace blindsc::wire {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr std::size_t kArmorColumns = 64;

void write_body(Writer& w, const Value& v) {
  std::visit(Overloaded{
                 [&](const ParamsTriple& t) {
                   w.integer(t.p);
                   w.integer(t.q);
                   w.integer(t.g);
                 },
                 [&](const PubKey& k) { w.integer(k.y.value()); },
                 [&](const blind::CommitMsg& m) { w.integer(m.z.value()); },
                 [&](const blind::ChallengeMsg& m) { w.integer(m.r_bar.value()); },
                 [&](const blind::ResponseMsg& m) { w.integer(m.s_bar.value()); },
                 [&](const sdss::Signature& s) {
                   w.integer(s.r.value());
                   w.integer(s.s.value());
                 },
                 [&](const zheng::SigncryptedText& ct) {
                   w.bytes(ct.c);
                   w.integer(ct.r.value());
                   w.integer(ct.s.value());
                 },
                 [&](const bsc::SigncryptedText& ct) {
                   w.bytes(ct.c);
                   w.integer(ct.r.value());
                   w.integer(ct.s.value());
                   w.integer(ct.T.value());
                 },
                 [&](const blind::Signature& s) {
                   w.integer(s.r.value());
                   w.integer(s.s.value());
                   w.integer(s.T.value());
                 },
                 [&](const KeyPair& k) {
                   w.integer(k.x.value());
                   w.integer(k.y.value());
                 },
                 [&](const SealedState& s) {
                   w.u8(s.role);
                   w.bytes(s.blob);
                 },
             },
             v);
}

Value read_body(Reader& r, MsgType type) {
  auto scalar = [&] { return Scalar(r.integer()); };
  auto element = [&] { return GroupElement(r.integer()); };
  switch (type) {
    case MsgType::Params: {
      ParamsTriple t;
      t.p = r.integer();
      t.q = r.integer();
      t.g = r.integer();
      return t;
    }
    case MsgType::PubKey: return PubKey{element()};
    case MsgType::Commit: return blind::CommitMsg{element()};
    case MsgType::Challenge: return blind::ChallengeMsg{scalar()};
    case MsgType::Response: return blind::ResponseMsg{scalar()};
    case MsgType::SdssSig: {
      sdss::Signature s;
      s.r = scalar();
      s.s = scalar();
      return s;
    }
    case MsgType::SigncryptedText: {
      zheng::SigncryptedText ct;
      ct.c = r.bytes();
      ct.r = scalar();
      ct.s = scalar();
      return ct;
    }
    case MsgType::BlindSigncryptedText: {
      bsc::SigncryptedText ct;
      ct.c = r.bytes();
      ct.r = scalar();
      ct.s = scalar();
      ct.T = element();
      return ct;
    }
    case MsgType::BlindSig: {
      blind::Signature s;
      s.r = scalar();
      s.s = scalar();
      s.T = element();
      return s;
    }
    case MsgType::SecretKey: {
      KeyPair k;
      k.x = scalar();
      k.y = element();
      return k;
    }
    case MsgType::SealedState: {
      SealedState s;
      s.role = r.u8();
      s.blob = r.bytes();
      return s;
    }
  }
  throw Error(Errc::UnknownType);
}

bool known_type(std::uint8_t t) {
  return t >= static_cast<std::uint8_t>(MsgType::Params) && t <= static_cast<std::uint8_t>(MsgType::SealedState);
}

void check_scalar(const Scalar& s, const GroupParams& params) { (void)checked_scalar(s.value(), params); }
void check_element(const GroupElement& e, const GroupParams& params) { (void)checked_element(e.value(), params); }

}  // namespace

void Writer::u16(std::uint16_t v) {
  out_.push_back(static_cast<std::uint8_t>(v >> 8));
  out_.push_back(static_cast<std::uint8_t>(v));
}

void Writer::u32(std::uint32_t v) {
  for (int i = 3; i >= 0; --i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void Writer::integer(const BigInt& v) {
  Bytes mag = to_bytes(v);
  if (mag.size() > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(Errc::OutOfRange, "integer too long for a u16 length prefix");
  }
  u16(static_cast<std::uint16_t>(mag.size()));
  raw(mag);
}

void Writer::bytes(ByteView v) {
  if (v.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(Errc::OutOfRange, "byte field too long");
  }
  u32(static_cast<std::uint32_t>(v.size()));
  raw(v);
}

ByteView Reader::raw(std::size_t n) {
  if (in_.size() - pos_ < n) throw Error(Errc::Truncated, "need " + std::to_string(n) + " more bytes");
  ByteView out = in_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::uint8_t Reader::u8() { return raw(1)[0]; }

std::uint16_t Reader::u16() {
  ByteView b = raw(2);
  return static_cast<std::uint16_t>(b[0] << 8 | b[1]);
}

std::uint32_t Reader::u32() {
  ByteView b = raw(4);
  return static_cast<std::uint32_t>(b[0]) << 24 | static_cast<std::uint32_t>(b[1]) << 16 |
         static_cast<std::uint32_t>(b[2]) << 8 | b[3];
}

BigInt Reader::integer() {
  std::uint16_t len = u16();
  ByteView mag = raw(len);
  if (!mag.empty() && mag[0] == 0) throw Error(Errc::NonCanonicalInteger, "leading zero byte");
  return from_bytes(mag);
}

Bytes Reader::bytes() {
  std::uint32_t len = u32();
  ByteView b = raw(len);
  return Bytes(b.begin(), b.end());
}

void Reader::finish() const {
  if (!done()) throw Error(Errc::TrailingBytes, std::to_string(in_.size() - pos_) + " unread bytes");
}

MsgType type_of(const Value& v) { return static_cast<MsgType>(v.index() + 1); }

std::string_view type_name(MsgType t) {
  switch (t) {
    case MsgType::Params: return "PARAMS";
    case MsgType::PubKey: return "PUBKEY";
    case MsgType::Commit: return "COMMIT";
    case MsgType::Challenge: return "CHALLENGE";
    case MsgType::Response: return "RESPONSE";
    case MsgType::SdssSig: return "SDSS SIGNATURE";
    case MsgType::SigncryptedText: return "SIGNCRYPTED TEXT";
    case MsgType::BlindSigncryptedText: return "BLIND SIGNCRYPTED TEXT";
    case MsgType::BlindSig: return "BLIND SIGNATURE";
    case MsgType::SecretKey: return "SECRET KEY";
    case MsgType::SealedState: return "SESSION STATE";
  }
  return "UNKNOWN";
}

Bytes encode(const Envelope& env) {
  Writer w;
  w.raw(as_bytes(kMagic));
  w.u8(static_cast<std::uint8_t>(type_of(env.value)));
  if (env.suite_id.size() > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(Errc::OutOfRange, "suite id too long");
  }
  w.u16(static_cast<std::uint16_t>(env.suite_id.size()));
  w.raw(as_bytes(env.suite_id));
  write_body(w, env.value);
  return std::move(w).take();
}

Envelope decode(ByteView bytes) {
  Reader r(bytes);
  ByteView magic = r.raw(kMagic.size());
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) throw Error(Errc::BadMagic);
  std::uint8_t type = r.u8();
  if (!known_type(type)) throw Error(Errc::UnknownType, "msg_type " + std::to_string(type));
  Envelope env;
  std::uint16_t id_len = r.u16();
  ByteView id = r.raw(id_len);
  env.suite_id.assign(id.begin(), id.end());
  env.value = read_body(r, static_cast<MsgType>(type));
  r.finish();
  return env;
}

void check_ranges(const Value& v, const GroupParams& params) {
  std::visit(Overloaded{
                 [&](const ParamsTriple&) {},
                 [&](const PubKey& k) { check_element(k.y, params); },
                 [&](const blind::CommitMsg& m) { check_element(m.z, params); },
                 [&](const blind::ChallengeMsg& m) { check_scalar(m.r_bar, params); },
                 [&](const blind::ResponseMsg& m) { check_scalar(m.s_bar, params); },
                 [&](const sdss::Signature& s) {
                   check_scalar(s.r, params);
                   check_scalar(s.s, params);
                 },
                 [&](const zheng::SigncryptedText& ct) {
                   check_scalar(ct.r, params);
                   check_scalar(ct.s, params);
                 },
                 [&](const bsc::SigncryptedText& ct) {
                   check_scalar(ct.r, params);
                   check_scalar(ct.s, params);
                   check_element(ct.T, params);
                 },
                 [&](const blind::Signature& s) {
                   check_scalar(s.r, params);
                   check_scalar(s.s, params);
                   check_element(s.T, params);
                 },
                 [&](const KeyPair& k) {
                   check_scalar(k.x, params);
                   check_element(k.y, params);
                 },
                 [&](const SealedState&) {},
             },
             v);
}

std::string armor(ByteView encoded) {
  if (encoded.size() <= kMagic.size()) throw Error(Errc::Truncated, "nothing to armor");
  const auto type = static_cast<MsgType>(encoded[kMagic.size()]);
  const std::string label = "BSC1 " + std::string(type_name(type));
  std::string hex = to_hex(encoded);
  std::ostringstream out;
  out << "-----BEGIN " << label << "-----\n";
  for (std::size_t i = 0; i < hex.size(); i += kArmorColumns) out << hex.substr(i, kArmorColumns) << '\n';
  out << "-----END " << label << "-----\n";
  return out.str();
}

Bytes dearmor(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string begin_label;
  std::string hex;
  bool ended = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (begin_label.empty()) {
      if (!line.starts_with("-----BEGIN ") || !line.ends_with("-----")) {
        throw Error(Errc::BadArmor, "missing BEGIN line");
      }
      begin_label = line.substr(11, line.size() - 16);
      continue;
    }
    if (line.starts_with("-----END ")) {
      if (line != "-----END " + begin_label + "-----") throw Error(Errc::BadArmor, "END label mismatch");
      ended = true;
      break;
    }
    hex += line;
  }
  if (!ended) throw Error(Errc::BadArmor, "missing END line");
  try {
    return from_hex(hex);
  } catch (const Error&) {
    throw Error(Errc::BadArmor, "invalid hex payload");
  }
}

Bytes unwrap(ByteView file_contents) {
  constexpr std::string_view kHeader = "-----BEGIN ";
  if (file_contents.size() >= kHeader.size() &&
      std::equal(kHeader.begin(), kHeader.end(), file_contents.begin())) {
    return dearmor(std::string_view(reinterpret_cast<const char*>(file_contents.data()), file_contents.size()));
  }
  return Bytes(file_contents.begin(), file_contents.end());
}

}  // namespace blindsc::wire
