#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "blindsc/blind_signcrypt.hpp"
#include "blindsc/zheng.hpp"

// Canonical binary format shared by every party:
//
//   envelope := "BSC1" | u8 msg_type | u16 len | suite_id | body
//   int      := u16 len | big-endian magnitude, no leading zero byte
//               (zero is the empty string)
//   bytes    := u32 len | raw bytes
//
// All multi-byte lengths are big-endian. Body layouts, in field order:
//   01 Params               int p, int q, int g
//   02 PubKey               int y
//   03 Commit               int z
//   04 Challenge            int r_bar
//   05 Response             int s_bar
//   06 SdssSig              int r, int s
//   07 SigncryptedText      bytes c, int r, int s
//   08 BlindSigncryptedText bytes c, int r, int s, int T
//   09 BlindSig             int r, int s, int T
//   0a SecretKey            int x, int y
//   0b SealedState          u8 role, bytes blob
namespace blindsc::wire {

inline constexpr std::string_view kMagic = "BSC1";

enum class MsgType : std::uint8_t {
  Params = 0x01,
  PubKey = 0x02,
  Commit = 0x03,
  Challenge = 0x04,
  Response = 0x05,
  SdssSig = 0x06,
  SigncryptedText = 0x07,
  BlindSigncryptedText = 0x08,
  BlindSig = 0x09,
  SecretKey = 0x0a,
  SealedState = 0x0b,
};

struct PubKey {
  GroupElement y;
  friend bool operator==(const PubKey&, const PubKey&) = default;
};

/// Encrypted session state written between CLI invocations.
struct SealedState {
  std::uint8_t role = 0;
  Bytes blob;
  friend bool operator==(const SealedState&, const SealedState&) = default;
};

// Alternative i carries msg_type i + 1.
using Value = std::variant<ParamsTriple, PubKey, blind::CommitMsg, blind::ChallengeMsg, blind::ResponseMsg,
                           sdss::Signature, zheng::SigncryptedText, bsc::SigncryptedText, blind::Signature, KeyPair,
                           SealedState>;

struct Envelope {
  std::string suite_id;
  Value value;

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

MsgType type_of(const Value& v);
std::string_view type_name(MsgType t);

Bytes encode(const Envelope& env);

/// Parses one envelope. Throws only BadMagic, UnknownType, Truncated,
/// NonCanonicalInteger or TrailingBytes.
Envelope decode(ByteView bytes);

/// Checks each field against the group: scalars in [0, q-1], elements in
/// [1, p-1]. Throws OutOfRange.
void check_ranges(const Value& v, const GroupParams& params);

/// Text armor: a BEGIN line naming the type, 64-column hex, an END line.
std::string armor(ByteView encoded);
/// Inverse of armor(); BadArmor on malformed text.
Bytes dearmor(std::string_view text);
/// Dearmors when the input starts with an armor header, else returns it as is.
Bytes unwrap(ByteView file_contents);

/// Append-only field writer used for envelope bodies and sealed state.
class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v);
  void u32(std::uint32_t v);
  void integer(const BigInt& v);
  void bytes(ByteView v);
  void raw(ByteView v) { out_.insert(out_.end(), v.begin(), v.end()); }

  Bytes take() && { return std::move(out_); }
  const Bytes& data() const { return out_; }

 private:
  Bytes out_;
};

/// Bounds-checked reader matching Writer.
class Reader {
 public:
  explicit Reader(ByteView in) : in_(in) {}

  std::uint8_t u8();
  std::uint16_t u16();
  std::uint32_t u32();
  BigInt integer();
  Bytes bytes();
  ByteView raw(std::size_t n);

  bool done() const { return pos_ == in_.size(); }
  /// TrailingBytes unless everything was consumed.
  void finish() const;

 private:
  ByteView in_;
  std::size_t pos_ = 0;
};

}  // namespace blindsc::wire
