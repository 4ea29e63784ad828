#include "blindsc/session_store.hpp"

#include <algorithm>

#include <openssl/crypto.h>

#include "blindsc/error.hpp"

namespace blindsc::store {

namespace {

constexpr std::size_t kNonceLen = 16;
constexpr std::size_t kTagLen = 32;

struct SubKeys {
  Digest enc;
  Digest mac;
};

SubKeys sub_keys(ByteView key, ByteView nonce) {
  const CryptoSuite suite = std_suite();
  auto label = [&](std::string_view l) {
    Bytes in(l.begin(), l.end());
    in.insert(in.end(), nonce.begin(), nonce.end());
    return suite.keyed_hash(key, in);
  };
  return {label("enc"), label("mac")};
}

Digest tag_over(const Digest& mac_key, Role role, ByteView ciphertext) {
  Bytes in{static_cast<std::uint8_t>(role)};
  in.insert(in.end(), ciphertext.begin(), ciphertext.end());
  return std_suite().keyed_hash(mac_key, in);
}

wire::SealedState seal_bytes(Role role, ByteView plaintext, ByteView key, RandomSource& rng) {
  Bytes nonce(kNonceLen);
  rng.fill(nonce);
  SubKeys k = sub_keys(key, nonce);
  Bytes ct = std_suite().encrypt(k.enc, plaintext);
  Digest tag = tag_over(k.mac, role, ct);

  wire::SealedState out;
  out.role = static_cast<std::uint8_t>(role);
  wire::Writer blob;
  blob.raw(nonce);
  blob.raw(ct);
  blob.raw(tag);
  out.blob = std::move(blob).take();
  return out;
}

Bytes open_bytes(Role role, const wire::SealedState& sealed, ByteView key) {
  if (sealed.role != static_cast<std::uint8_t>(role)) {
    throw Error(Errc::InvalidState, "state file belongs to a different role");
  }
  if (sealed.blob.size() < kNonceLen + kTagLen) throw Error(Errc::TagMismatch, "state blob too short");
  ByteView blob(sealed.blob);
  ByteView nonce = blob.first(kNonceLen);
  ByteView ct = blob.subspan(kNonceLen, blob.size() - kNonceLen - kTagLen);
  ByteView tag = blob.last(kTagLen);
  SubKeys k = sub_keys(key, nonce);
  Digest expected = tag_over(k.mac, role, ct);
  if (CRYPTO_memcmp(expected.data(), tag.data(), kTagLen) != 0) {
    throw Error(Errc::TagMismatch, "state file authentication failed");
  }
  return std_suite().decrypt(k.enc, ct);
}

void put_blinding(wire::Writer& w, const blind::Blinding& b) {
  w.integer(b.u.value());
  w.integer(b.alpha.value());
  w.integer(b.beta.value());
  w.integer(b.r.value());
  w.integer(b.r_bar.value());
  w.integer(b.T.value());
}

blind::Blinding get_blinding(wire::Reader& r) {
  blind::Blinding b;
  b.u = Scalar(r.integer());
  b.alpha = Scalar(r.integer());
  b.beta = Scalar(r.integer());
  b.r = Scalar(r.integer());
  b.r_bar = Scalar(r.integer());
  b.T = GroupElement(r.integer());
  return b;
}

Digest get_digest(wire::Reader& r) {
  Bytes b = r.bytes();
  if (b.size() != std::tuple_size_v<Digest>) throw Error(Errc::InvalidState, "bad key length in state");
  Digest d{};
  std::copy(b.begin(), b.end(), d.begin());
  return d;
}

template <typename Enum>
Enum get_state(wire::Reader& r, Enum last) {
  std::uint8_t v = r.u8();
  if (v > static_cast<std::uint8_t>(last)) throw Error(Errc::InvalidState, "unknown session state");
  return static_cast<Enum>(v);
}

}  // namespace

Bytes key_from_seed(std::uint64_t seed) {
  Bytes in{'b', 'l', 'i', 'n', 'd', 's', 'c', '-', 's', 't', 'a', 't', 'e'};
  for (int i = 7; i >= 0; --i) in.push_back(static_cast<std::uint8_t>(seed >> (8 * i)));
  Digest d = std_suite().hash(in);
  return Bytes(d.begin(), d.end());
}

wire::SealedState seal(const blind::SignerSession& s, ByteView key, RandomSource& rng) {
  wire::Writer w;
  auto snap = s.snapshot();
  w.u8(static_cast<std::uint8_t>(snap.state));
  w.integer(snap.k_tilde.value());
  w.integer(snap.z.value());
  return seal_bytes(Role::Signer, w.data(), key, rng);
}

wire::SealedState seal(const blind::RequesterSession& s, ByteView key, RandomSource& rng) {
  wire::Writer w;
  auto snap = s.snapshot();
  w.u8(static_cast<std::uint8_t>(snap.state));
  put_blinding(w, snap.blinding);
  w.bytes(snap.m);
  return seal_bytes(Role::BlindRequester, w.data(), key, rng);
}

wire::SealedState seal(const bsc::RequesterSession& s, ByteView key, RandomSource& rng) {
  wire::Writer w;
  const auto& snap = s.snapshot();
  w.u8(static_cast<std::uint8_t>(snap.state));
  put_blinding(w, snap.blinding);
  w.bytes(snap.keys.k1);
  w.bytes(snap.keys.k2);
  w.bytes(snap.c);
  w.bytes(snap.bind_info);
  return seal_bytes(Role::BscRequester, w.data(), key, rng);
}

blind::SignerSession open_signer(const wire::SealedState& sealed, ByteView key) {
  Bytes plain = open_bytes(Role::Signer, sealed, key);
  wire::Reader r(plain);
  blind::SignerSession::Snapshot snap;
  snap.state = get_state(r, blind::SignerState::Responded);
  snap.k_tilde = Scalar(r.integer());
  snap.z = GroupElement(r.integer());
  r.finish();
  return blind::SignerSession::restore(snap);
}

blind::RequesterSession open_blind_requester(const wire::SealedState& sealed, ByteView key) {
  Bytes plain = open_bytes(Role::BlindRequester, sealed, key);
  wire::Reader r(plain);
  blind::RequesterSession::Snapshot snap;
  snap.state = get_state(r, blind::RequesterState::Done);
  snap.blinding = get_blinding(r);
  snap.m = r.bytes();
  r.finish();
  return blind::RequesterSession::restore(snap);
}

bsc::RequesterSession open_bsc_requester(const wire::SealedState& sealed, ByteView key) {
  Bytes plain = open_bytes(Role::BscRequester, sealed, key);
  wire::Reader r(plain);
  bsc::RequesterSession::Snapshot snap;
  snap.state = get_state(r, blind::RequesterState::Done);
  snap.blinding = get_blinding(r);
  snap.keys.k1 = get_digest(r);
  snap.keys.k2 = get_digest(r);
  snap.c = r.bytes();
  snap.bind_info = r.bytes();
  r.finish();
  return bsc::RequesterSession::restore(std::move(snap));
}

}  // namespace blindsc::store
