#pragma once

#include "blindsc/blind_signcrypt.hpp"
#include "blindsc/wire.hpp"

// Encrypted-at-rest persistence for one-shot protocol sessions, so the
// parties of a blind run can live in separate processes.
//
// blob := nonce(16) | E(state) | tag(32), with
//   enc_key = HMAC(key, "enc" | nonce), mac_key = HMAC(key, "mac" | nonce),
//   E       = SHAKE256 keystream XOR, tag = HMAC(mac_key, role | E(state)).
namespace blindsc::store {

enum class Role : std::uint8_t {
  Signer = 1,
  BlindRequester = 2,
  BscRequester = 3,
};

/// State key for test mode, derived from the run seed.
Bytes key_from_seed(std::uint64_t seed);

wire::SealedState seal(const blind::SignerSession& s, ByteView key, RandomSource& rng);
wire::SealedState seal(const blind::RequesterSession& s, ByteView key, RandomSource& rng);
wire::SealedState seal(const bsc::RequesterSession& s, ByteView key, RandomSource& rng);

// TagMismatch for a wrong key or a modified blob, InvalidState for a role
// mismatch.
blind::SignerSession open_signer(const wire::SealedState& sealed, ByteView key);
blind::RequesterSession open_blind_requester(const wire::SealedState& sealed, ByteView key);
bsc::RequesterSession open_bsc_requester(const wire::SealedState& sealed, ByteView key);

}  // namespace blindsc::store
