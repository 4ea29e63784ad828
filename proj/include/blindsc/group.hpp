#pragma once

#include <cstdint>
#include <string_view>

#include "blindsc/bigint.hpp"
#include "blindsc/random.hpp"

namespace blindsc {

/// Residue mod q. Holds nonces, keys, hash challenges and signature
/// components. The library only produces reduced values; decoded values are
/// range-checked against the params before use.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(BigInt v) : value_(std::move(v)) {}
  explicit Scalar(long v) : value_(v) {}

  const BigInt& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

 private:
  BigInt value_;
};

/// Element of Z_p^*, always in [1, p-1].
class GroupElement {
 public:
  GroupElement() : value_(1) {}
  explicit GroupElement(BigInt v) : value_(std::move(v)) {}
  explicit GroupElement(long v) : value_(v) {}

  const BigInt& value() const { return value_; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.value_ == b.value_; }

 private:
  BigInt value_;
};

/// Raw (p, q, g) triple before validation.
struct ParamsTriple {
  BigInt p;
  BigInt q;
  BigInt g;

  friend bool operator==(const ParamsTriple&, const ParamsTriple&) = default;
};

/// Validated public group description: g generates the order-q subgroup of
/// Z_p^*. Only validate_params() and generate_params() construct one.
class GroupParams {
 public:
  const BigInt& p() const { return t_.p; }
  const BigInt& q() const { return t_.q; }
  GroupElement g() const { return GroupElement(t_.g); }
  const ParamsTriple& triple() const { return t_; }

  /// Width of a canonically encoded group element (bytes of p).
  std::size_t element_width() const { return element_width_; }
  std::size_t scalar_width() const { return scalar_width_; }

  friend bool operator==(const GroupParams& a, const GroupParams& b) { return a.t_ == b.t_; }

 private:
  friend GroupParams validate_params(const ParamsTriple&);
  explicit GroupParams(ParamsTriple t);

  ParamsTriple t_;
  std::size_t element_width_;
  std::size_t scalar_width_;
};

inline constexpr int kPrimalityRounds = 40;

bool is_probable_prime(const BigInt& n);

/// Throws NotPrime or OrderMismatch for a bad (p, q) and BadGenerator for g.
GroupParams validate_params(const ParamsTriple& candidate);

/// p has exactly bits_p bits, q exactly bits_q bits, and
/// g = h^((p-1)/q) mod p for random h, redrawn until g != 1.
/// Requires 8 <= bits_q < bits_p. Throws GenerationTimeout when the bounded
/// search fails.
GroupParams generate_params(std::size_t bits_p, std::size_t bits_q, RandomSource& rng);

/// (23, 11, 2), for worked vectors.
const GroupParams& toy23();
/// 512-bit p / 160-bit q, generated once per process from a fixed seed.
const GroupParams& desk512();
/// "toy23" or "desk512"; InvalidArgument for any other name.
const GroupParams& builtin_params(std::string_view name);

// Range checks: OutOfRange unless 0 <= v < q, resp. 1 <= v < p.
Scalar checked_scalar(const BigInt& v, const GroupParams& params);
GroupElement checked_element(const BigInt& v, const GroupParams& params);

Scalar reduce_scalar(const BigInt& v, const GroupParams& params);

Scalar scalar_add(const Scalar& a, const Scalar& b, const GroupParams& params);
Scalar scalar_sub(const Scalar& a, const Scalar& b, const GroupParams& params);
Scalar scalar_mul(const Scalar& a, const Scalar& b, const GroupParams& params);

/// a^-1 mod q. Throws ZeroInverse when a = 0 mod q.
Scalar modinv(const Scalar& a, const BigInt& q);

GroupElement element_mul(const GroupElement& a, const GroupElement& b, const GroupParams& params);

/// base^exp mod p. Every call is one counted exponentiation.
GroupElement modexp(const GroupElement& base, const Scalar& exp, const GroupParams& params);
GroupElement pow_g(const Scalar& exp, const GroupParams& params);

/// e^q = 1 mod p. Not counted as a protocol exponentiation.
bool in_subgroup(const GroupElement& e, const GroupParams& params);

/// Uniform in [1, q-1].
Scalar rand_scalar_nonzero(RandomSource& rng, const BigInt& q);
/// Uniform in [0, q-1].
Scalar rand_scalar(RandomSource& rng, const BigInt& q);

/// Fixed-width big-endian encoding (element_width() bytes). This is the
/// preimage form used wherever a group element is hashed.
Bytes canonical_bytes(const GroupElement& e, const GroupParams& params);

/// Per-thread count of modexp() calls. Used by efficiency instrumentation.
std::uint64_t exponentiation_count() noexcept;

/// Counts exponentiations performed on this thread during its lifetime.
class ExpCounter {
 public:
  ExpCounter() : start_(exponentiation_count()) {}
  std::uint64_t count() const { return exponentiation_count() - start_; }

 private:
  std::uint64_t start_;
};

}  // namespace blindsc
