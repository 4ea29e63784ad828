#include "blindsc/group.hpp"

#include <string>

#include "blindsc/error.hpp"

namespace blindsc {

namespace {

thread_local std::uint64_t t_exp_count = 0;

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& mod) {
  BigInt out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return out;
}

BigInt mod_floor(const BigInt& v, const BigInt& m) {
  BigInt out;
  mpz_mod(out.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return out;
}

BigInt random_bits_exact(RandomSource& rng, std::size_t bits) {
  BigInt lo = BigInt(1) << static_cast<unsigned long>(bits - 1);
  BigInt hi = (BigInt(1) << static_cast<unsigned long>(bits)) - 1;
  return rng.uniform(lo, hi);
}

constexpr int kPrimeQAttempts = 256;
constexpr int kCofactorAttemptsPerBit = 64;
constexpr int kGeneratorAttempts = 256;

}  // namespace

GroupParams::GroupParams(ParamsTriple t)
    : t_(std::move(t)), element_width_(byte_length(t_.p)), scalar_width_(byte_length(t_.q)) {}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), kPrimalityRounds) != 0;
}

GroupParams validate_params(const ParamsTriple& c) {
  if (!is_probable_prime(c.p)) throw Error(Errc::NotPrime, "p is not prime");
  if (!is_probable_prime(c.q)) throw Error(Errc::NotPrime, "q is not prime");
  if (!mpz_divisible_p(BigInt(c.p - 1).get_mpz_t(), c.q.get_mpz_t())) {
    throw Error(Errc::OrderMismatch, "q does not divide p - 1");
  }
  if (c.g <= 1 || c.g >= c.p) throw Error(Errc::BadGenerator, "g must lie in [2, p-1]");
  if (powm(c.g, c.q, c.p) != 1) throw Error(Errc::BadGenerator, "g^q != 1 mod p");
  return GroupParams(c);
}

GroupParams generate_params(std::size_t bits_p, std::size_t bits_q, RandomSource& rng) {
  if (bits_q < 8 || bits_q >= bits_p) {
    throw Error(Errc::InvalidArgument, "need 8 <= bits_q < bits_p");
  }
  const BigInt p_lo = BigInt(1) << static_cast<unsigned long>(bits_p - 1);
  const BigInt p_hi = (BigInt(1) << static_cast<unsigned long>(bits_p)) - 1;

  for (int qa = 0; qa < kPrimeQAttempts; ++qa) {
    BigInt q = random_bits_exact(rng, bits_q);
    q |= 1;
    if (!is_probable_prime(q)) continue;

    // p = 2*k*q + 1 with p in [p_lo, p_hi].
    const BigInt two_q = 2 * q;
    BigInt k_lo = (p_lo - 1 + two_q - 1) / two_q;
    BigInt k_hi = (p_hi - 1) / two_q;
    if (k_lo < 1) k_lo = 1;
    if (k_hi < k_lo) continue;

    const int attempts = kCofactorAttemptsPerBit * static_cast<int>(bits_p);
    for (int ka = 0; ka < attempts; ++ka) {
      BigInt p = two_q * rng.uniform(k_lo, k_hi) + 1;
      if (!is_probable_prime(p)) continue;
      const BigInt cofactor = (p - 1) / q;
      for (int ga = 0; ga < kGeneratorAttempts; ++ga) {
        BigInt h = rng.uniform(2, p - 2);
        BigInt g = powm(h, cofactor, p);
        if (g != 1) return validate_params({p, q, g});
      }
    }
  }
  throw Error(Errc::GenerationTimeout,
              "no parameters found for " + std::to_string(bits_p) + "/" + std::to_string(bits_q) + " bits");
}

const GroupParams& toy23() {
  static const GroupParams params = validate_params({23, 11, 2});
  return params;
}

const GroupParams& desk512() {
  static const GroupParams params = [] {
    SeededRandom rng(0x5eed512, "desk512");
    return generate_params(512, 160, rng);
  }();
  return params;
}

const GroupParams& builtin_params(std::string_view name) {
  if (name == "toy23") return toy23();
  if (name == "desk512") return desk512();
  throw Error(Errc::InvalidArgument, "unknown parameter set '" + std::string(name) + "'");
}

Scalar checked_scalar(const BigInt& v, const GroupParams& params) {
  if (sgn(v) < 0 || v >= params.q()) throw Error(Errc::OutOfRange, "scalar not in [0, q-1]");
  return Scalar(v);
}

GroupElement checked_element(const BigInt& v, const GroupParams& params) {
  if (v < 1 || v >= params.p()) throw Error(Errc::OutOfRange, "element not in [1, p-1]");
  return GroupElement(v);
}

Scalar reduce_scalar(const BigInt& v, const GroupParams& params) {
  return Scalar(mod_floor(v, params.q()));
}

Scalar scalar_add(const Scalar& a, const Scalar& b, const GroupParams& params) {
  return reduce_scalar(a.value() + b.value(), params);
}

Scalar scalar_sub(const Scalar& a, const Scalar& b, const GroupParams& params) {
  return reduce_scalar(a.value() - b.value(), params);
}

Scalar scalar_mul(const Scalar& a, const Scalar& b, const GroupParams& params) {
  return reduce_scalar(a.value() * b.value(), params);
}

Scalar modinv(const Scalar& a, const BigInt& q) {
  BigInt out;
  BigInt reduced = mod_floor(a.value(), q);
  if (sgn(reduced) == 0 || mpz_invert(out.get_mpz_t(), reduced.get_mpz_t(), q.get_mpz_t()) == 0) {
    throw Error(Errc::ZeroInverse, "no inverse mod q");
  }
  return Scalar(out);
}

GroupElement element_mul(const GroupElement& a, const GroupElement& b, const GroupParams& params) {
  return GroupElement(mod_floor(a.value() * b.value(), params.p()));
}

GroupElement modexp(const GroupElement& base, const Scalar& exp, const GroupParams& params) {
  ++t_exp_count;
  return GroupElement(powm(base.value(), exp.value(), params.p()));
}

GroupElement pow_g(const Scalar& exp, const GroupParams& params) {
  return modexp(params.g(), exp, params);
}

bool in_subgroup(const GroupElement& e, const GroupParams& params) {
  if (e.value() < 1 || e.value() >= params.p()) return false;
  return powm(e.value(), params.q(), params.p()) == 1;
}

Scalar rand_scalar_nonzero(RandomSource& rng, const BigInt& q) {
  return Scalar(rng.uniform(1, q - 1));
}

Scalar rand_scalar(RandomSource& rng, const BigInt& q) { return Scalar(rng.uniform(0, q - 1)); }

Bytes canonical_bytes(const GroupElement& e, const GroupParams& params) {
  return to_bytes_fixed(e.value(), params.element_width());
}

std::uint64_t exponentiation_count() noexcept { return t_exp_count; }

}  // namespace blindsc
