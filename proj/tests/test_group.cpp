#include <chrono>

#include <gtest/gtest.h>

#include "blindsc/error.hpp"
#include "blindsc/group.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace blindsc;
using testutil::error_of;

namespace {

class FailingRandom : public RandomSource {
 public:
  void fill(std::span<std::uint8_t>) override { throw Error(Errc::RngFailure, "no entropy"); }
};

}  // namespace

TEST(GroupMath, ModexpToyVectors) {
  const auto& p = toy23();
  EXPECT_EQ(modexp(GroupElement(2), Scalar(11), p), GroupElement(1));
  EXPECT_EQ(modexp(p.g(), Scalar(0), p), GroupElement(1));
  EXPECT_EQ(modexp(GroupElement(8), Scalar(5), p), GroupElement(16));
  // Same values from the naive oracle.
  EXPECT_EQ(oracle::naive_pow(2, 11, 23), 1u);
  EXPECT_EQ(oracle::naive_pow(8, 5, 23), 16u);
}

TEST(GroupMath, ModexpMatchesNaiveOracleExhaustively) {
  // Every prime p <= 97 with a prime q | p-1 and a generator of order q.
  int groups = 0;
  for (std::uint64_t p = 3; p <= 97; ++p) {
    if (!oracle::naive_is_prime(p)) continue;
    for (std::uint64_t q = 2; q < p; ++q) {
      if (!oracle::naive_is_prime(q) || (p - 1) % q != 0) continue;
      std::uint64_t g = 0;
      for (std::uint64_t h = 2; h < p && g == 0; ++h) {
        std::uint64_t cand = oracle::naive_pow(h, (p - 1) / q, p);
        if (cand != 1) g = cand;
      }
      ASSERT_NE(g, 0u);
      GroupParams params = validate_params({BigInt(p), BigInt(q), BigInt(g)});
      ++groups;
      for (std::uint64_t base = 1; base < p; ++base) {
        for (std::uint64_t e = 0; e < q; ++e) {
          ASSERT_EQ(modexp(GroupElement(BigInt(base)), Scalar(BigInt(e)), params).value(),
                    BigInt(oracle::naive_pow(base, e, p)))
              << base << "^" << e << " mod " << p;
        }
      }
    }
  }
  EXPECT_GT(groups, 40);
}

TEST(GroupMath, SubgroupClosure) {
  for (const GroupParams* params : {&toy23(), &desk512()}) {
    SeededRandom rng(7);
    for (int i = 0; i < 50; ++i) {
      GroupElement e = pow_g(rand_scalar(rng, params->q()), *params);
      EXPECT_TRUE(in_subgroup(e, *params));
    }
  }
}

TEST(GroupMath, ModinvExamplesAndProperty) {
  EXPECT_EQ(modinv(Scalar(10), BigInt(11)), Scalar(10));
  EXPECT_EQ(modinv(Scalar(1), desk512().q()), Scalar(1));
  EXPECT_EQ(error_of([] { modinv(Scalar(0), BigInt(11)); }), Errc::ZeroInverse);
  EXPECT_EQ(error_of([] { modinv(Scalar(22), BigInt(11)); }), Errc::ZeroInverse);

  for (long a = 1; a < 11; ++a) {
    Scalar inv = modinv(Scalar(a), BigInt(11));
    EXPECT_EQ(inv.value(), BigInt(oracle::ext_euclid_inverse(a, 11)));
    EXPECT_EQ((inv.value() * a) % 11, 1);
  }
  SeededRandom rng(11);
  const auto& big = desk512();
  for (int i = 0; i < 200; ++i) {
    Scalar a = rand_scalar_nonzero(rng, big.q());
    EXPECT_EQ(scalar_mul(a, modinv(a, big.q()), big), Scalar(1));
  }
}

TEST(GroupMath, ValidateParams) {
  EXPECT_NO_THROW(validate_params({23, 11, 2}));
  EXPECT_EQ(error_of([] { validate_params({23, 11, 1}); }), Errc::BadGenerator);
  EXPECT_EQ(error_of([] { validate_params({24, 11, 2}); }), Errc::NotPrime);
  EXPECT_EQ(error_of([] { validate_params({23, 9, 2}); }), Errc::NotPrime);
  EXPECT_EQ(error_of([] { validate_params({23, 7, 2}); }), Errc::OrderMismatch);
  // 5 has order 22 mod 23.
  EXPECT_EQ(error_of([] { validate_params({23, 11, 5}); }), Errc::BadGenerator);
}

TEST(GroupMath, RandScalarNonzeroRangeAndDeterminism) {
  SeededRandom a(42);
  SeededRandom b(42);
  for (int i = 0; i < 1000; ++i) {
    Scalar x = rand_scalar_nonzero(a, BigInt(11));
    EXPECT_GE(x.value(), 1);
    EXPECT_LE(x.value(), 10);
    EXPECT_EQ(x, rand_scalar_nonzero(b, BigInt(11)));
  }
}

TEST(GroupMath, RandScalarNonzeroIsUniform) {
  SeededRandom rng(2024);
  std::vector<std::uint64_t> counts(10, 0);
  for (int i = 0; i < 10000; ++i) ++counts[rand_scalar_nonzero(rng, BigInt(11)).value().get_ui() - 1];
  EXPECT_LT(oracle::chi_square_uniform(counts), oracle::kChi2Crit_df9);
}

TEST(GroupMath, RngFailurePropagates) {
  FailingRandom rng;
  EXPECT_EQ(error_of([&] { rand_scalar_nonzero(rng, BigInt(11)); }), Errc::RngFailure);
}

TEST(GroupMath, GenerateSmallParams) {
  SeededRandom rng(5);
  GroupParams params = generate_params(16, 8, rng);
  EXPECT_EQ(bit_length(params.p()), 16u);
  EXPECT_EQ(bit_length(params.q()), 8u);
  EXPECT_NO_THROW(validate_params(params.triple()));
  EXPECT_NE(params.g().value(), 1);
}

TEST(GroupMath, GenerateRejectsBadBitSizes) {
  SeededRandom rng(5);
  EXPECT_EQ(error_of([&] { generate_params(8, 16, rng); }), Errc::InvalidArgument);
  EXPECT_EQ(error_of([&] { generate_params(16, 7, rng); }), Errc::InvalidArgument);
}

TEST(GroupMath, GenerateTimesOutOnDegenerateSource) {
  // A source stuck at all-ones always proposes q = 255, which is composite,
  // so the bounded search has to give up.
  class Constant : public RandomSource {
   public:
    void fill(std::span<std::uint8_t> out) override { std::fill(out.begin(), out.end(), 0xff); }
  } rng;
  EXPECT_EQ(error_of([&] { generate_params(16, 8, rng); }), Errc::GenerationTimeout);
}

TEST(GroupMath, Desk512WithinBudget) {
  auto start = std::chrono::steady_clock::now();
  SeededRandom rng(99);
  GroupParams params = generate_params(512, 160, rng);
  auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_EQ(bit_length(params.p()), 512u);
  EXPECT_EQ(bit_length(params.q()), 160u);
  EXPECT_LT(std::chrono::duration<double>(elapsed).count(), 10.0);
  EXPECT_EQ(bit_length(desk512().p()), 512u);
}

TEST(GroupMath, CanonicalBytesAreFixedWidth) {
  const auto& p = desk512();
  EXPECT_EQ(canonical_bytes(GroupElement(1), p).size(), 64u);
  EXPECT_EQ(canonical_bytes(GroupElement(9), toy23()), Bytes{0x09});
}

TEST(GroupMath, ExpCounterCountsModexpOnly) {
  ExpCounter c;
  pow_g(Scalar(3), toy23());
  modexp(GroupElement(8), Scalar(2), toy23());
  in_subgroup(GroupElement(8), toy23());
  scalar_mul(Scalar(3), Scalar(4), toy23());
  EXPECT_EQ(c.count(), 2u);
}
