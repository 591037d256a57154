#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qocr/error.hpp"
#include "qocr/sim/rng.hpp"
#include "qocr/sim/state_vector.hpp"

namespace qocr::sim {
namespace {

constexpr double kPi = std::numbers::pi;

StateVector random_state(int qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> amps(std::size_t{1} << qubits);
  double norm = 0.0;
  for (auto& a : amps) {
    a = {g(rng), g(rng)};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return StateVector::from_amplitudes(std::move(amps));
}

double norm_sq(const StateVector& s) {
  double n = 0.0;
  for (const auto& a : s.amplitudes()) n += std::norm(a);
  return n;
}

void expect_state_near(const StateVector& got, const std::vector<cplx>& want, double tol) {
  ASSERT_EQ(got.dimension(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(got[i].real(), want[i].real(), tol) << "amplitude " << i;
    EXPECT_NEAR(got[i].imag(), want[i].imag(), tol) << "amplitude " << i;
  }
}

TEST(PrepareProduct, WhitePixelIsZeroState) {
  expect_state_near(prepare_product(PixelPreparation({1.0})), {1.0, 0.0}, 0.0);
}

TEST(PrepareProduct, BlackPixelIsOneState) {
  expect_state_near(prepare_product(PixelPreparation({0.0})), {0.0, 1.0}, 1e-16);
}

TEST(PrepareProduct, HalfGrayPairIsUniform) {
  expect_state_near(prepare_product(PixelPreparation({0.5, 0.5})), {0.5, 0.5, 0.5, 0.5}, 1e-15);
}

TEST(PrepareProduct, AmplitudesRealNonNegativeAndMarginalsExact) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(1 + trial % 5);
    for (auto& x : v) x = u(rng);
    const auto s = prepare_product(PixelPreparation(v));
    for (const auto& a : s.amplitudes()) {
      EXPECT_GE(a.real(), -1e-15);
      EXPECT_EQ(a.imag(), 0.0);
    }
    for (std::size_t q = 0; q < v.size(); ++q) {
      EXPECT_NEAR(prob_zero(s, static_cast<int>(q)), v[q], 1e-12);
    }
  }
}

TEST(PrepareProduct, RejectsOutOfRangeAndOversizedInput) {
  EXPECT_THROW(PixelPreparation({1.5}), DomainError);
  EXPECT_THROW(PixelPreparation({-0.1}), DomainError);
  EXPECT_THROW(PixelPreparation({std::nan("")}), DomainError);
  EXPECT_THROW(PixelPreparation({}), DomainError);
  EXPECT_THROW(PixelPreparation(std::vector<double>(17, 0.5)), CapacityError);
  EXPECT_NO_THROW(PixelPreparation(std::vector<double>(16, 0.5)));
}

TEST(Rank1Phase, PiFlipsAxisComponent) {
  const auto zero = StateVector::basis(1, 0);
  expect_state_near(rank1_phase(zero, zero, kPi), {-1.0, 0.0}, 1e-15);
}

TEST(Rank1Phase, OrthogonalComponentUntouched) {
  const auto zero = StateVector::basis(1, 0);
  const auto one = StateVector::basis(1, 1);
  expect_state_near(rank1_phase(one, zero, kPi / 3), {0.0, 1.0}, 0.0);
}

TEST(Rank1Phase, EigenvectorPicksUpPhase) {
  const auto zero = StateVector::basis(1, 0);
  expect_state_near(rank1_phase(zero, zero, kPi / 3), {std::polar(1.0, kPi / 3), 0.0}, 1e-15);
}

TEST(Rank1Phase, DimensionMismatchThrows) {
  EXPECT_THROW(rank1_phase(StateVector::basis(1), StateVector::basis(2), 1.0), DomainError);
}

TEST(Rank1Phase, NormPreservedOnRandomInputs) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 6;
    const auto s = random_state(n, rng);
    const auto axis = random_state(n, rng);
    EXPECT_LT(std::fabs(norm_sq(rank1_phase(s, axis, angle(rng))) - 1.0), 1e-10);
  }
}

TEST(Rank1Phase, PiReflectionIsAnInvolution) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    const auto s = random_state(n, rng);
    const auto axis = random_state(n, rng);
    const auto twice = rank1_phase(rank1_phase(s, axis, kPi), axis, kPi);
    for (std::size_t i = 0; i < s.dimension(); ++i) EXPECT_LT(std::abs(twice[i] - s[i]), 1e-10);
  }
}

TEST(Fidelity, Examples) {
  const auto zero = StateVector::basis(1, 0);
  const auto one = StateVector::basis(1, 1);
  EXPECT_DOUBLE_EQ(fidelity(zero, zero), 1.0);
  EXPECT_DOUBLE_EQ(fidelity(zero, one), 0.0);
  EXPECT_NEAR(fidelity(zero, prepare_product(PixelPreparation({0.5}))), 0.5, 1e-15);
  EXPECT_THROW(fidelity(zero, StateVector::basis(2)), DomainError);
}

TEST(Fidelity, SymmetricAndPhaseInvariant) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_state(3, rng);
    const auto b = random_state(3, rng);
    EXPECT_NEAR(fidelity(a, b), fidelity(b, a), 1e-14);
    EXPECT_NEAR(fidelity(a, b), fidelity(a * std::polar(1.0, 0.7), b), 1e-14);
  }
}

TEST(ProbZero, Examples) {
  EXPECT_NEAR(prob_zero(prepare_product(PixelPreparation({0.3})), 0), 0.3, 1e-15);
  EXPECT_NEAR(prob_zero(prepare_product(PixelPreparation({1.0, 0.0})), 1), 0.0, 1e-15);
  EXPECT_NEAR(prob_zero(prepare_product(PixelPreparation({0.25, 0.75})), 0), 0.25, 1e-15);
  EXPECT_THROW(prob_zero(StateVector::basis(2), 2), DomainError);
  EXPECT_THROW(prob_zero(StateVector::basis(2), -1), DomainError);
}

TEST(ProbZero, EncodingRoundTripOnGrid) {
  for (int k = 0; k <= 100; ++k) {
    const double v = k / 100.0;
    EXPECT_NEAR(prob_zero(prepare_product(PixelPreparation({v})), 0), v, 1e-12);
  }
}

TEST(ZeroMarginals, MatchesProbZeroPerQubit) {
  std::mt19937_64 rng(14);
  const auto s = random_state(5, rng);
  const auto m = zero_marginals(s);
  ASSERT_EQ(m.size(), 5U);
  for (int q = 0; q < 5; ++q) EXPECT_NEAR(m[static_cast<std::size_t>(q)], prob_zero(s, q), 1e-14);
}

TEST(StateVectorConstruction, ValidatesShapeAndNorm) {
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), DomainError);
  EXPECT_THROW(StateVector::from_amplitudes({1.0}), DomainError);
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), DomainError);
  EXPECT_THROW(StateVector::basis(17), CapacityError);
  EXPECT_THROW(StateVector::basis(0), DomainError);
  EXPECT_EQ(StateVector::basis(16).dimension(), 65536U);
}

TEST(SampleMarginals, DeterministicStatesGiveExactFrequencies) {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xdeadbeefULL}) {
    EXPECT_EQ(sample_marginals(StateVector::basis(1, 0), 256, seed).zero_frequencies[0], 1.0);
    EXPECT_EQ(sample_marginals(StateVector::basis(1, 1), 256, seed).zero_frequencies[0], 0.0);
  }
}

TEST(SampleMarginals, HalfStateWithinFourSigma) {
  const auto r = sample_marginals(prepare_product(PixelPreparation({0.5})), 256, 42);
  EXPECT_EQ(r.shots, 256);
  EXPECT_GE(r.zero_frequencies[0], 0.5 - 4 * 0.0313);
  EXPECT_LE(r.zero_frequencies[0], 0.5 + 4 * 0.0313);
}

// Brute-force check of the binomial model behind the 4-sigma bound: over many
// seeds, the frequencies have mean 0.5 and roughly 4.55% fall beyond 2 sigma.
TEST(SampleMarginals, FrequencyDistributionAcrossSeedsIsBinomial) {
  const auto half = prepare_product(PixelPreparation({0.5}));
  const int seeds = 4000;
  const double sigma = std::sqrt(0.25 / 256);
  double sum = 0.0;
  int beyond_two_sigma = 0;
  int beyond_four_sigma = 0;
  for (int s = 0; s < seeds; ++s) {
    const double f = sample_marginals(half, 256, derive_seed(99, s)).zero_frequencies[0];
    sum += f;
    if (std::fabs(f - 0.5) > 2 * sigma) ++beyond_two_sigma;
    if (std::fabs(f - 0.5) > 4 * sigma) ++beyond_four_sigma;
    // Exactly k / shots.
    EXPECT_DOUBLE_EQ(f * 256, std::round(f * 256));
  }
  EXPECT_NEAR(sum / seeds, 0.5, 4 * sigma / std::sqrt(seeds));
  const double tail = static_cast<double>(beyond_two_sigma) / seeds;
  EXPECT_GT(tail, 0.025);
  EXPECT_LT(tail, 0.07);
  EXPECT_LE(beyond_four_sigma, 2);
}

TEST(SampleMarginals, ConvergesToExactMarginals) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int shots = 1 << 16;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> v(3);
    for (auto& x : v) x = u(rng);
    const auto s = prepare_product(PixelPreparation(v));
    const auto r = sample_marginals(s, shots, static_cast<std::uint64_t>(trial));
    for (int q = 0; q < 3; ++q) {
      EXPECT_LT(std::fabs(r.zero_frequencies[static_cast<std::size_t>(q)] - prob_zero(s, q)),
                5.0 / std::sqrt(shots));
    }
  }
}

TEST(SampleMarginals, SameInputsSameOutput) {
  std::mt19937_64 rng(16);
  const auto s = random_state(4, rng);
  const auto a = sample_marginals(s, 256, 5);
  const auto b = sample_marginals(s, 256, 5);
  EXPECT_EQ(a.zero_frequencies, b.zero_frequencies);
  const auto c = sample_marginals(s, 256, 6);
  EXPECT_NE(a.zero_frequencies, c.zero_frequencies);
}

TEST(SampleMarginals, ZeroShotsIsAnError) {
  EXPECT_THROW(sample_marginals(StateVector::basis(1), 0, 1), DomainError);
}

TEST(SplitMix64, FrozenReferenceSequence) {
  // SplitMix64 outputs for seed 1234567 from an independent reference implementation.
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng(), 6457827717110365317ULL);
  EXPECT_EQ(rng(), 3203168211198807973ULL);
  EXPECT_EQ(rng(), 9817491932198370423ULL);
}

TEST(DeriveSeed, DeterministicAndDistinct) {
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
  std::vector<std::uint64_t> seeds;
  seeds.reserve(1'000'000);
  for (std::uint64_t i = 0; i < 1'000'000; ++i) seeds.push_back(derive_seed(1, i));
  std::sort(seeds.begin(), seeds.end());
  EXPECT_EQ(std::adjacent_find(seeds.begin(), seeds.end()), seeds.end());
}

TEST(DeriveSeed, ChangingSeedChangesEveryStream) {
  for (std::uint64_t i = 0; i < 10'000; ++i) EXPECT_NE(derive_seed(1, i), derive_seed(2, i));
}

}  // namespace
}  // namespace qocr::sim
