#include "qocr/sim/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qocr/error.hpp"
#include "qocr/sim/rng.hpp"
#include "qocr/simd/kernels.hpp"

namespace qocr::sim {
namespace {

void check_qubit_count(int n) {
  if (n < 1) throw DomainError("qubit count must be at least 1, got " + std::to_string(n));
  if (n > kMaxQubits) {
    throw CapacityError("qubit count " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kMaxQubits));
  }
}

}  // namespace

StateVector StateVector::basis(int qubit_count, std::uint64_t index) {
  check_qubit_count(qubit_count);
  const std::size_t dim = std::size_t{1} << qubit_count;
  if (index >= dim) throw DomainError("basis index out of range");
  std::vector<cplx> amps(dim, cplx{0.0, 0.0});
  amps[index] = 1.0;
  return StateVector(qubit_count, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw DomainError("amplitude count must be a power of two >= 2, got " + std::to_string(dim));
  }
  const int n = std::countr_zero(dim);
  check_qubit_count(n);
  const double norm = simd::active().norm_sq(amplitudes.data(), dim);
  if (std::fabs(norm - 1.0) > kNormTolerance) {
    throw DomainError("amplitudes are not normalized (norm^2 = " + std::to_string(norm) + ")");
  }
  return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::operator*(cplx factor) const {
  if (std::fabs(std::abs(factor) - 1.0) > kNormTolerance) {
    throw DomainError("state scaling factor must have unit modulus");
  }
  std::vector<cplx> out(amps_);
  for (auto& a : out) a *= factor;
  return StateVector(qubits_, std::move(out));
}

PixelPreparation::PixelPreparation(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("pixel preparation needs at least one value");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError("pixel value " + std::to_string(v) + " at position " + std::to_string(i) +
                        " is outside [0,1]");
    }
  }
  check_qubit_count(qubit_count());
}

void PixelPreparation::apply(std::span<cplx> amps, bool adjoint) const {
  const auto& k = simd::active();
  for (std::size_t q = 0; q < values_.size(); ++q) {
    const double c = std::sqrt(values_[q]);
    const double s = std::sqrt(1.0 - values_[q]);
    k.rotate(amps.data(), amps.size(), static_cast<unsigned>(q), c, adjoint ? -s : s);
  }
}

StateVector prepare_product(const PixelPreparation& prep) {
  StateVector state = StateVector::basis(prep.qubit_count(), 0);
  prep.apply(state.mutable_amplitudes(), false);
  return state;
}

namespace detail {

void check_same_dimension(const StateVector& a, const StateVector& b, const char* op) {
  if (a.qubit_count() != b.qubit_count()) {
    throw DomainError(std::string(op) + ": qubit count mismatch (" +
                      std::to_string(a.qubit_count()) + " vs " + std::to_string(b.qubit_count()) +
                      ")");
  }
}

void rank1_phase_inplace(std::span<cplx> x, std::span<const cplx> axis, double angle) {
  const auto& k = simd::active();
  const cplx overlap = k.inner(axis.data(), x.data(), x.size());
  const cplx factor = -(1.0 - std::polar(1.0, angle)) * overlap;
  k.axpy(factor, axis.data(), x.data(), x.size());
}

}  // namespace detail

StateVector rank1_phase(const StateVector& state, const StateVector& axis, double angle) {
  detail::check_same_dimension(state, axis, "rank1_phase");
  StateVector out = state;
  detail::rank1_phase_inplace(out.mutable_amplitudes(), axis.amplitudes(), angle);
  return out;
}

double fidelity(const StateVector& a, const StateVector& b) {
  detail::check_same_dimension(a, b, "fidelity");
  const cplx overlap = simd::active().inner(a.amplitudes().data(), b.amplitudes().data(),
                                            a.dimension());
  return std::clamp(std::norm(overlap), 0.0, 1.0);
}

double prob_zero(const StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.qubit_count()) {
    throw DomainError("qubit index " + std::to_string(qubit) + " out of range for " +
                      std::to_string(state.qubit_count()) + "-qubit state");
  }
  const std::size_t mask = std::size_t{1} << qubit;
  double p = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if ((i & mask) == 0) p += std::norm(state[i]);
  }
  return std::clamp(p, 0.0, 1.0);
}

std::vector<double> zero_marginals(const StateVector& state) {
  const std::size_t dim = state.dimension();
  std::vector<double> probs(dim);
  simd::active().abs_sq(state.amplitudes().data(), probs.data(), dim);
  std::vector<double> out(static_cast<std::size_t>(state.qubit_count()), 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t q = 0; q < out.size(); ++q) {
      if (((i >> q) & 1U) == 0) out[q] += probs[i];
    }
  }
  for (auto& p : out) p = std::clamp(p, 0.0, 1.0);
  return out;
}

ShotReadout sample_marginals(const StateVector& state, int shots, std::uint64_t seed) {
  if (shots < 1) throw DomainError("shot count must be at least 1, got " + std::to_string(shots));
  const std::size_t dim = state.dimension();
  std::vector<double> cdf(dim);
  simd::active().abs_sq(state.amplitudes().data(), cdf.data(), dim);
  for (std::size_t i = 1; i < dim; ++i) cdf[i] += cdf[i - 1];
  const double total = cdf.back();

  const auto n = static_cast<std::size_t>(state.qubit_count());
  std::vector<int> zero_counts(n, 0);
  SplitMix64 rng(seed);
  for (int shot = 0; shot < shots; ++shot) {
    const double u = rng.next_unit() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto outcome = static_cast<std::size_t>(
        std::min<std::ptrdiff_t>(it - cdf.begin(), static_cast<std::ptrdiff_t>(dim - 1)));
    for (std::size_t q = 0; q < n; ++q) {
      if (((outcome >> q) & 1U) == 0) ++zero_counts[q];
    }
  }

  ShotReadout readout;
  readout.shots = shots;
  readout.zero_frequencies.reserve(n);
  for (int c : zero_counts) readout.zero_frequencies.push_back(static_cast<double>(c) / shots);
  return readout;
}

}  // namespace qocr::sim
