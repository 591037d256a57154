#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qocr::sim {

using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 16;
inline constexpr double kNormTolerance = 1e-10;

/// Normalized amplitude vector over `qubit_count` qubits. Basis index bit q
/// is the value of qubit q (qubit 0 is the least significant bit).
class StateVector {
 public:
  /// Computational basis state |index>.
  static StateVector basis(int qubit_count, std::uint64_t index = 0);

  /// Validates length 2^n (1 <= n <= 16) and unit norm within kNormTolerance.
  static StateVector from_amplitudes(std::vector<cplx> amplitudes);

  int qubit_count() const noexcept { return qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const cplx> amplitudes() const noexcept { return amps_; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }

  StateVector operator*(cplx factor) const;

  // Escape hatch for kernels that evolve a state in place. Callers must
  // keep the vector unit-norm.
  std::vector<cplx>& mutable_amplitudes() noexcept { return amps_; }

 private:
  StateVector(int qubits, std::vector<cplx> amps) : qubits_(qubits), amps_(std::move(amps)) {}

  int qubits_;
  std::vector<cplx> amps_;
};

/// Per-qubit pixel values v_i in [0,1]; qubit i reads |0> with probability v_i.
class PixelPreparation {
 public:
  explicit PixelPreparation(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  int qubit_count() const noexcept { return static_cast<int>(values_.size()); }

  /// Applies U (or U^dagger) to `amps`: a product of real rotations mapping
  /// |0> to sqrt(v)|0> + sqrt(1-v)|1> on each qubit.
  void apply(std::span<cplx> amps, bool adjoint) const;

 private:
  std::vector<double> values_;
};

struct ShotReadout {
  int shots = 0;
  std::vector<double> zero_frequencies;
};

StateVector prepare_product(const PixelPreparation& prep);

/// |x> - (1 - e^{i angle}) <axis|x> |axis>
StateVector rank1_phase(const StateVector& state, const StateVector& axis, double angle);

/// |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);

double prob_zero(const StateVector& state, int qubit);

/// P(qubit q reads |0>) for every qubit, from one pass over the amplitudes.
std::vector<double> zero_marginals(const StateVector& state);

/// Draws `shots` full-register outcomes from |amplitude|^2 with a SplitMix64
/// stream seeded by `seed`, then marginalizes per qubit.
ShotReadout sample_marginals(const StateVector& state, int shots, std::uint64_t seed);

namespace detail {
// In-place form of rank1_phase over raw spans (equal length, axis unit-norm).
void rank1_phase_inplace(std::span<cplx> x, std::span<const cplx> axis, double angle);
void check_same_dimension(const StateVector& a, const StateVector& b, const char* op);
}  // namespace detail

}  // namespace qocr::sim
