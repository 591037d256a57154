#include "qocr/fixedpoint/fixed_point.hpp"

#include <cmath>
#include <string>

#include "qocr/error.hpp"

namespace qocr::fixedpoint {

using sim::cplx;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kRealTolerance = 1e-12;

// Applies U_level (or its adjoint) to `x` in place.
class RecursiveUnitary {
 public:
  RecursiveUnitary(const SearchProblem& problem, const FixedPointParams& params)
      : problem_(problem), params_(params) {}

  void apply(int level, std::span<cplx> x, bool adjoint) const {
    if (level == 0) {
      problem_.preparation.apply(x, adjoint);
      return;
    }
    const int inner = level - 1;
    if (!adjoint) {
      // U_{k-1} R_0(psi) U_{k-1}^dagger O_phi U_{k-1}, rightmost first.
      apply(inner, x, false);
      oracle(x, params_.phi);
      apply(inner, x, true);
      phase_zero(x, params_.psi);
      apply(inner, x, false);
    } else {
      // U_{k-1}^dagger O_{-phi} U_{k-1} R_0(-psi) U_{k-1}^dagger
      apply(inner, x, true);
      phase_zero(x, -params_.psi);
      apply(inner, x, false);
      oracle(x, -params_.phi);
      apply(inner, x, true);
    }
  }

 private:
  void oracle(std::span<cplx> x, double phi) const {
    sim::detail::rank1_phase_inplace(x, problem_.target.amplitudes(), phi);
  }
  // I - (1 - e^{i psi}) |0><0| only touches the all-zero amplitude.
  static void phase_zero(std::span<cplx> x, double psi) { x[0] *= std::polar(1.0, psi); }

  const SearchProblem& problem_;
  const FixedPointParams& params_;
};

}  // namespace

void FixedPointParams::validate() const {
  if (!(phi > 0.0 && phi < kTwoPi)) throw DomainError("phi must lie in (0, 2pi)");
  if (!(psi > 0.0 && psi < kTwoPi)) throw DomainError("psi must lie in (0, 2pi)");
  if (recursions < 0) throw DomainError("recursion depth must be non-negative");
}

SearchProblem::SearchProblem(PixelPreparation prep, StateVector tgt)
    : preparation(std::move(prep)), target(std::move(tgt)) {
  if (target.qubit_count() != preparation.qubit_count()) {
    throw DomainError("target has " + std::to_string(target.qubit_count()) +
                      " qubits but the preparation has " +
                      std::to_string(preparation.qubit_count()));
  }
}

StateVector oracle_apply(const StateVector& state, const StateVector& target, double phi) {
  sim::detail::check_same_dimension(state, target, "oracle_apply");
  return sim::rank1_phase(state, target, phi);
}

StateVector diffuser_apply(const StateVector& state, const StateVector& prepared, double psi) {
  sim::detail::check_same_dimension(state, prepared, "diffuser_apply");
  return sim::rank1_phase(state, prepared, psi);
}

StateVector fixed_point_evolve(const SearchProblem& problem, const FixedPointParams& params) {
  params.validate();
  StateVector state = StateVector::basis(problem.preparation.qubit_count(), 0);
  RecursiveUnitary(problem, params).apply(params.recursions, state.mutable_amplitudes(), false);
  return state;
}

double deviation(const StateVector& state, const StateVector& target) {
  sim::detail::check_same_dimension(state, target, "deviation");
  return 1.0 - sim::fidelity(state, target);
}

StateVector grover_iterate(const StateVector& state, const StateVector& target,
                           const StateVector& initial) {
  sim::detail::check_same_dimension(state, target, "grover_iterate");
  sim::detail::check_same_dimension(state, initial, "grover_iterate");
  // (I - 2|s><s|) differs from the diffuser 2|s><s| - I by a sign.
  StateVector out = sim::rank1_phase(state, target, std::numbers::pi);
  sim::detail::rank1_phase_inplace(out.mutable_amplitudes(), initial.amplitudes(),
                                   std::numbers::pi);
  for (auto& a : out.mutable_amplitudes()) a = -a;
  return out;
}

double theta_of(const StateVector& initial, const StateVector& target) {
  sim::detail::check_same_dimension(initial, target, "theta_of");
  if (initial.qubit_count() != 1) throw DomainError("theta_of is defined for 1-qubit states");
  for (const StateVector* s : {&initial, &target}) {
    for (const cplx& a : s->amplitudes()) {
      if (std::fabs(a.imag()) > kRealTolerance) {
        throw DomainError("theta_of requires real amplitudes");
      }
    }
  }
  const double ta = target[0].real();
  const double tb = target[1].real();
  const double sa = initial[0].real();
  const double sb = initial[1].real();
  const double along_target = ta * sa + tb * sb;
  const double along_orthogonal = -tb * sa + ta * sb;
  double theta = 2.0 * std::atan2(along_target, along_orthogonal);
  if (std::fabs(along_target) < kRealTolerance) return 0.0;
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
  return theta;
}

long long oracle_calls(int recursions) {
  if (recursions < 0) throw DomainError("recursion depth must be non-negative");
  long long calls = 0;
  for (int k = 0; k < recursions; ++k) calls = 3 * calls + 1;
  return calls;
}

}  // namespace qocr::fixedpoint
