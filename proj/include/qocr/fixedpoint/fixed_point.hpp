#pragma once
// Standard and pi/3 fixed-point amplitude amplification on statevectors.
//
// Oracle O_phi = I - (1 - e^{i phi}) |t><t| and diffuser
// D_psi = U (I - (1 - e^{i psi}) |0><0|) U^dagger. One fixed-point step with
// phi = psi = pi/3 maps a deviation eps = 1 - |<t|s>|^2 to exactly eps^3.
// Nesting the step m times (U_m = U_{m-1} R_0(psi) U_{m-1}^dagger O_phi U_{m-1})
// gives eps^(3^m) at a cost of (3^m - 1)/2 oracle calls.

#include <numbers>

#include "qocr/sim/state_vector.hpp"

namespace qocr::fixedpoint {

using sim::PixelPreparation;
using sim::StateVector;

struct FixedPointParams {
  double phi = std::numbers::pi / 3.0;
  double psi = std::numbers::pi / 3.0;
  int recursions = 1;

  /// Throws DomainError unless phi, psi in (0, 2 pi) and recursions >= 0.
  void validate() const;
};

struct SearchProblem {
  SearchProblem(PixelPreparation preparation, StateVector target);

  PixelPreparation preparation;
  StateVector target;
};

StateVector oracle_apply(const StateVector& state, const StateVector& target, double phi);

/// `prepared` is U|0...0> for the recursion level's U; the conjugated
/// operator reduces to a rank-one phase about that state.
StateVector diffuser_apply(const StateVector& state, const StateVector& prepared, double psi);

/// U_m |0...0>. U_0 is the product preparation; deeper levels apply U_{m-1}
/// and its adjoint as nested procedures on one working vector.
StateVector fixed_point_evolve(const SearchProblem& problem, const FixedPointParams& params);

double deviation(const StateVector& state, const StateVector& target);

/// Textbook Grover iterate (2|s><s| - I)(I - 2|t><t|) applied to `state`,
/// with `initial` as |s>.
StateVector grover_iterate(const StateVector& state, const StateVector& target,
                           const StateVector& initial);

/// Rotation angle of the Grover iterate for 1-qubit real states, in [0, 2 pi).
/// theta/2 = atan2(<t|s>, <s'|s>) with s' the target turned a quarter turn
/// toward |1> (for t = (a, b), s' = (-b, a)). initial == target gives pi and
/// orthogonal states give 0.
double theta_of(const StateVector& initial, const StateVector& target);

/// Oracle invocations performed by fixed_point_evolve at the given depth.
long long oracle_calls(int recursions);

}  // namespace qocr::fixedpoint
