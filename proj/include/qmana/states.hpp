#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "qmana/state.hpp"

namespace qmana {

// Named states: strange, norrell, t, h, phi_lambda [lambda], psi_theta [theta]
// (qutrit only), max_coherent [theta_1..theta_{d-1}], basis [j].
PureVector named_state(std::string_view name, std::span<const double> params = {}, int dim = 3);

// p |psi><psi| + (1 - p) 1/d
DensityState noisy_mix(const PureVector& psi, double p);

DensityState maximally_mixed(std::vector<int> dims);
DensityState basis_projector(PrimeDim dim, int j);

DensityState tensor(const DensityState& a, const DensityState& b);
DensityState partial_trace(const DensityState& rho, Side keep);

// U rho U^dagger; dims are kept.
DensityState apply_unitary(const ComplexMatrix& u, const DensityState& rho);

// The d(d+1) pure stabilizer states: computational basis, then the
// quadratic-phase vectors omega^{a x^2 + b x}/sqrt(d) ordered by (a, b).
std::vector<PureVector> enumerate_stabilizer_pure(PrimeDim dim);

}  // namespace qmana
