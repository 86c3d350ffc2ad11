#pragma once

#include <span>
#include <vector>

#include "qmana/linalg.hpp"

namespace qmana {

// Row-major tensor with one mode per subsystem; mode i has extent d_i^2 and
// pairs the ket and bra index of subsystem i as x*d_i + y.
Eigen::VectorXcd to_pair_tensor(const ComplexMatrix& rho, std::span<const int> dims);
ComplexMatrix from_pair_tensor(const Eigen::VectorXcd& t, std::span<const int> dims);

// Mode products: mode i of extent extents[i] is mapped by mats[i]
// (rows x extents[i]). Extents of the result are the row counts.
Eigen::VectorXcd apply_modes(const Eigen::VectorXcd& t, std::span<const int> extents,
                             std::span<const ComplexMatrix* const> mats);

// Per-mode action of rho -> U rho U^dagger in the pair layout: U (x) conj(U).
ComplexMatrix pair_action(const ComplexMatrix& u);

// tr(rho B_{q_1} (x) ... (x) B_{q_n}) for every multi-index, flattened as in the pair tensor.
enum class LocalBasis { weyl, phase_point };
Eigen::VectorXcd basis_traces(const ComplexMatrix& rho, std::span<const int> dims, LocalBasis basis);

}  // namespace qmana
