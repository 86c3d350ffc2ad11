#pragma once

#include <span>
#include <vector>

#include "qmana/linalg.hpp"
#include "qmana/prime_dim.hpp"
#include "qmana/state.hpp"

namespace qmana {

// D_{k,l} = tau^{kl} X^k Z^l, built entrywise: column j maps to row j+k with phase tau^{kl+2lj}.
template <typename Scalar = double>
CMatrix<Scalar> weyl(PrimeDim dim, PhasePoint pt) {
  require_in_range(dim, pt);
  const int d = dim.value();
  CMatrix<Scalar> m = CMatrix<Scalar>::Zero(d, d);
  for (int j = 0; j < d; ++j)
    m((j + pt.k) % d, j) = tau_power<Scalar>(dim, static_cast<long long>(pt.k) * pt.l + 2LL * pt.l * j);
  return m;
}

// A_{k,l} = D_{k,l} A_{0,0} D_{k,l}^dagger with A_{0,0} = (1/d) sum D_{k,l}.
template <typename Scalar = double>
CMatrix<Scalar> phase_point_operator(PrimeDim dim, PhasePoint pt) {
  require_in_range(dim, pt);
  const int d = dim.value();
  CMatrix<Scalar> a00 = CMatrix<Scalar>::Zero(d, d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) a00 += weyl<Scalar>(dim, {k, l});
  a00 /= static_cast<Scalar>(d);
  const CMatrix<Scalar> disp = weyl<Scalar>(dim, pt);
  return disp * a00 * disp.adjoint();
}

// Monomial form of an operator with one nonzero entry per row.
struct Monomial {
  std::vector<int> column;
  std::vector<cplx> value;
};

// Per-dimension operator set, indexed by k*d + l.
struct OperatorSet {
  std::vector<ComplexMatrix> weyl;
  std::vector<ComplexMatrix> phase_point;
  std::vector<Monomial> phase_point_monomial;
  // Row q, column x*d + y holds B_q(y, x), so that applying it to the
  // pair index of rho yields tr(rho B_q).
  ComplexMatrix weyl_transform;
  ComplexMatrix phase_transform;
  // Row x*d + y, column q holds A_q(x, y).
  ComplexMatrix phase_synthesis;
};

// Built once per d; safe for concurrent first use.
const OperatorSet& operators(PrimeDim dim);

// Real quasi-probability table, one phase point per subsystem, flattened
// row-major over subsystems with point index k*d + l.
class WignerTable {
 public:
  WignerTable(std::vector<int> dims, Eigen::VectorXd values);

  const std::vector<int>& dims() const noexcept { return dims_; }
  const Eigen::VectorXd& values() const noexcept { return values_; }

  double at(PhasePoint pt) const;
  double at(std::span<const PhasePoint> pts) const;

  // d x d grid (rows k, columns l) of a single-subsystem table.
  Eigen::MatrixXd grid() const;

  double abs_sum() const { return values_.cwiseAbs().sum(); }

  // Table of the displaced state: W'(p) = W(p - shift) per subsystem.
  WignerTable displaced(std::span<const PhasePoint> shift) const;

 private:
  std::size_t flat_index(std::span<const PhasePoint> pts) const;

  std::vector<int> dims_;
  Eigen::VectorXd values_;
};

inline constexpr double kImaginaryResidueLimit = 1e-8;

WignerTable wigner(const DensityState& rho);
DensityState reconstruct(const WignerTable& table);

// Wigner values of a pure single-system vector, using the monomial operators.
Eigen::VectorXd pure_wigner(PrimeDim dim, const ComplexVector& psi);

}  // namespace qmana
