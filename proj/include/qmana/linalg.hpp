#pragma once

#include <complex>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

namespace qmana {

template <typename Scalar>
using CMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using CVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using cplx = std::complex<double>;
using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;

// tr(A B) without forming the product.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar trace_product(const Eigen::MatrixBase<DerivedA>& a,
                                        const Eigen::MatrixBase<DerivedB>& b) {
  return a.cwiseProduct(b.transpose()).sum();
}

template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::kroneckerProduct(a.derived(), b.derived());
  return out;
}

template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real hermitian_defect(
    const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real unitarity_defect(
    const Eigen::MatrixBase<Derived>& m) {
  using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  return (m.adjoint() * m - Plain::Identity(m.cols(), m.cols())).cwiseAbs().maxCoeff();
}

template <typename DerivedA, typename DerivedB>
typename Eigen::NumTraits<typename DerivedA::Scalar>::Real max_abs_diff(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// U rho U^dagger
template <typename DerivedU, typename DerivedR>
auto conjugate(const Eigen::MatrixBase<DerivedU>& u, const Eigen::MatrixBase<DerivedR>& rho) {
  using Scalar = typename DerivedU::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out = u * rho * u.adjoint();
  return out;
}

}  // namespace qmana
