#include "qmana/state.hpp"

#include <string>

namespace qmana {

DensityState::DensityState(std::vector<int> dims, ComplexMatrix matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
  if (dims_.empty()) throw Error(ErrorKind::InvalidDimension, "state needs at least one subsystem");
  Eigen::Index total = 1;
  for (int d : dims_) {
    PrimeDim check(d);
    total *= d;
  }
  if (matrix_.rows() != total || matrix_.cols() != total)
    throw Error(ErrorKind::InvalidDimension, "matrix is " + std::to_string(matrix_.rows()) + "x" +
                                                 std::to_string(matrix_.cols()) + ", subsystems need " +
                                                 std::to_string(total));
  if (!matrix_.allFinite()) throw Error(ErrorKind::InvalidState, "matrix has non-finite entries");
  if (hermitian_defect(matrix_) > kHermitianTolerance)
    throw Error(ErrorKind::InvalidState, "matrix is not Hermitian");
  if (std::abs(matrix_.trace() - cplx(1.0)) > kTraceTolerance)
    throw Error(ErrorKind::InvalidState, "trace is not 1");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kEigenvalueFloor)
    throw Error(ErrorKind::NegativeEigenvalue,
                "eigenvalue " + std::to_string(es.eigenvalues().minCoeff()) + " below floor");
}

double DensityState::purity() const { return trace_product(matrix_, matrix_).real(); }

PureVector::PureVector(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw Error(ErrorKind::InvalidDimension, "empty state vector");
  if (!amplitudes_.allFinite()) throw Error(ErrorKind::InvalidState, "amplitudes are not finite");
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-10) throw Error(ErrorKind::InvalidState, "vector is not normalized");
}

DensityState PureVector::projector(std::vector<int> dims) const {
  if (dims.empty()) dims = {static_cast<int>(amplitudes_.size())};
  return DensityState(std::move(dims), amplitudes_ * amplitudes_.adjoint());
}

}  // namespace qmana
