#pragma once

#include <vector>

#include "qmana/linalg.hpp"
#include "qmana/prime_dim.hpp"

namespace qmana {

enum class Side { a, b };

// Positive unit-trace matrix over a tensor product of odd-prime subsystems.
// Subsystem 0 indexes the slowest-varying part of the computational index.
class DensityState {
 public:
  DensityState(std::vector<int> dims, ComplexMatrix matrix);

  const std::vector<int>& dims() const noexcept { return dims_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Eigen::Index size() const noexcept { return matrix_.rows(); }
  std::size_t subsystems() const noexcept { return dims_.size(); }
  bool bipartite() const noexcept { return dims_.size() == 2; }

  double purity() const;

 private:
  std::vector<int> dims_;
  ComplexMatrix matrix_;
};

class PureVector {
 public:
  explicit PureVector(ComplexVector amplitudes);

  Eigen::Index dim() const noexcept { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }

  // |psi><psi| over the given subsystem split (defaults to a single system).
  DensityState projector(std::vector<int> dims = {}) const;

 private:
  ComplexVector amplitudes_;
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-8;

}  // namespace qmana
