#include "qmana/random.hpp"

namespace qmana {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) g(r, c) = cplx(normal(rng), normal(rng));
  return g;
}

Eigen::Index total(const std::vector<int>& dims) {
  Eigen::Index n = 1;
  for (int d : dims) n *= d;
  return n;
}

}  // namespace

ComplexVector random_unit_vector(Eigen::Index dim, Rng& rng) {
  ComplexVector v = ginibre(dim, 1, rng).col(0);
  return v / v.norm();
}

ComplexMatrix random_unitary(Eigen::Index dim, Rng& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(dim, dim, rng));
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

DensityState random_density(const std::vector<int>& dims, Rng& rng) {
  const Eigen::Index n = total(dims);
  std::uniform_int_distribution<Eigen::Index> rank_dist(1, n);
  const ComplexMatrix g = ginibre(n, rank_dist(rng), rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return DensityState(dims, std::move(rho));
}

DensityState random_pure_state(const std::vector<int>& dims, Rng& rng) {
  return PureVector(random_unit_vector(total(dims), rng)).projector(dims);
}

}  // namespace qmana
