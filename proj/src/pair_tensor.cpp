#include "qmana/pair_tensor.hpp"

#include "qmana/errors.hpp"
#include "qmana/phasespace.hpp"

namespace qmana {

namespace {

struct PairOffsets {
  std::vector<Eigen::Index> ket;
  std::vector<Eigen::Index> bra;
};

// Offset of ket index x and bra index y inside the pair tensor.
PairOffsets pair_offsets(std::span<const int> dims) {
  Eigen::Index total = 1;
  for (int d : dims) total *= d;
  PairOffsets off{std::vector<Eigen::Index>(total), std::vector<Eigen::Index>(total)};
  for (Eigen::Index x = 0; x < total; ++x) {
    Eigen::Index rest = x, stride = 1, ket = 0, bra = 0;
    for (std::size_t i = dims.size(); i-- > 0;) {
      const int d = dims[i];
      const Eigen::Index digit = rest % d;
      rest /= d;
      ket += digit * d * stride;
      bra += digit * stride;
      stride *= static_cast<Eigen::Index>(d) * d;
    }
    off.ket[x] = ket;
    off.bra[x] = bra;
  }
  return off;
}

}  // namespace

Eigen::VectorXcd to_pair_tensor(const ComplexMatrix& rho, std::span<const int> dims) {
  const auto off = pair_offsets(dims);
  const Eigen::Index n = static_cast<Eigen::Index>(off.ket.size());
  if (rho.rows() != n || rho.cols() != n)
    throw Error(ErrorKind::InvalidDimension, "matrix size does not match subsystem dimensions");
  Eigen::VectorXcd t(n * n);
  for (Eigen::Index y = 0; y < n; ++y)
    for (Eigen::Index x = 0; x < n; ++x) t[off.ket[x] + off.bra[y]] = rho(x, y);
  return t;
}

ComplexMatrix from_pair_tensor(const Eigen::VectorXcd& t, std::span<const int> dims) {
  const auto off = pair_offsets(dims);
  const Eigen::Index n = static_cast<Eigen::Index>(off.ket.size());
  if (t.size() != n * n) throw Error(ErrorKind::InvalidDimension, "pair tensor size mismatch");
  ComplexMatrix rho(n, n);
  for (Eigen::Index y = 0; y < n; ++y)
    for (Eigen::Index x = 0; x < n; ++x) rho(x, y) = t[off.ket[x] + off.bra[y]];
  return rho;
}

Eigen::VectorXcd apply_modes(const Eigen::VectorXcd& t, std::span<const int> extents,
                             std::span<const ComplexMatrix* const> mats) {
  using RowMajor = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  if (extents.size() != mats.size()) throw Error(ErrorKind::BadParams, "one matrix per mode required");
  std::vector<Eigen::Index> shape(extents.begin(), extents.end());
  Eigen::Index total = 1;
  for (auto e : shape) total *= e;
  if (t.size() != total) throw Error(ErrorKind::InvalidDimension, "tensor size does not match extents");

  Eigen::VectorXcd cur = t;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const ComplexMatrix& m = *mats[i];
    if (m.cols() != shape[i]) throw Error(ErrorKind::InvalidDimension, "mode matrix has wrong column count");
    Eigen::Index outer = 1, inner = 1;
    for (std::size_t j = 0; j < i; ++j) outer *= shape[j];
    for (std::size_t j = i + 1; j < shape.size(); ++j) inner *= shape[j];
    Eigen::VectorXcd next(outer * m.rows() * inner);
    for (Eigen::Index o = 0; o < outer; ++o) {
      Eigen::Map<const RowMajor> in(cur.data() + o * shape[i] * inner, shape[i], inner);
      Eigen::Map<RowMajor> out(next.data() + o * m.rows() * inner, m.rows(), inner);
      out.noalias() = m * in;
    }
    shape[i] = m.rows();
    cur.swap(next);
  }
  return cur;
}

ComplexMatrix pair_action(const ComplexMatrix& u) { return kron(u, u.conjugate()); }

Eigen::VectorXcd basis_traces(const ComplexMatrix& rho, std::span<const int> dims, LocalBasis basis) {
  std::vector<const ComplexMatrix*> mats;
  std::vector<int> extents;
  for (int d : dims) {
    const auto& ops = operators(PrimeDim(d));
    mats.push_back(basis == LocalBasis::weyl ? &ops.weyl_transform : &ops.phase_transform);
    extents.push_back(d * d);
  }
  return apply_modes(to_pair_tensor(rho, dims), extents, mats);
}

}  // namespace qmana
