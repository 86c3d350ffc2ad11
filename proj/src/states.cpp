#include "qmana/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qmana {

namespace {

using std::numbers::pi;

void expect_count(std::string_view name, std::span<const double> params, std::size_t n) {
  if (params.size() != n)
    throw Error(ErrorKind::BadParamCount, std::string(name) + " takes " + std::to_string(n) + " parameter(s), got " +
                                              std::to_string(params.size()));
}

void expect_qutrit(std::string_view name, int dim) {
  if (dim != 3) throw Error(ErrorKind::InvalidDimension, std::string(name) + " is a qutrit state");
}

ComplexVector vec(std::initializer_list<cplx> v) {
  ComplexVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (auto x : v) out[i++] = x;
  return out;
}

// Range check with room for the rounding of endpoints such as 1/sqrt(2).
void expect_range(std::string_view what, double v, double lo, double hi) {
  if (!std::isfinite(v) || v < lo - 1e-12 || v > hi + 1e-12)
    throw Error(ErrorKind::ParamOutOfRange, std::string(what) + " = " + std::to_string(v) + " outside [" +
                                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace

PureVector named_state(std::string_view name, std::span<const double> params, int dim) {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  if (name == "strange") {
    expect_count(name, params, 0);
    expect_qutrit(name, dim);
    return PureVector(vec({0.0, 1.0 / s2, -1.0 / s2}));
  }
  if (name == "norrell") {
    expect_count(name, params, 0);
    expect_qutrit(name, dim);
    return PureVector(vec({-1.0 / s6, 2.0 / s6, -1.0 / s6}));
  }
  if (name == "t") {
    expect_count(name, params, 0);
    expect_qutrit(name, dim);
    return PureVector(vec({std::polar(1.0 / s3, 2 * pi / 9), 1.0 / s3, std::polar(1.0 / s3, -2 * pi / 9)}));
  }
  if (name == "h") {
    expect_count(name, params, 0);
    expect_qutrit(name, dim);
    const double n = std::sqrt(2 * (3 + s3));
    return PureVector(vec({(1 + s3) / n, 1.0 / n, std::polar(1.0 / n, -2 * pi / 9)}));
  }
  if (name == "phi_lambda") {
    expect_count(name, params, 1);
    expect_qutrit(name, dim);
    const double lam = params[0];
    expect_range("lambda", lam, 0.0, 1.0 / s2);
    const double rest = std::sqrt(std::max(0.0, 1 - 2 * lam * lam));
    ComplexVector v = vec({lam, lam, rest});
    return PureVector(v / v.norm());
  }
  if (name == "psi_theta") {
    expect_count(name, params, 1);
    expect_qutrit(name, dim);
    expect_range("theta", params[0], 0.0, pi / 2);
    return PureVector(vec({std::cos(params[0]), std::sin(params[0]), 0.0}));
  }
  if (name == "max_coherent") {
    PrimeDim d(dim);
    expect_count(name, params, static_cast<std::size_t>(dim - 1));
    ComplexVector v(dim);
    v[0] = 1.0 / std::sqrt(double(dim));
    for (int j = 1; j < dim; ++j) {
      if (!std::isfinite(params[j - 1])) throw Error(ErrorKind::ParamOutOfRange, "phase is not finite");
      v[j] = std::polar(1.0 / std::sqrt(double(dim)), params[j - 1]);
    }
    return PureVector(v);
  }
  if (name == "basis") {
    expect_count(name, params, 1);
    if (dim < 1) throw Error(ErrorKind::InvalidDimension, "basis state needs a positive dimension");
    const double j = params[0];
    if (j != std::floor(j) || j < 0 || j >= dim)
      throw Error(ErrorKind::ParamOutOfRange, "basis index must be an integer in [0, d)");
    ComplexVector v = ComplexVector::Zero(dim);
    v[static_cast<Eigen::Index>(j)] = 1.0;
    return PureVector(v);
  }
  throw Error(ErrorKind::UnknownState, "unknown state '" + std::string(name) + "'");
}

DensityState noisy_mix(const PureVector& psi, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::ParamOutOfRange, "mixing weight p must lie in [0, 1]");
  const auto d = psi.dim();
  ComplexMatrix m = p * (psi.amplitudes() * psi.amplitudes().adjoint());
  m.diagonal().array() += (1 - p) / static_cast<double>(d);
  return DensityState({static_cast<int>(d)}, std::move(m));
}

DensityState maximally_mixed(std::vector<int> dims) {
  Eigen::Index n = 1;
  for (int d : dims) n *= d;
  ComplexMatrix m = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
  return DensityState(std::move(dims), std::move(m));
}

DensityState basis_projector(PrimeDim dim, int j) {
  const double param = j;
  return named_state("basis", {&param, 1}, dim.value()).projector();
}

DensityState tensor(const DensityState& a, const DensityState& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityState(std::move(dims), kron(a.matrix(), b.matrix()));
}

DensityState partial_trace(const DensityState& rho, Side keep) {
  if (!rho.bipartite()) throw Error(ErrorKind::NotBipartite, "partial trace needs exactly two subsystems");
  const int da = rho.dims()[0], db = rho.dims()[1];
  const auto& m = rho.matrix();
  if (keep == Side::a) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int k = 0; k < da; ++k)
        for (int j = 0; j < db; ++j) out(i, k) += m(i * db + j, k * db + j);
    return DensityState({da}, std::move(out));
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int j = 0; j < db; ++j)
    for (int l = 0; l < db; ++l)
      for (int i = 0; i < da; ++i) out(j, l) += m(i * db + j, i * db + l);
  return DensityState({db}, std::move(out));
}

DensityState apply_unitary(const ComplexMatrix& u, const DensityState& rho) {
  return DensityState(rho.dims(), conjugate(u, rho.matrix()));
}

std::vector<PureVector> enumerate_stabilizer_pure(PrimeDim dim) {
  const int d = dim.value();
  if (d > 7) throw Error(ErrorKind::DimensionTooLarge, "stabilizer enumeration is limited to d <= 7");
  std::vector<PureVector> out;
  out.reserve(d * (d + 1));
  for (int j = 0; j < d; ++j) {
    ComplexVector v = ComplexVector::Zero(d);
    v[j] = 1.0;
    out.emplace_back(v);
  }
  const double norm = 1.0 / std::sqrt(double(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      ComplexVector v(d);
      for (int x = 0; x < d; ++x) v[x] = norm * omega_power(dim, static_cast<long long>(a) * x * x + b * x);
      out.emplace_back(v);
    }
  return out;
}

}  // namespace qmana
