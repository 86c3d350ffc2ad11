#include "qmana/phasespace.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "qmana/pair_tensor.hpp"

namespace qmana {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::ImaginaryResidue: return "ImaginaryResidue";
    case ErrorKind::UnknownState: return "UnknownState";
    case ErrorKind::BadParamCount: return "BadParamCount";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::SingularG: return "SingularG";
    case ErrorKind::UnknownGate: return "UnknownGate";
    case ErrorKind::BetaDeltaZero: return "BetaDeltaZero";
    case ErrorKind::AlphaOne: return "AlphaOne";
    case ErrorKind::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

bool is_odd_prime(long long d) noexcept {
  if (d < 3 || d % 2 == 0) return false;
  for (long long f = 3; f * f <= d; f += 2)
    if (d % f == 0) return false;
  return true;
}

PrimeDim::PrimeDim(int d) : d_(d) {
  if (!is_odd_prime(d))
    throw Error(ErrorKind::InvalidDimension, "dimension " + std::to_string(d) + " is not an odd prime");
}

int PrimeDim::inverse(long long a) const {
  const long long base = mod(a);
  if (base == 0) throw Error(ErrorKind::SingularG, "zero has no inverse mod " + std::to_string(d_));
  long long result = 1, b = base;
  for (long long e = d_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * b % d_;
    b = b * b % d_;
  }
  return static_cast<int>(result);
}

void require_in_range(PrimeDim dim, PhasePoint pt) {
  const int d = dim.value();
  if (pt.k < 0 || pt.k >= d || pt.l < 0 || pt.l >= d)
    throw Error(ErrorKind::ParamOutOfRange, "phase point (" + std::to_string(pt.k) + "," +
                                                std::to_string(pt.l) + ") outside Z_" + std::to_string(d));
}

namespace {

std::unique_ptr<const OperatorSet> build_operators(PrimeDim dim) {
  const int d = dim.value();
  const int n = d * d;
  auto set = std::make_unique<OperatorSet>();
  set->weyl.reserve(n);
  set->phase_point.reserve(n);
  for (int q = 0; q < n; ++q) {
    set->weyl.push_back(weyl(dim, point_at(dim, q)));
    set->phase_point.push_back(phase_point_operator(dim, point_at(dim, q)));
  }
  set->weyl_transform.resize(n, n);
  set->phase_transform.resize(n, n);
  set->phase_synthesis.resize(n, n);
  for (int q = 0; q < n; ++q)
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) {
        set->weyl_transform(q, x * d + y) = set->weyl[q](y, x);
        set->phase_transform(q, x * d + y) = set->phase_point[q](y, x);
        set->phase_synthesis(x * d + y, q) = set->phase_point[q](x, y);
      }
  for (const auto& a : set->phase_point) {
    Monomial m;
    m.column.resize(d);
    m.value.resize(d);
    for (int r = 0; r < d; ++r) {
      Eigen::Index c;
      a.row(r).cwiseAbs().maxCoeff(&c);
      m.column[r] = static_cast<int>(c);
      m.value[r] = a(r, c);
    }
    set->phase_point_monomial.push_back(std::move(m));
  }
  return set;
}

}  // namespace

const OperatorSet& operators(PrimeDim dim) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const OperatorSet>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(dim.value());
    if (it != cache.end()) return *it->second;
  }
  auto built = build_operators(dim);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(dim.value(), std::move(built));
  return *it->second;
}

WignerTable::WignerTable(std::vector<int> dims, Eigen::VectorXd values)
    : dims_(std::move(dims)), values_(std::move(values)) {
  if (dims_.empty()) throw Error(ErrorKind::InvalidDimension, "Wigner table needs at least one subsystem");
  Eigen::Index expected = 1;
  for (int d : dims_) {
    PrimeDim check(d);
    expected *= static_cast<Eigen::Index>(d) * d;
  }
  if (values_.size() != expected)
    throw Error(ErrorKind::InvalidState, "Wigner table has " + std::to_string(values_.size()) +
                                             " entries, expected " + std::to_string(expected));
  if (!values_.allFinite()) throw Error(ErrorKind::InvalidState, "Wigner table has non-finite entries");
  if (std::abs(values_.sum() - 1.0) > 1e-10)
    throw Error(ErrorKind::InvalidState, "Wigner table does not sum to 1");
}

std::size_t WignerTable::flat_index(std::span<const PhasePoint> pts) const {
  if (pts.size() != dims_.size())
    throw Error(ErrorKind::BadParamCount, "one phase point per subsystem required");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    PrimeDim dim(dims_[i]);
    require_in_range(dim, pts[i]);
    idx = idx * dims_[i] * dims_[i] + point_index(dim, pts[i]);
  }
  return idx;
}

double WignerTable::at(PhasePoint pt) const { return values_[flat_index({&pt, 1})]; }

double WignerTable::at(std::span<const PhasePoint> pts) const { return values_[flat_index(pts)]; }

Eigen::MatrixXd WignerTable::grid() const {
  if (dims_.size() != 1) throw Error(ErrorKind::BadParams, "grid() needs a single-subsystem table");
  const int d = dims_[0];
  Eigen::MatrixXd g(d, d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) g(k, l) = values_[k * d + l];
  return g;
}

WignerTable WignerTable::displaced(std::span<const PhasePoint> shift) const {
  if (shift.size() != dims_.size())
    throw Error(ErrorKind::BadParamCount, "one shift per subsystem required");
  Eigen::VectorXd out(values_.size());
  std::vector<PhasePoint> pts(dims_.size());
  for (Eigen::Index flat = 0; flat < values_.size(); ++flat) {
    Eigen::Index rest = flat;
    for (std::size_t i = dims_.size(); i-- > 0;) {
      const int d = dims_[i];
      const int q = static_cast<int>(rest % (d * d));
      rest /= d * d;
      PrimeDim dim(d);
      pts[i] = {dim.mod(q / d - shift[i].k), dim.mod(q % d - shift[i].l)};
    }
    out[flat] = at(pts);
  }
  return WignerTable(dims_, std::move(out));
}

WignerTable wigner(const DensityState& rho) {
  const Eigen::VectorXcd traces = basis_traces(rho.matrix(), rho.dims(), LocalBasis::phase_point);
  const double residue = traces.imag().cwiseAbs().maxCoeff();
  if (residue > kImaginaryResidueLimit)
    throw Error(ErrorKind::ImaginaryResidue,
                "tr(rho A) has imaginary part " + std::to_string(residue) + "; input is not Hermitian");
  return WignerTable(rho.dims(), traces.real() / static_cast<double>(rho.size()));
}

DensityState reconstruct(const WignerTable& table) {
  const auto& dims = table.dims();
  std::vector<const ComplexMatrix*> mats;
  std::vector<int> extents;
  for (int d : dims) {
    mats.push_back(&operators(PrimeDim(d)).phase_synthesis);
    extents.push_back(d * d);
  }
  const Eigen::VectorXcd w = table.values().cast<cplx>();
  const Eigen::VectorXcd t = apply_modes(w, extents, mats);
  return DensityState(dims, from_pair_tensor(t, dims));
}

Eigen::VectorXd pure_wigner(PrimeDim dim, const ComplexVector& psi) {
  const int d = dim.value();
  const auto& ops = operators(dim);
  Eigen::VectorXd w(d * d);
  for (int q = 0; q < d * d; ++q) {
    const Monomial& m = ops.phase_point_monomial[q];
    cplx acc = 0;
    for (int r = 0; r < d; ++r) acc += std::conj(psi[r]) * m.value[r] * psi[m.column[r]];
    w[q] = acc.real() / d;
  }
  return w;
}

}  // namespace qmana
