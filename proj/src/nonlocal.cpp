#include <cmath>
#include <numbers>

#include "qmana/measures.hpp"
#include "qmana/pair_tensor.hpp"
#include "qmana/phasespace.hpp"
#include "qmana/random.hpp"
#include "qmana/simplex.hpp"

namespace qmana {

ComplexMatrix unitary_from_coordinates(int d, std::span<const double> coords) {
  if (coords.size() != static_cast<std::size_t>(d) * d)
    throw Error(ErrorKind::BadParamCount, "unitary coordinates need d^2 entries");
  const double r = 1.0 / std::numbers::sqrt2;
  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  std::size_t idx = 0;
  for (int j = 0; j < d; ++j) h(j, j) = coords[idx++];
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      const double s = coords[idx++] * r, a = coords[idx++] * r;
      h(j, k) += cplx(s, -a);
      h(k, j) += cplx(s, a);
    }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const Eigen::VectorXcd phases = (cplx(0, 1) * es.eigenvalues().cast<cplx>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

class LocalManaObjective {
 public:
  explicit LocalManaObjective(const DensityState& rho)
      : dims_(rho.dims()), tensor_(to_pair_tensor(rho.matrix(), rho.dims())), size_(double(rho.size())) {
    for (int d : dims_) {
      extents_.push_back(d * d);
      offsets_.push_back(parameters_);
      parameters_ += d * d;
    }
    mats_.resize(dims_.size());
  }

  Eigen::Index parameters() const { return parameters_; }

  std::vector<ComplexMatrix> unitaries(const Eigen::VectorXd& x) const {
    std::vector<ComplexMatrix> out;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      const int d = dims_[i];
      out.push_back(unitary_from_coordinates(d, {x.data() + offsets_[i], static_cast<std::size_t>(d * d)}));
    }
    return out;
  }

  double operator()(const Eigen::VectorXd& x) {
    const auto us = unitaries(x);
    std::vector<const ComplexMatrix*> ptrs;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      mats_[i] = operators(PrimeDim(dims_[i])).phase_transform * pair_action(us[i]);
      ptrs.push_back(&mats_[i]);
    }
    const Eigen::VectorXcd w = apply_modes(tensor_, extents_, ptrs);
    return std::log(w.real().cwiseAbs().sum() / size_);
  }

 private:
  std::vector<int> dims_;
  std::vector<int> extents_;
  std::vector<Eigen::Index> offsets_;
  Eigen::Index parameters_ = 0;
  Eigen::VectorXcd tensor_;
  double size_;
  std::vector<ComplexMatrix> mats_;
};

}  // namespace

NonlocalResult minimize_local_mana(const DensityState& rho, const NonlocalOptions& options) {
  LocalManaObjective objective(rho);
  auto f = [&objective](const Eigen::VectorXd& x) { return objective(x); };

  NonlocalResult result;
  result.argmin = Eigen::VectorXd::Zero(objective.parameters());
  result.initial = f(result.argmin);
  result.value = result.initial;
  result.evaluations = 1;

  SimplexOptions simplex;
  simplex.f_tolerance = options.tolerance;
  simplex.max_evaluations = options.max_evaluations;
  simplex.target = options.stop_below;

  auto attempt = [&](const Eigen::VectorXd& x0) {
    const SimplexResult r = nelder_mead(f, x0, simplex);
    result.evaluations += r.evaluations;
    ++result.restarts_run;
    if (r.value < result.value) {
      result.value = r.value;
      result.argmin = r.x;
    }
  };

  for (const auto& warm : options.warm_starts) {
    if (result.value <= options.stop_below) break;
    if (warm.size() != objective.parameters())
      throw Error(ErrorKind::BadParamCount, "warm start has the wrong number of coordinates");
    attempt(warm);
  }
  std::uniform_real_distribution<double> coord(-std::numbers::pi, std::numbers::pi);
  for (int r = 0; r < options.restarts && result.value > options.stop_below; ++r) {
    Eigen::VectorXd x0(objective.parameters());
    if (r == 0) {
      x0.setZero();
    } else {
      Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(r)));
      for (auto& v : x0) v = coord(rng);
    }
    attempt(x0);
  }
  result.unitaries = objective.unitaries(result.argmin);
  return result;
}

double nonlocal_mana_upper(const DensityState& rho_ab, int restarts, std::uint64_t seed) {
  if (!rho_ab.bipartite()) throw Error(ErrorKind::NotBipartite, "nonlocal mana needs exactly two subsystems");
  if (restarts < 1) throw Error(ErrorKind::ParamOutOfRange, "restarts must be at least 1");
  NonlocalOptions options;
  options.restarts = restarts;
  options.seed = seed;
  return minimize_local_mana(rho_ab, options).value;
}

}  // namespace qmana
