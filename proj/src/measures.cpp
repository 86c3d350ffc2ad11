#include "qmana/measures.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "qmana/pair_tensor.hpp"
#include "qmana/phasespace.hpp"
#include "qmana/states.hpp"

namespace qmana {

LogBase parse_log_base(std::string_view text) {
  if (text == "e") return LogBase::natural;
  if (text == "2") return LogBase::two;
  if (text == "10") return LogBase::ten;
  throw Error(ErrorKind::Parse, "log base must be e, 2 or 10");
}

std::string_view to_string(LogBase base) {
  switch (base) {
    case LogBase::two: return "2";
    case LogBase::ten: return "10";
    default: return "e";
  }
}

double from_nats(double value, LogBase base) {
  switch (base) {
    case LogBase::two: return value / std::numbers::ln2;
    case LogBase::ten: return value / std::numbers::ln10;
    default: return value;
  }
}

double mana(const DensityState& rho) { return std::log(wigner(rho).abs_sum()); }

double sum_negativity(const DensityState& rho) { return (wigner(rho).abs_sum() - 1.0) / 2.0; }

double purity_bound(const DensityState& rho) {
  return 0.5 * std::log(static_cast<double>(rho.size()) * rho.purity());
}

namespace {

void require_bipartite(const DensityState& rho) {
  if (!rho.bipartite()) throw Error(ErrorKind::NotBipartite, "mutual measures need exactly two subsystems");
}

void require_alpha(double alpha) {
  if (alpha == 1.0) throw Error(ErrorKind::AlphaOne, "alpha = 1 is excluded");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw Error(ErrorKind::ParamOutOfRange, "alpha must be positive");
}

Eigen::VectorXd spectrum(const DensityState& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues();
  if (ev.minCoeff() < kEigenvalueFloor)
    throw Error(ErrorKind::NegativeEigenvalue, "eigenvalue " + std::to_string(ev.minCoeff()) + " below floor");
  return ev.cwiseMax(0.0);
}

}  // namespace

double mutual_mana(const DensityState& rho_ab) {
  require_bipartite(rho_ab);
  return mana(rho_ab) - mana(partial_trace(rho_ab, Side::a)) - mana(partial_trace(rho_ab, Side::b));
}

double sre_alpha(const DensityState& rho, double alpha, SreConvention convention) {
  require_alpha(alpha);
  const double n = static_cast<double>(rho.size());
  const Eigen::ArrayXd sq = basis_traces(rho.matrix(), rho.dims(), LocalBasis::weyl).cwiseAbs2().array();
  if (convention == SreConvention::purity_normalized) {
    const Eigen::ArrayXd xi = sq / (n * rho.purity());
    return std::log(xi.pow(alpha).sum()) / (1.0 - alpha) - std::log(n);
  }
  const double moments = std::log((sq / n).pow(alpha).sum()) / (1.0 - alpha) - std::log(n);
  const double renyi = std::log(spectrum(rho).array().pow(alpha).sum()) / (1.0 - alpha);
  return moments - renyi;
}

double mutual_sre(const DensityState& rho_ab, double alpha, SreConvention convention) {
  require_bipartite(rho_ab);
  return sre_alpha(rho_ab, alpha, convention) - sre_alpha(partial_trace(rho_ab, Side::a), alpha, convention) -
         sre_alpha(partial_trace(rho_ab, Side::b), alpha, convention);
}

double l1_magic(const DensityState& rho) {
  return basis_traces(rho.matrix(), rho.dims(), LocalBasis::weyl).cwiseAbs().sum();
}

double mutual_l1(const DensityState& rho_ab) {
  require_bipartite(rho_ab);
  return std::log(l1_magic(rho_ab)) - std::log(l1_magic(partial_trace(rho_ab, Side::a))) -
         std::log(l1_magic(partial_trace(rho_ab, Side::b)));
}

double von_neumann_entropy(const DensityState& rho) {
  double s = 0;
  for (double lambda : spectrum(rho))
    if (lambda > 0) s -= lambda * std::log(lambda);
  return s;
}

double mutual_information(const DensityState& rho_ab) {
  require_bipartite(rho_ab);
  return von_neumann_entropy(partial_trace(rho_ab, Side::a)) + von_neumann_entropy(partial_trace(rho_ab, Side::b)) -
         von_neumann_entropy(rho_ab);
}

double MeasureReport::value(std::string_view name) const {
  for (const auto& [key, v] : values_)
    if (key == name) return v;
  throw Error(ErrorKind::BadParams, "report has no measure '" + std::string(name) + "'");
}

namespace {

bool parse_alpha_suffix(std::string_view name, std::string_view prefix, double& alpha) {
  if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size()) return false;
  const std::string_view rest = name.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), alpha);
  return ec == std::errc() && ptr == rest.data() + rest.size();
}

}  // namespace

MeasureReport measure_report(const DensityState& rho, std::span<const std::string> names, LogBase base,
                             std::string state_id, const NonlocalOptions& nonlocal) {
  MeasureReport report(std::move(state_id), base);
  for (const auto& name : names) {
    double alpha = 0;
    double nats = 0;
    bool logarithmic = true;
    if (name == "mana") {
      nats = mana(rho);
      if (nats < -1e-10) throw Error(ErrorKind::InvalidState, "negative mana");
    } else if (name == "sum_negativity") {
      nats = sum_negativity(rho);
      logarithmic = false;
    } else if (name == "purity_bound") {
      nats = purity_bound(rho);
    } else if (name == "mutual_mana") {
      nats = mutual_mana(rho);
    } else if (name == "l1") {
      nats = l1_magic(rho);
      logarithmic = false;
    } else if (name == "log_l1") {
      nats = std::log(l1_magic(rho));
    } else if (name == "mutual_l1") {
      nats = mutual_l1(rho);
    } else if (name == "entropy") {
      nats = von_neumann_entropy(rho);
    } else if (name == "mutual_information") {
      nats = mutual_information(rho);
      if (nats < -1e-8) throw Error(ErrorKind::InvalidState, "negative mutual information");
    } else if (name == "nonlocal_mana") {
      require_bipartite(rho);
      nats = minimize_local_mana(rho, nonlocal).value;
    } else if (parse_alpha_suffix(name, "mutual_sre", alpha)) {
      nats = mutual_sre(rho, alpha);
    } else if (parse_alpha_suffix(name, "sre", alpha)) {
      nats = sre_alpha(rho, alpha);
    } else {
      throw Error(ErrorKind::BadParams, "unknown measure '" + name + "'");
    }
    report.add(name, logarithmic ? from_nats(nats, base) : nats);
  }
  return report;
}

}  // namespace qmana
