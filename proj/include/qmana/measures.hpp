#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmana/state.hpp"

namespace qmana {

// All measures are computed in natural log; LogBase only converts for output.
enum class LogBase { natural, two, ten };

LogBase parse_log_base(std::string_view text);
std::string_view to_string(LogBase base);
double from_nats(double value, LogBase base);

double mana(const DensityState& rho);
double sum_negativity(const DensityState& rho);
// 1/2 log(D tr rho^2)
double purity_bound(const DensityState& rho);
double mutual_mana(const DensityState& rho_ab);

enum class SreConvention {
  // (1/(1-alpha)) log sum_P Xi_P^alpha - n log d with Xi_P = |tr rho P|^2 / (D tr rho^2)
  purity_normalized,
  // (1/(1-alpha)) log sum_P (|tr rho P|^2 / D)^alpha - n log d - S_alpha(rho)
  renyi_corrected,
};

double sre_alpha(const DensityState& rho, double alpha, SreConvention convention = SreConvention::purity_normalized);
double mutual_sre(const DensityState& rho_ab, double alpha,
                  SreConvention convention = SreConvention::purity_normalized);

// sum |tr(rho D_{k1,l1} (x) ... )|
double l1_magic(const DensityState& rho);
double mutual_l1(const DensityState& rho_ab);

double von_neumann_entropy(const DensityState& rho);
double mutual_information(const DensityState& rho_ab);

struct NonlocalOptions {
  int restarts = 32;
  std::uint64_t seed = 42;
  long max_evaluations = 20000;
  double tolerance = 1e-9;
  // Remaining restarts are skipped once a value at or below this is reached.
  double stop_below = 1e-14;
  // Tried before the random restarts, one coordinate vector each.
  std::vector<Eigen::VectorXd> warm_starts;
};

struct NonlocalResult {
  double value = 0;
  double initial = 0;
  Eigen::VectorXd argmin;
  std::vector<ComplexMatrix> unitaries;
  long evaluations = 0;
  int restarts_run = 0;
};

// exp(iH) with H = sum_j coords[j] E_j over a fixed orthonormal Hermitian basis of d x d matrices.
ComplexMatrix unitary_from_coordinates(int d, std::span<const double> coords);

// Minimizes Mana((U_1 (x) ... (x) U_n) rho (...)^dagger) over one unitary per subsystem.
// Identity is always a candidate, so the result never exceeds mana(rho).
NonlocalResult minimize_local_mana(const DensityState& rho, const NonlocalOptions& options = {});

double nonlocal_mana_upper(const DensityState& rho_ab, int restarts, std::uint64_t seed);

class MeasureReport {
 public:
  MeasureReport(std::string state_id, LogBase base) : state_id_(std::move(state_id)), base_(base) {}

  const std::string& state_id() const noexcept { return state_id_; }
  LogBase base() const noexcept { return base_; }
  const std::vector<std::pair<std::string, double>>& values() const noexcept { return values_; }

  void add(std::string name, double value) { values_.emplace_back(std::move(name), value); }
  double value(std::string_view name) const;

 private:
  std::string state_id_;
  LogBase base_;
  std::vector<std::pair<std::string, double>> values_;
};

// Names: mana, sum_negativity, purity_bound, mutual_mana, sre<alpha>, mutual_sre<alpha>,
// l1, log_l1, mutual_l1, entropy, mutual_information, nonlocal_mana.
MeasureReport measure_report(const DensityState& rho, std::span<const std::string> names, LogBase base,
                             std::string state_id, const NonlocalOptions& nonlocal = {});

}  // namespace qmana
