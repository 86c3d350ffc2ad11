#pragma once

#include <utility>
#include <vector>

#include "qmana/circuits.hpp"
#include "qmana/prime_dim.hpp"
#include "qmana/state.hpp"

namespace qmana {

// Phases theta_1..theta_{d-1} of (1/sqrt d) sum_j e^{i theta_j} |j>, theta_0 = 0; stored in [0, 2pi).
class PhaseVector {
 public:
  PhaseVector(PrimeDim dim, std::vector<double> thetas);

  PrimeDim dim() const noexcept { return dim_; }
  const std::vector<double>& thetas() const noexcept { return thetas_; }

  PureVector state() const;
  // Largest per-coordinate distance on the circle.
  double distance(const PhaseVector& other) const;

 private:
  PrimeDim dim_;
  std::vector<double> thetas_;
};

struct SearchResult {
  double best_value = 0;
  double grid_best = 0;
  std::vector<PhaseVector> argmax;
  std::vector<double> argmax_values;
  long evaluations = 0;
  int grid = 0;
  int refine_iterations = 0;
  int refinement_sweeps = 0;
};

int default_grid(PrimeDim dim);

double coherent_mana(const PhaseVector& theta);

// Exhaustive grid over [0, 2pi)^{d-1}, then coordinate-wise golden-section refinement
// of the grid optima.
SearchResult max_mana_coherent(PrimeDim dim, int grid, int refine_iters = 200);

// (mutual mana of B_G(|psi_theta> (x) |0>), mana of |psi_theta>)
std::pair<double, double> mutual_mana_coherent_equals_mana(PrimeDim dim, const PhaseVector& theta,
                                                           const BeamsplitterSpec& spec);

}  // namespace qmana
