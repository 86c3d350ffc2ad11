#pragma once

#include <functional>
#include <limits>

#include <Eigen/Dense>

namespace qmana {

struct SimplexOptions {
  double initial_step = 0.5;
  double f_tolerance = 1e-9;
  double x_tolerance = 1e-10;
  long max_evaluations = 20000;
  // Stop as soon as the best value is at or below this.
  double target = -std::numeric_limits<double>::infinity();
  // Fresh simplices built around the best point after convergence.
  int polish_rounds = 3;
};

struct SimplexResult {
  Eigen::VectorXd x;
  double value = 0;
  long evaluations = 0;
};

// Nelder-Mead with dimension-adaptive coefficients.
SimplexResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x0,
                          const SimplexOptions& options = {});

}  // namespace qmana
