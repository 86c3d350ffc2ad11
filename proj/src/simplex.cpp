#include "qmana/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace qmana {

namespace {

struct Run {
  Eigen::VectorXd x;
  double value;
};

Run descend(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x0, double step,
            const SimplexOptions& opt, long& evals, long budget) {
  const Eigen::Index n = x0.size();
  const double dn = static_cast<double>(n);
  const double reflect = 1.0, expand = 1.0 + 2.0 / dn, contract = 0.75 - 1.0 / (2.0 * dn), shrink = 1.0 - 1.0 / dn;

  std::vector<Eigen::VectorXd> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  for (Eigen::Index i = 0; i < n; ++i) pts[i + 1][i] += step;
  for (auto i = 0u; i < pts.size(); ++i) vals[i] = f(pts[i]);
  evals += n + 1;

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
    std::vector<Eigen::VectorXd> p2;
    std::vector<double> v2;
    for (auto i : order) {
      p2.push_back(pts[i]);
      v2.push_back(vals[i]);
    }
    pts.swap(p2);
    vals.swap(v2);
  };

  while (true) {
    sort_simplex();
    if (vals[0] <= opt.target || evals >= budget) break;
    double size = 0;
    for (Eigen::Index i = 1; i <= n; ++i) size = std::max(size, (pts[i] - pts[0]).cwiseAbs().maxCoeff());
    if (vals[n] - vals[0] <= opt.f_tolerance && size <= opt.x_tolerance) break;
    if (size <= opt.x_tolerance * 1e-3) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) centroid += pts[i];
    centroid /= dn;

    const Eigen::VectorXd xr = centroid + reflect * (centroid - pts[n]);
    const double fr = f(xr);
    ++evals;
    if (fr < vals[0]) {
      const Eigen::VectorXd xe = centroid + expand * (xr - centroid);
      const double fe = f(xe);
      ++evals;
      if (fe < fr) {
        pts[n] = xe;
        vals[n] = fe;
      } else {
        pts[n] = xr;
        vals[n] = fr;
      }
      continue;
    }
    if (fr < vals[n - 1]) {
      pts[n] = xr;
      vals[n] = fr;
      continue;
    }
    const bool outside = fr < vals[n];
    const Eigen::VectorXd xc =
        outside ? Eigen::VectorXd(centroid + contract * (xr - centroid)) : Eigen::VectorXd(centroid + contract * (pts[n] - centroid));
    const double fc = f(xc);
    ++evals;
    if (fc < (outside ? fr : vals[n])) {
      pts[n] = xc;
      vals[n] = fc;
      continue;
    }
    for (Eigen::Index i = 1; i <= n; ++i) {
      pts[i] = pts[0] + shrink * (pts[i] - pts[0]);
      vals[i] = f(pts[i]);
    }
    evals += n;
  }
  return {pts[0], vals[0]};
}

}  // namespace

SimplexResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x0,
                          const SimplexOptions& options) {
  long evals = 0;
  Run best = descend(f, x0, options.initial_step, options, evals, options.max_evaluations);
  double step = options.initial_step;
  for (int round = 0; round < options.polish_rounds; ++round) {
    if (best.value <= options.target || evals >= options.max_evaluations) break;
    step *= 0.5;
    Run next = descend(f, best.x, step, options, evals, options.max_evaluations);
    const double gain = best.value - next.value;
    if (next.value < best.value) best = next;
    if (gain <= options.f_tolerance) break;
  }
  return {best.x, best.value, evals};
}

}  // namespace qmana
