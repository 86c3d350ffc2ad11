#include "qmana/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qmana/measures.hpp"
#include "qmana/phasespace.hpp"
#include "qmana/states.hpp"

namespace qmana {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kArgmaxTolerance = 1e-6;
constexpr double kDedupeDistance = 1e-3;
constexpr std::size_t kMaxCandidates = 64;

double wrap(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r >= kTwoPi ? 0.0 : r;
}

// log sum |W| of the coherent vector, with the amplitudes written into psi.
double evaluate(PrimeDim dim, const std::vector<double>& thetas, ComplexVector& psi) {
  const int d = dim.value();
  const double norm = 1.0 / std::sqrt(double(d));
  psi[0] = norm;
  for (int j = 1; j < d; ++j) psi[j] = std::polar(norm, thetas[j - 1]);
  return std::log(pure_wigner(dim, psi).cwiseAbs().sum());
}

}  // namespace

PhaseVector::PhaseVector(PrimeDim dim, std::vector<double> thetas) : dim_(dim), thetas_(std::move(thetas)) {
  if (thetas_.size() != static_cast<std::size_t>(dim.value() - 1))
    throw Error(ErrorKind::BadParamCount, "phase vector needs d-1 angles");
  for (auto& t : thetas_) {
    if (!std::isfinite(t)) throw Error(ErrorKind::ParamOutOfRange, "phase is not finite");
    t = wrap(t);
  }
}

PureVector PhaseVector::state() const { return named_state("max_coherent", thetas_, dim_.value()); }

double PhaseVector::distance(const PhaseVector& other) const {
  double out = 0;
  for (std::size_t i = 0; i < thetas_.size(); ++i) {
    const double diff = std::abs(thetas_[i] - other.thetas_[i]);
    out = std::max(out, std::min(diff, kTwoPi - diff));
  }
  return out;
}

int default_grid(PrimeDim dim) {
  switch (dim.value()) {
    case 3: return 64;
    case 5: return 24;
    default: return 12;
  }
}

double coherent_mana(const PhaseVector& theta) {
  ComplexVector psi(theta.dim().value());
  return evaluate(theta.dim(), theta.thetas(), psi);
}

SearchResult max_mana_coherent(PrimeDim dim, int grid, int refine_iters) {
  const int d = dim.value();
  if (d > 7) throw Error(ErrorKind::DimensionTooLarge, "coherent search is limited to d <= 7");
  if (grid < 8) throw Error(ErrorKind::ParamOutOfRange, "grid must be at least 8");
  if (refine_iters < 0) throw Error(ErrorKind::ParamOutOfRange, "refine iterations must be nonnegative");
  const int n = d - 1;
  const double step = kTwoPi / grid;

  std::size_t cells = 1;
  for (int i = 0; i < n; ++i) cells *= static_cast<std::size_t>(grid);

  SearchResult result;
  result.grid = grid;
  result.refine_iterations = refine_iters;

  ComplexVector psi(d);
  std::vector<double> thetas(n);
  std::vector<int> digits(n);
  auto decode = [&](std::size_t cell) {
    for (int i = n - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(cell % grid);
      cell /= grid;
      thetas[i] = digits[i] * step;
    }
  };

  std::vector<double> values(cells);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    decode(cell);
    values[cell] = evaluate(dim, thetas, psi);
  }
  result.evaluations = static_cast<long>(cells);
  result.grid_best = *std::max_element(values.begin(), values.end());

  // Grid local maxima on the torus, plus every cell within tolerance of the grid best.
  std::vector<std::size_t> strides(n);
  for (int i = n - 1, s = 1; i >= 0; --i, s *= grid) strides[i] = static_cast<std::size_t>(s);
  std::vector<std::size_t> candidates;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    const double v = values[cell];
    bool local = true;
    decode(cell);
    for (int i = 0; i < n && local; ++i) {
      const std::size_t up = cell - digits[i] * strides[i] + ((digits[i] + 1) % grid) * strides[i];
      const std::size_t down = cell - digits[i] * strides[i] + ((digits[i] + grid - 1) % grid) * strides[i];
      local = v >= values[up] && v >= values[down];
    }
    if (local || v >= result.grid_best - kArgmaxTolerance) candidates.push_back(cell);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  if (candidates.size() > kMaxCandidates) candidates.resize(kMaxCandidates);

  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  std::vector<std::pair<std::vector<double>, double>> refined;
  for (std::size_t cell : candidates) {
    decode(cell);
    std::vector<double> x = thetas;
    double fx = values[cell];
    double bracket = step;
    int sweeps = 0;
    for (; sweeps < refine_iters; ++sweeps) {
      const std::vector<double> before = x;
      const double f_before = fx;
      for (int i = 0; i < n; ++i) {
        double a = x[i] - bracket, b = x[i] + bracket;
        double c = b - inv_phi * (b - a), e = a + inv_phi * (b - a);
        auto at = [&](double t) {
          std::vector<double> y = x;
          y[i] = t;
          ++result.evaluations;
          return evaluate(dim, y, psi);
        };
        double fc = at(c), fe = at(e);
        while (b - a > 1e-13) {
          if (fc >= fe) {
            b = e;
            e = c;
            fe = fc;
            c = b - inv_phi * (b - a);
            fc = at(c);
          } else {
            a = c;
            c = e;
            fc = fe;
            e = a + inv_phi * (b - a);
            fe = at(e);
          }
        }
        const double t = fc >= fe ? c : e;
        const double ft = std::max(fc, fe);
        if (ft > fx) {
          x[i] = t;
          fx = ft;
        }
      }
      double moved = 0;
      for (int i = 0; i < n; ++i) moved = std::max(moved, std::abs(x[i] - before[i]));
      if (moved < 1e-12 && fx - f_before < 1e-15) {
        ++sweeps;
        break;
      }
      bracket = std::max(moved * 2, 1e-6);
    }
    result.refinement_sweeps = std::max(result.refinement_sweeps, sweeps);
    for (auto& t : x) t = wrap(t);
    refined.emplace_back(x, evaluate(dim, x, psi));
  }

  result.best_value = result.grid_best;
  for (const auto& r : refined) result.best_value = std::max(result.best_value, r.second);

  std::vector<std::pair<std::vector<double>, double>> keep;
  for (const auto& r : refined)
    if (r.second >= result.best_value - kArgmaxTolerance) keep.push_back(r);
  std::sort(keep.begin(), keep.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [x, v] : keep) {
    PhaseVector candidate(dim, x);
    bool duplicate = false;
    for (const auto& existing : result.argmax) duplicate = duplicate || existing.distance(candidate) < kDedupeDistance;
    if (!duplicate) {
      result.argmax.push_back(candidate);
      result.argmax_values.push_back(v);
    }
  }
  return result;
}

std::pair<double, double> mutual_mana_coherent_equals_mana(PrimeDim dim, const PhaseVector& theta,
                                                           const BeamsplitterSpec& spec) {
  if (!spec.beta_delta_nonzero()) throw Error(ErrorKind::BetaDeltaZero, "beta*delta = 0 mod d");
  if (theta.dim() != dim || spec.dim() != dim)
    throw Error(ErrorKind::InvalidDimension, "phase vector, beamsplitter and dimension disagree");
  const DensityState input = theta.state().projector();
  return {mutual_mana(beamsplitter_output(input, spec)), mana(input)};
}

}  // namespace qmana
