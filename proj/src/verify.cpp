#include "qmana/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "qmana/circuits.hpp"
#include "qmana/measures.hpp"
#include "qmana/oracles.hpp"
#include "qmana/pair_tensor.hpp"
#include "qmana/phasespace.hpp"
#include "qmana/random.hpp"
#include "qmana/search.hpp"
#include "qmana/states.hpp"

namespace qmana {

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"prop1", "prop2", "prop3", "prop4", "prop5", "thm1",
                                              "appg", "wigner-axioms", "clifford-invariance",
                                              "additivity", "table1", "oracles"};
  return names;
}

namespace {

using std::numbers::pi;

// Tracks the largest deviation and the values that produced it.
class Check {
 public:
  Check(std::string name, double tolerance) : name_(std::move(name)), tol_(tolerance) {}

  void deviation(double dev, const std::string& where = {}) {
    if (!(dev <= worst_)) {
      if (std::isnan(dev) || dev > worst_) {
        worst_ = std::isnan(dev) ? std::numeric_limits<double>::infinity() : dev;
        where_ = where;
      }
    }
  }
  void compare(double expected, double got, const std::string& where = {}) {
    std::ostringstream s;
    s.precision(12);
    s << where << (where.empty() ? "" : ": ") << "expected " << expected << ", got " << got;
    deviation(std::abs(expected - got), s.str());
  }
  // Records how far value exceeds limit (0 if not).
  void bound(double value, double limit, const std::string& where = {}) {
    std::ostringstream s;
    s.precision(12);
    s << where << (where.empty() ? "" : ": ") << value << " vs limit " << limit;
    deviation(std::max(0.0, value - limit), s.str());
  }

  CheckResult result() const { return {name_, worst_, tol_, worst_ <= tol_, worst_ > tol_ ? where_ : ""}; }

 private:
  std::string name_;
  double tol_;
  double worst_ = 0;
  std::string where_;
};

int pick(int trials, int fallback) { return trials > 0 ? trials : fallback; }

const std::vector<BeamsplitterSpec>& qutrit_specs() {
  static const std::vector<BeamsplitterSpec> specs{qutrit::g1(), qutrit::g2(), qutrit::g3(), qutrit::g4()};
  return specs;
}

std::string spec_name(const BeamsplitterSpec& s) {
  std::ostringstream o;
  o << "G=(" << s.alpha() << "," << s.beta() << ";" << s.gamma() << "," << s.delta() << ")";
  return o.str();
}

DensityState csum_out(const PureVector& psi, double p) {
  return beamsplitter_output(noisy_mix(psi, p), csum_spec(PrimeDim(3)));
}

SuiteResult prop1(std::uint64_t seed, int trials) {
  Check c("mana <= 1/2 log(d tr rho^2)", 1e-10);
  for (int d : {3, 5}) {
    Rng rng(derive_seed(seed, d));
    for (int t = 0; t < pick(trials, 1000); ++t) {
      const DensityState rho = random_density({d}, rng);
      c.bound(mana(rho), purity_bound(rho), "d=" + std::to_string(d));
    }
  }
  return {"prop1", {c.result()}};
}

SuiteResult prop2(std::uint64_t, int) {
  const PrimeDim dim(3);
  Check cov("B (A (x) A) B^dagger index map", 1e-12), weyl_map("B (D (x) D) B^dagger index map", 1e-12),
      series("pullback series vs dense", 1e-12);
  for (const auto& spec : qutrit_specs()) {
    const ComplexMatrix bs = beamsplitter(spec);
    const auto& ops = operators(dim);
    for (int p = 0; p < 9; ++p) {
      for (int q = 0; q < 9; ++q) {
        const auto [a, b] = conjugate_weyl(spec, point_at(dim, p), point_at(dim, q));
        const int ia = point_index(dim, a), ib = point_index(dim, b);
        cov.deviation(max_abs_diff(conjugate(bs, kron(ops.phase_point[p], ops.phase_point[q])),
                                   kron(ops.phase_point[ia], ops.phase_point[ib])),
                      spec_name(spec));
        weyl_map.deviation(
            max_abs_diff(conjugate(bs, kron(ops.weyl[p], ops.weyl[q])), kron(ops.weyl[ia], ops.weyl[ib])),
            spec_name(spec));
      }
      for (Side side : {Side::a, Side::b})
        series.deviation(max_abs_diff(heisenberg_pullback(spec, side, point_at(dim, p)),
                                      heisenberg_pullback_dense(spec, side, point_at(dim, p))),
                         spec_name(spec) + (side == Side::a ? " side a" : " side b"));
    }
  }
  return {"prop2", {cov.result(), weyl_map.result(), series.result()}};
}

SuiteResult prop3(std::uint64_t seed, int trials) {
  const PrimeDim dim(3);
  Check c("expectation = rho_jj", 1e-12);
  Rng rng(seed);
  for (int t = 0; t < pick(trials, 100); ++t) {
    const DensityState rho = random_density({3}, rng);
    for (const auto& spec : qutrit_specs()) {
      if (!spec.beta_delta_nonzero()) continue;
      for (Side side : {Side::a, Side::b})
        for (int p = 0; p < 9; ++p) {
          const PhasePoint pt = point_at(dim, p);
          const int j = prop3_diagonal_index(spec, side, pt.k);
          c.compare(rho.matrix()(j, j).real(), prop3_expectation(rho, spec, side, pt), spec_name(spec));
        }
    }
  }
  return {"prop3", {c.result()}};
}

ComplexMatrix random_clifford(PrimeDim dim, Rng& rng) {
  static const char* gates[] = {"z", "phase", "fourier"};
  std::uniform_int_distribution<int> pick_gate(0, 2);
  ComplexMatrix u = ComplexMatrix::Identity(dim.value(), dim.value());
  for (int i = 0; i < 12; ++i) u = clifford_gate(dim, gates[pick_gate(rng)]) * u;
  return u;
}

SuiteResult prop4(std::uint64_t seed, int trials) {
  Check product("product states have zero mutual mana", 1e-10), local("local Clifford invariance", 1e-10);
  Rng rng(seed);
  const PrimeDim dim(3);
  for (int t = 0; t < pick(trials, 100); ++t) {
    product.deviation(std::abs(mutual_mana(tensor(random_density({3}, rng), random_density({3}, rng)))));
    const DensityState rho = random_density({3, 3}, rng);
    const ComplexMatrix u = kron(random_clifford(dim, rng), random_clifford(dim, rng));
    local.compare(mutual_mana(rho), mutual_mana(apply_unitary(u, rho)));
  }
  return {"prop4", {product.result(), local.result()}};
}

SuiteResult prop5(std::uint64_t seed, int trials) {
  Check eq("mutual mana of output = mana of input", 1e-10), marg("output marginals maximally mixed", 1e-12);
  Rng rng(seed);
  std::uniform_real_distribution<double> angle(0, 2 * pi);
  for (int d : {3, 5}) {
    const PrimeDim dim(d);
    std::vector<BeamsplitterSpec> specs;
    if (d == 3) {
      specs = {qutrit::g1(), qutrit::g3()};
    } else {
      specs = {csum_spec(dim), BeamsplitterSpec(dim, 1, 2, 3, 4), BeamsplitterSpec(dim, 2, 1, 1, 4)};
    }
    for (int t = 0; t < pick(trials, 20); ++t) {
      std::vector<double> th(d - 1);
      for (auto& x : th) x = angle(rng);
      const PhaseVector theta(dim, th);
      for (const auto& spec : specs) {
        const auto [mutual, input] = mutual_mana_coherent_equals_mana(dim, theta, spec);
        eq.compare(input, mutual, "d=" + std::to_string(d) + " " + spec_name(spec));
        const DensityState out = beamsplitter_output(theta.state().projector(), spec);
        const ComplexMatrix mixed = ComplexMatrix::Identity(d, d) / double(d);
        marg.deviation(max_abs_diff(partial_trace(out, Side::a).matrix(), mixed));
        marg.deviation(max_abs_diff(partial_trace(out, Side::b).matrix(), mixed));
      }
    }
  }
  return {"prop5", {eq.result(), marg.result()}};
}

SuiteResult thm1(std::uint64_t seed, int trials) {
  Check conv("mutual mana of output = mana of input", 1e-10), marg("output marginals have zero mana", 1e-10);
  Rng rng(seed);
  for (int t = 0; t < pick(trials, 100); ++t) {
    const DensityState rho = random_density({3}, rng);
    const double m = mana(rho);
    for (const auto& spec : qutrit_specs()) {
      if (!spec.beta_delta_nonzero()) continue;
      const DensityState out = beamsplitter_output(rho, spec);
      conv.compare(m, mutual_mana(out), spec_name(spec));
      marg.deviation(std::abs(mana(partial_trace(out, Side::a))), spec_name(spec));
      marg.deviation(std::abs(mana(partial_trace(out, Side::b))), spec_name(spec));
    }
  }
  return {"thm1", {conv.result(), marg.result()}};
}

SuiteResult appg(std::uint64_t seed, int trials) {
  Check product("pure product upper bound <= 1e-6", 1e-6), ceiling("upper bound <= mana", 1e-12),
      stab("stabilizer inputs need no search", 1e-10);
  Rng rng(seed);
  for (int t = 0; t < pick(trials, 20); ++t) {
    const DensityState rho = tensor(random_pure_state({3}, rng), random_pure_state({3}, rng));
    NonlocalOptions opt;
    opt.seed = derive_seed(seed, t);
    const NonlocalResult r = minimize_local_mana(rho, opt);
    product.deviation(r.value, "trial " + std::to_string(t));
    ceiling.bound(r.value, mana(rho));
    const DensityState mixed = random_density({3, 3}, rng);
    opt.restarts = 2;
    ceiling.bound(minimize_local_mana(mixed, opt).value, mana(mixed));
  }
  const auto stabs = enumerate_stabilizer_pure(PrimeDim(3));
  for (std::size_t i = 0; i < stabs.size(); i += 5) {
    const DensityState rho = tensor(stabs[i].projector(), stabs[(i * 7 + 3) % stabs.size()].projector());
    const NonlocalResult r = minimize_local_mana(rho);
    stab.deviation(std::abs(r.value) + (r.restarts_run == 0 ? 0.0 : 1.0));
  }
  return {"appg", {product.result(), ceiling.result(), stab.result()}};
}

SuiteResult wigner_axioms(std::uint64_t seed, int trials) {
  Check real("imaginary residue", 1e-10), norm("normalization", 1e-10), roundtrip("reconstruction", 1e-10),
      cov("displacement covariance", 1e-10), hudson("stabilizer states nonnegative", 1e-10);
  Rng rng(seed);
  const PrimeDim dim(3);
  std::uniform_int_distribution<int> residue(0, 2);
  for (int t = 0; t < pick(trials, 100); ++t) {
    const DensityState rho = random_density({3}, rng);
    const auto traces = basis_traces(rho.matrix(), rho.dims(), LocalBasis::phase_point);
    real.deviation(traces.imag().cwiseAbs().maxCoeff());
    const WignerTable w = wigner(rho);
    norm.deviation(std::abs(w.values().sum() - 1));
    roundtrip.deviation(max_abs_diff(reconstruct(w).matrix(), rho.matrix()));
    const PhasePoint shift{residue(rng), residue(rng)};
    const ComplexMatrix disp = weyl(dim, shift);
    cov.deviation(max_abs_diff(reconstruct(w.displaced({&shift, 1})).matrix(), conjugate(disp, rho.matrix())));
  }
  for (const auto& s : enumerate_stabilizer_pure(dim))
    hudson.deviation(std::max(0.0, -wigner(s.projector()).values().minCoeff()));
  return {"wigner-axioms", {real.result(), norm.result(), roundtrip.result(), cov.result(), hudson.result()}};
}

SuiteResult clifford_invariance(std::uint64_t seed, int trials) {
  Check m("mana", 1e-10), s("sre2", 1e-10), l("l1", 1e-10);
  Rng rng(seed);
  const PrimeDim dim(3);
  for (int t = 0; t < pick(trials, 100); ++t) {
    const DensityState rho = random_density({3}, rng);
    for (const char* g : {"z", "phase", "fourier"}) {
      const DensityState out = apply_unitary(clifford_gate(dim, g), rho);
      m.compare(mana(rho), mana(out), g);
      s.compare(sre_alpha(rho, 2), sre_alpha(out, 2), g);
      l.compare(l1_magic(rho), l1_magic(out), g);
    }
    const DensityState pair = random_density({3, 3}, rng);
    for (const auto& spec : qutrit_specs()) {
      const DensityState out = apply_unitary(beamsplitter(spec), pair);
      m.compare(mana(pair), mana(out), spec_name(spec));
      s.compare(sre_alpha(pair, 2), sre_alpha(out, 2), spec_name(spec));
      l.compare(l1_magic(pair), l1_magic(out), spec_name(spec));
    }
  }
  return {"clifford-invariance", {m.result(), s.result(), l.result()}};
}

SuiteResult additivity(std::uint64_t seed, int trials) {
  Check m("mana", 1e-10), s("sre2", 1e-10), part("partial trace of product", 1e-14);
  Rng rng(seed);
  for (int t = 0; t < pick(trials, 100); ++t) {
    const DensityState a = random_density({3}, rng), b = random_density({3}, rng);
    const DensityState ab = tensor(a, b);
    m.compare(mana(a) + mana(b), mana(ab));
    s.compare(sre_alpha(a, 2) + sre_alpha(b, 2), sre_alpha(ab, 2));
    part.deviation(max_abs_diff(partial_trace(ab, Side::a).matrix(), a.matrix()));
    part.deviation(max_abs_diff(partial_trace(ab, Side::b).matrix(), b.matrix()));
  }
  return {"additivity", {m.result(), s.result(), part.result()}};
}

SuiteResult table1(std::uint64_t, int) {
  SuiteResult suite{"table1", {}};
  for (auto state : {MagicState::S, MagicState::N, MagicState::T, MagicState::H}) {
    const PureVector psi = named_state(state == MagicState::S   ? "strange"
                                       : state == MagicState::N ? "norrell"
                                       : state == MagicState::T ? "t"
                                                                : "h");
    for (auto measure : {TableMeasure::mutual_information, TableMeasure::mutual_mana, TableMeasure::mutual_l1,
                         TableMeasure::mutual_sre2}) {
      Check c(std::string(to_string(measure)) + "/" + std::string(to_string(state)), 1e-9);
      for (int i = 0; i <= 100; ++i) {
        const double p = i / 100.0;
        const DensityState out = csum_out(psi, p);
        double numeric = 0;
        switch (measure) {
          case TableMeasure::mutual_information: numeric = mutual_information(out); break;
          case TableMeasure::mutual_mana: numeric = mutual_mana(out); break;
          case TableMeasure::mutual_l1: numeric = mutual_l1(out); break;
          default: numeric = mutual_sre(out, 2.0); break;
        }
        c.compare(table1_cell(measure, state, p), numeric, "p=" + std::to_string(p));
      }
      suite.checks.push_back(c.result());
    }
  }
  return suite;
}

SuiteResult oracles(std::uint64_t seed, int trials) {
  Check e1("ex1", 1e-10), e2("ex2", 1e-10), e3("ex3", 1e-10), e4("ex4", 1e-10);
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0, 1), angle(0, 2 * pi);
  std::normal_distribution<double> normal;
  for (int t = 0; t < pick(trials, 200); ++t) {
    double mu[3] = {normal(rng), normal(rng), normal(rng)};
    const double n = std::sqrt(mu[0] * mu[0] + mu[1] * mu[1] + mu[2] * mu[2]);
    for (double& x : mu) x /= n;
    const double p = unit(rng);
    auto r1 = oracle_vs_numeric({OracleName::ex1, {mu[0], mu[1], mu[2], p}, {}, {}}, 1e-10);
    e1.compare(r1.closed_form, r1.numeric);
    auto r2 = oracle_vs_numeric({OracleName::ex2, {angle(rng), angle(rng), p}, {}, {}}, 1e-10);
    e2.compare(r2.closed_form, r2.numeric);
    auto r3 = oracle_vs_numeric({OracleName::ex3, {unit(rng) / std::numbers::sqrt2, p}, {}, {}}, 1e-10);
    e3.compare(r3.closed_form, r3.numeric);
    auto r4 = oracle_vs_numeric({OracleName::ex4, {unit(rng) * pi / 2, p}, {}, {}}, 1e-10);
    e4.compare(r4.closed_form, r4.numeric);
  }
  SuiteResult suite{"oracles", {e1.result(), e2.result(), e3.result(), e4.result()}};
  for (auto name : {OracleName::ex5_set, OracleName::ex6_set})
    for (auto measure : {TableMeasure::mutual_information, TableMeasure::mutual_mana, TableMeasure::mutual_l1,
                         TableMeasure::mutual_sre2}) {
      Check c(std::string(to_string(name)) + "/" + std::string(to_string(measure)), 1e-9);
      const double hi = name == OracleName::ex5_set ? 1 / std::numbers::sqrt2 : pi / 2;
      for (int i = 0; i <= 100; ++i) {
        const double x = i == 100 ? hi : hi * i / 100;
        auto r = oracle_vs_numeric({name, {x}, measure, {}}, 1e-9);
        c.compare(r.closed_form, r.numeric, "x=" + std::to_string(x));
      }
      suite.checks.push_back(c.result());
    }
  return suite;
}

}  // namespace

SuiteResult run_suite(std::string_view name, std::uint64_t seed, int trials) {
  static const std::vector<std::pair<std::string_view, std::function<SuiteResult(std::uint64_t, int)>>> suites{
      {"prop1", prop1},
      {"prop2", prop2},
      {"prop3", prop3},
      {"prop4", prop4},
      {"prop5", prop5},
      {"thm1", thm1},
      {"appg", appg},
      {"wigner-axioms", wigner_axioms},
      {"clifford-invariance", clifford_invariance},
      {"additivity", additivity},
      {"table1", table1},
      {"oracles", oracles},
  };
  for (const auto& [key, fn] : suites)
    if (key == name) return fn(seed, trials);
  throw Error(ErrorKind::BadParams, "unknown suite '" + std::string(name) + "'");
}

}  // namespace qmana
