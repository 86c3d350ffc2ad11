#include "qmana/oracles.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qmana/circuits.hpp"
#include "qmana/errors.hpp"
#include "qmana/measures.hpp"
#include "qmana/states.hpp"

namespace qmana {

namespace {

using std::numbers::pi;
using C = std::complex<double>;

const double s3 = std::sqrt(3.0);

C cis(double angle) { return {std::cos(angle), std::sin(angle)}; }

double xlogx(double x) { return x > 0 ? x * std::log(x) : 0.0; }

double shannon(double a, double b, double c) { return -(xlogx(a) + xlogx(b) + xlogx(c)); }

void check(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::BadParams, what);
}

void check_p(double p) { check(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]"); }

}  // namespace

std::string_view to_string(TableMeasure m) {
  switch (m) {
    case TableMeasure::mutual_information: return "I";
    case TableMeasure::mutual_mana: return "mana";
    case TableMeasure::mutual_l1: return "l1";
    default: return "sre2";
  }
}

std::string_view to_string(MagicState s) {
  switch (s) {
    case MagicState::S: return "S";
    case MagicState::N: return "N";
    case MagicState::T: return "T";
    default: return "H";
  }
}

TableMeasure parse_table_measure(std::string_view text) {
  if (text == "I") return TableMeasure::mutual_information;
  if (text == "mana") return TableMeasure::mutual_mana;
  if (text == "l1") return TableMeasure::mutual_l1;
  if (text == "sre2") return TableMeasure::mutual_sre2;
  throw Error(ErrorKind::BadParams, "measure must be I, mana, l1 or sre2");
}

MagicState parse_magic_state(std::string_view text) {
  if (text == "S") return MagicState::S;
  if (text == "N") return MagicState::N;
  if (text == "T") return MagicState::T;
  if (text == "H") return MagicState::H;
  throw Error(ErrorKind::BadParams, "state must be S, N, T or H");
}

double ex1(double mu0, double mu1, double mu2, double p) {
  check_p(p);
  check(std::abs(mu0 * mu0 + mu1 * mu1 + mu2 * mu2 - 1.0) < 1e-9, "mu must be a unit vector");
  const double q = 1 - p;
  const double sum = std::abs(2 * q + 6 * p * (mu0 * mu0 - mu1 * mu2)) +
                     std::abs(2 * q + 6 * p * (mu1 * mu1 - mu0 * mu2)) +
                     std::abs(2 * q + 6 * p * (mu2 * mu2 - mu0 * mu1)) +
                     std::abs(q + 3 * p * (mu1 * mu1 + 2 * mu0 * mu2)) +
                     std::abs(q + 3 * p * (mu0 * mu0 + 2 * mu1 * mu2)) +
                     std::abs(q + 3 * p * (mu2 * mu2 + 2 * mu0 * mu1));
  return std::log(sum / 9);
}

double ex2(double t1, double t2, double p) {
  check_p(p);
  const double t12 = t1 - t2;
  const double sum = std::abs(1 + 2 * p * std::cos(t1)) + std::abs(1 + 2 * p * std::cos(t2)) +
                     std::abs(1 - p * std::cos(t1) + s3 * p * std::sin(t1)) +
                     std::abs(1 - p * std::cos(t2) + s3 * p * std::sin(t2)) +
                     std::abs(1 - p * std::cos(t1) - s3 * p * std::sin(t1)) +
                     std::abs(1 - p * std::cos(t2) - s3 * p * std::sin(t2)) +
                     std::abs(1 + 2 * p * std::cos(t12)) +
                     std::abs(1 - p * std::cos(t12) + s3 * p * std::sin(t12)) +
                     std::abs(1 - p * std::cos(t12) - s3 * p * std::sin(t12));
  return std::log(sum / 9);
}

double ex3(double lambda, double p) {
  check_p(p);
  check(lambda >= 0 && lambda <= 1 / std::sqrt(2.0) + 1e-12, "lambda must lie in [0, 1/sqrt2]");
  const double r = std::sqrt(std::max(0.0, 1 - 2 * lambda * lambda));
  const double sum = 3 + 6 * p * lambda * (lambda + 2 * r) + 2 * std::abs(1 + p * (2 - 9 * lambda * lambda)) +
                     4 * std::abs(1 - p + 3 * p * lambda * (lambda - r));
  return std::log(sum / 9);
}

double ex4_absolute_form(double theta, double p) {
  check_p(p);
  check(theta >= 0 && theta <= pi / 2 + 1e-12, "theta must lie in [0, pi/2]");
  const double s = std::sin(2 * theta);
  return std::log((7 + 2 * p + std::abs(-2 + 2 * p + 3 * p * s) + 3 * p * s) / 9);
}

double ex4(double theta, double p) {
  check_p(p);
  check(theta >= 0 && theta <= pi / 2 + 1e-12, "theta must lie in [0, pi/2]");
  const double s = std::sin(2 * theta);
  if (p <= 2 / (2 + 3 * s)) return 0.0;
  return std::log((5 + 4 * p + 6 * p * s) / 9);
}

double ex5(TableMeasure m, double lambda) {
  check(lambda >= 0 && lambda <= 1 / std::sqrt(2.0) + 1e-12, "lambda must lie in [0, 1/sqrt2]");
  const double l2 = lambda * lambda;
  const double r = std::sqrt(std::max(0.0, 1 - 2 * l2));
  const C e1 = cis(pi / 3), e2 = cis(2 * pi / 3);
  const double f1 = std::abs(1 - 3 * l2);
  const double f2 = lambda * (lambda + 2 * r);
  const double f3 = std::abs(e1 - (1.0 + e1) * (1.0 + e1) * l2);
  const double f4 = lambda * std::abs(e2 * lambda - (-1.0 + e1) * r);
  const double f5 = lambda * std::abs(lambda - r);
  switch (m) {
    case TableMeasure::mutual_information:
      return -2 * (4 * xlogx(lambda) * lambda + xlogx(1 - 2 * l2));
    case TableMeasure::mutual_sre2: {
      const double num = 1 + f1 * f1 + 2 * f2 * f2 + f3 * f3 + 4 * f4 * f4;
      const double den = 1 + std::pow(f1, 4) + 2 * std::pow(f2, 4) + std::pow(f3, 4) + 4 * std::pow(f4, 4);
      return std::log(num / den);
    }
    case TableMeasure::mutual_l1:
      return -2 * std::log(1 + f1 + f3) + std::log(3 * (1 + f1 + 2 * f2 + f3 + 4 * f4));
    default:
      return std::log((1 + 2 * f1 + 2 * f2 + 4 * f5) / 3);
  }
}

double ex6(TableMeasure m, double theta) {
  check(theta >= 0 && theta <= pi / 2 + 1e-12, "theta must lie in [0, pi/2]");
  const double c = std::cos(theta), s = std::sin(theta);
  const double c2 = c * c, sn2 = s * s, s2t = std::sin(2 * theta);
  const double f = std::abs(c2 - cis(pi / 3) * sn2);
  const double g = std::abs(c2 + cis(2 * pi / 3) * sn2);
  switch (m) {
    case TableMeasure::mutual_information:
      // cos^2 log cos = (1/2) cos^2 log cos^2
      return -4 * 0.5 * (xlogx(c2) + xlogx(sn2));
    case TableMeasure::mutual_sre2:
      return std::log((1 + f * f + g * g + 1.5 * s2t * s2t) /
                      (1 + std::pow(f, 4) + std::pow(g, 4) + 0.375 * std::pow(s2t, 4)));
    case TableMeasure::mutual_l1:
      return -2 * std::log(1 + f + g) + std::log(3 * (1 + f + g + 3 * std::abs(s2t)));
    default:
      return std::log(1 + 2.0 / 3.0 * std::abs(s2t));
  }
}

double ml1_h(double p) {
  check_p(p);
  const double q = 1 + s3;
  const double a = std::abs(q * (1.0 + cis(-2 * pi / 9)) + cis(2 * pi / 9));
  const double b = std::abs(q * (1.0 + cis(-8 * pi / 9)) + cis(8 * pi / 9)) +
                   std::abs(q * (1.0 + cis(4 * pi / 9)) + cis(-4 * pi / 9));
  const double c = std::abs(q * (cis(2 * pi / 9) + cis(2 * pi / 3)) + cis(10 * pi / 9)) +
                   std::abs(q * (cis(2 * pi / 9) + cis(4 * pi / 3)) + cis(4 * pi / 9));
  return -2 * std::log(1 + q * p / 2) +
         std::log(3 + 3 * q * p / 2 + (3 - s3) * p / 2 * a + (3 - s3) * p / 4 * b + (3 - s3) * p / 4 * c);
}

double msre2_h(double p) {
  check_p(p);
  const double q = 1 + s3;
  const double u = std::abs((cis(pi / 9) - cis(2 * pi / 3)) * q - cis(2 * pi / 9));
  const double v = std::abs((cis(5 * pi / 9) - cis(2 * pi / 3)) * q + cis(7 * pi / 9));
  const double p2 = p * p, p4 = p2 * p2;
  const double first =
      2 * std::pow(3 + s3, 4) *
      (24 - (-2 + s3) * u * u * p2 - (-2 + s3) * v * v * p2 +
       2 * (18 + s3 - 2 * s3 * std::cos(pi / 9) + (1 + 3 * s3) * std::cos(2 * pi / 9) + (3 * s3 - 1) * std::sin(pi / 18)) *
           p2);
  const double second =
      3 * (576 * (7 + 4 * s3) + std::pow(u, 4) * p4 + std::pow(v, 4) * p4 +
           2 *
               (1299 + 744 * s3 - 2 * (146 + 85 * s3) * std::cos(pi / 9) + (478 + 278 * s3) * std::cos(2 * pi / 9) +
                (382 + 224 * s3) * std::sin(pi / 18)) *
               p4);
  return std::log(first) - std::log(second);
}

double table1_cell(TableMeasure m, MagicState s, double p) {
  check_p(p);
  const double mixed = shannon((1 - p) / 3, (1 - p) / 3, (1 + 2 * p) / 3);
  switch (m) {
    case TableMeasure::mutual_information:
      switch (s) {
        case MagicState::S: return 2 * shannon((1 - p) / 3, (2 + p) / 6, (2 + p) / 6) - mixed;
        case MagicState::N: return 2 * shannon((2 - p) / 6, (2 - p) / 6, (1 + p) / 3) - mixed;
        case MagicState::T: return 2 * std::log(3.0) - mixed;
        default: {
          const double q = p * (1 + s3);
          return 2 * shannon((2 + q) / 6, (4 - q) / 12, (4 - q) / 12) - mixed;
        }
      }
    case TableMeasure::mutual_mana:
      switch (s) {
        case MagicState::S: return std::max(0.0, std::log((7 + 8 * p) / 9));
        case MagicState::N: return std::max(0.0, std::log((5 + 10 * p) / 9));
        case MagicState::T: return std::max(0.0, std::log((1 + 4 * p * std::cos(pi / 9)) / 3));
        default: return std::max(0.0, std::log((1 + 2 * p * (1 + 3 * s3)) / 9));
      }
    case TableMeasure::mutual_l1:
      switch (s) {
        case MagicState::S:
        case MagicState::N: return std::log((3 + 12 * p) / ((1 + p) * (1 + p)));
        case MagicState::T: return std::log(3 + 6 * s3 * p);
        default: return ml1_h(p);
      }
    default:
      switch (s) {
        case MagicState::S:
        case MagicState::N: return std::log((2 + 4 * p * p) / (2 + std::pow(p, 4)));
        case MagicState::T: return std::log((3 + 6 * p * p) / (3 + 2 * std::pow(p, 4)));
        default: return msre2_h(p);
      }
  }
}

double p_crit(MagicState s) {
  switch (s) {
    case MagicState::S: return 0.25;
    case MagicState::N: return 0.4;
    case MagicState::T: return 1 / (2 * std::cos(pi / 9));
    default: return 4 / (1 + 3 * s3);
  }
}

OracleName parse_oracle_name(std::string_view text) {
  for (auto n : {OracleName::ex1, OracleName::ex2, OracleName::ex3, OracleName::ex4, OracleName::ex5_set,
                 OracleName::ex6_set, OracleName::table1_cell, OracleName::ml1_h, OracleName::msre2_h,
                 OracleName::p_crit})
    if (to_string(n) == text) return n;
  throw Error(ErrorKind::BadParams, "unknown oracle '" + std::string(text) + "'");
}

std::string_view to_string(OracleName name) {
  switch (name) {
    case OracleName::ex1: return "ex1";
    case OracleName::ex2: return "ex2";
    case OracleName::ex3: return "ex3";
    case OracleName::ex4: return "ex4";
    case OracleName::ex5_set: return "ex5_set";
    case OracleName::ex6_set: return "ex6_set";
    case OracleName::table1_cell: return "table1_cell";
    case OracleName::ml1_h: return "ml1_h";
    case OracleName::msre2_h: return "msre2_h";
    default: return "p_crit";
  }
}

namespace {

void expect_params(const OracleId& id, std::size_t n) {
  if (id.params.size() != n)
    throw Error(ErrorKind::BadParams, std::string(to_string(id.name)) + " takes " + std::to_string(n) + " parameter(s)");
}

TableMeasure need_measure(const OracleId& id) {
  if (!id.measure) throw Error(ErrorKind::BadParams, std::string(to_string(id.name)) + " needs a measure label");
  return *id.measure;
}

MagicState need_state(const OracleId& id) {
  if (!id.state) throw Error(ErrorKind::BadParams, std::string(to_string(id.name)) + " needs a state label");
  return *id.state;
}

PureVector magic_vector(MagicState s) {
  switch (s) {
    case MagicState::S: return named_state("strange");
    case MagicState::N: return named_state("norrell");
    case MagicState::T: return named_state("t");
    default: return named_state("h");
  }
}

DensityState csum_out(const PureVector& psi, double p) {
  return beamsplitter_output(noisy_mix(psi, p), csum_spec(PrimeDim(3)));
}

double numeric_measure(TableMeasure m, const DensityState& out) {
  switch (m) {
    case TableMeasure::mutual_information: return mutual_information(out);
    case TableMeasure::mutual_mana: return mutual_mana(out);
    case TableMeasure::mutual_l1: return mutual_l1(out);
    default: return mutual_sre(out, 2.0);
  }
}

}  // namespace

double closed_form(const OracleId& id) {
  const auto& q = id.params;
  switch (id.name) {
    case OracleName::ex1: expect_params(id, 4); return ex1(q[0], q[1], q[2], q[3]);
    case OracleName::ex2: expect_params(id, 3); return ex2(q[0], q[1], q[2]);
    case OracleName::ex3: expect_params(id, 2); return ex3(q[0], q[1]);
    case OracleName::ex4: expect_params(id, 2); return ex4(q[0], q[1]);
    case OracleName::ex5_set: expect_params(id, 1); return ex5(need_measure(id), q[0]);
    case OracleName::ex6_set: expect_params(id, 1); return ex6(need_measure(id), q[0]);
    case OracleName::table1_cell: expect_params(id, 1); return table1_cell(need_measure(id), need_state(id), q[0]);
    case OracleName::ml1_h: expect_params(id, 1); return ml1_h(q[0]);
    case OracleName::msre2_h: expect_params(id, 1); return msre2_h(q[0]);
    default: expect_params(id, 0); return p_crit(need_state(id));
  }
}

double numeric_mana_threshold(MagicState s, double level, double p_tolerance) {
  const PureVector psi = magic_vector(s);
  auto above = [&](double p) { return mutual_mana(csum_out(psi, p)) > level; };
  double lo = 0.0, hi = 1.0;
  if (above(lo)) return 0.0;
  if (!above(hi)) return 1.0;
  while (hi - lo > p_tolerance) {
    const double mid = 0.5 * (lo + hi);
    (above(mid) ? hi : lo) = mid;
  }
  return hi;
}

OracleComparison oracle_vs_numeric(const OracleId& id, double tol) {
  OracleComparison c;
  c.closed_form = closed_form(id);
  const auto& q = id.params;
  switch (id.name) {
    case OracleName::ex1: {
      ComplexVector v(3);
      v << q[0], q[1], q[2];
      c.numeric = mutual_mana(csum_out(PureVector(v / v.norm()), q[3]));
      break;
    }
    case OracleName::ex2: {
      const double phases[] = {q[0], q[1]};
      c.numeric = mutual_mana(csum_out(named_state("max_coherent", phases), q[2]));
      break;
    }
    case OracleName::ex3: c.numeric = mutual_mana(csum_out(named_state("phi_lambda", {&q[0], 1}), q[1])); break;
    case OracleName::ex4: c.numeric = mutual_mana(csum_out(named_state("psi_theta", {&q[0], 1}), q[1])); break;
    case OracleName::ex5_set:
      c.numeric = numeric_measure(*id.measure, csum_out(named_state("phi_lambda", {&q[0], 1}), 1.0));
      break;
    case OracleName::ex6_set:
      c.numeric = numeric_measure(*id.measure, csum_out(named_state("psi_theta", {&q[0], 1}), 1.0));
      break;
    case OracleName::table1_cell:
      c.numeric = numeric_measure(*id.measure, csum_out(magic_vector(*id.state), q[0]));
      break;
    case OracleName::ml1_h: c.numeric = mutual_l1(csum_out(magic_vector(MagicState::H), q[0])); break;
    case OracleName::msre2_h: c.numeric = mutual_sre(csum_out(magic_vector(MagicState::H), q[0]), 2.0); break;
    default: c.numeric = numeric_mana_threshold(*id.state); break;
  }
  c.difference = std::abs(c.closed_form - c.numeric);
  c.pass = c.difference <= tol;
  return c;
}

}  // namespace qmana
