#include <doctest.h>

#include <cmath>
#include <numbers>

#include "brute.hpp"
#include "qmana/circuits.hpp"
#include "qmana/errors.hpp"
#include "qmana/measures.hpp"
#include "qmana/oracles.hpp"
#include "qmana/states.hpp"

using namespace qmana;
using std::numbers::pi;

namespace {

const double s3 = std::sqrt(3.0);

brute::Mat csum_out(const char* name, double p) {
  return brute::csum_output(noisy_mix(named_state(name), p).matrix(), 3);
}

}  // namespace

TEST_CASE("closed forms at reference points") {
  CHECK(ex3(1 / std::sqrt(2.0), 1) == doctest::Approx(std::log(5.0 / 3)).epsilon(1e-14));
  CHECK(std::abs(ex4(pi / 4, 0.4)) < 1e-15);
  CHECK(std::abs(ex4_absolute_form(pi / 4, 0.4)) < 1e-15);
  CHECK(p_crit(MagicState::H) == doctest::Approx(0.645562).epsilon(1e-6));
  CHECK(p_crit(MagicState::T) == doctest::Approx(1 / (2 * std::cos(pi / 9))).epsilon(1e-15));
  CHECK(std::abs(ex5(TableMeasure::mutual_mana, 1 / s3)) < 1e-14);
  CHECK(ex6(TableMeasure::mutual_information, pi / 4) == doctest::Approx(2 * std::log(2)).epsilon(1e-14));
  CHECK(table1_cell(TableMeasure::mutual_mana, MagicState::S, 1) == doctest::Approx(std::log(15.0 / 9)));
  CHECK(table1_cell(TableMeasure::mutual_l1, MagicState::H, 0.3) == doctest::Approx(ml1_h(0.3)));

  const OracleId id{OracleName::table1_cell, {0.6}, TableMeasure::mutual_mana, MagicState::T};
  CHECK(closed_form(id) == doctest::Approx(std::max(0.0, std::log((1 + 2.4 * std::cos(pi / 9)) / 3))));
  CHECK(parse_oracle_name("ex5_set") == OracleName::ex5_set);
  CHECK(parse_magic_state("N") == MagicState::N);
  CHECK(parse_table_measure("sre2") == TableMeasure::mutual_sre2);
  CHECK_THROWS_AS(ex3(0.8, 0.5), Error);
  CHECK_THROWS_AS(ex1(1, 0, 0, 1.2), Error);
  CHECK_THROWS_AS(closed_form(OracleId{OracleName::table1_cell, {0.5}, {}, {}}), Error);
}

TEST_CASE("piecewise and absolute forms agree") {
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      const double theta = pi / 2 * i / 20, p = j / 20.0;
      CHECK(ex4(theta, p) == doctest::Approx(ex4_absolute_form(theta, p)).scale(1).epsilon(1e-13));
    }
}

TEST_CASE("table cells against brute-force pipeline") {
  for (const char* name : {"strange", "norrell", "t"}) {
    const MagicState s = name[0] == 's' ? MagicState::S : name[0] == 'n' ? MagicState::N : MagicState::T;
    for (int i = 0; i <= 5; ++i) {
      const double p = i / 5.0;
      const brute::Mat rho = csum_out(name, p);
      CHECK(table1_cell(TableMeasure::mutual_mana, s, p) ==
            doctest::Approx(brute::mutual_mana(rho, 3)).scale(1).epsilon(1e-12));
      const double l1 = std::log(brute::l1(rho, 3, 2)) - std::log(brute::l1(brute::ptrace(rho, 3, true), 3, 1)) -
                        std::log(brute::l1(brute::ptrace(rho, 3, false), 3, 1));
      CHECK(table1_cell(TableMeasure::mutual_l1, s, p) == doctest::Approx(l1).scale(1).epsilon(1e-12));
      const double mi = brute::entropy(brute::ptrace(rho, 3, true)) + brute::entropy(brute::ptrace(rho, 3, false)) -
                        brute::entropy(rho);
      CHECK(table1_cell(TableMeasure::mutual_information, s, p) == doctest::Approx(mi).scale(1).epsilon(1e-10));
    }
  }
}

TEST_CASE("H-state columns") {
  for (int i = 0; i <= 5; ++i) {
    const double p = i / 5.0;
    const brute::Mat rho = csum_out("h", p);
    const double l1 = std::log(brute::l1(rho, 3, 2)) - std::log(brute::l1(brute::ptrace(rho, 3, true), 3, 1)) -
                      std::log(brute::l1(brute::ptrace(rho, 3, false), 3, 1));
    CHECK(ml1_h(p) == doctest::Approx(l1).scale(1).epsilon(1e-12));
    // the printed SRE expression tracks the global corrected entropy of the output
    const DensityState out = beamsplitter_output(noisy_mix(named_state("h"), p), csum_spec(PrimeDim(3)));
    CHECK(msre2_h(p) == doctest::Approx(sre_alpha(out, 2, SreConvention::renyi_corrected)).scale(1).epsilon(1e-10));
  }
  // |H> has three negative Wigner entries, so its mana is not log((1 + 2(1+3 sqrt3))/9)
  const auto w = brute::wigner(named_state("h").projector().matrix(), 3, 1);
  int negative = 0;
  for (double x : w) negative += x < -1e-12;
  CHECK(negative == 3);
  CHECK(mana(named_state("h").projector()) == doctest::Approx(std::log(1.53526)).epsilon(1e-5));
}

TEST_CASE("numeric thresholds") {
  CHECK(numeric_mana_threshold(MagicState::S) == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(numeric_mana_threshold(MagicState::N) == doctest::Approx(0.4).epsilon(1e-6));
  CHECK(numeric_mana_threshold(MagicState::T) == doctest::Approx(p_crit(MagicState::T)).epsilon(1e-6));

  // independent bisection on the brute-force mutual mana
  double lo = 0, hi = 1;
  for (int i = 0; i < 30; ++i) {
    const double mid = 0.5 * (lo + hi);
    (brute::mutual_mana(csum_out("h", mid), 3) > 1e-9 ? hi : lo) = mid;
  }
  CHECK(numeric_mana_threshold(MagicState::H) == doctest::Approx(hi).epsilon(1e-6));
}

TEST_CASE("oracle comparisons") {
  const OracleComparison c = oracle_vs_numeric({OracleName::ex2, {0.3, 1.1, 0.7}, {}, {}}, 1e-10);
  CHECK(c.pass);
  CHECK(c.difference == doctest::Approx(std::abs(c.closed_form - c.numeric)));
  const OracleComparison t = oracle_vs_numeric({OracleName::p_crit, {}, {}, MagicState::T}, 1e-5);
  CHECK(t.pass);
  const OracleComparison h = oracle_vs_numeric({OracleName::p_crit, {}, {}, MagicState::H}, 1e-3);
  CHECK(!h.pass);
  CHECK(h.closed_form - h.numeric > 0.2);
}
