#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace qmana {

enum class TableMeasure { mutual_information, mutual_mana, mutual_l1, mutual_sre2 };
enum class MagicState { S, N, T, H };

std::string_view to_string(TableMeasure m);
std::string_view to_string(MagicState s);
TableMeasure parse_table_measure(std::string_view text);
MagicState parse_magic_state(std::string_view text);

// Closed forms for the CSUM_3 output of p |phi><phi| + (1-p) 1/3.
double ex1(double mu0, double mu1, double mu2, double p);
double ex2(double theta1, double theta2, double p);
double ex3(double lambda, double p);
// Piecewise form; ex4_absolute_form is the unsplit expression.
double ex4(double theta, double p);
double ex4_absolute_form(double theta, double p);
// Pure CSUM_3 outputs of |Phi_lambda> and |psi_theta>.
double ex5(TableMeasure m, double lambda);
double ex6(TableMeasure m, double theta);
double table1_cell(TableMeasure m, MagicState s, double p);
double ml1_h(double p);
double msre2_h(double p);
double p_crit(MagicState s);

enum class OracleName { ex1, ex2, ex3, ex4, ex5_set, ex6_set, table1_cell, ml1_h, msre2_h, p_crit };

OracleName parse_oracle_name(std::string_view text);
std::string_view to_string(OracleName name);

struct OracleId {
  OracleName name;
  std::vector<double> params;
  std::optional<TableMeasure> measure;
  std::optional<MagicState> state;
};

double closed_form(const OracleId& id);

struct OracleComparison {
  double closed_form = 0;
  double numeric = 0;
  double difference = 0;
  bool pass = false;
};

// Builds the corresponding state, pushes it through CSUM_3 and evaluates the numeric measure.
// For p_crit the numeric side is the bisection threshold of the mutual mana.
OracleComparison oracle_vs_numeric(const OracleId& id, double tol);

// Smallest p at which the numeric mutual mana of the CSUM_3 output exceeds level, by bisection.
double numeric_mana_threshold(MagicState s, double level = 1e-9, double p_tolerance = 1e-7);

}  // namespace qmana
