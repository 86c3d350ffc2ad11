#include "qmana/figures.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <numbers>

#include "qmana/circuits.hpp"
#include "qmana/errors.hpp"
#include "qmana/measures.hpp"
#include "qmana/states.hpp"

namespace qmana {

namespace {

constexpr int kPoints = 101;

double grid_point(double lo, double hi, int i) {
  return i == kPoints - 1 ? hi : lo + (hi - lo) * i / (kPoints - 1);
}

DensityState csum_out(const PureVector& psi, double p) {
  return beamsplitter_output(noisy_mix(psi, p), csum_spec(PrimeDim(3)));
}

void row(std::ostream& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out << ',';
    out << format_number(v);
    first = false;
  }
  out << '\n';
}

void four_measures(std::ostream& out, const char* axis, double lo, double hi,
                   const std::function<DensityState(double)>& make) {
  out << axis << ",I,m_l1,m_sre2,m_mana\n";
  for (int i = 0; i < kPoints; ++i) {
    const double x = grid_point(lo, hi, i);
    const DensityState rho = make(x);
    row(out, {x, mutual_information(rho), mutual_l1(rho), mutual_sre(rho, 2.0), mutual_mana(rho)});
  }
}

}  // namespace

std::string format_number(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names{"fig1", "fig2", "fig3a", "fig3b", "fig4a", "fig4b", "fig4c", "fig4d"};
  return names;
}

void write_figure(std::string_view id, std::ostream& out) {
  using std::numbers::pi;
  const double lambda_max = 1 / std::numbers::sqrt2;
  if (id == "fig1" || id == "fig2") {
    const bool first = id == "fig1";
    out << (first ? "p,lambda,m_mana\n" : "p,theta,m_mana\n");
    for (int i = 0; i < kPoints; ++i) {
      const double p = grid_point(0, 1, i);
      for (int j = 0; j < kPoints; ++j) {
        const double x = grid_point(0, first ? lambda_max : pi / 2, j);
        const PureVector psi = named_state(first ? "phi_lambda" : "psi_theta", {&x, 1});
        row(out, {p, x, mutual_mana(csum_out(psi, p))});
      }
    }
    return;
  }
  if (id == "fig3a") {
    four_measures(out, "lambda", 0, lambda_max,
                  [](double x) { return csum_out(named_state("phi_lambda", {&x, 1}), 1.0); });
    return;
  }
  if (id == "fig3b") {
    four_measures(out, "theta", 0, pi / 2, [](double x) { return csum_out(named_state("psi_theta", {&x, 1}), 1.0); });
    return;
  }
  const std::array<std::pair<std::string_view, const char*>, 4> states{
      {{"fig4a", "strange"}, {"fig4b", "norrell"}, {"fig4c", "t"}, {"fig4d", "h"}}};
  for (const auto& [fig, name] : states)
    if (id == fig) {
      const PureVector psi = named_state(name);
      four_measures(out, "p", 0, 1, [&](double p) { return csum_out(psi, p); });
      return;
    }
  throw Error(ErrorKind::BadParams, "unknown figure '" + std::string(id) + "'");
}

}  // namespace qmana
