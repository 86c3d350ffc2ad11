#include "qmana/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qmana/circuits.hpp"
#include "qmana/figures.hpp"
#include "qmana/measures.hpp"
#include "qmana/search.hpp"
#include "qmana/state_io.hpp"
#include "qmana/states.hpp"
#include "qmana/verify.hpp"

namespace qmana {

namespace {

struct GlobalFlags {
  int dim = 3;
  std::string log_base = "e";
  double tol = 1e-10;
  std::uint64_t seed = 42;
  std::string output;
};

std::string fixed8(double v) {
  char buf[64];
  // keep roundoff below the last digit from printing as -0.00000000
  if (std::abs(v) < 5e-9) v = 0;
  std::snprintf(buf, sizeof buf, "%.8f", v);
  return buf;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<double> parse_params(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) {
    double v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || end != item.data() + item.size())
      throw Error(ErrorKind::Parse, "bad parameter '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// Writes to --output when given, else to out.
template <typename Fn>
void emit(const GlobalFlags& g, std::ostream& out, Fn&& write) {
  if (g.output.empty()) {
    write(out);
    return;
  }
  std::ofstream file(g.output, std::ios::binary);
  if (!file) throw Error(ErrorKind::Parse, "cannot open '" + g.output + "' for writing");
  write(file);
  if (!file) throw Error(ErrorKind::Parse, "write to '" + g.output + "' failed");
}

struct MeasureArgs {
  std::string state;
  std::string state_file;
  std::string params;
  std::string measures = "mana";
  std::string beamsplitter;
  double noise = 1;
  int restarts = 32;
};

int cmd_measure(const GlobalFlags& g, const MeasureArgs& a, std::ostream& out) {
  const LogBase base = parse_log_base(g.log_base);
  if (a.state.empty() == a.state_file.empty())
    throw Error(ErrorKind::BadParams, "exactly one of --state and --state-file is required");
  if (!(a.noise >= 0 && a.noise <= 1)) throw Error(ErrorKind::ParamOutOfRange, "--noise must lie in [0, 1]");

  std::optional<DensityState> rho;
  std::string id;
  if (!a.state_file.empty()) {
    LoadedState loaded = load_state_file(a.state_file);
    if (a.noise < 1) {
      const auto n = loaded.state.size();
      rho = DensityState(loaded.state.dims(), a.noise * loaded.state.matrix() +
                                                  (1 - a.noise) * ComplexMatrix::Identity(n, n) / double(n));
    } else {
      rho = loaded.state;
    }
    id = a.state_file;
  } else if (a.state == "maxmixed") {
    rho = maximally_mixed({g.dim});
    id = a.state;
  } else {
    const PureVector psi = named_state(a.state, parse_params(a.params), g.dim);
    rho = noisy_mix(psi, a.noise);
    id = a.state;
  }
  if (!a.beamsplitter.empty()) {
    if (rho->subsystems() != 1) throw Error(ErrorKind::NotBipartite, "--beamsplitter needs a single-system input");
    rho = beamsplitter_output(*rho, parse_beamsplitter(a.beamsplitter, PrimeDim(rho->dims()[0])));
    id += " via " + a.beamsplitter;
  }

  NonlocalOptions nl;
  nl.seed = g.seed;
  nl.restarts = a.restarts;
  const auto names = split_list(a.measures);
  const MeasureReport report = measure_report(*rho, names, base, id, nl);
  for (const auto& [name, value] : report.values()) out << name << " = " << fixed8(value) << '\n';
  return 0;
}

int cmd_verify(const GlobalFlags& g, const std::string& suite, int trials, std::ostream& out) {
  const SuiteResult result = run_suite(suite, g.seed, trials);
  for (const auto& c : result.checks) {
    out << (c.pass ? "pass " : "FAIL ") << result.suite << ": " << c.name << "  max deviation "
        << format_number(c.max_deviation) << " (tol " << format_number(c.tolerance) << ")";
    if (!c.pass && !c.detail.empty()) out << "  [" << c.detail << "]";
    out << '\n';
  }
  out << result.suite << (result.pass() ? ": pass" : ": FAIL") << '\n';
  return result.pass() ? 0 : 1;
}

int cmd_maximize(const GlobalFlags& g, int grid, int refine, bool json, std::ostream& out) {
  const PrimeDim dim(g.dim);
  const LogBase base = parse_log_base(g.log_base);
  const SearchResult r = max_mana_coherent(dim, grid > 0 ? grid : default_grid(dim), refine);
  const double bound = 0.5 * std::log(double(g.dim));
  const bool attained = std::abs(r.best_value - bound) <= g.tol;
  emit(g, out, [&](std::ostream& o) {
    if (json) {
      nlohmann::json j;
      j["dim"] = g.dim;
      j["log_base"] = std::string(to_string(base));
      j["grid"] = r.grid;
      j["best"] = from_nats(r.best_value, base);
      j["grid_best"] = from_nats(r.grid_best, base);
      j["bound"] = from_nats(bound, base);
      j["bound_attained"] = attained;
      j["evaluations"] = r.evaluations;
      auto& arr = j["argmax"] = nlohmann::json::array();
      for (std::size_t i = 0; i < r.argmax.size(); ++i)
        arr.push_back({{"thetas", r.argmax[i].thetas()}, {"value", from_nats(r.argmax_values[i], base)}});
      o << j.dump(2) << '\n';
      return;
    }
    o << "best = " << fixed8(from_nats(r.best_value, base)) << '\n';
    o << "bound = " << fixed8(from_nats(bound, base)) << " (1/2 log d)\n";
    o << "grid = " << r.grid << ", evaluations = " << r.evaluations << '\n';
    o << "argmax (" << r.argmax.size() << "):\n";
    for (std::size_t i = 0; i < r.argmax.size(); ++i) {
      o << " ";
      for (double t : r.argmax[i].thetas()) o << ' ' << fixed8(t / std::numbers::pi) << "pi";
      o << "  " << fixed8(from_nats(r.argmax_values[i], base)) << '\n';
    }
    if (g.dim >= 7) o << "note: bound not certified attained for d >= 7\n";
    else if (!attained) o << "note: bound not attained by the search\n";
  });
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phase-space magic measures for odd-prime qudits", "qmana"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--dim", g.dim, "Odd prime local dimension")->capture_default_str();
  app.add_option("--log-base", g.log_base, "Log base for output: e, 2 or 10")->capture_default_str();
  app.add_option("--tol", g.tol, "Tolerance for the attainment check in maximize")->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--output", g.output, "Output path (default stdout)");

  MeasureArgs ma;
  auto* measure = app.add_subcommand("measure", "Evaluate measures on one state");
  measure->add_option("--state", ma.state, "Named state, or maxmixed");
  measure->add_option("--state-file", ma.state_file, "JSON state file");
  measure->add_option("--params", ma.params, "Comma-separated state parameters");
  measure->add_option("--noise", ma.noise, "Mixing weight p of the state against 1/d")->capture_default_str();
  measure->add_option("--beamsplitter", ma.beamsplitter, "Apply B_G to rho (x) |0><0| first");
  measure->add_option("--measures", ma.measures, "Comma-separated measure names")->capture_default_str();
  measure->add_option("--restarts", ma.restarts, "Restarts for nonlocal_mana")->capture_default_str();

  std::string suite;
  int trials = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--trials", trials, "Trial count (0 = suite default)");

  std::string figure_id;
  auto* figure = app.add_subcommand("figure", "Write figure data as CSV");
  figure->add_option("id", figure_id, "Figure id")->required();

  int grid = 0, refine = 200;
  bool json = false;
  auto* maximize = app.add_subcommand("maximize", "Maximize mana over coherent phase states");
  maximize->add_option("--grid", grid, "Grid points per angle (0 = default)");
  maximize->add_option("--refine", refine, "Refinement iterations")->capture_default_str();
  maximize->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*measure) {
      std::ostringstream buf;
      const int rc = cmd_measure(g, ma, buf);
      emit(g, out, [&](std::ostream& o) { o << buf.str(); });
      return rc;
    }
    if (*verify) return cmd_verify(g, suite, trials, out);
    if (*figure) {
      // Generate first so an invalid id never truncates the target file.
      std::ostringstream buf;
      write_figure(figure_id, buf);
      emit(g, out, [&](std::ostream& o) { o << buf.str(); });
      return 0;
    }
    if (*maximize) return cmd_maximize(g, grid, refine, json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace qmana
