// ftcluster: command-line front end for the verified-cluster fault-tolerance
// library. Subcommands: simulate, threshold, resources, sweep, oracle-check.
// Every command is deterministic given its full configuration (seed
// included); one command writes at most one output artifact.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ftc/analytic.hpp"
#include "ftc/gadgets.hpp"
#include "ftc/montecarlo.hpp"
#include "ftc/report.hpp"
#include "ftc/resources.hpp"
#include "ftc/statevector.hpp"

namespace {

using ftc::Rational;

// ---------------------------------------------------------------------------
// Flat key=value config files. Flags override the file, the file overrides
// defaults; unknown keys are rejected. Keys equal the long flag names without
// the leading dashes (e.g. "pe=0.001", "tau-m=0.1").
// ---------------------------------------------------------------------------
struct ConfigBinder {
  struct Bind {
    CLI::Option* opt = nullptr;
    std::function<void(const std::string&)> set;
  };
  std::map<std::string, Bind> binds;

  static std::string key_of(const std::string& flag) { return flag.substr(2); }

  template <typename T>
  CLI::Option* add(CLI::App* app, const std::string& flag, T& var, const std::string& desc) {
    CLI::Option* opt = app->add_option(flag, var, desc);
    binds[key_of(flag)] = {opt, [&var, flag](const std::string& text) {
                             std::istringstream in(text);
                             T value{};
                             in >> value;
                             if (in.fail() || !in.eof())
                               throw CLI::ValidationError("config value for " + flag +
                                                          " is not parseable: '" + text + "'");
                             var = value;
                           }};
    return opt;
  }

  CLI::Option* add(CLI::App* app, const std::string& flag, std::string& var,
                   const std::string& desc) {
    CLI::Option* opt = app->add_option(flag, var, desc);
    binds[key_of(flag)] = {opt, [&var](const std::string& text) { var = text; }};
    return opt;
  }

  CLI::Option* add_list(CLI::App* app, const std::string& flag, std::vector<std::string>& var,
                        const std::string& desc) {
    CLI::Option* opt = app->add_option(flag, var, desc)->delimiter(',');
    binds[key_of(flag)] = {opt, [&var](const std::string& text) {
                             var.clear();
                             std::istringstream in(text);
                             std::string item;
                             while (std::getline(in, item, ',')) var.push_back(item);
                           }};
    return opt;
  }

  CLI::Option* add_flag(CLI::App* app, const std::string& flag, bool& var,
                        const std::string& desc) {
    CLI::Option* opt = app->add_flag(flag, var, desc);
    binds[key_of(flag)] = {opt, [&var, flag](const std::string& text) {
                             if (text == "1" || text == "true")
                               var = true;
                             else if (text == "0" || text == "false")
                               var = false;
                             else
                               throw CLI::ValidationError("config value for " + flag +
                                                          " must be a boolean: '" + text + "'");
                           }};
    return opt;
  }

  /// Applies `path` as defaults: only keys whose flag was not given on the
  /// command line take effect.
  void apply_file(const std::string& path) const {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot read config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw CLI::ValidationError("config line " + std::to_string(lineno) +
                                   ": expected key=value");
      const std::string key = line.substr(first, eq - first);
      const std::string value = line.substr(eq + 1);
      const auto it = binds.find(key);
      if (it == binds.end())
        throw CLI::ValidationError("config line " + std::to_string(lineno) +
                                   ": unknown key '" + key + "'");
      if (it->second.opt->count() == 0) it->second.set(value);
    }
  }
};

/// N flags use explicit decimal-exponent notation ("1e20"); the value is held
/// as log10(N) so computation sizes never touch native integers.
double parse_n_token(const std::string& token) {
  if (token.rfind("1e", 0) != 0 && token.rfind("1E", 0) != 0)
    throw CLI::ValidationError("N must use the 1e<exponent> form, got '" + token + "'");
  const std::string exp = token.substr(2);
  std::istringstream in(exp);
  double log10_n = 0.0;
  in >> log10_n;
  if (in.fail() || !in.eof())
    throw CLI::ValidationError("bad N exponent '" + exp + "'");
  return log10_n;
}

uint64_t default_seed() {
  if (const char* env = std::getenv("FTCLUSTER_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("FTCLUSTER_SEED is not an unsigned integer");
    }
  }
  return 0;
}

void write_artifact(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

ftc::NoiseModel build_model(double pe, double pm, bool pm_given, double tau_m, int n_steps) {
  ftc::NoiseModel model = ftc::NoiseModel::uniform_depolarizing(pe);
  if (pm_given) model.p_m = pm;
  model.tau_m = tau_m;
  model.n_steps = n_steps;
  model.validate();
  return model;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------
struct SimulateArgs {
  std::string gadget;
  int level = 1;
  double pe = 0.001;
  double pm = 0.0;
  double tau_m = 0.0;
  int n_steps = 0;
  long trials = 10000;
  uint64_t seed = 0;
  int jobs = 1;
  std::string mode = "faithful";
  std::string out;
  std::string format = "csv";
  CLI::Option* pm_opt = nullptr;
};

ftc::SimMode parse_mode(const std::string& mode) {
  if (mode == "faithful") return ftc::SimMode::Faithful;
  if (mode == "fast") return ftc::SimMode::Fast;
  throw CLI::ValidationError("--mode must be faithful or fast");
}

int cmd_simulate(const SimulateArgs& a) {
  if (a.gadget.empty()) throw CLI::ValidationError("--gadget is required");
  if (a.out.empty()) throw CLI::ValidationError("--out is required");
  ftc::TrialPlan plan;
  plan.gadget = a.gadget;
  plan.level = a.level;
  plan.model = build_model(a.pe, a.pm, a.pm_opt->count() > 0, a.tau_m, a.n_steps);
  plan.trials = a.trials;
  plan.master_seed = a.seed;
  plan.mode = parse_mode(a.mode);
  plan.jobs = a.jobs;
  const ftc::EstimateReport report = ftc::run_trials(plan);

  const std::vector<ftc::EstimateReport> rows{report};
  write_artifact(a.out, a.format == "json" ? ftc::estimate_json(rows) : ftc::estimate_csv(rows));

  std::cout << a.gadget << " level " << a.level << " p_e=" << ftc::format_double(a.pe)
            << ": p_hat=" << ftc::format_double(report.p_hat) << " (95% Wilson ["
            << ftc::format_double(report.ci_low) << ", " << ftc::format_double(report.ci_high)
            << "]), cond_err=" << ftc::format_double(report.conditional_logical_error)
            << " over " << report.trial_count << " trials\n";
  return 0;
}

// ---------------------------------------------------------------------------
// threshold
// ---------------------------------------------------------------------------
struct ThresholdArgs {
  double pe = 0.001;
  double pm = 0.0;
  double tau_m = 0.0;
  int n_steps = 0;
  std::string n_token;
  double d_override = 0.0;
  bool empirical = false;
  double low = 0.02;
  double high = 0.08;
  double tol = 0.005;
  long trials = 20000;
  uint64_t seed = 0;
  int jobs = 1;
  std::string out;
  CLI::Option* pm_opt = nullptr;
  CLI::Option* d_opt = nullptr;
  CLI::Option* n_opt = nullptr;
};

std::string describe_d(double d) {
  // The uniform depolarizing table gives D = 17/15 exactly; prefer the
  // rational form when it matches.
  if (std::abs(d - 17.0 / 15.0) < 1e-12) return "17/15";
  return ftc::format_double(d);
}

int cmd_threshold(const ThresholdArgs& a) {
  std::ostringstream report;
  double d = 0.0;
  if (a.d_opt->count() > 0) {
    d = a.d_override;
    if (d <= 0) throw CLI::ValidationError("--D must be positive");
    char line[64];
    std::snprintf(line, sizeof line, "D=%s p_th=%.5f\n", describe_d(d).c_str(),
                  1.0 / (ftc::ThresholdParams::kCombinatorial * d));
    report << line;
  } else {
    const ftc::NoiseModel model =
        build_model(a.pe, a.pm, a.pm_opt->count() > 0, a.tau_m, a.n_steps);
    const ftc::ThresholdParams params = ftc::threshold(model);
    d = params.D;
    char line[64];
    std::snprintf(line, sizeof line, "D=%s p_th=%.4f\n", describe_d(d).c_str(), params.p_th);
    report << line;
  }

  if (a.n_opt->count() > 0) {
    const double log10_n = parse_n_token(a.n_token);
    const double mem = ftc::memory_threshold(log10_n, a.n_steps, a.tau_m);
    const double mem_adj = ftc::memory_threshold_adjusted(log10_n, a.n_steps, a.tau_m, d);
    report << "memory-limited p_th(N=" << a.n_token << ", n=" << a.n_steps
           << ", tau_m=" << ftc::format_double(a.tau_m) << ") = " << ftc::format_double(mem)
           << " (chain-adjusted " << ftc::format_double(mem_adj) << ")\n";
  }

  if (a.empirical) {
    const ftc::ThresholdBracket bracket =
        ftc::find_empirical_threshold(a.low, a.high, a.trials, a.seed, a.tol, a.jobs);
    report << "empirical bracket [" << ftc::format_double(bracket.low) << ", "
           << ftc::format_double(bracket.high) << "] (trials=" << a.trials
           << " seed=" << a.seed << ")\n";
  }

  std::cout << report.str();
  if (!a.out.empty()) write_artifact(a.out, report.str());
  return 0;
}

// ---------------------------------------------------------------------------
// resources
// ---------------------------------------------------------------------------
struct ResourcesArgs {
  std::vector<std::string> pe_list{"0.01", "0.001"};
  std::vector<std::string> n_list;
  std::string success_table;  // "unit" or a file path; required
  std::string overlay;
  std::string out;
  std::string format = "csv";
};

ftc::SuccessTable load_success_table(const std::string& arg) {
  if (arg == "unit") return ftc::SuccessTable::unit(2);
  std::ifstream in(arg);
  if (!in) throw CLI::ValidationError("cannot read success table '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return ftc::SuccessTable::parse(buf.str());
}

int cmd_resources(const ResourcesArgs& a) {
  if (a.success_table.empty())
    throw CLI::ValidationError("--success-table is required ('unit' or a file path)");
  std::vector<double> pe;
  for (const auto& tok : a.pe_list) {
    std::istringstream in(tok);
    double v = 0.0;
    in >> v;
    if (in.fail() || !in.eof()) throw CLI::ValidationError("bad --pe value '" + tok + "'");
    pe.push_back(v);
  }
  std::vector<double> log10_n;
  if (a.n_list.empty()) {
    for (int e = 1; e <= 50; ++e) log10_n.push_back(double(e));
  } else {
    for (const auto& tok : a.n_list) log10_n.push_back(parse_n_token(tok));
  }
  const ftc::SuccessTable table = load_success_table(a.success_table);
  const std::vector<ftc::CurveRow> rows = ftc::resource_curve(log10_n, pe, table);

  std::string content;
  if (!a.overlay.empty()) {
    if (a.format != "csv")
      throw CLI::ValidationError("--overlay merging is defined for --format csv only");
    std::ifstream in(a.overlay);
    if (!in) throw CLI::ValidationError("cannot read overlay file '" + a.overlay + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    content = ftc::resource_csv_with_overlay(rows, ftc::parse_overlay_csv(buf.str()));
  } else {
    content = a.format == "json" ? ftc::resource_json(rows) : ftc::resource_csv(rows);
  }

  if (a.out.empty())
    std::cout << content;
  else
    write_artifact(a.out, content);
  return 0;
}

// ---------------------------------------------------------------------------
// sweep: Monte Carlo logical-error curve over a p_e grid, one artifact with
// the grid in its p_e column.
// ---------------------------------------------------------------------------
struct SweepArgs {
  std::string gadget;
  int level = 1;
  std::vector<std::string> pe_list;
  long trials = 10000;
  uint64_t seed = 0;
  int jobs = 1;
  std::string mode = "faithful";
  std::string out;
  std::string format = "csv";
};

int cmd_sweep(const SweepArgs& a) {
  if (a.gadget.empty()) throw CLI::ValidationError("--gadget is required");
  if (a.pe_list.empty()) throw CLI::ValidationError("--pe grid is required");
  if (a.out.empty()) throw CLI::ValidationError("--out is required");
  std::vector<double> grid;
  for (const auto& tok : a.pe_list) {
    std::istringstream in(tok);
    double v = 0.0;
    in >> v;
    if (in.fail() || !in.eof()) throw CLI::ValidationError("bad --pe value '" + tok + "'");
    grid.push_back(v);
  }
  const auto rows = ftc::estimate_logical_error_curve(a.gadget, a.level, grid, a.trials, a.seed,
                                                      parse_mode(a.mode), a.jobs);
  write_artifact(a.out, a.format == "json" ? ftc::estimate_json(rows) : ftc::estimate_csv(rows));
  for (const auto& r : rows)
    std::cout << "p_e=" << ftc::format_double(r.p_e) << " p_hat=" << ftc::format_double(r.p_hat)
              << " cond_err=" << ftc::format_double(r.conditional_logical_error) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// oracle-check: bundled correctness suites; exit 0 iff all pass.
// ---------------------------------------------------------------------------
struct OracleArgs {
  bool quick = false;
  uint64_t seed = 12345;
  int jobs = 1;
  long trials = 0;  // 0 = suite default
  bool corrupt_phase = false;  // negative-control hook
};

struct RandomCircuit {
  std::size_t n = 0;
  struct Op {
    ftc::Gate g;
    std::size_t a = 0, b = 0;
    bool two = false;
  };
  std::vector<Op> ops;
};

RandomCircuit random_clifford_circuit(ftc::Rng& rng, std::size_t n, std::size_t depth) {
  RandomCircuit c;
  c.n = n;
  std::uniform_int_distribution<int> pick_gate(0, 5);
  std::uniform_int_distribution<std::size_t> pick_q(0, n - 1);
  for (std::size_t d = 0; d < depth; ++d) {
    const ftc::Gate g = static_cast<ftc::Gate>(pick_gate(rng));
    RandomCircuit::Op op{g, pick_q(rng), 0, ftc::gate_is_two_qubit(g)};
    if (op.two) {
      do {
        op.b = pick_q(rng);
      } while (op.b == op.a);
    }
    c.ops.push_back(op);
  }
  return c;
}

std::string describe_circuit(const RandomCircuit& c) {
  std::ostringstream out;
  out << c.n << " qubits:";
  for (const auto& op : c.ops) {
    out << ' ' << ftc::gate_name(op.g) << '(' << op.a;
    if (op.two) out << ',' << op.b;
    out << ')';
  }
  return out.str();
}

double tableau_vs_statevector_tvd(const RandomCircuit& c, long shots, ftc::Rng& rng,
                                  bool corrupt_phase) {
  ftc::StateVector sv(c.n);
  for (const auto& op : c.ops) {
    ftc::Gate g = op.g;
    if (corrupt_phase && g == ftc::Gate::S) {
      // Negative-control hook: apply S^3 = S^-1 on the oracle side so a
      // deliberate phase-convention mismatch must be caught.
      sv.apply(ftc::Gate::S, op.a);
      sv.apply(ftc::Gate::S, op.a);
    }
    if (op.two)
      sv.apply(g, op.a, op.b);
    else
      sv.apply(g, op.a);
  }
  // Compare on a 3-qubit marginal so the sampling noise of `shots` draws
  // stays well under the TVD tolerance (the full 2^n distribution would be
  // noise-dominated at 10^4 shots).
  std::vector<std::size_t> window;
  for (std::size_t q = 0; q < std::min<std::size_t>(3, c.n); ++q) window.push_back(q);
  const std::vector<double> exact = sv.marginal(window);

  std::vector<long> counts(exact.size(), 0);
  for (long s = 0; s < shots; ++s) {
    ftc::StabilizerState tab(c.n);
    for (const auto& op : c.ops) {
      if (op.two)
        tab.apply(op.g, op.a, op.b);
      else
        tab.apply(op.g, op.a);
    }
    std::size_t outcome = 0;
    for (std::size_t k = 0; k < window.size(); ++k) {
      const auto obs = ftc::PauliString::single(c.n, window[k], 'Z');
      if (tab.measure(obs, rng) < 0) outcome |= std::size_t(1) << k;
    }
    ++counts[outcome];
  }

  double tvd = 0.0;
  for (std::size_t k = 0; k < exact.size(); ++k)
    tvd += std::abs(double(counts[k]) / double(shots) - exact[k]);
  return 0.5 * tvd;
}

/// Exact cross-check on the same circuit: deterministic tableau Pauli
/// expectations must equal the state-vector values bit-for-bit. This is the
/// phase-sensitive half of suite 1 (a sampled Z-basis marginal is blind to
/// diagonal phase mistakes such as S vs S^-1).
bool tableau_vs_statevector_expectations(const RandomCircuit& c, ftc::Rng& rng,
                                         bool corrupt_phase) {
  ftc::StateVector sv(c.n);
  ftc::StabilizerState tab(c.n);
  for (const auto& op : c.ops) {
    if (corrupt_phase && !op.two && op.g == ftc::Gate::S) {
      sv.apply(ftc::Gate::S, op.a);
      sv.apply(ftc::Gate::S, op.a);
    }
    if (op.two) {
      sv.apply(op.g, op.a, op.b);
      tab.apply(op.g, op.a, op.b);
    } else {
      sv.apply(op.g, op.a);
      tab.apply(op.g, op.a);
    }
  }
  std::uniform_int_distribution<int> bit(0, 1);
  for (int k = 0; k < 24; ++k) {
    ftc::PauliString obs(c.n);
    std::size_t y_sites = 0;
    for (std::size_t q = 0; q < c.n; ++q) {
      obs.set_x(q, bit(rng));
      obs.set_z(q, bit(rng));
      if (obs.x(q) && obs.z(q)) ++y_sites;
    }
    obs.set_phase(uint8_t(y_sites & 3));  // Hermitian: i^{#Y} X^x Z^z
    const double sv_exp = sv.expectation(obs);
    const double tab_exp = double(tab.expectation_ignoring_frame(obs));
    if (std::abs(sv_exp - tab_exp) > 1e-9) return false;
  }
  return true;
}

int cmd_oracle_check(const OracleArgs& a) {
  bool all_pass = true;

  // Suite 1: tableau vs brute-force state vector on random Clifford circuits.
  {
    const int circuits = a.quick ? 15 : 100;
    const long shots = a.trials > 0 ? a.trials : (a.quick ? 2000 : 10000);
    const double tol = 0.02 * std::sqrt(10000.0 / double(shots));
    bool pass = true;
    std::string failure;
    for (int i = 0; i < circuits && pass; ++i) {
      ftc::Rng rng(ftc::derive_seed(a.seed, uint64_t(i)));
      std::uniform_int_distribution<std::size_t> pick_n(2, a.quick ? 6 : 10);
      const std::size_t n = pick_n(rng);
      const RandomCircuit c = random_clifford_circuit(rng, n, 8 * n);
      const double tvd = tableau_vs_statevector_tvd(c, shots, rng, a.corrupt_phase);
      if (tvd >= tol) {
        pass = false;
        failure = "invariant tableau-matches-state-vector (sampled marginal): TVD=" +
                  ftc::format_double(tvd) + " >= " + ftc::format_double(tol) + "\n  seed=" +
                  std::to_string(ftc::derive_seed(a.seed, uint64_t(i))) + " circuit " +
                  describe_circuit(c);
      } else if (!tableau_vs_statevector_expectations(c, rng, a.corrupt_phase)) {
        pass = false;
        failure = "invariant tableau-matches-state-vector (phase convention): exact "
                  "Pauli expectation mismatch\n  seed=" +
                  std::to_string(ftc::derive_seed(a.seed, uint64_t(i))) + " circuit " +
                  describe_circuit(c);
      }
    }
    std::cout << (pass ? "[pass]" : "[FAIL]") << " tableau vs state-vector (" << circuits
              << " circuits, " << shots << " shots)\n";
    if (!pass) std::cout << "       " << failure << "\n";
    all_pass = all_pass && pass;
  }

  // Suite 2: Monte Carlo vs the first-order single-fault enumeration oracle
  // on the level-1 verified CZ at small p_e.
  {
    const auto oracle = ftc::EnumerationOracle::build("cz_single", 1, false);
    const double pe = 1e-4;
    const auto pred = oracle.predict(ftc::NoiseModel::uniform_depolarizing(pe));
    ftc::TrialPlan plan;
    plan.gadget = "cz_single";
    plan.level = 1;
    plan.model = ftc::NoiseModel::uniform_depolarizing(pe);
    plan.trials = a.trials > 0 ? a.trials : (a.quick ? 20000 : 200000);
    plan.master_seed = ftc::derive_seed(a.seed, 1000);
    plan.jobs = a.jobs;
    const auto mc = ftc::run_trials(plan);
    const bool pass = pred.accept_prob >= mc.ci_low && pred.accept_prob <= mc.ci_high;
    std::cout << (pass ? "[pass]" : "[FAIL]")
              << " Monte Carlo vs enumeration oracle (cz_single level 1, p_e="
              << ftc::format_double(pe) << ")\n";
    std::cout << "       predicted accept=" << ftc::format_double(pred.accept_prob)
              << ", Monte Carlo [" << ftc::format_double(mc.ci_low) << ", "
              << ftc::format_double(mc.ci_high) << "] over " << plan.trials << " trials\n";
    if (!pass)
      std::cout << "       reproduction: simulate --gadget cz_single --level 1 --pe 1e-4 "
                   "--trials " << plan.trials << " --seed " << plan.master_seed << "\n";
    all_pass = all_pass && pass;
  }

  std::cout << (all_pass ? "all oracle checks passed\n" : "oracle checks FAILED\n");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verified logical cluster simulation and resource analysis"};
  app.require_subcommand(1);

  const uint64_t env_seed = [] {
    try {
      return default_seed();
    } catch (const CLI::Error&) {
      return uint64_t(0);
    }
  }();

  // --- simulate ---
  SimulateArgs sim;
  sim.seed = env_seed;
  std::string sim_config;
  ConfigBinder sim_binder;
  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo gadget estimate");
  sim_binder.add(simulate, "--gadget", sim.gadget,
                 "cz_single | cz_double | hexa | encode_zero | encode_plus");
  sim_binder.add(simulate, "--level", sim.level, "gadget level (default 1)");
  sim_binder.add(simulate, "--pe", sim.pe, "physical two-qubit error rate");
  sim.pm_opt = sim_binder.add(simulate, "--pm", sim.pm,
                              "measurement error rate (default 4 p_e / 15)");
  sim_binder.add(simulate, "--tau-m", sim.tau_m, "memory waiting time (recorded in the model)");
  sim_binder.add(simulate, "--n-steps", sim.n_steps, "waiting steps per level");
  sim_binder.add(simulate, "--trials", sim.trials, "number of trials");
  sim_binder.add(simulate, "--seed", sim.seed, "master seed (default: FTCLUSTER_SEED or 0)");
  sim_binder.add(simulate, "--jobs", sim.jobs, "worker threads (result independent of count)");
  sim_binder.add(simulate, "--mode", sim.mode, "faithful | fast");
  sim_binder.add(simulate, "--out", sim.out, "output artifact path");
  sim_binder.add(simulate, "--format", sim.format, "csv | json");
  simulate->add_option("--config", sim_config, "flat key=value config file (flags override)");

  // --- threshold ---
  ThresholdArgs thr;
  thr.seed = env_seed;
  std::string thr_config;
  ConfigBinder thr_binder;
  CLI::App* threshold = app.add_subcommand("threshold", "analytic and empirical thresholds");
  thr_binder.add(threshold, "--pe", thr.pe, "physical error rate defining the model");
  thr.pm_opt = thr_binder.add(threshold, "--pm", thr.pm, "measurement error rate override");
  thr_binder.add(threshold, "--tau-m", thr.tau_m, "memory waiting time");
  thr_binder.add(threshold, "--n-steps", thr.n_steps, "waiting steps per level");
  thr.n_opt = thr_binder.add(threshold, "--N", thr.n_token,
                             "computation size as 1e<exponent>; adds the memory-limited line");
  thr.d_opt = thr_binder.add(threshold, "--D", thr.d_override, "override the chain factor D");
  thr_binder.add_flag(threshold, "--empirical", thr.empirical,
                      "bisect the level-1 vs level-2 Monte Carlo crossing");
  thr_binder.add(threshold, "--low", thr.low, "empirical search lower bound");
  thr_binder.add(threshold, "--high", thr.high, "empirical search upper bound");
  thr_binder.add(threshold, "--tol", thr.tol, "empirical bracket width");
  thr_binder.add(threshold, "--trials", thr.trials, "trials per empirical probe");
  thr_binder.add(threshold, "--seed", thr.seed, "master seed (default: FTCLUSTER_SEED or 0)");
  thr_binder.add(threshold, "--jobs", thr.jobs, "worker threads");
  thr_binder.add(threshold, "--out", thr.out, "also write the report to this path");
  threshold->add_option("--config", thr_config, "flat key=value config file (flags override)");

  // --- resources ---
  ResourcesArgs res;
  std::string res_config;
  ConfigBinder res_binder;
  CLI::App* resources = app.add_subcommand("resources", "exact resource recurrences");
  res_binder.add_list(resources, "--pe", res.pe_list, "physical error rates (comma separated)");
  res_binder.add_list(resources, "--N", res.n_list,
                      "computation sizes as 1e<exponent> (default 1e1..1e50)");
  res_binder.add(resources, "--success-table", res.success_table,
                 "'unit' or a key=value file with p_alpha^(l) entries");
  res_binder.add(resources, "--overlay", res.overlay, "comparison curve CSV (header N,R)");
  res_binder.add(resources, "--out", res.out, "output path (default: stdout)");
  res_binder.add(resources, "--format", res.format, "csv | json");
  resources->add_option("--config", res_config, "flat key=value config file (flags override)");

  // --- sweep ---
  SweepArgs swp;
  swp.seed = env_seed;
  std::string swp_config;
  ConfigBinder swp_binder;
  CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo curve over a p_e grid");
  swp_binder.add(sweep, "--gadget", swp.gadget, "gadget name");
  swp_binder.add(sweep, "--level", swp.level, "gadget level");
  swp_binder.add_list(sweep, "--pe", swp.pe_list, "p_e grid (comma separated)");
  swp_binder.add(sweep, "--trials", swp.trials, "trials per grid point");
  swp_binder.add(sweep, "--seed", swp.seed, "master seed (default: FTCLUSTER_SEED or 0)");
  swp_binder.add(sweep, "--jobs", swp.jobs, "worker threads");
  swp_binder.add(sweep, "--mode", swp.mode, "faithful | fast");
  swp_binder.add(sweep, "--out", swp.out, "output artifact path");
  swp_binder.add(sweep, "--format", swp.format, "csv | json");
  sweep->add_option("--config", swp_config, "flat key=value config file (flags override)");

  // --- oracle-check ---
  OracleArgs orc;
  std::string orc_config;
  ConfigBinder orc_binder;
  CLI::App* oracle = app.add_subcommand("oracle-check", "run the bundled correctness suites");
  orc_binder.add_flag(oracle, "--quick", orc.quick, "reduced suite (completes in under a minute)");
  orc_binder.add(oracle, "--seed", orc.seed, "suite seed");
  orc_binder.add(oracle, "--jobs", orc.jobs, "worker threads");
  orc_binder.add(oracle, "--trials", orc.trials, "override per-suite trial counts");
  oracle
      ->add_flag("--corrupt-phase", orc.corrupt_phase,
                 "negative control: corrupt the oracle's S-gate phase convention")
      ->group("");  // hidden
  oracle->add_option("--config", orc_config, "flat key=value config file (flags override)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) {
      if (!sim_config.empty()) sim_binder.apply_file(sim_config);
      return cmd_simulate(sim);
    }
    if (threshold->parsed()) {
      if (!thr_config.empty()) thr_binder.apply_file(thr_config);
      return cmd_threshold(thr);
    }
    if (resources->parsed()) {
      if (!res_config.empty()) res_binder.apply_file(res_config);
      return cmd_resources(res);
    }
    if (sweep->parsed()) {
      if (!swp_config.empty()) swp_binder.apply_file(swp_config);
      return cmd_sweep(swp);
    }
    if (oracle->parsed()) {
      if (!orc_config.empty()) orc_binder.apply_file(orc_config);
      return cmd_oracle_check(orc);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
