#include "ftc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "ftc/analytic.hpp"
#include "ftc/blueprint.hpp"

namespace ftc {

namespace {

constexpr double kZ95 = 1.959963984540054;

bool is_cz_gadget(const std::string& gadget) {
  return gadget == "cz_single" || gadget == "cz_double";
}

bool is_encode_gadget(const std::string& gadget) {
  return gadget == "encode_zero" || gadget == "encode_plus";
}

struct Resolved {
  bool prep_primitive = false;  // level-1 single-attempt preparation
  bool prep_plus = false;
  GadgetBlueprint bp;
  NoiseModel model;
};

Resolved resolve_plan(const TrialPlan& plan) {
  Resolved r;
  r.model = plan.model;
  if (plan.mode == SimMode::Faithful) {
    if (is_encode_gadget(plan.gadget) && plan.level == 1) {
      r.prep_primitive = true;
      r.prep_plus = plan.gadget == "encode_plus";
      return r;
    }
    r.bp = blueprint_for(plan.gadget, plan.level);
    return r;
  }
  // Fast mode: base structural blueprint with the analytic per-constituent
  // error folded into a rescaled uniform depolarizing rate.
  if (plan.level < 2) throw std::invalid_argument("fast mode requires level >= 2");
  const int base_level = is_cz_gadget(plan.gadget) ? 1 : 2;
  const int k = plan.level - base_level;
  r.bp = blueprint_for(plan.gadget, base_level);
  double p_eff = 0.0;
  if (plan.model.p_e > 0.0) {
    const double d = threshold(plan.model).D;
    p_eff = level_error(k, std::min(1.0, d * plan.model.p_e)) / d;
  }
  r.model = NoiseModel::uniform_depolarizing(p_eff);
  r.model.tau_m = plan.model.tau_m;
  r.model.n_steps = plan.model.n_steps;
  return r;
}

struct Counts {
  long trials = 0;
  long accepts = 0;
  long logical_errors = 0;
  long frame_errors = 0;
  std::map<std::string, long> census;

  void merge(const Counts& other) {
    trials += other.trials;
    accepts += other.accepts;
    logical_errors += other.logical_errors;
    frame_errors += other.frame_errors;
    for (const auto& [k, v] : other.census) census[k] += v;
  }
};

Counts run_range(const Resolved& r, uint64_t master_seed, long begin, long end,
                 bool keep_census) {
  Counts c;
  for (long i = begin; i < end; ++i) {
    Rng rng(derive_seed(master_seed, uint64_t(i)));
    const VerificationOutcome out =
        r.prep_primitive ? run_prep_attempt(r.prep_plus, r.model, rng)
                         : run_gadget(r.bp, r.model, rng);
    ++c.trials;
    if (!out.accepted) continue;
    ++c.accepts;
    if (out.logical_error) ++c.logical_errors;
    const std::string cls(out.output_classes.begin(), out.output_classes.end());
    if (cls.find_first_not_of('I') != std::string::npos) ++c.frame_errors;
    if (keep_census) ++c.census[cls];
  }
  return c;
}

Counts run_all(const TrialPlan& plan, bool keep_census) {
  if (plan.trials < 1) throw std::invalid_argument("trials >= 1 required");
  if (plan.jobs < 1) throw std::invalid_argument("jobs >= 1 required");
  const Resolved r = resolve_plan(plan);
  const int jobs = plan.jobs;
  if (jobs == 1 || plan.trials < 2 * jobs)
    return run_range(r, plan.master_seed, 0, plan.trials, keep_census);
  std::vector<Counts> parts(static_cast<std::size_t>(jobs));
  std::vector<std::thread> threads;
  const long chunk = (plan.trials + jobs - 1) / jobs;
  for (int j = 0; j < jobs; ++j) {
    const long begin = j * chunk;
    const long end = std::min<long>(plan.trials, begin + chunk);
    threads.emplace_back([&, j, begin, end] {
      if (begin < end)
        parts[std::size_t(j)] = run_range(r, plan.master_seed, begin, end, keep_census);
    });
  }
  for (auto& t : threads) t.join();
  Counts total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace

WilsonInterval wilson_interval(long successes, long n) {
  if (successes < 0 || n < 0 || successes > n)
    throw std::invalid_argument("wilson_interval: need 0 <= successes <= n");
  WilsonInterval w;
  if (n == 0) return w;
  const double p = double(successes) / double(n);
  w.p_hat = p;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / double(n);
  const double center = p + z2 / (2.0 * double(n));
  const double spread = kZ95 * std::sqrt(p * (1.0 - p) / double(n) +
                                         z2 / (4.0 * double(n) * double(n)));
  w.low = std::max(0.0, (center - spread) / denom);
  w.high = std::min(1.0, (center + spread) / denom);
  return w;
}

EstimateReport run_trials(const TrialPlan& plan) {
  const Counts c = run_all(plan, false);
  EstimateReport rep;
  rep.gadget = plan.gadget;
  rep.level = plan.level;
  rep.p_e = plan.model.p_e;
  rep.seed = plan.master_seed;
  rep.trial_count = c.trials;
  rep.accept_count = c.accepts;
  rep.logical_error_count = c.logical_errors;
  rep.frame_error_count = c.frame_errors;
  const WilsonInterval acc = wilson_interval(c.accepts, c.trials);
  rep.p_hat = acc.p_hat;
  rep.ci_low = acc.low;
  rep.ci_high = acc.high;
  const WilsonInterval err = wilson_interval(c.logical_errors, c.accepts);
  rep.conditional_logical_error = err.p_hat;
  rep.cond_err_lo = err.low;
  rep.cond_err_hi = err.high;
  rep.frame_error_rate = c.accepts ? double(c.frame_errors) / double(c.accepts) : 0.0;
  return rep;
}

std::vector<EstimateReport> estimate_logical_error_curve(const std::string& gadget, int level,
                                                         const std::vector<double>& p_e_grid,
                                                         long trials, uint64_t seed,
                                                         SimMode mode, int jobs) {
  if (p_e_grid.empty()) throw std::invalid_argument("empty p_e grid");
  if (!std::is_sorted(p_e_grid.begin(), p_e_grid.end()))
    throw std::invalid_argument("p_e grid must be sorted ascending");
  std::vector<EstimateReport> out;
  for (double p_e : p_e_grid) {
    TrialPlan plan;
    plan.gadget = gadget;
    plan.level = level;
    plan.model = NoiseModel::uniform_depolarizing(p_e);
    plan.trials = trials;
    plan.master_seed = seed;  // paired seeds across the grid
    plan.mode = mode;
    plan.jobs = jobs;
    out.push_back(run_trials(plan));
  }
  return out;
}

std::map<std::string, long> frame_error_census(const TrialPlan& plan) {
  return run_all(plan, true).census;
}

ThresholdBracket find_empirical_threshold(double p_low, double p_high, long trials,
                                          uint64_t seed, double tol, int jobs) {
  if (!(0.0 < p_low && p_low < p_high)) throw std::invalid_argument("need 0 < p_low < p_high");
  if (tol <= 0.0) throw std::invalid_argument("tol > 0 required");
  uint64_t probe = 0;
  const auto gap = [&](double p_e) {  // p_q^(2) - p_q^(1)
    TrialPlan plan;
    plan.gadget = "cz_single";
    plan.model = NoiseModel::uniform_depolarizing(p_e);
    plan.trials = trials;
    plan.jobs = jobs;
    plan.level = 1;
    plan.mode = SimMode::Faithful;
    plan.master_seed = derive_seed(seed, probe++);
    const double p1 = run_trials(plan).conditional_logical_error;
    plan.level = 2;
    plan.mode = SimMode::Fast;
    plan.master_seed = derive_seed(seed, probe++);
    const double p2 = run_trials(plan).conditional_logical_error;
    return p2 - p1;
  };
  double lo = p_low, hi = p_high;
  const double g_lo = gap(lo), g_hi = gap(hi);
  if (g_lo >= 0.0 || g_hi <= 0.0)
    throw std::runtime_error("find_empirical_threshold: range does not bracket a crossing");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (gap(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

EnumerationOracle EnumerationOracle::build(const std::string& gadget, int level,
                                          bool pair_order) {
  EnumerationOracle oracle;
  oracle.gadget_ = gadget;
  oracle.level_ = level;
  oracle.pair_order_ = pair_order;

  TrialPlan probe;
  probe.gadget = gadget;
  probe.level = level;
  probe.model = NoiseModel::noiseless();
  const Resolved r = resolve_plan(probe);

  const auto run_with = [&](const std::vector<PlantedFault>& faults, bool record,
                            std::vector<FaultSite>* sites_out) {
    ExecOptions opts;
    opts.noise_enabled = false;
    opts.faults = faults;
    opts.record_sites = record;
    Rng rng(0x5eed);
    const VerificationOutcome out =
        r.prep_primitive ? run_prep_attempt(r.prep_plus, r.model, rng, opts)
                         : run_gadget(r.bp, r.model, rng, opts);
    if (record && sites_out) *sites_out = out.sites;
    return std::make_pair(out.accepted, out.logical_error);
  };

  const auto baseline = run_with({}, true, &oracle.sites_);
  if (!baseline.first || baseline.second)
    throw std::logic_error("enumeration oracle: noiseless baseline must accept cleanly");

  // All (site, fault) options: measurements take a single flip fault,
  // gate sites the 15 Pauli pairs.
  struct Option {
    int site;
    int fault;
  };
  std::vector<Option> options;
  for (std::size_t s = 0; s < oracle.sites_.size(); ++s) {
    const int n_faults = oracle.sites_[s].is_measurement ? 1 : 15;
    for (int f = 0; f < n_faults; ++f) options.push_back({int(s), f});
  }
  const auto fault_for = [&](const Option& o) {
    const FaultSite& site = oracle.sites_[std::size_t(o.site)];
    PlantedFault pf;
    pf.call_id = site.call_id;
    pf.op_id = site.op_id;
    if (site.is_measurement) {
      pf.flip = true;
    } else {
      pf.a = (o.fault + 1) / 4;
      pf.b = (o.fault + 1) % 4;
    }
    return pf;
  };

  // Single-fault pass: keep only anomalies (anything but clean acceptance).
  std::vector<std::pair<bool, bool>> single_result(options.size());
  for (std::size_t i = 0; i < options.size(); ++i) {
    single_result[i] = run_with({fault_for(options[i])}, false, nullptr);
    const auto [acc, err] = single_result[i];
    if (!acc || err)
      oracle.singles_.push_back({options[i].site, options[i].fault, acc, err});
  }

  if (!pair_order) return oracle;

  // Unordered pairs of options at distinct sites, parallelized over the
  // outer option; each worker keeps its own anomaly list.
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<PairOutcome>> parts(hw);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < hw; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < options.size(); i += hw) {
        for (std::size_t j = i + 1; j < options.size(); ++j) {
          if (options[i].site == options[j].site) continue;
          const auto [acc, err] =
              run_with({fault_for(options[i]), fault_for(options[j])}, false, nullptr);
          if (!acc || err)
            parts[w].push_back({options[i].site, options[i].fault, options[j].site,
                                options[j].fault, acc, err});
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& p : parts)
    oracle.pairs_.insert(oracle.pairs_.end(), p.begin(), p.end());
  return oracle;
}

EnumerationOracle::Prediction EnumerationOracle::predict(const NoiseModel& model) const {
  model.validate();
  // Per-fault probability at a site and total per-site fault probability.
  const auto fault_prob = [&](int site, int fault) {
    return sites_[std::size_t(site)].is_measurement ? model.p_m
                                                    : model.two_qubit_table[std::size_t(fault)];
  };
  std::vector<double> q(sites_.size(), 0.0);
  for (std::size_t s = 0; s < sites_.size(); ++s)
    q[s] = sites_[s].is_measurement ? model.p_m : model.table_sum();

  double log_z = 0.0;
  for (double qs : q) log_z += std::log1p(-qs);
  const double z = std::exp(log_z);
  const auto ratio = [&](int site, int fault) {
    return fault_prob(site, fault) / (1.0 - q[std::size_t(site)]);
  };

  // Exactly-one-fault configurations: total ratio mass minus rejected
  // anomalies; logical errors contribute to the error mass.
  double sum_q = 0.0, sum_q2 = 0.0;
  for (double qs : q) {
    const double t = qs / (1.0 - qs);
    sum_q += t;
    sum_q2 += t * t;
  }
  double accept1 = sum_q, err1 = 0.0;
  for (const auto& s : singles_) {
    const double r = ratio(s.site, s.fault);
    if (!s.accepted) accept1 -= r;
    if (s.accepted && s.logical_error) err1 += r;
  }

  double accept_mass = 1.0 + accept1;
  double err_mass = err1;
  double modeled_mass = 1.0 + sum_q;  // configurations with <= 1 fault
  if (pair_order_) {
    // 0.5 (sum_q^2 - sum_q2) = sum over unordered option pairs at distinct
    // sites of their ratio product; anomalies are then corrected for.
    double accept2 = 0.5 * (sum_q * sum_q - sum_q2), err2 = 0.0;
    for (const auto& p : pairs_) {
      const double r = ratio(p.site_a, p.fault_a) * ratio(p.site_b, p.fault_b);
      if (!p.accepted) accept2 -= r;
      if (p.accepted && p.logical_error) err2 += r;
    }
    accept_mass += accept2;
    err_mass += err2;
    modeled_mass += 0.5 * (sum_q * sum_q - sum_q2);
  }

  Prediction pred;
  pred.accept_prob = z * accept_mass;
  pred.conditional_logical_error = accept_mass > 0.0 ? err_mass / accept_mass : 0.0;
  // All higher-order configurations are treated as rejected; their total
  // weight bounds the truncation error of both estimates above.
  pred.truncated_mass = std::max(0.0, 1.0 - z * modeled_mass);
  return pred;
}

}  // namespace ftc
