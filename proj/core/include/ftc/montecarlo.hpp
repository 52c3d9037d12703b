#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ftc/gadgets.hpp"
#include "ftc/noise.hpp"

namespace ftc {

enum class SimMode { Faithful, Fast };

/// Faithful mode runs the gadget's shipped blueprint with physical noise at
/// its supported levels (cz at 1 and 2, hexa/encode at 2). Fast mode (level
/// >= 2) reuses the base structural blueprint and rescales the physical error
/// rate so each constituent carries the analytic level-k error:
/// p_eff = level_error(k, D p_e)/D with k = level-1 for cz and level-2 for
/// hexa/encode (so fast and faithful coincide at level 2 for hexa/encode).
struct TrialPlan {
  std::string gadget;  // cz_single, cz_double, hexa, encode_zero, encode_plus
  int level = 1;
  NoiseModel model;
  long trials = 1;
  uint64_t master_seed = 0;
  SimMode mode = SimMode::Faithful;
  int jobs = 1;
};

struct EstimateReport {
  std::string gadget;
  int level = 0;
  double p_e = 0.0;
  long trial_count = 0;
  long accept_count = 0;
  long logical_error_count = 0;  // among accepted trials
  long frame_error_count = 0;    // accepted trials with any nontrivial class
  double p_hat = 0.0, ci_low = 0.0, ci_high = 0.0;
  double conditional_logical_error = 0.0, cond_err_lo = 0.0, cond_err_hi = 0.0;
  double frame_error_rate = 0.0;  // frame_error_count / accept_count
  uint64_t seed = 0;
};

struct WilsonInterval {
  double p_hat = 0.0, low = 0.0, high = 1.0;
};

/// 95% Wilson score interval; n = 0 yields the vacuous [0,1].
WilsonInterval wilson_interval(long successes, long n);

/// Executes plan.trials independent runs with per-trial seeds
/// derive_seed(master_seed, index); counts merge associatively, so the
/// report is identical for any job count.
EstimateReport run_trials(const TrialPlan& plan);

/// One report per ascending grid point, seeds paired across the grid.
std::vector<EstimateReport> estimate_logical_error_curve(const std::string& gadget, int level,
                                                         const std::vector<double>& p_e_grid,
                                                         long trials, uint64_t seed,
                                                         SimMode mode = SimMode::Faithful,
                                                         int jobs = 1);

/// Residual output-class histogram (string of per-group classes, e.g. "IX")
/// over accepted trials.
std::map<std::string, long> frame_error_census(const TrialPlan& plan);

struct ThresholdBracket {
  double low = 0.0;
  double high = 0.0;
};

/// Bisection on sign(p_q^(2) - p_q^(1)) for the verified-CZ family: level 1
/// faithful against level 2 fast, fresh seeds per probe. [p_low, p_high]
/// must bracket a crossing; the returned bracket has width <= tol.
ThresholdBracket find_empirical_threshold(double p_low, double p_high, long trials,
                                          uint64_t seed, double tol, int jobs = 1);

/// Exhaustive fault enumeration on the noiseless execution path: every
/// recorded site takes each of its 15 pair faults (gates) or its flip
/// (measurements); optionally all unordered site pairs. Outcomes are
/// enumerated once and reweighted per noise model with exact
/// Poisson-binomial configuration weights truncated at the stored order.
class EnumerationOracle {
 public:
  static EnumerationOracle build(const std::string& gadget, int level, bool pair_order = false);

  struct Prediction {
    double accept_prob = 0.0;
    double conditional_logical_error = 0.0;
    /// Probability mass of fault configurations beyond the stored order
    /// (treated as rejected by the prediction); bounds the truncation error.
    double truncated_mass = 0.0;
  };
  Prediction predict(const NoiseModel& model) const;

  std::size_t site_count() const { return sites_.size(); }
  bool has_pair_order() const { return pair_order_; }

 private:
  struct SingleOutcome {
    int site = 0;
    int fault = 0;  // pair index 0..14 for gates, 0 for a measurement flip
    bool accepted = false;
    bool logical_error = false;
  };
  struct PairOutcome {
    int site_a = 0, fault_a = 0;
    int site_b = 0, fault_b = 0;
    bool accepted = false;
    bool logical_error = false;
  };

  std::string gadget_;
  int level_ = 1;
  bool pair_order_ = false;
  std::vector<FaultSite> sites_;
  std::vector<SingleOutcome> singles_;
  std::vector<PairOutcome> pairs_;
};

}  // namespace ftc
