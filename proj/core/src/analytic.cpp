#include "ftc/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace ftc {

namespace {
constexpr int kC = ThresholdParams::kCombinatorial;
}

HomogeneousErrors homogeneous_errors(const NoiseModel& model) {
  model.validate();
  HomogeneousErrors eps;
  eps.eps_x = model.two_qubit_table[pair_index(1, 0)];
  eps.eps_y = model.two_qubit_table[pair_index(2, 0)];
  eps.eps_z = 2.0 * model.two_qubit_table[pair_index(3, 0)];
  return eps;
}

HomogeneousErrors bare_cz_update(const HomogeneousErrors& eps, const NoiseModel& model) {
  model.validate();
  HomogeneousErrors out;
  out.eps_x = eps.eps_x + model.row_sum(1);
  out.eps_y = eps.eps_y + model.row_sum(2);
  out.eps_z = eps.eps_z + eps.eps_x + eps.eps_y + model.row_sum(3);
  return out;
}

double measurement_error_p0(const HomogeneousErrors& eps_prime, const NoiseModel& model) {
  return eps_prime.eps_z + eps_prime.eps_y + model.p_m;
}

double physical_to_p_q0(const NoiseModel& model) {
  return measurement_error_p0(bare_cz_update(homogeneous_errors(model), model), model);
}

Rational uniform_p_q0_exact(const Rational& p_e) {
  const Rational p15 = p_e / 15;
  // homogeneous: (1, 1, 2) * p_e/15
  const Rational ex = p15, ey = p15, ez = 2 * p15;
  // bare CZ: row sums are 4 p_e/15 each
  const Rational row = 4 * p15;
  const Rational exp_ = ex + row;
  const Rational eyp = ey + row;
  const Rational ezp = ez + ex + ey + row;
  // measurement: p_M = 4 p_e/15
  return ezp + eyp + 4 * p15;  // = (17/15) p_e
}

double level_error(int l, double p_q0) {
  if (l < 0) throw std::invalid_argument("level_error: l >= 0 required");
  if (p_q0 < 0.0 || p_q0 > 1.0) throw std::invalid_argument("level_error: p_q0 in [0,1]");
  if (l == 0) return p_q0;
  if (p_q0 == 0.0) return 0.0;
  // The recursive product is exact enough and underflow-free for small l;
  // switch to the log-domain closed form once 2^l gets large.
  const double v = l <= 6 ? level_error_recursive(l, p_q0)
                          : std::pow(10.0, log10_level_error(l, p_q0));
  return std::min(1.0, std::max(0.0, v));
}

double level_error_recursive(int l, double p_q0) {
  if (l < 0) throw std::invalid_argument("level_error_recursive: l >= 0 required");
  double p = p_q0;
  for (int i = 0; i < l; ++i) p = kC * p * p;
  return p;
}

double log10_level_error(int l, double p_q0) {
  // log10[(21 p)^(2^l) / 21] = 2^l log10(21 p) - log10 21
  return std::ldexp(1.0, l) * std::log10(kC * p_q0) - std::log10(double(kC));
}

ThresholdParams threshold(const NoiseModel& model) {
  if (model.p_e <= 0.0) throw std::invalid_argument("threshold: p_e > 0 required (D undefined)");
  ThresholdParams t;
  t.D = physical_to_p_q0(model) / model.p_e;
  t.p_th = 1.0 / (kC * t.D);
  return t;
}

double memory_threshold(double log10_N, int n_steps, double tau_m) {
  return memory_threshold_adjusted(log10_N, n_steps, tau_m, 1.0);
}

double memory_threshold_adjusted(double log10_N, int n_steps, double tau_m, double D) {
  if (log10_N <= 1.0) throw std::invalid_argument("memory_threshold: N > 10 required");
  if (n_steps < 0 || tau_m < 0.0 || D <= 0.0)
    throw std::invalid_argument("memory_threshold: nonnegative n, tau_m and positive D required");
  return 1.0 / (kC * D * (1.0 + asymptotic_level(log10_N) * n_steps * tau_m));
}

double asymptotic_level(double log10_N) { return std::log2(log10_N); }

int highest_level(double log10_N, double p_q0) {
  if (log10_N < 0.0) throw std::invalid_argument("highest_level: N >= 1 required");
  if (p_q0 < 0.0) throw std::invalid_argument("highest_level: p_q0 >= 0 required");
  if (p_q0 == 0.0) return 0;
  if (p_q0 >= 1.0 / kC)
    throw std::invalid_argument("highest_level: p_q0 above threshold, no finite level");
  const double target = -1.0 - log10_N;  // log10(0.1/N)
  // At least one encoding level whenever the physical rate is nonzero; the
  // l = 0 "no encoding" answer is reserved for the noiseless edge case.
  for (int l = 1; l < 64; ++l) {
    if (log10_level_error(l, p_q0) <= target) return l;
  }
  throw std::runtime_error("highest_level: did not converge within 64 levels");
}

}  // namespace ftc
