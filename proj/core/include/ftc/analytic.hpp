#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "ftc/noise.hpp"

namespace ftc {

using Rational = boost::multiprecision::cpp_rational;

/// Per-qubit homogeneous error probabilities (eps_X, eps_Y, eps_Z) of the
/// level-0 qubits inside a verified cluster.
struct HomogeneousErrors {
  double eps_x = 0.0;
  double eps_y = 0.0;
  double eps_z = 0.0;
};

struct ThresholdParams {
  double D = 0.0;     // p_q^(0) / p_e
  double p_th = 0.0;  // 1 / (21 D)
  static constexpr int kCombinatorial = 21;  // C(7,2)
};

/// eps_X = p_XI, eps_Y = p_YI, eps_Z = 2 p_ZI: the residual single-qubit
/// errors left on a doubly verified block by the transversal gates.
HomogeneousErrors homogeneous_errors(const NoiseModel& model);

/// Error accumulation through one bare CZ connection:
///   eps'_X = eps_X + sum_B p_XB,  eps'_Y = eps_Y + sum_B p_YB,
///   eps'_Z = eps_Z + eps_X + eps_Y + sum_B p_ZB.
HomogeneousErrors bare_cz_update(const HomogeneousErrors& eps, const NoiseModel& model);

/// X-basis measurement error of a bare-CZ-connected qubit:
/// p_q^(0) = eps'_Z + eps'_Y + p_M.
double measurement_error_p0(const HomogeneousErrors& eps_prime, const NoiseModel& model);

/// Full chain homogeneous -> bare-CZ -> measurement.
double physical_to_p_q0(const NoiseModel& model);

/// The same chain in exact rational arithmetic for the uniform depolarizing
/// table p_AB = p_e/15, p_M = (4/15) p_e; returns p_q^(0) = (17/15) p_e.
Rational uniform_p_q0_exact(const Rational& p_e);

/// Closed form of the level recursion p_q^(l) = (21 p_q^(0))^(2^l) / 21,
/// clamped to [0,1]. l = 0 returns p_q0.
double level_error(int l, double p_q0);

/// Recursive form p_q^(l) = 21 (p_q^(l-1))^2 without clamping (used by the
/// consistency property tests).
double level_error_recursive(int l, double p_q0);

/// log10 of the unclamped closed form; immune to double underflow at high l.
double log10_level_error(int l, double p_q0);

/// D = p_q^(0)/p_e via the full chain, p_th = 1/(21 D).
/// Throws std::invalid_argument when p_e == 0 (D undefined).
ThresholdParams threshold(const NoiseModel& model);

/// Memory-limited threshold, formula as printed:
///   [ 21 { 1 + log2(log10 N) n tau_m } ]^(-1).
/// N is passed as log10(N); requires log10_N > 1 (N > 10), n >= 0, tau >= 0.
double memory_threshold(double log10_N, int n_steps, double tau_m);

/// Companion value with the chain factor D folded in:
///   [ 21 D { 1 + log2(log10 N) n tau_m } ]^(-1).
double memory_threshold_adjusted(double log10_N, int n_steps, double tau_m, double D);

/// Asymptotic highest-level estimate log2(log10 N).
double asymptotic_level(double log10_N);

/// Smallest l >= 1 with level_error(l, p_q0) <= 0.1/N, evaluated in log
/// domain (l = 0 only for the noiseless edge case p_q0 = 0). Requires
/// p_q0 < 1/21 (otherwise no finite level exists) and log10_N >= 0.
int highest_level(double log10_N, double p_q0);

}  // namespace ftc
