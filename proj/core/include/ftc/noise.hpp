#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "ftc/pauli.hpp"
#include "ftc/tableau.hpp"

namespace ftc {

/// Index of the ordered pair AB among the 15 non-identity two-qubit Paulis.
/// A, B in {I=0, X=1, Y=2, Z=3}; II is excluded.
inline int pair_index(int a, int b) { return 4 * a + b - 1; }

inline char pauli_letter(int code) { return "IXYZ"[code]; }

/// Physical error parameters. The default table is uniform depolarizing:
/// p_AB = p_e/15 for every non-identity pair and p_M = (4/15) p_e.
struct NoiseModel {
  double p_e = 0.0;
  std::array<double, 15> two_qubit_table{};  // p_AB, index = pair_index(A,B)
  double p_m = 0.0;
  double tau_m = 0.0;  // dimensionless memory waiting time per measurement
  int n_steps = 0;     // waiting steps per concatenation level

  static NoiseModel uniform_depolarizing(double p_e);
  static NoiseModel noiseless() { return {}; }

  /// Throws std::invalid_argument when probabilities are out of range.
  void validate() const;

  double table_sum() const;
  /// Sum over B of p_AB for a fixed first letter A in {X=1, Y=2, Z=3}.
  double row_sum(int a) const;
};

/// Draws II with probability 1 - sum(p_AB), otherwise the pair AB with
/// probability p_AB. Returned codes are in {I=0,X=1,Y=2,Z=3}.
std::pair<int, int> sample_two_qubit_error(const NoiseModel& model, Rng& rng);

/// True with probability p_M.
bool sample_measurement_flip(const NoiseModel& model, Rng& rng);

/// Splittable per-trial seed derivation (splitmix64 over the pair).
uint64_t derive_seed(uint64_t master_seed, uint64_t index);

}  // namespace ftc
