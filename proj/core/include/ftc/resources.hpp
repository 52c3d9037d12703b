#pragma once

#include <map>
#include <string>
#include <vector>

#include "ftc/analytic.hpp"

namespace ftc {

/// Verification success probabilities p_alpha^(l) per cluster type
/// alpha in {'h', '0', '+'} and level l >= 1, each tagged with its origin.
/// Missing entries default to exactly 1 for l >= 3 (the probabilities
/// approach unity there); below level 3 they must be supplied explicitly.
class SuccessTable {
 public:
  struct Entry {
    Rational p = 1;
    std::string source;  // "monte-carlo", "user" or "asymptotic-one"
  };

  void set(char alpha, int level, const Rational& p, const std::string& source);
  /// Throws std::out_of_range for a missing entry below level 3.
  Entry get(char alpha, int level) const;
  bool has(char alpha, int level) const;

  /// All probabilities equal to 1 with source "user" for levels 1..max_level.
  static SuccessTable unit(int max_level);

  /// Flat key=value text, keys "<alpha>.<level>" (e.g. "h.2=0.93"); '#'
  /// comments and blank lines ignored; malformed lines raise
  /// std::invalid_argument naming the line number.
  static SuccessTable parse(const std::string& text);
  std::string serialize() const;

 private:
  static void check_alpha(char alpha);
  std::map<std::pair<char, int>, Entry> entries_;
};

/// Exact resource counts R_O^(l) per object O in {S, D, h, 0, +} and level;
/// the bare-CZ cost R_b^(l) = 7^l is computed, not stored.
struct ResourceVector {
  std::map<int, Rational> S, D, h, zero, plus;
  static Rational b(int level);  // 7^level
  int max_level() const;
};

/// Level-1 base cases: R_0 = 69/p0, R_+ = 72/p+, R_S = 21 + 2 R_0,
/// R_D = 63 + 8 R_0. Throws on non-positive probabilities.
ResourceVector level1_base(const Rational& p0_1, const Rational& pplus_1);

/// Extends `vec` from level l to level l+1:
/// for l >= 2 first R_S^(l) = 7 R_h + 2(R_+ + R_b) and
/// R_D^(l) = 21 R_h + 8(R_+ + R_b) + 2 R_b, then
/// R_alpha^(l+1) = [n^S_a R_S + n^D_a R_D + n^0_a R_0 + n^b_a R_b]/p_alpha^(l+1)
/// with coefficients (2,3,6,4)_h, (6,7,11,15)_0, (5,6,10,14)_+ and the
/// substitution R_0 -> R_+ when stepping from l = 1.
void recurrence_step(int l, ResourceVector& vec, const SuccessTable& table);

struct ComputationResources {
  int l_bar = 0;
  ResourceVector vec;
  Rational headline_r0;  // R_0 at max(l_bar, 1)
};

/// Selects l_bar = highest_level(log10_N, p_q0(model)) and evaluates the
/// recurrences up to max(l_bar, 1). Throws for an above-threshold model.
ComputationResources resources_for_computation(double log10_N, const NoiseModel& model,
                                               const SuccessTable& table);

struct CurveRow {
  double p_e = 0.0;
  double log10_N = 0.0;
  int l_bar = 0;
  Rational r0, rh, rplus, rs, rd;
};

/// Evaluates resources_for_computation across the N grid for each p_e.
std::vector<CurveRow> resource_curve(const std::vector<double>& log10_N_grid,
                                     const std::vector<double>& p_e_list,
                                     const SuccessTable& table);

}  // namespace ftc
