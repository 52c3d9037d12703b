#include "ftc/noise.hpp"

#include <stdexcept>

namespace ftc {

NoiseModel NoiseModel::uniform_depolarizing(double p_e) {
  NoiseModel m;
  m.p_e = p_e;
  m.two_qubit_table.fill(p_e / 15.0);
  m.p_m = 4.0 * p_e / 15.0;
  m.validate();
  return m;
}

void NoiseModel::validate() const {
  auto check01 = [](double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument(std::string(what) + " must be in [0,1]");
  };
  check01(p_e, "p_e");
  check01(p_m, "p_M");
  double sum = 0.0;
  for (double p : two_qubit_table) {
    check01(p, "p_AB");
    sum += p;
  }
  if (sum > 1.0 + 1e-12) throw std::invalid_argument("two-qubit table sums above 1");
  if (tau_m < 0.0) throw std::invalid_argument("tau_m must be non-negative");
  if (n_steps < 0) throw std::invalid_argument("n_steps must be non-negative");
}

double NoiseModel::table_sum() const {
  double s = 0.0;
  for (double p : two_qubit_table) s += p;
  return s;
}

double NoiseModel::row_sum(int a) const {
  double s = 0.0;
  for (int b = 0; b < 4; ++b) s += two_qubit_table[pair_index(a, b)];
  return s;
}

std::pair<int, int> sample_two_qubit_error(const NoiseModel& model, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double r = u(rng);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      if (a == 0 && b == 0) continue;
      const double p = model.two_qubit_table[pair_index(a, b)];
      if (r < p) return {a, b};
      r -= p;
    }
  }
  return {0, 0};
}

bool sample_measurement_flip(const NoiseModel& model, Rng& rng) {
  if (model.p_m <= 0.0) return false;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return u(rng) < model.p_m;
}

uint64_t derive_seed(uint64_t master_seed, uint64_t index) {
  uint64_t z = master_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace ftc
