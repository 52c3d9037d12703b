#include <doctest.h>

#include <stdexcept>

#include <array>
#include <set>

#include "ftc/noise.hpp"

using namespace ftc;

TEST_CASE("pair_index enumerates the 15 non-identity pairs bijectively") {
  std::set<int> seen;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == 0 && b == 0) continue;
      const int idx = pair_index(a, b);
      CHECK(idx >= 0);
      CHECK(idx < 15);
      seen.insert(idx);
    }
  CHECK(seen.size() == 15);
  CHECK(pauli_letter(0) == 'I');
  CHECK(pauli_letter(2) == 'Y');
}

TEST_CASE("uniform depolarizing table") {
  const auto m = NoiseModel::uniform_depolarizing(0.015);
  m.validate();
  CHECK(m.p_e == doctest::Approx(0.015));
  CHECK(m.table_sum() == doctest::Approx(0.015));
  for (int i = 0; i < 15; ++i) CHECK(m.two_qubit_table[std::size_t(i)] == doctest::Approx(0.001));
  CHECK(m.p_m == doctest::Approx(0.004));
  CHECK(m.row_sum(1) == doctest::Approx(0.004));  // X row: XI, XX, XY, XZ
  CHECK(m.row_sum(3) == doctest::Approx(0.004));
}

TEST_CASE("validate rejects out-of-range parameters") {
  auto m = NoiseModel::uniform_depolarizing(0.01);
  m.p_m = -0.1;
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  m = NoiseModel::uniform_depolarizing(0.01);
  m.two_qubit_table[3] = 1.5;
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  CHECK_THROWS_AS(NoiseModel::uniform_depolarizing(-0.2).validate(), std::invalid_argument);
  CHECK_NOTHROW(NoiseModel::noiseless().validate());
}

TEST_CASE("two-qubit sampling reproduces the table frequencies") {
  const auto m = NoiseModel::uniform_depolarizing(0.3);
  Rng rng(4242);
  std::array<long, 16> counts{};
  const long n = 200000;
  for (long t = 0; t < n; ++t) {
    const auto [a, b] = sample_two_qubit_error(m, rng);
    counts[std::size_t(a * 4 + b)]++;
  }
  CHECK(double(counts[0]) / double(n) == doctest::Approx(0.7).epsilon(0.02));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == 0 && b == 0) continue;
      CHECK(double(counts[std::size_t(a * 4 + b)]) / double(n) ==
            doctest::Approx(0.02).epsilon(0.15));
    }
}

TEST_CASE("measurement flips at rate p_M") {
  auto m = NoiseModel::uniform_depolarizing(0.0);
  m.p_m = 0.25;
  Rng rng(7);
  long flips = 0;
  const long n = 100000;
  for (long t = 0; t < n; ++t) flips += sample_measurement_flip(m, rng) ? 1 : 0;
  CHECK(double(flips) / double(n) == doctest::Approx(0.25).epsilon(0.03));
}

TEST_CASE("derive_seed is a stable splittable hash") {
  CHECK(derive_seed(1, 0) == derive_seed(1, 0));
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  std::set<uint64_t> seeds;
  for (uint64_t i = 0; i < 1000; ++i) seeds.insert(derive_seed(99, i));
  CHECK(seeds.size() == 1000);
}
