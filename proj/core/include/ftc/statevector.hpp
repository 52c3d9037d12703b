#pragma once

#include <complex>
#include <vector>

#include "ftc/pauli.hpp"
#include "ftc/tableau.hpp"

namespace ftc {

/// Brute-force 2^n state-vector simulator. Only used as an independent
/// oracle to cross-check the tableau simulator on small systems (n <= ~12).
class StateVector {
 public:
  explicit StateVector(std::size_t n_qubits);

  std::size_t num_qubits() const { return n_; }

  void apply(Gate g, std::size_t q);
  void apply(Gate g, std::size_t a, std::size_t b);
  void apply_pauli(const PauliString& p);

  /// <psi| P |psi>, real part (exact for Hermitian Pauli observables).
  double expectation(const PauliString& p) const;

  /// Projective measurement of a Hermitian Pauli; collapses the state.
  int measure(const PauliString& p, Rng& rng);

  /// Probability of each computational-basis outcome.
  std::vector<double> probabilities() const;

  /// Marginal distribution over the given qubits (low bit = first qubit).
  std::vector<double> marginal(const std::vector<std::size_t>& qubits) const;

 private:
  std::vector<std::complex<double>> pauli_applied(const PauliString& p) const;

  std::size_t n_;
  std::vector<std::complex<double>> amps_;
};

}  // namespace ftc
