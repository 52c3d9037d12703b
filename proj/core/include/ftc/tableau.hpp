#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "ftc/pauli.hpp"

namespace ftc {

using Rng = std::mt19937_64;

enum class Gate : uint8_t { H, S, X, Z, CZ, CNOT };

Gate gate_from_name(const std::string& name);
const char* gate_name(Gate g);
bool gate_is_two_qubit(Gate g);

/// Stabilizer state as a full Aaronson-Gottesman style tableau: n stabilizer
/// generators, n paired destabilizers, and a deferred Pauli frame.
///
/// The frame holds pending Pauli corrections (noise and teleportation
/// byproducts). It is conjugated along with the generators by every gate and
/// folded into measurement outcomes as a sign, never applied to the tableau.
class StabilizerState {
 public:
  /// |0...0> on n qubits.
  explicit StabilizerState(std::size_t n_qubits);

  std::size_t num_qubits() const { return n_; }

  const PauliString& stabilizer(std::size_t i) const { return stab_[i]; }
  const PauliString& destabilizer(std::size_t i) const { return destab_[i]; }
  const PauliString& pauli_frame() const { return frame_; }

  void apply(Gate g, std::size_t q);
  void apply(Gate g, std::size_t a, std::size_t b);

  /// Multiply a Pauli error into the deferred frame.
  void inject_frame(const PauliString& p);
  void inject_frame(std::size_t q, char pauli);
  void clear_frame();

  /// Measure a Hermitian Pauli observable (phase must be +1 or -1).
  ///
  /// If +/-obs is in the stabilizer group the deterministic outcome is
  /// returned and the state is untouched; otherwise the outcome is uniform
  /// and the tableau collapses so that outcome*obs becomes a stabilizer.
  /// The reported sign includes the Pauli frame's (anti)commutation with obs.
  int measure(const PauliString& obs, Rng& rng);

  /// Outcome the frame-free state would give, without the frame sign.
  /// Collapses the state exactly like measure().
  int measure_ignoring_frame(const PauliString& obs, Rng& rng);

  /// True when +obs or -obs is in the stabilizer group.
  bool is_deterministic(const PauliString& obs) const;

  /// Expectation of a Pauli on the frame-free tableau: +1/-1 when
  /// deterministic, 0 otherwise.
  int expectation_ignoring_frame(const PauliString& obs) const;

  /// Reset a qubit to |0> (measure Z, flip if needed). Frame bits on the
  /// qubit are discarded.
  void reset(std::size_t q, Rng& rng);

  /// Tensor product: this (x) other, other's qubits appended at the end.
  static StabilizerState tensor(const StabilizerState& a, const StabilizerState& b);

  /// Consistency checks used by property tests.
  bool invariants_hold() const;

 private:
  void check_target(std::size_t q) const;
  PauliString extend(const PauliString& p, std::size_t n) const;

  std::size_t n_;
  std::vector<PauliString> stab_;
  std::vector<PauliString> destab_;
  PauliString frame_;
};

/// Rank of the 2n x 2n symplectic matrix formed by the generators.
std::size_t symplectic_rank(const std::vector<PauliString>& rows);

}  // namespace ftc
