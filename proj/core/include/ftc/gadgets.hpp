#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftc/blueprint.hpp"
#include "ftc/noise.hpp"
#include "ftc/steane.hpp"
#include "ftc/tableau.hpp"

namespace ftc {

/// Stable address of one noisy physical operation inside a gadget run.
/// Operations are numbered per structural call (the top-level schedule is
/// call 0, every verified-preparation invocation gets the next id); retried
/// attempts reuse the call id. The numbering is identical across runs of the
/// same blueprint, which makes single-fault enumeration well defined.
struct FaultSite {
  int call_id = 0;
  int op_id = 0;
  bool is_measurement = false;
};

/// Deterministic fault injection: at the first occurrence of (call_id,
/// op_id), multiply the pair error (a, b codes in {I=0,X=1,Y=2,Z=3}) into
/// the frame after a two-qubit gate, or flip a measurement outcome.
struct PlantedFault {
  int call_id = 0;
  int op_id = 0;
  int a = 0;
  int b = 0;
  bool flip = false;
};

struct ExecOptions {
  bool noise_enabled = true;
  /// Deterministic faults, each consumed at the first occurrence of its
  /// (call_id, op_id) address; sites must be distinct.
  std::vector<PlantedFault> faults;
  bool record_sites = false;
  StabilizerState* capture_state = nullptr;  // receives the final register
};

/// Result of one gadget run. On acceptance the output classes give, per
/// output logical qubit, the residual frame reduced modulo the code
/// ('I' means no logical error).
struct VerificationOutcome {
  bool accepted = false;
  std::string failed_checkpoint;
  std::vector<char> output_classes;
  bool logical_error = false;
  long prep_attempts = 0;  // total verified-preparation attempts consumed
  PauliString residual_frame{1};
  std::vector<std::vector<std::size_t>> output_qubits;  // per output group
  std::vector<FaultSite> sites;  // filled when record_sites is set
};

/// Execute a gadget blueprint end to end: lazy verified preparation of every
/// block (retried until its own checks pass), transversal gates with
/// two-qubit noise, noisy destructive measurements, checkpoint evaluation in
/// schedule order with immediate abort, and teleportation byproducts folded
/// in per physical qubit. Single-qubit gates and resets are noiseless.
VerificationOutcome run_gadget(const GadgetBlueprint& bp, const NoiseModel& model, Rng& rng,
                               const ExecOptions& opts = {});

/// One attempt of the verified level-1 preparation of |0bar>/|+bar> (no
/// retry): noisy encoder plus one destructive comparison against a bare
/// encoded copy, accepted only when its full decode (syndrome and logical
/// parity) is clean. On acceptance the outcome carries the logical class of
/// the residual frame on the data block; logical_error reduces that class
/// modulo the target state's own logical stabilizer (Z for |0bar>, X for
/// |+bar>).
VerificationOutcome run_prep_attempt(bool plus, const NoiseModel& model, Rng& rng,
                                     const ExecOptions& opts = {});

/// Linear cluster of `n_logical` physical qubits: |+>^n chained by CZ.
StabilizerState ideal_hexa_state(std::size_t n_logical = 6);

/// Standalone one-bit teleportation between two equal-size blocks of an
/// existing state. The target must hold |+bar>; afterwards it carries
/// H(state) with byproducts already applied, and the source is consumed.
struct TeleportResult {
  bool accepted = false;  // source syndrome clean
  int syndrome = 0;
  int logical_out = 0;  // corrected logical X outcome of the source
};
TeleportResult one_bit_teleport(StabilizerState& state, const steane::CodeBlock& source,
                                const steane::CodeBlock& target, const NoiseModel& model,
                                Rng& rng);

/// Noiseless verified preparation target: |0bar> / |+bar> stabilizer check
/// helper — the embedded logical operator of a 7-qubit block.
PauliString embedded_logical(char which, std::size_t n_total,
                             const std::vector<std::size_t>& qubits);

}  // namespace ftc
