#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ftc/pauli.hpp"
#include "ftc/tableau.hpp"

namespace ftc::steane {

inline constexpr std::size_t kBlock = 7;

/// A block of physical qubit indices forming one encoded qubit. Level-l
/// blocks hold 7^l indices ordered by the Hamming-matrix column convention
/// (column j of the parity-check matrix is the binary expansion of j,
/// qubit index j-1).
struct CodeBlock {
  int level = 1;
  std::vector<std::size_t> qubits;

  std::size_t size() const { return qubits.size(); }
};

/// Detect-only syndrome: three X-type and three Z-type check bits.
struct Syndrome {
  uint8_t x_checks = 0;  // triggered by Z errors
  uint8_t z_checks = 0;  // triggered by X errors
  bool clean() const { return x_checks == 0 && z_checks == 0; }
};

/// Supports (qubit index sets) of the three weight-4 generators, shared by
/// the X- and Z-type rows of the self-dual Steane code.
const std::array<std::array<std::size_t, 4>, 3>& generator_supports();

/// The 6 stabilizer generators on 7 qubits: 3 X-type then 3 Z-type.
std::vector<PauliString> stabilizer_generators();

PauliString logical_x();  // X^{x7}
PauliString logical_z();  // Z^{x7}

/// Embed a 7-qubit Pauli onto the given block of a larger register.
PauliString embed(const PauliString& p, std::size_t n_total,
                  const std::vector<std::size_t>& qubits);

/// Syndrome of a 7-bit measurement record: bit k is the parity over
/// generator support k. Zero for any codeword pattern; equals the
/// (1-based) Hamming column index of a single flipped position.
int bit_syndrome(const std::array<int, 7>& bits);

/// Overall parity of the 7 bits: the logical outcome of a transversal
/// measurement (every generator support has even weight).
int bit_parity(const std::array<int, 7>& bits);

struct DecodedBits {
  int raw_syndrome = 0;       // before correction, 0..7
  int logical_raw = 0;        // parity before correction
  int logical_corrected = 0;  // parity after single-error correction
};

/// Classical decode of a destructive transversal measurement: a non-zero
/// syndrome flips the bit at the indicated Hamming position first.
DecodedBits decode_bits(const std::array<int, 7>& bits);

/// Gate list of the standard |0_bar> encoder: H on the pivot qubits
/// {0,1,3} followed by 9 CNOTs. Qubits are block-local 0..6.
struct EncoderOp {
  bool is_h;
  std::size_t a;  // H target, or CNOT control
  std::size_t b;  // CNOT target
};
const std::vector<EncoderOp>& encoder_ops();

/// Noiseless logical |0_bar> or |+_bar> on a fresh 7-qubit state.
StabilizerState encode_logical(bool plus);

/// Apply a transversal gate across one or two equal-level blocks.
void transversal_gate(StabilizerState& state, Gate g, const CodeBlock& a);
void transversal_gate(StabilizerState& state, Gate g, const CodeBlock& a, const CodeBlock& b);

/// Reduce a Pauli restricted to a 7-qubit block modulo the stabilizer
/// group: returns the logical class 'I', 'X', 'Z' or 'Y' after correcting
/// the weight-1 error indicated by the syndrome.
char logical_class(const PauliString& p, const std::vector<std::size_t>& qubits);

/// Syndrome of a Pauli error pattern on a 7-qubit block.
Syndrome error_syndrome(const PauliString& p, const std::vector<std::size_t>& qubits);

}  // namespace ftc::steane
