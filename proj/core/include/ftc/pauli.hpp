#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ftc {

/// An n-qubit Pauli operator stored as X/Z bit masks plus a phase exponent.
///
/// The operator represented is i^phase * prod_q X_q^{x_q} Z_q^{z_q}, with the
/// X factor to the left of the Z factor on each site. Under this convention
/// Y = i X Z, so the single-qubit product X*Z equals -i Y.
class PauliString {
 public:
  explicit PauliString(std::size_t n_qubits);

  static PauliString identity(std::size_t n_qubits);
  /// Single-qubit Pauli ('I', 'X', 'Y' or 'Z') embedded at position q.
  static PauliString single(std::size_t n_qubits, std::size_t q, char pauli);
  /// Parse a string like "+XIZY" or "-iXX". Length after the sign prefix
  /// must equal the qubit count.
  static PauliString from_str(const std::string& s);

  std::size_t num_qubits() const { return n_; }

  bool x(std::size_t q) const { return bit(x_, q); }
  bool z(std::size_t q) const { return bit(z_, q); }
  void set_x(std::size_t q, bool v) { set_bit(x_, q, v); }
  void set_z(std::size_t q, bool v) { set_bit(z_, q, v); }

  /// Phase exponent k in i^k, modulo 4.
  uint8_t phase() const { return phase_; }
  void set_phase(uint8_t k) { phase_ = k & 3; }
  void mul_phase(uint8_t k) { phase_ = (phase_ + k) & 3; }

  /// Number of qubits acted on non-trivially.
  std::size_t weight() const;
  bool is_identity() const;
  /// Identity up to phase.
  bool has_trivial_support() const;

  bool commutes_with(const PauliString& other) const;

  /// Hermitian iff the phase parity equals the Y-site-count parity (each Y
  /// contributes one factor of i in the X-before-Z normal form).
  bool is_hermitian() const;

  /// Group product with exact phase tracking. Throws std::invalid_argument
  /// on size mismatch.
  PauliString& operator*=(const PauliString& rhs);
  friend PauliString operator*(PauliString lhs, const PauliString& rhs) {
    lhs *= rhs;
    return lhs;
  }

  bool operator==(const PauliString& other) const = default;

  /// Letter at site q in {'I','X','Y','Z'}, ignoring the global phase.
  char letter(std::size_t q) const;
  std::string str() const;

  /// In-place conjugation helpers used by the tableau rows; `q` indices must
  /// be in range (unchecked here, the tableau validates).
  void conj_h(std::size_t q);
  void conj_s(std::size_t q);
  void conj_x(std::size_t q);
  void conj_z(std::size_t q);
  void conj_cz(std::size_t a, std::size_t b);
  void conj_cnot(std::size_t c, std::size_t t);

 private:
  static bool bit(const std::vector<uint64_t>& w, std::size_t q) {
    return (w[q >> 6] >> (q & 63)) & 1u;
  }
  static void set_bit(std::vector<uint64_t>& w, std::size_t q, bool v) {
    if (v)
      w[q >> 6] |= uint64_t{1} << (q & 63);
    else
      w[q >> 6] &= ~(uint64_t{1} << (q & 63));
  }

  std::size_t n_;
  std::vector<uint64_t> x_;
  std::vector<uint64_t> z_;
  uint8_t phase_ = 0;
};

}  // namespace ftc
