#include "ftc/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace ftc {

namespace {
std::size_t words_for(std::size_t n) { return (n + 63) / 64; }
}  // namespace

PauliString::PauliString(std::size_t n_qubits)
    : n_(n_qubits), x_(words_for(n_qubits), 0), z_(words_for(n_qubits), 0) {
  if (n_qubits == 0) throw std::invalid_argument("PauliString: n_qubits must be positive");
}

PauliString PauliString::identity(std::size_t n_qubits) { return PauliString(n_qubits); }

PauliString PauliString::single(std::size_t n_qubits, std::size_t q, char pauli) {
  PauliString p(n_qubits);
  if (q >= n_qubits) throw std::out_of_range("PauliString::single: qubit out of range");
  switch (pauli) {
    case 'I':
      break;
    case 'X':
      p.set_x(q, true);
      break;
    case 'Y':
      p.set_x(q, true);
      p.set_z(q, true);
      p.phase_ = 1;  // Y = i X Z
      break;
    case 'Z':
      p.set_z(q, true);
      break;
    default:
      throw std::invalid_argument("PauliString::single: unknown Pauli letter");
  }
  return p;
}

PauliString PauliString::from_str(const std::string& s) {
  std::size_t i = 0;
  uint8_t phase = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') phase = 2;
    ++i;
  }
  if (i < s.size() && s[i] == 'i') {
    phase = (phase + 1) & 3;
    ++i;
  }
  const std::string body = s.substr(i);
  if (body.empty()) throw std::invalid_argument("PauliString::from_str: empty body");
  PauliString p(body.size());
  for (std::size_t q = 0; q < body.size(); ++q) {
    PauliString site = single(body.size(), q, body[q]);
    p *= site;
  }
  p.mul_phase(phase);
  return p;
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) w += std::popcount(x_[i] | z_[i]);
  return w;
}

bool PauliString::is_identity() const { return phase_ == 0 && has_trivial_support(); }

bool PauliString::has_trivial_support() const {
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (x_[i] | z_[i]) return false;
  return true;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_ != other.n_) throw std::invalid_argument("PauliString: size mismatch");
  std::size_t cross = 0;
  for (std::size_t i = 0; i < x_.size(); ++i)
    cross += std::popcount(x_[i] & other.z_[i]) + std::popcount(z_[i] & other.x_[i]);
  return (cross & 1) == 0;
}

bool PauliString::is_hermitian() const {
  std::size_t y_sites = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) y_sites += std::popcount(x_[i] & z_[i]);
  return ((phase_ ^ y_sites) & 1) == 0;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("PauliString: size mismatch");
  // i^a X^x1 Z^z1 * i^b X^x2 Z^z2 = i^{a+b} (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2}
  std::size_t cross = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    cross += std::popcount(z_[i] & rhs.x_[i]);
    x_[i] ^= rhs.x_[i];
    z_[i] ^= rhs.z_[i];
  }
  phase_ = (phase_ + rhs.phase_ + 2 * (cross & 1)) & 3;
  return *this;
}

char PauliString::letter(std::size_t q) const {
  const bool xb = x(q), zb = z(q);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

std::string PauliString::str() const {
  // Report the phase relative to the product of site letters (Y = i X Z each).
  std::size_t ys = 0;
  for (std::size_t q = 0; q < n_; ++q)
    if (x(q) && z(q)) ++ys;
  const uint8_t rel = (phase_ + 4 - (ys & 3)) & 3;
  static const char* pre[4] = {"+", "+i", "-", "-i"};
  std::string out = pre[rel];
  for (std::size_t q = 0; q < n_; ++q) out += letter(q);
  return out;
}

void PauliString::conj_h(std::size_t q) {
  const bool xb = x(q), zb = z(q);
  if (xb && zb) phase_ = (phase_ + 2) & 3;
  set_x(q, zb);
  set_z(q, xb);
}

void PauliString::conj_s(std::size_t q) {
  if (x(q)) {
    phase_ = (phase_ + 1) & 3;
    set_z(q, !z(q));
  }
}

void PauliString::conj_x(std::size_t q) {
  if (z(q)) phase_ = (phase_ + 2) & 3;
}

void PauliString::conj_z(std::size_t q) {
  if (x(q)) phase_ = (phase_ + 2) & 3;
}

void PauliString::conj_cz(std::size_t a, std::size_t b) {
  const bool xa = x(a), xb = x(b);
  if (xa && xb) phase_ = (phase_ + 2) & 3;
  if (xb) set_z(a, !z(a));
  if (xa) set_z(b, !z(b));
}

void PauliString::conj_cnot(std::size_t c, std::size_t t) {
  if (x(c)) set_x(t, !x(t));
  if (z(t)) set_z(c, !z(c));
}

}  // namespace ftc
