#include "ftc/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace ftc {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

StateVector::StateVector(std::size_t n_qubits) : n_(n_qubits) {
  if (n_qubits > 24) throw std::invalid_argument("StateVector: too many qubits");
  amps_.assign(std::size_t{1} << n_, {0.0, 0.0});
  amps_[0] = 1.0;
}

void StateVector::apply(Gate g, std::size_t q) {
  if (q >= n_) throw std::out_of_range("StateVector: target out of range");
  const std::size_t bit = std::size_t{1} << q;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) continue;
    const std::size_t j = i | bit;
    switch (g) {
      case Gate::H: {
        const auto a = amps_[i], b = amps_[j];
        amps_[i] = (a + b) * inv_sqrt2;
        amps_[j] = (a - b) * inv_sqrt2;
        break;
      }
      case Gate::S:
        amps_[j] *= kI;
        break;
      case Gate::X:
        std::swap(amps_[i], amps_[j]);
        break;
      case Gate::Z:
        amps_[j] = -amps_[j];
        break;
      default:
        throw std::invalid_argument("StateVector: bad single-qubit gate");
    }
  }
}

void StateVector::apply(Gate g, std::size_t a, std::size_t b) {
  if (a >= n_ || b >= n_) throw std::out_of_range("StateVector: target out of range");
  if (a == b) throw std::invalid_argument("StateVector: duplicate targets");
  const std::size_t ba = std::size_t{1} << a, bb = std::size_t{1} << b;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (g == Gate::CZ) {
      if ((i & ba) && (i & bb)) amps_[i] = -amps_[i];
    } else if (g == Gate::CNOT) {
      if ((i & ba) && !(i & bb)) std::swap(amps_[i], amps_[i | bb]);
    } else {
      throw std::invalid_argument("StateVector: bad two-qubit gate");
    }
  }
}

std::vector<std::complex<double>> StateVector::pauli_applied(const PauliString& p) const {
  if (p.num_qubits() != n_) throw std::invalid_argument("StateVector: Pauli size mismatch");
  std::size_t xmask = 0, zmask = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    if (p.x(q)) xmask |= std::size_t{1} << q;
    if (p.z(q)) zmask |= std::size_t{1} << q;
  }
  std::complex<double> global = 1.0;
  switch (p.phase()) {
    case 1: global = kI; break;
    case 2: global = -1.0; break;
    case 3: global = -kI; break;
    default: break;
  }
  std::vector<std::complex<double>> out(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    // (X^x Z^z)|i> = (-1)^{|z & i|} |i ^ x>
    const int zpar = std::popcount(static_cast<unsigned long long>(zmask & i)) & 1;
    const std::size_t j = i ^ xmask;
    out[j] = (zpar ? -global : global) * amps_[i];
  }
  return out;
}

double StateVector::expectation(const PauliString& p) const {
  const auto pv = pauli_applied(p);
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) acc += std::conj(amps_[i]) * pv[i];
  return acc.real();
}

void StateVector::apply_pauli(const PauliString& p) { amps_ = pauli_applied(p); }

int StateVector::measure(const PauliString& p, Rng& rng) {
  if (!p.is_hermitian()) throw std::invalid_argument("StateVector: observable must be Hermitian");
  const double exp = expectation(p);
  const double p_plus = std::clamp(0.5 * (1.0 + exp), 0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int outcome = (u(rng) < p_plus) ? 1 : -1;
  // Project: |psi> <- (I + outcome*P)|psi> / norm
  const auto pv = pauli_applied(p);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    amps_[i] = 0.5 * (amps_[i] + double(outcome) * pv[i]);
    norm2 += std::norm(amps_[i]);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amps_) a *= inv;
  return outcome;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> out(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) out[i] = std::norm(amps_[i]);
  return out;
}

std::vector<double> StateVector::marginal(const std::vector<std::size_t>& qubits) const {
  std::vector<double> out(std::size_t{1} << qubits.size(), 0.0);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    std::size_t key = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k)
      if (i & (std::size_t{1} << qubits[k])) key |= std::size_t{1} << k;
    out[key] += std::norm(amps_[i]);
  }
  return out;
}

}  // namespace ftc
