#include "ftc/steane.hpp"

#include <stdexcept>

namespace ftc::steane {

const std::array<std::array<std::size_t, 4>, 3>& generator_supports() {
  // Column j (1-based) of the Hamming parity-check matrix is the binary
  // expansion of j; support k collects the columns with bit k set.
  static const std::array<std::array<std::size_t, 4>, 3> supports = {{
      {0, 2, 4, 6},  // columns 1,3,5,7
      {1, 2, 5, 6},  // columns 2,3,6,7
      {3, 4, 5, 6},  // columns 4,5,6,7
  }};
  return supports;
}

std::vector<PauliString> stabilizer_generators() {
  std::vector<PauliString> gens;
  for (char type : {'X', 'Z'}) {
    for (const auto& support : generator_supports()) {
      PauliString g(kBlock);
      for (std::size_t q : support) {
        if (type == 'X')
          g.set_x(q, true);
        else
          g.set_z(q, true);
      }
      gens.push_back(g);
    }
  }
  return gens;
}

PauliString logical_x() {
  PauliString p(kBlock);
  for (std::size_t q = 0; q < kBlock; ++q) p.set_x(q, true);
  return p;
}

PauliString logical_z() {
  PauliString p(kBlock);
  for (std::size_t q = 0; q < kBlock; ++q) p.set_z(q, true);
  return p;
}

PauliString embed(const PauliString& p, std::size_t n_total,
                  const std::vector<std::size_t>& qubits) {
  if (p.num_qubits() != qubits.size())
    throw std::invalid_argument("embed: block size mismatch");
  PauliString out(n_total);
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    out.set_x(qubits[i], p.x(i));
    out.set_z(qubits[i], p.z(i));
  }
  out.set_phase(p.phase());
  return out;
}

int bit_syndrome(const std::array<int, 7>& bits) {
  int s = 0;
  for (int k = 0; k < 3; ++k) {
    int parity = 0;
    for (std::size_t q : generator_supports()[std::size_t(k)]) parity ^= bits[q] & 1;
    s |= parity << k;
  }
  return s;
}

int bit_parity(const std::array<int, 7>& bits) {
  int parity = 0;
  for (int b : bits) parity ^= b & 1;
  return parity;
}

DecodedBits decode_bits(const std::array<int, 7>& bits) {
  DecodedBits d;
  d.raw_syndrome = bit_syndrome(bits);
  d.logical_raw = bit_parity(bits);
  // A syndrome value s in 1..7 points at Hamming column s, qubit s-1.
  d.logical_corrected = d.raw_syndrome ? (d.logical_raw ^ 1) : d.logical_raw;
  return d;
}

const std::vector<EncoderOp>& encoder_ops() {
  static const std::vector<EncoderOp> ops = [] {
    std::vector<EncoderOp> v;
    // Pivots are the weight-1 Hamming columns 1,2,4 (qubits 0,1,3).
    for (std::size_t pivot : {0, 1, 3}) v.push_back({true, pivot, 0});
    // CNOTs fan each pivot out over the rest of its generator support.
    const std::array<std::size_t, 3> pivots = {0, 1, 3};
    for (std::size_t k = 0; k < 3; ++k) {
      for (std::size_t q : generator_supports()[k]) {
        if (q != pivots[k]) v.push_back({false, pivots[k], q});
      }
    }
    return v;
  }();
  return ops;
}

StabilizerState encode_logical(bool plus) {
  StabilizerState state(kBlock);
  for (const auto& op : encoder_ops()) {
    if (op.is_h)
      state.apply(Gate::H, op.a);
    else
      state.apply(Gate::CNOT, op.a, op.b);
  }
  if (plus) {
    for (std::size_t q = 0; q < kBlock; ++q) state.apply(Gate::H, q);
  }
  return state;
}

void transversal_gate(StabilizerState& state, Gate g, const CodeBlock& a) {
  if (gate_is_two_qubit(g)) throw std::invalid_argument("transversal_gate: arity mismatch");
  for (std::size_t q : a.qubits) state.apply(g, q);
}

void transversal_gate(StabilizerState& state, Gate g, const CodeBlock& a, const CodeBlock& b) {
  if (!gate_is_two_qubit(g)) throw std::invalid_argument("transversal_gate: arity mismatch");
  if (a.level != b.level || a.size() != b.size())
    throw std::invalid_argument("transversal_gate: level mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) state.apply(g, a.qubits[i], b.qubits[i]);
}

Syndrome error_syndrome(const PauliString& p, const std::vector<std::size_t>& qubits) {
  if (qubits.size() != kBlock) throw std::invalid_argument("error_syndrome: need a 7-qubit block");
  Syndrome s;
  for (int k = 0; k < 3; ++k) {
    int x_par = 0, z_par = 0;
    for (std::size_t j : generator_supports()[std::size_t(k)]) {
      // X-type checks anticommute with Z components and vice versa.
      if (p.z(qubits[j])) x_par ^= 1;
      if (p.x(qubits[j])) z_par ^= 1;
    }
    s.x_checks |= uint8_t(x_par << k);
    s.z_checks |= uint8_t(z_par << k);
  }
  return s;
}

char logical_class(const PauliString& p, const std::vector<std::size_t>& qubits) {
  const Syndrome s = error_syndrome(p, qubits);
  // Correct the weight-1 error each syndrome points at, then read off the
  // residual logical component from the overall X/Z parities (the logical
  // operators are X^{x7} and Z^{x7}, and every stabilizer has even weight).
  int x_par = 0, z_par = 0;
  for (std::size_t q : qubits) {
    if (p.x(q)) x_par ^= 1;
    if (p.z(q)) z_par ^= 1;
  }
  if (s.z_checks) x_par ^= 1;  // an X correction at one position
  if (s.x_checks) z_par ^= 1;  // a Z correction at one position
  if (x_par && z_par) return 'Y';
  if (x_par) return 'X';
  if (z_par) return 'Z';
  return 'I';
}

}  // namespace ftc::steane
