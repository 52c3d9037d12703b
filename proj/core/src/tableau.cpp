#include "ftc/tableau.hpp"

#include <stdexcept>
#include <string>

namespace ftc {

Gate gate_from_name(const std::string& name) {
  if (name == "H") return Gate::H;
  if (name == "S") return Gate::S;
  if (name == "X") return Gate::X;
  if (name == "Z") return Gate::Z;
  if (name == "CZ") return Gate::CZ;
  if (name == "CNOT" || name == "CX") return Gate::CNOT;
  throw std::invalid_argument("unknown gate: " + name);
}

const char* gate_name(Gate g) {
  switch (g) {
    case Gate::H: return "H";
    case Gate::S: return "S";
    case Gate::X: return "X";
    case Gate::Z: return "Z";
    case Gate::CZ: return "CZ";
    case Gate::CNOT: return "CNOT";
  }
  return "?";
}

bool gate_is_two_qubit(Gate g) { return g == Gate::CZ || g == Gate::CNOT; }

StabilizerState::StabilizerState(std::size_t n_qubits)
    : n_(n_qubits), frame_(PauliString::identity(n_qubits)) {
  stab_.reserve(n_);
  destab_.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    stab_.push_back(PauliString::single(n_, i, 'Z'));
    destab_.push_back(PauliString::single(n_, i, 'X'));
  }
}

void StabilizerState::check_target(std::size_t q) const {
  if (q >= n_) throw std::out_of_range("StabilizerState: target out of range");
}

void StabilizerState::apply(Gate g, std::size_t q) {
  check_target(q);
  if (gate_is_two_qubit(g)) throw std::invalid_argument("two-qubit gate needs two targets");
  auto each = [&](auto&& f) {
    for (auto& r : stab_) f(r);
    for (auto& r : destab_) f(r);
    f(frame_);
  };
  switch (g) {
    case Gate::H: each([&](PauliString& p) { p.conj_h(q); }); break;
    case Gate::S: each([&](PauliString& p) { p.conj_s(q); }); break;
    case Gate::X: each([&](PauliString& p) { p.conj_x(q); }); break;
    case Gate::Z: each([&](PauliString& p) { p.conj_z(q); }); break;
    default: break;
  }
}

void StabilizerState::apply(Gate g, std::size_t a, std::size_t b) {
  check_target(a);
  check_target(b);
  if (!gate_is_two_qubit(g)) throw std::invalid_argument("single-qubit gate takes one target");
  if (a == b) throw std::invalid_argument("two-qubit gate targets must be distinct");
  auto each = [&](auto&& f) {
    for (auto& r : stab_) f(r);
    for (auto& r : destab_) f(r);
    f(frame_);
  };
  if (g == Gate::CZ)
    each([&](PauliString& p) { p.conj_cz(a, b); });
  else
    each([&](PauliString& p) { p.conj_cnot(a, b); });
}

void StabilizerState::inject_frame(const PauliString& p) {
  if (p.num_qubits() != n_) throw std::invalid_argument("frame error size mismatch");
  frame_ *= p;
}

void StabilizerState::inject_frame(std::size_t q, char pauli) {
  check_target(q);
  frame_ *= PauliString::single(n_, q, pauli);
}

void StabilizerState::clear_frame() { frame_ = PauliString::identity(n_); }

bool StabilizerState::is_deterministic(const PauliString& obs) const {
  for (const auto& s : stab_)
    if (!s.commutes_with(obs)) return false;
  return true;
}

int StabilizerState::expectation_ignoring_frame(const PauliString& obs) const {
  if (!is_deterministic(obs)) return 0;
  PauliString acc = PauliString::identity(n_);
  for (std::size_t j = 0; j < n_; ++j)
    if (!destab_[j].commutes_with(obs)) acc *= stab_[j];
  if (acc.phase() == obs.phase()) return 1;
  return -1;
}

int StabilizerState::measure_ignoring_frame(const PauliString& obs, Rng& rng) {
  if (obs.num_qubits() != n_) throw std::invalid_argument("observable size mismatch");
  if (!obs.is_hermitian()) throw std::invalid_argument("observable must be Hermitian");

  std::size_t k = n_;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!stab_[i].commutes_with(obs)) {
      k = i;
      break;
    }
  }
  if (k == n_) {
    // Deterministic: obs (up to sign) is a product of stabilizers selected by
    // destabilizer anticommutation.
    PauliString acc = PauliString::identity(n_);
    for (std::size_t j = 0; j < n_; ++j)
      if (!destab_[j].commutes_with(obs)) acc *= stab_[j];
    const uint8_t rel = (acc.phase() - obs.phase()) & 3;
    if (rel == 0) return 1;
    if (rel == 2) return -1;
    throw std::logic_error("deterministic measurement produced imaginary phase");
  }

  const int outcome = (rng() & 1) ? -1 : 1;
  const PauliString pivot = stab_[k];
  for (std::size_t j = 0; j < n_; ++j) {
    if (j != k && !stab_[j].commutes_with(obs)) stab_[j] *= pivot;
    if (!destab_[j].commutes_with(obs)) {
      if (j == k) continue;  // replaced below
      destab_[j] *= pivot;
    }
  }
  destab_[k] = pivot;
  stab_[k] = obs;
  if (outcome < 0) stab_[k].mul_phase(2);
  return outcome;
}

int StabilizerState::measure(const PauliString& obs, Rng& rng) {
  const int sign = frame_.commutes_with(obs) ? 1 : -1;
  return sign * measure_ignoring_frame(obs, rng);
}

void StabilizerState::reset(std::size_t q, Rng& rng) {
  check_target(q);
  const PauliString zq = PauliString::single(n_, q, 'Z');
  const int r = measure_ignoring_frame(zq, rng);
  if (r < 0) apply(Gate::X, q);
  // Drop frame bits on the freed qubit.
  frame_.set_x(q, false);
  frame_.set_z(q, false);
}

StabilizerState StabilizerState::tensor(const StabilizerState& a, const StabilizerState& b) {
  StabilizerState out(a.n_ + b.n_);
  auto lift = [&](const PauliString& p, std::size_t offset) {
    PauliString q = PauliString::identity(out.n_);
    for (std::size_t i = 0; i < p.num_qubits(); ++i) {
      q.set_x(i + offset, p.x(i));
      q.set_z(i + offset, p.z(i));
    }
    q.set_phase(p.phase());
    return q;
  };
  for (std::size_t i = 0; i < a.n_; ++i) {
    out.stab_[i] = lift(a.stab_[i], 0);
    out.destab_[i] = lift(a.destab_[i], 0);
  }
  for (std::size_t i = 0; i < b.n_; ++i) {
    out.stab_[a.n_ + i] = lift(b.stab_[i], a.n_);
    out.destab_[a.n_ + i] = lift(b.destab_[i], a.n_);
  }
  out.frame_ = lift(a.frame_, 0);
  out.frame_ *= lift(b.frame_, a.n_);
  return out;
}

bool StabilizerState::invariants_hold() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!stab_[i].is_hermitian()) return false;  // real sign, phase parity == Y parity
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!stab_[i].commutes_with(stab_[j])) return false;
    for (std::size_t j = 0; j < n_; ++j) {
      const bool anti = !destab_[j].commutes_with(stab_[i]);
      if (anti != (i == j)) return false;
    }
  }
  std::vector<PauliString> rows;
  rows.reserve(2 * n_);
  rows.insert(rows.end(), stab_.begin(), stab_.end());
  rows.insert(rows.end(), destab_.begin(), destab_.end());
  return symplectic_rank(rows) == 2 * n_;
}

std::size_t symplectic_rank(const std::vector<PauliString>& rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows[0].num_qubits();
  // Gaussian elimination over GF(2) on [x | z] bit rows.
  std::vector<std::vector<bool>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<bool> v(2 * n, false);
    for (std::size_t q = 0; q < n; ++q) {
      v[q] = r.x(q);
      v[n + q] = r.z(q);
    }
    m.push_back(std::move(v));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 2 * n && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && !m[pivot][col]) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && m[r][col])
        for (std::size_t c = col; c < 2 * n; ++c) m[r][c] = m[r][c] ^ m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace ftc
