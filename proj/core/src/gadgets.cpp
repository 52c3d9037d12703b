#include "ftc/gadgets.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace ftc {

namespace {

constexpr int kMaxPrepAttempts = 100000;

/// Shared per-run context: the physical register, noise configuration,
/// fault plan, structural call numbering and teleport partner tracking.
struct Ctx {
  StabilizerState& state;
  const NoiseModel& model;
  Rng& rng;
  bool noise_enabled = true;
  std::vector<PlantedFault> faults;
  std::vector<bool> fault_consumed;
  std::vector<FaultSite>* record = nullptr;
  int next_call_id = 1;
  long prep_attempts = 0;
  std::vector<long> cz_partner;  // per qubit, -1 when none
};

struct OpScope {
  int call_id = 0;
  int op_id = 0;
};

const PlantedFault* fault_here(Ctx& c, const OpScope& s) {
  for (std::size_t i = 0; i < c.faults.size(); ++i) {
    if (!c.fault_consumed[i] && c.faults[i].call_id == s.call_id &&
        c.faults[i].op_id == s.op_id) {
      c.fault_consumed[i] = true;
      return &c.faults[i];
    }
  }
  return nullptr;
}

void inject_pair(Ctx& c, int code, std::size_t q) {
  if (code) c.state.inject_frame(q, pauli_letter(code));
}

void noisy_gate2(Ctx& c, OpScope& s, Gate g, std::size_t qa, std::size_t qb) {
  c.state.apply(g, qa, qb);
  if (g == Gate::CZ) {
    c.cz_partner[qa] = long(qb);
    c.cz_partner[qb] = long(qa);
  }
  if (c.record) c.record->push_back({s.call_id, s.op_id, false});
  if (const PlantedFault* f = fault_here(c, s)) {
    inject_pair(c, f->a, qa);
    inject_pair(c, f->b, qb);
  } else if (c.noise_enabled) {
    const auto [a, b] = sample_two_qubit_error(c.model, c.rng);
    inject_pair(c, a, qa);
    inject_pair(c, b, qb);
  }
  ++s.op_id;
}

struct MeasBits {
  int tab = 0;  // frame-free tableau outcome
  int obs = 0;  // observed outcome: frame sign and measurement noise applied
};

MeasBits noisy_measure_qubit(Ctx& c, OpScope& s, std::size_t q, char basis) {
  const PauliString obs = PauliString::single(c.state.num_qubits(), q, basis);
  const int tab_sign = c.state.measure_ignoring_frame(obs, c.rng);
  const bool anti = !c.state.pauli_frame().commutes_with(obs);
  bool flip = false;
  if (c.record) c.record->push_back({s.call_id, s.op_id, true});
  if (const PlantedFault* f = fault_here(c, s)) {
    flip = f->flip;
  } else if (c.noise_enabled) {
    flip = sample_measurement_flip(c.model, c.rng);
  }
  ++s.op_id;
  MeasBits out;
  out.tab = tab_sign < 0 ? 1 : 0;
  out.obs = out.tab ^ (anti ? 1 : 0) ^ (flip ? 1 : 0);
  return out;
}

void encode_noisy(Ctx& c, OpScope& s, const std::vector<std::size_t>& block, bool plus) {
  for (std::size_t q : block) c.state.reset(q, c.rng);
  for (const auto& op : steane::encoder_ops()) {
    if (op.is_h)
      c.state.apply(Gate::H, block[op.a]);
    else
      noisy_gate2(c, s, Gate::CNOT, block[op.a], block[op.b]);
  }
  if (plus)
    for (std::size_t q : block) c.state.apply(Gate::H, q);
}

/// One attempt at the verified level-1 preparation. Only the harmful error
/// type of the target state is extracted (X-type for |0bar>, Z-type for
/// |+bar>): the scratch block is a bare encoded copy of the same basis
/// state, coupled so that its own faults propagate onto the data only as the
/// harmless type, and read out destructively. The full decode — syndrome
/// and logical parity — must be clean, so zero-syndrome logical slips of the
/// noisy encoder are caught as well.
bool prep_attempt(Ctx& c, OpScope& s, const std::vector<std::size_t>& data, bool plus,
                  const std::vector<std::size_t>& scr) {
  encode_noisy(c, s, data, plus);
  encode_noisy(c, s, scr, plus);
  for (std::size_t k = 0; k < steane::kBlock; ++k) {
    // |0bar>: data controls, scratch Z faults copy back as harmless Z.
    // |+bar>: scratch controls, scratch X faults copy back as harmless X.
    if (plus)
      noisy_gate2(c, s, Gate::CNOT, scr[k], data[k]);
    else
      noisy_gate2(c, s, Gate::CNOT, data[k], scr[k]);
  }
  std::array<int, 7> bits{};
  for (std::size_t k = 0; k < steane::kBlock; ++k)
    bits[k] = noisy_measure_qubit(c, s, scr[k], plus ? 'X' : 'Z').obs;
  const auto d = steane::decode_bits(bits);
  return d.raw_syndrome == 0 && d.logical_raw == 0;
}

void prepare_verified_block(Ctx& c, const std::vector<std::size_t>& data, bool plus,
                            const std::vector<std::size_t>& scr) {
  OpScope scope{c.next_call_id++, 0};
  for (int attempt = 0; attempt < kMaxPrepAttempts; ++attempt) {
    ++c.prep_attempts;
    scope.op_id = 0;
    if (prep_attempt(c, scope, data, plus, scr)) return;
  }
  throw std::runtime_error("verified preparation did not converge");
}

std::vector<std::size_t> block_qubits(std::size_t start) {
  std::vector<std::size_t> q;
  for (std::size_t k = 0; k < steane::kBlock; ++k) q.push_back(start + k);
  return q;
}

/// GF(2) membership test: true when the per-group class string lies in the
/// span of the generator strings (one 'I'/'X'/'Y'/'Z' letter per output
/// group). Signs are irrelevant here: a frame differing from a stabilizer
/// element by -1 changes the state only by a global phase.
bool class_string_trivial(const std::vector<char>& cls, const std::vector<std::string>& gens) {
  const std::size_t n = cls.size();
  const auto mask_of = [n](const auto& str) {
    uint64_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const char ch = str[i];
      if (ch == 'X' || ch == 'Y') m |= uint64_t(1) << (2 * i);
      if (ch == 'Z' || ch == 'Y') m |= uint64_t(1) << (2 * i + 1);
    }
    return m;
  };
  std::array<uint64_t, 64> basis{};
  for (const auto& g : gens) {
    if (g.size() != n)
      throw std::logic_error("output stabilizer length does not match output group count");
    uint64_t v = mask_of(g);
    for (int bit = 63; v && bit >= 0; --bit) {
      if (!((v >> bit) & 1)) continue;
      if (!basis[std::size_t(bit)]) {
        basis[std::size_t(bit)] = v;
        break;
      }
      v ^= basis[std::size_t(bit)];
    }
  }
  uint64_t v = mask_of(cls);
  for (int bit = 63; v && bit >= 0; --bit) {
    if (!((v >> bit) & 1)) continue;
    if (!basis[std::size_t(bit)]) return false;
    v ^= basis[std::size_t(bit)];
  }
  return v == 0;
}

char combine_classes(const std::vector<char>& cls) {
  if (cls.size() == 1) return cls[0];
  std::array<int, 7> xbits{}, zbits{};
  for (std::size_t j = 0; j < steane::kBlock; ++j) {
    xbits[j] = (cls[j] == 'X' || cls[j] == 'Y') ? 1 : 0;
    zbits[j] = (cls[j] == 'Z' || cls[j] == 'Y') ? 1 : 0;
  }
  int xpar = steane::bit_parity(xbits);
  if (steane::bit_syndrome(xbits)) xpar ^= 1;
  int zpar = steane::bit_parity(zbits);
  if (steane::bit_syndrome(zbits)) zpar ^= 1;
  if (xpar && zpar) return 'Y';
  if (xpar) return 'X';
  if (zpar) return 'Z';
  return 'I';
}

class Executor {
 public:
  Executor(Ctx& ctx, const GadgetBlueprint& bp, std::vector<std::size_t> block_start,
           std::vector<std::size_t> scratch,
           std::vector<std::size_t> arena)
      : ctx_(ctx),
        bp_(bp),
        block_start_(std::move(block_start)),
        scratch_(std::move(scratch)),
        arena_(std::move(arena)),
        scope_{ctx.next_call_id++, 0} {
    for (std::size_t i = 0; i < bp.nodes.size(); ++i) node_index_[bp.nodes[i].id] = i;
    ready_.assign(bp.nodes.size(), false);
    measured_.assign(bp.nodes.size(), false);
    obs_bits_.assign(bp.nodes.size(), {});
    group_of_.assign(bp.nodes.size(), -1);
    for (std::size_t g = 0; g < bp.prep_groups.size(); ++g)
      for (int id : bp.prep_groups[g].nodes) group_of_[index(id)] = long(g);
  }

  struct RunResult {
    bool accepted = true;
    std::string failed_checkpoint;
  };

  RunResult run() {
    for (const auto& step : bp_.schedule) {
      switch (step.kind) {
        case StepKind::Gate:
        case StepKind::BareCz: {
          for (int id : step.a) ensure_ready(id);
          for (int id : step.b) ensure_ready(id);
          const bool two = step.kind == StepKind::BareCz || gate_is_two_qubit(step.gate);
          if (two) {
            if (step.a.size() != step.b.size())
              throw std::invalid_argument("unpaired two-qubit step");
            for (std::size_t i = 0; i < step.a.size(); ++i) {
              const std::size_t qa = start(step.a[i]), qb = start(step.b[i]);
              for (std::size_t k = 0; k < steane::kBlock; ++k)
                noisy_gate2(ctx_, scope_, step.gate, qa + k, qb + k);
            }
          } else {
            for (int id : step.a) {
              const std::size_t q0 = start(id);
              for (std::size_t k = 0; k < steane::kBlock; ++k)
                ctx_.state.apply(step.gate, q0 + k);
            }
          }
          break;
        }
        case StepKind::Measure:
          for (int id : step.a) measure_node(id, step.basis);
          break;
        case StepKind::Check: {
          if (!check_clean(step)) return {false, step.name};
          break;
        }
      }
    }
    return {};
  }

  std::size_t start(int id) const { return block_start_[index(id)]; }

 private:
  std::size_t index(int id) const {
    auto it = node_index_.find(id);
    if (it == node_index_.end())
      throw std::invalid_argument("blueprint references unknown node " + std::to_string(id));
    return it->second;
  }

  void ensure_ready(int id) {
    const std::size_t i = index(id);
    if (ready_[i]) return;
    if (measured_[i]) throw std::logic_error("node reused after measurement");
    if (group_of_[i] >= 0) {
      build_group(bp_.prep_groups[std::size_t(group_of_[i])]);
      return;
    }
    const bool plus = bp_.nodes[i].role != NodeRole::EncodeZero;
    prepare_verified_block(ctx_, block_qubits(block_start_[i]), plus, scratch_);
    ready_[i] = true;
  }

  void build_group(const GadgetBlueprint::PrepGroup& group) {
    if (group.nodes.size() != steane::kBlock)
      throw std::invalid_argument("prep group must hold 7 nodes");
    if (arena_.size() < 2 * steane::kBlock)
      throw std::logic_error("no ancilla arena for composite preparation");
    const GadgetBlueprint sub = make_encode(group.plus, 1);
    // Child mapping: the first 7 child nodes are the data blocks (mapped to
    // the group's own blocks), the rest live in the shared arena.
    std::vector<std::size_t> mapping;
    for (std::size_t i = 0; i < sub.nodes.size(); ++i) {
      if (i < steane::kBlock)
        mapping.push_back(block_start_[index(group.nodes[i])]);
      else
        mapping.push_back(arena_.at(i - steane::kBlock));
    }
    const int save_call = ctx_.next_call_id;
    for (int attempt = 0; attempt < kMaxPrepAttempts; ++attempt) {
      ctx_.next_call_id = save_call;
      Executor child(ctx_, sub, mapping, scratch_, {});
      if (child.run().accepted) {
        for (int id : group.nodes) ready_[index(id)] = true;
        return;
      }
    }
    throw std::runtime_error("composite preparation did not converge");
  }

  void measure_node(int id, char basis) {
    const std::size_t i = index(id);
    ensure_ready(id);
    const std::size_t q0 = block_start_[i];
    for (std::size_t k = 0; k < steane::kBlock; ++k) {
      const std::size_t q = q0 + k;
      const MeasBits mb = noisy_measure_qubit(ctx_, scope_, q, basis);
      obs_bits_[i][k] = mb.obs;
      if (basis == 'X') {
        // One-bit teleportation byproduct per physical qubit: the frame-free
        // outcome drives the intended X correction on the CZ partner, any
        // observed/actual discrepancy (frame or measurement noise) lands in
        // the partner's frame as the resulting miscorrection.
        const long p = ctx_.cz_partner[q];
        if (p >= 0) {
          if (mb.tab) ctx_.state.apply(Gate::X, std::size_t(p));
          if (mb.tab ^ mb.obs) ctx_.state.inject_frame(std::size_t(p), 'X');
        }
      }
    }
    measured_[i] = true;
    ready_[i] = false;
  }

  bool check_clean(const BlueprintStep& step) {
    for (int id : step.a)
      if (!measured_[index(id)]) throw std::logic_error("check reads unmeasured node");
    if (step.a.size() == 1) {
      return steane::bit_syndrome(obs_bits_[index(step.a[0])]) == 0;
    }
    if (step.a.size() == steane::kBlock) {
      std::array<int, 7> logical{};
      for (std::size_t j = 0; j < steane::kBlock; ++j)
        logical[j] = steane::decode_bits(obs_bits_[index(step.a[j])]).logical_corrected;
      return steane::bit_syndrome(logical) == 0;
    }
    throw std::invalid_argument("checks read 1 or 7 syndrome sources");
  }

  Ctx& ctx_;
  const GadgetBlueprint& bp_;
  std::vector<std::size_t> block_start_;
  std::vector<std::size_t> scratch_;
  std::vector<std::size_t> arena_;
  OpScope scope_;
  std::map<int, std::size_t> node_index_;
  std::vector<bool> ready_, measured_;
  std::vector<std::array<int, 7>> obs_bits_;
  std::vector<long> group_of_;
};

}  // namespace

VerificationOutcome run_gadget(const GadgetBlueprint& bp, const NoiseModel& model, Rng& rng,
                               const ExecOptions& opts) {
  model.validate();
  const std::size_t arena_blocks = bp.prep_groups.empty() ? 0 : 2 * steane::kBlock;
  const std::size_t total_blocks = bp.nodes.size() + 1 + arena_blocks;
  StabilizerState state(total_blocks * steane::kBlock);

  Ctx ctx{state, model, rng, opts.noise_enabled, opts.faults, {}, nullptr, 1, 0, {}};
  ctx.fault_consumed.assign(ctx.faults.size(), false);
  ctx.cz_partner.assign(state.num_qubits(), -1);

  VerificationOutcome out;
  if (opts.record_sites) ctx.record = &out.sites;

  std::vector<std::size_t> mapping;
  for (std::size_t i = 0; i < bp.nodes.size(); ++i) mapping.push_back(i * steane::kBlock);
  const std::size_t scratch_base = bp.nodes.size() * steane::kBlock;
  const auto scratch = block_qubits(scratch_base);
  std::vector<std::size_t> arena;
  for (std::size_t b = 0; b < arena_blocks; ++b)
    arena.push_back(scratch_base + steane::kBlock + b * steane::kBlock);

  Executor ex(ctx, bp, mapping, scratch, arena);
  const auto rr = ex.run();
  out.accepted = rr.accepted;
  out.failed_checkpoint = rr.failed_checkpoint;
  out.prep_attempts = ctx.prep_attempts;

  for (const auto& group : bp.outputs) {
    std::vector<std::size_t> qubits;
    for (int id : group)
      for (std::size_t k = 0; k < steane::kBlock; ++k) qubits.push_back(ex.start(id) + k);
    out.output_qubits.push_back(std::move(qubits));
  }

  if (out.accepted) {
    const PauliString& frame = state.pauli_frame();
    out.residual_frame = frame;
    for (const auto& group : bp.outputs) {
      std::vector<char> cls;
      for (int id : group) cls.push_back(steane::logical_class(frame, block_qubits(ex.start(id))));
      out.output_classes.push_back(combine_classes(cls));
    }
    out.logical_error = !class_string_trivial(out.output_classes, bp.output_stabilizers);
  }

  if (opts.capture_state) *opts.capture_state = state;
  return out;
}

VerificationOutcome run_prep_attempt(bool plus, const NoiseModel& model, Rng& rng,
                                     const ExecOptions& opts) {
  model.validate();
  StabilizerState state(2 * steane::kBlock);
  Ctx ctx{state, model, rng, opts.noise_enabled, opts.faults, {}, nullptr, 1, 0, {}};
  ctx.fault_consumed.assign(ctx.faults.size(), false);
  ctx.cz_partner.assign(state.num_qubits(), -1);
  VerificationOutcome out;
  if (opts.record_sites) ctx.record = &out.sites;
  OpScope scope{0, 0};
  const auto data = block_qubits(0);
  const auto scr = block_qubits(steane::kBlock);
  out.accepted = prep_attempt(ctx, scope, data, plus, scr);
  out.prep_attempts = 1;
  if (!out.accepted) out.failed_checkpoint = "prep";
  out.output_qubits.push_back(data);
  if (out.accepted) {
    const PauliString& frame = state.pauli_frame();
    out.residual_frame = frame;
    out.output_classes.push_back(steane::logical_class(frame, data));
    const std::vector<std::string> gens{plus ? "X" : "Z"};
    out.logical_error = !class_string_trivial(out.output_classes, gens);
  }
  if (opts.capture_state) *opts.capture_state = state;
  return out;
}

StabilizerState ideal_hexa_state(std::size_t n_logical) {
  StabilizerState state(n_logical);
  for (std::size_t q = 0; q < n_logical; ++q) state.apply(Gate::H, q);
  for (std::size_t q = 0; q + 1 < n_logical; ++q) state.apply(Gate::CZ, q, q + 1);
  return state;
}

TeleportResult one_bit_teleport(StabilizerState& state, const steane::CodeBlock& source,
                                const steane::CodeBlock& target, const NoiseModel& model,
                                Rng& rng) {
  if (source.size() != steane::kBlock || target.size() != steane::kBlock)
    throw std::invalid_argument("one_bit_teleport: 7-qubit blocks required");
  Ctx ctx{state, model, rng, true, {}, {}, nullptr, 1, 0, {}};
  ctx.cz_partner.assign(state.num_qubits(), -1);
  OpScope scope{0, 0};
  for (std::size_t k = 0; k < steane::kBlock; ++k)
    noisy_gate2(ctx, scope, Gate::CZ, source.qubits[k], target.qubits[k]);
  std::array<int, 7> bits{};
  for (std::size_t k = 0; k < steane::kBlock; ++k) {
    const MeasBits mb = noisy_measure_qubit(ctx, scope, source.qubits[k], 'X');
    bits[k] = mb.obs;
    if (mb.tab) state.apply(Gate::X, target.qubits[k]);
    if (mb.tab ^ mb.obs) state.inject_frame(target.qubits[k], 'X');
  }
  TeleportResult out;
  const auto decoded = steane::decode_bits(bits);
  out.syndrome = decoded.raw_syndrome;
  out.accepted = decoded.raw_syndrome == 0;
  out.logical_out = decoded.logical_corrected;
  return out;
}

PauliString embedded_logical(char which, std::size_t n_total,
                             const std::vector<std::size_t>& qubits) {
  const PauliString base = which == 'X' ? steane::logical_x() : steane::logical_z();
  return steane::embed(base, n_total, qubits);
}

}  // namespace ftc
