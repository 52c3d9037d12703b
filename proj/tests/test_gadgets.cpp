#include <doctest.h>

#include "ftc/gadgets.hpp"
#include "ftc/noise.hpp"
#include "ftc/steane.hpp"

using namespace ftc;

namespace {

ExecOptions noiseless_opts(StabilizerState* capture = nullptr) {
  ExecOptions o;
  o.noise_enabled = false;
  o.capture_state = capture;
  return o;
}

/// Transversal logical operator of an output group: X-bar / Z-bar of the
/// concatenated code act as the same letter on every physical qubit of the
/// group (7^l qubits), up to stabilizers of the code space.
PauliString group_logical(char which, std::size_t n_total,
                          const std::vector<std::size_t>& qubits) {
  PauliString p = PauliString::identity(n_total);
  for (std::size_t q : qubits) p *= PauliString::single(n_total, q, which);
  return p;
}

}  // namespace

TEST_CASE("noiseless soundness: every shipped gadget accepts with its ideal output") {
  for (const auto& bp : shipped_blueprints()) {
    CAPTURE(bp.name);
    CAPTURE(bp.level);
    NoiseModel m = NoiseModel::noiseless();
    Rng rng(31);
    StabilizerState state(1);
    auto out = run_gadget(bp, m, rng, noiseless_opts(&state));
    REQUIRE(out.accepted);
    CHECK(!out.logical_error);
    for (char c : out.output_classes) CHECK(c == 'I');

    // The ideal output stabilizer generators must be deterministically +1.
    const std::size_t n = state.num_qubits();
    REQUIRE(bp.output_stabilizers.size() >= 1);
    for (const auto& gen : bp.output_stabilizers) {
      PauliString obs = PauliString::identity(n);
      for (std::size_t g = 0; g < bp.outputs.size(); ++g)
        if (gen[g] != 'I') obs *= group_logical(gen[g], n, out.output_qubits[g]);
      CHECK(state.expectation_ignoring_frame(obs) == +1);
    }
  }
}

TEST_CASE("noiseless verified preparation accepts and hits the target state") {
  for (bool plus : {false, true}) {
    NoiseModel m = NoiseModel::noiseless();
    Rng rng(32);
    StabilizerState state(1);
    ExecOptions o = noiseless_opts(&state);
    auto out = run_prep_attempt(plus, m, rng, o);
    REQUIRE(out.accepted);
    CHECK(!out.logical_error);
    const auto obs =
        embedded_logical(plus ? 'X' : 'Z', state.num_qubits(), out.output_qubits[0]);
    CHECK(state.expectation_ignoring_frame(obs) == +1);
  }
}

TEST_CASE("exhaustive single faults at level 1: rejected or harmless") {
  // Every planted single fault (15 pair options per gate, one flip per
  // measurement) either trips a checkpoint or leaves the post-selected
  // output without logical effect.
  for (const char* name : {"cz_single", "cz_double"}) {
    CAPTURE(name);
    const auto bp = blueprint_for(name, 1);
    NoiseModel m = NoiseModel::noiseless();
    Rng rng(33);
    ExecOptions base = noiseless_opts();
    base.record_sites = true;
    const auto ref = run_gadget(bp, m, rng, base);
    REQUIRE(ref.accepted);
    long rejected = 0, harmless = 0;
    for (const auto& site : ref.sites) {
      const int options = site.is_measurement ? 1 : 15;
      for (int f = 0; f < options; ++f) {
        PlantedFault pf;
        pf.call_id = site.call_id;
        pf.op_id = site.op_id;
        if (site.is_measurement)
          pf.flip = true;
        else {
          pf.a = (f + 1) / 4;
          pf.b = (f + 1) % 4;
        }
        ExecOptions o = noiseless_opts();
        o.faults = {pf};
        Rng r2(33);
        const auto out = run_gadget(bp, m, r2, o);
        if (!out.accepted)
          ++rejected;
        else {
          REQUIRE(!out.logical_error);
          ++harmless;
        }
      }
    }
    CHECK(rejected > 0);  // the checkpoints are live
    CHECK(harmless > 0);  // and not vacuously rejecting everything
  }
}

TEST_CASE("exhaustive single faults in one verified preparation attempt") {
  for (bool plus : {false, true}) {
    CAPTURE(plus);
    NoiseModel m = NoiseModel::noiseless();
    Rng rng(34);
    ExecOptions base = noiseless_opts();
    base.record_sites = true;
    const auto ref = run_prep_attempt(plus, m, rng, base);
    REQUIRE(ref.accepted);
    for (const auto& site : ref.sites) {
      const int options = site.is_measurement ? 1 : 15;
      for (int f = 0; f < options; ++f) {
        PlantedFault pf;
        pf.call_id = site.call_id;
        pf.op_id = site.op_id;
        if (site.is_measurement)
          pf.flip = true;
        else {
          pf.a = (f + 1) / 4;
          pf.b = (f + 1) % 4;
        }
        ExecOptions o = noiseless_opts();
        o.faults = {pf};
        Rng r2(34);
        const auto out = run_prep_attempt(plus, m, r2, o);
        if (out.accepted) REQUIRE(!out.logical_error);
      }
    }
  }
}

TEST_CASE("a planted measurement flip in a verification round is rejected") {
  // The last recorded sites of a preparation attempt are its verification
  // measurements; flipping exactly one of them must dirty the decode.
  NoiseModel m = NoiseModel::noiseless();
  Rng rng(35);
  ExecOptions base = noiseless_opts();
  base.record_sites = true;
  const auto ref = run_prep_attempt(false, m, rng, base);
  REQUIRE(ref.accepted);
  const auto& last = ref.sites.back();
  REQUIRE(last.is_measurement);
  PlantedFault pf;
  pf.call_id = last.call_id;
  pf.op_id = last.op_id;
  pf.flip = true;
  ExecOptions o = noiseless_opts();
  o.faults = {pf};
  Rng r2(35);
  CHECK(!run_prep_attempt(false, m, r2, o).accepted);
}

TEST_CASE("gadget execution is deterministic in the seed") {
  const auto bp = blueprint_for("cz_single", 1);
  const NoiseModel m = NoiseModel::uniform_depolarizing(5e-3);
  for (uint64_t seed : {1u, 2u, 3u}) {
    Rng a(seed), b(seed);
    const auto ra = run_gadget(bp, m, a, {});
    const auto rb = run_gadget(bp, m, b, {});
    CHECK(ra.accepted == rb.accepted);
    CHECK(ra.failed_checkpoint == rb.failed_checkpoint);
    CHECK(ra.output_classes == rb.output_classes);
    CHECK(ra.prep_attempts == rb.prep_attempts);
  }
}

TEST_CASE("site numbering is identical across runs of the same blueprint") {
  const auto bp = blueprint_for("cz_double", 1);
  NoiseModel m = NoiseModel::noiseless();
  ExecOptions o = noiseless_opts();
  o.record_sites = true;
  Rng a(1), b(99);
  const auto ra = run_gadget(bp, m, a, o);
  const auto rb = run_gadget(bp, m, b, o);
  REQUIRE(ra.sites.size() == rb.sites.size());
  for (std::size_t i = 0; i < ra.sites.size(); ++i) {
    CHECK(ra.sites[i].call_id == rb.sites[i].call_id);
    CHECK(ra.sites[i].op_id == rb.sites[i].op_id);
    CHECK(ra.sites[i].is_measurement == rb.sites[i].is_measurement);
  }
}

TEST_CASE("ideal linear cluster state stabilizers") {
  const auto s = ideal_hexa_state(6);
  for (std::size_t q = 0; q < 6; ++q) {
    PauliString k = PauliString::single(6, q, 'X');
    if (q > 0) k *= PauliString::single(6, q - 1, 'Z');
    if (q < 5) k *= PauliString::single(6, q + 1, 'Z');
    CHECK(s.expectation_ignoring_frame(k) == +1);
  }
}

TEST_CASE("noiseless one-bit teleportation moves H of the state") {
  // Source |0bar>, target |+bar>: after the hop the target holds H|0> = |+>.
  NoiseModel m = NoiseModel::noiseless();
  Rng rng(36);
  StabilizerState s =
      StabilizerState::tensor(steane::encode_logical(false), steane::encode_logical(true));
  steane::CodeBlock src{1, {0, 1, 2, 3, 4, 5, 6}};
  steane::CodeBlock dst{1, {7, 8, 9, 10, 11, 12, 13}};
  const auto r = one_bit_teleport(s, src, dst, m, rng);
  CHECK(r.accepted);
  CHECK(r.syndrome == 0);
  const auto xbar = embedded_logical('X', 14, dst.qubits);
  // Frame byproducts are already folded in, so measure with the frame.
  const bool anti = !s.pauli_frame().commutes_with(xbar);
  const int tab = s.expectation_ignoring_frame(xbar);
  CHECK(tab * (anti ? -1 : 1) == +1);
}

TEST_CASE("noiseless runs report zero verified-preparation retries") {
  const auto bp = blueprint_for("cz_single", 1);
  NoiseModel m = NoiseModel::noiseless();
  Rng rng(37);
  const auto out = run_gadget(bp, m, rng, noiseless_opts());
  // Four verified blocks, one attempt each.
  CHECK(out.prep_attempts == 4);
}
