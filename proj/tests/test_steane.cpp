#include <doctest.h>

#include <stdexcept>

#include <array>

#include "ftc/steane.hpp"
#include "ftc/tableau.hpp"

using namespace ftc;
using namespace ftc::steane;

namespace {

PauliString pattern(const std::array<char, 7>& letters) {
  PauliString p(7);
  std::size_t y = 0;
  for (std::size_t q = 0; q < 7; ++q) {
    const char c = letters[q];
    p.set_x(q, c == 'X' || c == 'Y');
    p.set_z(q, c == 'Z' || c == 'Y');
    if (c == 'Y') ++y;
  }
  p.set_phase(uint8_t(y & 3));
  return p;
}

const std::vector<std::size_t> kBlock0{0, 1, 2, 3, 4, 5, 6};

}  // namespace

TEST_CASE("encoded basis states carry the full stabilizer group") {
  for (bool plus : {false, true}) {
    StabilizerState s = encode_logical(plus);
    for (const auto& g : stabilizer_generators()) CHECK(s.expectation_ignoring_frame(g) == +1);
    CHECK(s.expectation_ignoring_frame(plus ? logical_x() : logical_z()) == +1);
    CHECK(s.expectation_ignoring_frame(plus ? logical_z() : logical_x()) == 0);
  }
}

TEST_CASE("encoder gate list shape") {
  int h = 0, cnot = 0;
  for (const auto& op : encoder_ops()) (op.is_h ? h : cnot)++;
  CHECK(h == 3);
  CHECK(cnot == 9);
}

TEST_CASE("logical operators commute with the group and anticommute pairwise") {
  CHECK(!logical_x().commutes_with(logical_z()));
  for (const auto& g : stabilizer_generators()) {
    CHECK(g.commutes_with(logical_x()));
    CHECK(g.commutes_with(logical_z()));
  }
}

TEST_CASE("distance 3: every weight-1 and weight-2 error is visible") {
  const std::array<char, 4> letters{'I', 'X', 'Y', 'Z'};
  // Weight 1: detected and corrected (logical class I).
  for (std::size_t q = 0; q < 7; ++q) {
    for (char c : {'X', 'Y', 'Z'}) {
      std::array<char, 7> pat{};
      pat.fill('I');
      pat[q] = c;
      const auto p = pattern(pat);
      CHECK(!error_syndrome(p, kBlock0).clean());
      CHECK(logical_class(p, kBlock0) == 'I');
    }
  }
  // Weight 2: always detected (nonzero syndrome), never silently logical.
  for (std::size_t a = 0; a < 7; ++a) {
    for (std::size_t b = a + 1; b < 7; ++b) {
      for (char ca : letters) {
        for (char cb : letters) {
          if (ca == 'I' || cb == 'I') continue;
          std::array<char, 7> pat{};
          pat.fill('I');
          pat[a] = ca;
          pat[b] = cb;
          CHECK(!error_syndrome(pattern(pat), kBlock0).clean());
        }
      }
    }
  }
  // Weight 3 can be logical: the logical X itself has a clean syndrome.
  CHECK(error_syndrome(logical_x(), kBlock0).clean());
  CHECK(logical_class(logical_x(), kBlock0) == 'X');
  CHECK(logical_class(logical_z(), kBlock0) == 'Z');
}

TEST_CASE("stabilizer elements reduce to the trivial class") {
  const auto gens = stabilizer_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    CHECK(logical_class(gens[i], kBlock0) == 'I');
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      CHECK(logical_class(gens[i] * gens[j], kBlock0) == 'I');
  }
}

TEST_CASE("bit syndrome identifies single flips by Hamming position") {
  std::array<int, 7> bits{};
  CHECK(bit_syndrome(bits) == 0);
  for (std::size_t q = 0; q < 7; ++q) {
    bits.fill(0);
    bits[q] = 1;
    CHECK(bit_syndrome(bits) == int(q) + 1);
  }
}

TEST_CASE("all X-codewords of the encoded |0> have clean bit syndrome and even parity") {
  // Span of the three weight-4 generator supports: the Z-measurement
  // outcomes of an encoded |0bar>.
  const auto& sup = generator_supports();
  for (int mask = 0; mask < 8; ++mask) {
    std::array<int, 7> bits{};
    for (int g = 0; g < 3; ++g)
      if (mask & (1 << g))
        for (std::size_t q : sup[std::size_t(g)]) bits[q] ^= 1;
    CHECK(bit_syndrome(bits) == 0);
    CHECK(bit_parity(bits) == 0);
  }
}

TEST_CASE("decode corrects any single flipped bit") {
  const auto& sup = generator_supports();
  for (int mask = 0; mask < 8; ++mask) {
    std::array<int, 7> word{};
    for (int g = 0; g < 3; ++g)
      if (mask & (1 << g))
        for (std::size_t q : sup[std::size_t(g)]) word[q] ^= 1;
    for (std::size_t flip = 0; flip < 7; ++flip) {
      auto bits = word;
      bits[flip] ^= 1;
      const auto d = decode_bits(bits);
      CHECK(d.raw_syndrome == int(flip) + 1);
      CHECK(d.logical_corrected == 0);
    }
  }
}

TEST_CASE("embed places block-local operators at the right offsets") {
  const std::vector<std::size_t> block{3, 4, 5, 6, 7, 8, 9};
  const auto p = embed(logical_z(), 12, block);
  for (std::size_t q = 0; q < 12; ++q)
    CHECK(p.letter(q) == ((q >= 3 && q <= 9) ? 'Z' : 'I'));
}

TEST_CASE("transversal CNOT maps logical operators transversally") {
  StabilizerState s = StabilizerState::tensor(encode_logical(false), encode_logical(true));
  CodeBlock a{1, {0, 1, 2, 3, 4, 5, 6}};
  CodeBlock b{1, {7, 8, 9, 10, 11, 12, 13}};
  transversal_gate(s, Gate::CNOT, b, a);  // control b = |+bar>, target a = |0bar>
  // Produces the encoded Bell pair: XX-bar and ZZ-bar are +1.
  const auto xx = embed(logical_x(), 14, a.qubits) * embed(logical_x(), 14, b.qubits);
  const auto zz = embed(logical_z(), 14, a.qubits) * embed(logical_z(), 14, b.qubits);
  CHECK(s.expectation_ignoring_frame(xx) == +1);
  CHECK(s.expectation_ignoring_frame(zz) == +1);
}
