#include <doctest.h>

#include <array>
#include <random>

#include "revlnn/decompose.hpp"
#include "revlnn/metrics.hpp"
#include "revlnn/simulate.hpp"
#include "test_support.hpp"

using namespace revlnn;

namespace {

Circuit wrap(LineId width, const std::vector<ElementaryGate>& gates) {
  Circuit c(width, Layer::Elementary);
  for (const auto& g : gates) c.add(g);
  return c;
}

Circuit single(LineId width, ReversibleGate gate) {
  Circuit c(width, Layer::Reversible);
  c.add(std::move(gate));
  return c;
}

}  // namespace

TEST_CASE("toffoli decomposition is the fixed 5-gate sequence") {
  const auto gates = decompose_toffoli2(0, 1, 2);
  const std::vector<ElementaryGate> expected = {
      ElementaryGate::cv(1, 2), ElementaryGate::cx(0, 1),
      ElementaryGate::cvd(1, 2), ElementaryGate::cx(0, 1),
      ElementaryGate::cv(0, 2)};
  CHECK(gates == expected);
  CHECK(nnc(wrap(3, gates)) == 1);

  CHECK(extract_permutation(wrap(3, gates)) ==
        extract_permutation(single(3, ReversibleGate::toffoli({0, 1}, 2))));
}

TEST_CASE("toffoli decomposition for arbitrary line placements") {
  const std::vector<std::array<LineId, 3>> placements = {
      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {0, 2, 1}};
  for (const auto& [a, b, c] : placements) {
    const auto gates = decompose_toffoli2(a, b, c);
    CHECK(gates.size() == 5);
    CHECK(extract_permutation(wrap(3, gates)) ==
          extract_permutation(single(3, ReversibleGate::toffoli({a, b}, c))));
  }
  // control order (a, b) fixes the routing: distances b-c twice, a-b twice, a-c
  const auto gates = decompose_toffoli2(1, 2, 0);
  CHECK(nnc(wrap(3, gates)) == 2);
}

TEST_CASE("peres decomposition") {
  const auto gates = decompose_peres(0, 1, 2);
  const std::vector<ElementaryGate> expected = {
      ElementaryGate::cv(1, 2), ElementaryGate::cx(0, 1),
      ElementaryGate::cvd(1, 2), ElementaryGate::cv(0, 2)};
  CHECK(gates == expected);
  CHECK(gates.size() == 4);  // Peres costs 4
  CHECK(nnc(wrap(3, gates)) == 1);

  CHECK(extract_permutation(wrap(3, gates)) ==
        extract_permutation(single(3, ReversibleGate::peres(0, 1, 2))));
}

TEST_CASE("fredkin decomposition") {
  const auto swap_gates = decompose_fredkin({}, 0, 1, 2);
  CHECK(swap_gates.size() == 3);
  CHECK(extract_permutation(wrap(2, swap_gates)) ==
        extract_permutation(single(2, ReversibleGate::fredkin({}, 0, 1))));

  const auto f1 = decompose_fredkin({0}, 1, 2, 3);
  CHECK(f1.size() == 7);  // 2 + cost(t_2)
  CHECK(extract_permutation(wrap(3, f1)) ==
        extract_permutation(single(3, ReversibleGate::fredkin({0}, 1, 2))));
}

TEST_CASE("multiple-control toffoli with borrowed lines") {
  const auto t3 = decompose_mct({0, 1, 2}, 3, 5);
  CHECK(extract_permutation(wrap(5, t3)) ==
        extract_permutation(single(5, ReversibleGate::toffoli({0, 1, 2}, 3))));

  const auto t3_tight = decompose_mct({0, 1, 2}, 4, 5);
  CHECK(extract_permutation(wrap(5, t3_tight)) ==
        extract_permutation(single(5, ReversibleGate::toffoli({0, 1, 2}, 4))));

  const auto t4 = decompose_mct({0, 1, 2, 3}, 4, 6);
  CHECK(extract_permutation(wrap(6, t4)) ==
        extract_permutation(single(6, ReversibleGate::toffoli({0, 1, 2, 3}, 4))));
}

TEST_CASE("no free line means no decomposition") {
  CHECK_THROWS_AS(decompose_mct({0, 1, 2}, 3, 4), InsufficientFreeLines);
  CHECK_THROWS_AS(decompose_mct({0, 1, 2, 3}, 4, 5), InsufficientFreeLines);
  // two controls never need a borrowed line
  CHECK(decompose_mct({0, 1}, 2, 3).size() == 5);
}

TEST_CASE("strict ancilla policy") {
  DecompositionOptions options;
  options.ancilla_policy = DecompositionOptions::AncillaPolicy::FailIfInsufficient;
  CHECK_THROWS_AS(decompose_mct({0, 1, 2}, 3, 5, options), InsufficientFreeLines);
  CHECK(decompose_mct({0, 1}, 2, 5, options).size() == 5);
}

TEST_CASE("decompose_circuit preserves function and metadata") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const LineId n = 3 + rng() % 4;  // up to 6 lines
    Circuit c = testing::random_mct_circuit(rng, n, 1 + rng() % 8);
    Line marked = c.line(0);
    marked.constant = true;
    c.set_line(0, marked);

    const Circuit dec = decompose_circuit(c);
    CHECK(dec.layer() == Layer::Elementary);
    CHECK(dec.line(0).constant == true);
    CHECK(equivalent(c, dec));
  }
}

TEST_CASE("small-gate circuits decompose at exactly their table cost") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const LineId n = 3 + rng() % 3;
    const Circuit c = testing::random_small_gate_circuit(rng, n, 1 + rng() % 10);
    // t0..t2, f0, f1 and Peres realize the table cost gate for gate
    bool table_exact = true;
    for (const auto& g : c.reversible_gates()) {
      if (g.kind == RevKind::Fredkin && g.controls.size() > 1) table_exact = false;
    }
    const Circuit dec = decompose_circuit(c);
    if (table_exact) {
      CHECK(static_cast<std::int64_t>(dec.num_gates()) == quantum_cost(c));
    }
  }
}

TEST_CASE("not/cnot circuits decompose to themselves") {
  Circuit c(3);
  c.add(ReversibleGate::toffoli({}, 1));
  c.add(ReversibleGate::toffoli({0}, 2));
  const Circuit dec = decompose_circuit(c);
  CHECK(dec.num_gates() == 2);
  CHECK(quantum_cost(dec) == quantum_cost(c));
  CHECK(dec.elementary_gates()[0] == ElementaryGate::x(1));
  CHECK(dec.elementary_gates()[1] == ElementaryGate::cx(0, 2));
}

TEST_CASE("self-inverse cascade decomposes to the identity") {
  Circuit c(5);
  c.add(ReversibleGate::toffoli({0, 1, 2}, 3));
  c.add(ReversibleGate::toffoli({0, 1, 2}, 3));
  const Circuit dec = decompose_circuit(c);
  const Permutation perm = extract_permutation(dec);
  for (std::uint32_t i = 0; i < perm.size(); ++i) CHECK(perm[i] == i);
}
