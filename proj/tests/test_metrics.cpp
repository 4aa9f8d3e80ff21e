#include <doctest.h>

#include <random>

#include "revlnn/decompose.hpp"
#include "revlnn/metrics.hpp"
#include "revlnn/simulate.hpp"
#include "test_support.hpp"

using namespace revlnn;

namespace {

Circuit toffoli_dec() {
  Circuit c(3, Layer::Elementary);
  for (const auto& g : decompose_toffoli2(0, 1, 2)) c.add(g);
  return c;
}

/// Independent statement of the cost table, kept deliberately literal.
std::int64_t expected_mct_cost(std::size_t m, unsigned n) {
  if (m == 0 || m == 1) return 1;
  if (m == 2) return 5;
  if (m == n - 1) return (1ll << n) - 3;
  const std::size_t half = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
  if (3 <= m && m <= half) return 12ll * m - 22;
  REQUIRE(half + 1 <= m);
  REQUIRE(m <= n - 2);
  return 24ll * m - 64;
}

}  // namespace

TEST_CASE("gate_count") {
  Circuit empty(3);
  CHECK(gate_count(empty) == 0);
  CHECK(gate_count(toffoli_dec()) == 5);
}

TEST_CASE("quantum cost formula table, n up to 10") {
  for (unsigned n = 1; n <= 10; ++n) {
    for (std::size_t m = 0; m + 1 <= n; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(mct_quantum_cost(m, n) == expected_mct_cost(m, n));
    }
    for (std::size_t m = 0; m + 2 <= n; ++m) {
      const std::int64_t expected =
          m == 0 ? 3 : 2 + expected_mct_cost(m + 1, n);
      CHECK(fredkin_quantum_cost(m, n) == expected);
    }
  }
}

TEST_CASE("quantum cost boundary rows") {
  CHECK(mct_quantum_cost(2, 3) == 5);     // exact row wins for tiny n
  CHECK(mct_quantum_cost(3, 4) == 13);    // t_{n-1} = 2^4 - 3
  CHECK(mct_quantum_cost(3, 5) == 14);    // 12*3 - 22
  CHECK(mct_quantum_cost(4, 5) == 29);    // t_{n-1} = 2^5 - 3
  CHECK(mct_quantum_cost(5, 8) == 56);    // 24*5 - 64
  CHECK(fredkin_quantum_cost(1, 3) == 7); // 2 + cost(t_2)
  CHECK(fredkin_quantum_cost(0, 2) == 3);
}

TEST_CASE("circuit quantum cost") {
  Circuit c(3);
  c.add(ReversibleGate::toffoli({0, 1}, 2));
  CHECK(quantum_cost(c) == 5);
  c.add(ReversibleGate::peres(0, 1, 2));
  CHECK(quantum_cost(c) == 9);
  c.add(ReversibleGate::fredkin({0}, 1, 2));
  CHECK(quantum_cost(c) == 16);

  // elementary circuits: every gate costs 1
  const Circuit dec = toffoli_dec();
  CHECK(quantum_cost(dec) == static_cast<std::int64_t>(dec.num_gates()));
}

TEST_CASE("transistor cost") {
  Circuit c(3);
  c.add(ReversibleGate::toffoli({0}, 1));
  CHECK(transistor_cost(c) == 8);
  c.add(ReversibleGate::toffoli({0, 1}, 2));
  CHECK(transistor_cost(c) == 24);
  c.add(ReversibleGate::peres(0, 1, 2));
  CHECK(transistor_cost(c) == 48);

  CHECK_THROWS_AS(transistor_cost(toffoli_dec()), LayerMismatch);
}

TEST_CASE("nnc") {
  Circuit c(4, Layer::Elementary);
  c.add(ElementaryGate::cx(0, 1));
  CHECK(nnc(c) == 0);
  c.add(ElementaryGate::cx(0, 2));
  CHECK(nnc(c) == 1);
  c.add(ElementaryGate::cx(2, 0));
  CHECK(nnc(c) == 2);
  c.add(ElementaryGate::x(3));
  CHECK(nnc(c) == 2);

  CHECK(nnc(toffoli_dec()) == 1);

  Circuit rev(3);
  rev.add(ReversibleGate::toffoli({0, 1}, 2));
  CHECK_THROWS_AS(nnc(rev), LayerMismatch);
}

TEST_CASE("depth") {
  Circuit shared_control(3, Layer::Elementary);
  shared_control.add(ElementaryGate::cx(0, 1));
  shared_control.add(ElementaryGate::cx(0, 2));
  CHECK(depth(shared_control) == 1);

  Circuit chained(3, Layer::Elementary);
  chained.add(ElementaryGate::cx(0, 1));
  chained.add(ElementaryGate::cx(1, 2));
  CHECK(depth(chained) == 2);

  Circuit nots(3, Layer::Elementary);
  nots.add(ElementaryGate::x(0));
  nots.add(ElementaryGate::x(1));
  nots.add(ElementaryGate::x(2));
  CHECK(depth(nots) == 1);

  Circuit shared_target(3, Layer::Elementary);
  shared_target.add(ElementaryGate::cv(0, 2));
  shared_target.add(ElementaryGate::cv(1, 2));
  CHECK(depth(shared_target) == 2);

  // The last two decomposition gates CX(0,1) and CV(0,2) share only the
  // control line, so they land in one step.
  CHECK(depth(toffoli_dec()) == 4);

  Circuit empty(2, Layer::Elementary);
  CHECK(depth(empty) == 0);
}

TEST_CASE("distribution") {
  Circuit c(2, Layer::Elementary);
  c.add(ElementaryGate::x(0));
  c.add(ElementaryGate::cx(0, 1));
  const Distribution d = distribution(c);
  CHECK(d.dis == std::vector<std::uint64_t>{2, 1});
  CHECK(d.min == 1);
  CHECK(d.max == 2);
  CHECK(render_one_decimal(d.sum, 2) == "1.5");

  Circuit empty(3, Layer::Elementary);
  const Distribution e = distribution(empty);
  CHECK(e.dis == std::vector<std::uint64_t>{0, 0, 0});
}

TEST_CASE("full_report for one toffoli") {
  Circuit c(3);
  c.add(ReversibleGate::toffoli({0, 1}, 2));
  const MetricsReport r = full_report(c, "toffoli");
  CHECK(r.n == 3);
  CHECK(r.n_c == 0);
  CHECK(r.n_g == 0);
  CHECK(r.gc == 1);
  CHECK(r.qc == 5);
  CHECK(r.trc == 16);
  CHECK(r.nnc == 1);
  CHECK(r.depth == 4);
  CHECK(r.dis == std::vector<std::uint64_t>{3, 4, 3});
  CHECK(r.dis_avg_string() == "3.3");
  CHECK(r.decomposed_for_quantum_metrics);
}

TEST_CASE("full_report picks up constants and garbage") {
  Circuit c = Circuit(3);
  Line l0 = c.line(0);
  l0.constant = false;
  c.set_line(0, l0);
  Line l1 = c.line(1);
  l1.constant = true;
  l1.garbage = true;
  c.set_line(1, l1);
  const MetricsReport r = full_report(c);
  CHECK(r.n_c == 2);
  CHECK(r.n_g == 1);
  CHECK(r.gc == 0);
  CHECK(r.qc == 0);
  CHECK(r.depth == 0);
}

TEST_CASE("full_report on an elementary circuit") {
  Circuit c(3, Layer::Elementary);
  c.add(ElementaryGate::cv(0, 2));
  c.add(ElementaryGate::cx(1, 2));
  const MetricsReport r = full_report(c, "elem");
  CHECK(r.gc == 2);
  CHECK(r.qc == 2);  // unit-cost gates
  CHECK(r.nnc == 1);
  CHECK_FALSE(r.trc.has_value());
  CHECK_FALSE(r.decomposed_for_quantum_metrics);
  // transistor cost stays empty in the CSV row
  CHECK(report_to_csv_row(r) == "elem,3,0,0,2,2,1,2,1.3,");
  CHECK(report_to_json(report_from_json(report_to_json(r))) ==
        report_to_json(r));
}

TEST_CASE("report serialization round-trips") {
  Circuit c(3);
  c.add(ReversibleGate::toffoli({0, 1}, 2));
  c.add(ReversibleGate::fredkin({}, 0, 2));
  const MetricsReport r = full_report(c, "fixture");
  const std::string json = report_to_json(r);
  const MetricsReport back = report_from_json(json);
  CHECK(report_to_json(back) == json);
  // toffoli + swap: qc 5+3, nnc 1+3, dis sum 16 over 3 lines
  CHECK(report_to_csv_row(r) == "fixture,3,0,0,2,8,4,7,5.3,16");
}

TEST_CASE("metric laws on random circuits") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    const LineId n = 2 + rng() % 5;
    const Circuit c = testing::random_elementary_circuit(rng, n, 1 + rng() % 30);

    // quantum cost equals gate count on the elementary layer
    CHECK(quantum_cost(c) == static_cast<std::int64_t>(gate_count(c)));

    // depth never exceeds gate count
    CHECK(depth(c) <= gate_count(c));

    // every two-qubit gate touches two lines, one-qubit gates one
    const Distribution d = distribution(c);
    std::uint64_t expected = 0;
    for (const auto& g : c.elementary_gates()) expected += g.two_qubit() ? 2 : 1;
    CHECK(d.sum == expected);

    // nnc is invariant under vertical reflection
    std::vector<LineId> reflect(n);
    for (LineId i = 0; i < n; ++i) reflect[i] = n - 1 - i;
    CHECK(nnc(apply_line_relabeling(c, reflect)) == nnc(c));
  }
}
