#include <doctest.h>

#include <random>

#include "revlnn/real_io.hpp"
#include "revlnn/simulate.hpp"
#include "test_support.hpp"

using namespace revlnn;

TEST_CASE("parse a minimal toffoli file") {
  const std::string text =
      ".numvars 3\n"
      ".variables a b c\n"
      ".begin\n"
      "t3 a b c\n"
      ".end\n";
  const Circuit c = parse_real(text);
  CHECK(c.width() == 3);
  CHECK(c.layer() == Layer::Reversible);
  REQUIRE(c.num_gates() == 1);
  CHECK(c.reversible_gates()[0] == ReversibleGate::toffoli({0, 1}, 2));
  CHECK(c.line(0).name == "a");
}

TEST_CASE("t1 is a NOT on the named line") {
  const Circuit c = parse_real(".numvars 2\n.variables a b\n.begin\nt1 a\n.end\n");
  CHECK(c.reversible_gates()[0] == ReversibleGate::toffoli({}, 0));
}

TEST_CASE("constants and garbage strings") {
  const Circuit c = parse_real(
      ".numvars 3\n.variables a b c\n.constants 01-\n.garbage -11\n"
      ".begin\n.end\n");
  CHECK(c.num_constant_inputs() == 2);
  CHECK(c.line(0).constant == false);
  CHECK(c.line(1).constant == true);
  CHECK_FALSE(c.line(2).constant.has_value());
  CHECK(c.num_garbage_outputs() == 2);
}

TEST_CASE("fredkin and peres mnemonics") {
  const Circuit c = parse_real(
      ".numvars 4\n.variables a b c d\n.begin\nf3 a b c\np a c d\nf2 a d\n.end\n");
  CHECK(c.reversible_gates()[0] == ReversibleGate::fredkin({0}, 1, 2));
  CHECK(c.reversible_gates()[1] == ReversibleGate::peres(0, 2, 3));
  CHECK(c.reversible_gates()[2] == ReversibleGate::fredkin({}, 0, 3));
}

TEST_CASE("elementary files") {
  const Circuit c = parse_real(
      ".numvars 2\n.variables a b\n.begin\nv a b\nv+ b a\nt1 a\nt2 a b\n.end\n");
  CHECK(c.layer() == Layer::Elementary);
  REQUIRE(c.num_gates() == 4);
  CHECK(c.elementary_gates()[0] == ElementaryGate::cv(0, 1));
  CHECK(c.elementary_gates()[1] == ElementaryGate::cvd(1, 0));
  CHECK(c.elementary_gates()[2] == ElementaryGate::x(0));
  CHECK(c.elementary_gates()[3] == ElementaryGate::cx(0, 1));
}

TEST_CASE("comments and blank lines are ignored") {
  const Circuit a = parse_real(
      "# header comment\n\n.numvars 2\n.variables a b\n\n.begin\n"
      "# a comment inside the body\nt2 a b\n\n.end\n");
  const Circuit b = parse_real(".numvars 2\n.variables a b\n.begin\nt2 a b\n.end\n");
  CHECK(a == b);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_real(".numvars 2\n.variables a b\n.begin\nq a\n.end\n"),
                  UnknownGate);
  CHECK_THROWS_AS(parse_real(".numvars 2\n.variables a b\n.begin\nt3 a b\n.end\n"),
                  ArityMismatch);
  CHECK_THROWS_AS(
      parse_real(".numvars 3\n.variables a b c\n.begin\nv a b\nt3 a b c\n.end\n"),
      MixedLayers);
  CHECK_THROWS_AS(parse_real(".numvars 2\n.variables a\n.begin\n.end\n"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_real(".numvars 2\n.variables a b\n.begin\nt2 a q\n.end\n"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_real(".numvars 2\n.variables a b\n.begin\nt2 a a\n.end\n"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_real(".numvars 2\n.variables a b\n.begin\nt2 a b\n"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_real(".numvars 2\n.variables a b\n.inputbus x\n.begin\n.end\n"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_real(".numvars 0\n.variables\n.begin\n.end\n"), SyntaxError);
  CHECK_THROWS_AS(parse_real(".numvars 2\n.variables a b\n.begin\n.end\nt2 a b\n"),
                  SyntaxError);
}

TEST_CASE("negative controls are rejected") {
  // RevLib spells negative controls with a '-' prefix; outside the subset.
  CHECK_THROWS_AS(parse_real(".numvars 2\n.variables a b\n.begin\nt2 -a b\n.end\n"),
                  SyntaxError);
}

TEST_CASE("write then parse restores the circuit") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const LineId n = 2 + rng() % 5;
    Circuit c = trial % 2 == 0
                    ? testing::random_mct_circuit(rng, n, 1 + rng() % 10)
                    : testing::random_elementary_circuit(rng, n, 1 + rng() % 10);
    // random metadata
    for (LineId i = 0; i < n; ++i) {
      Line line = c.line(i);
      if (rng() % 3 == 0) line.constant = rng() % 2 == 0;
      if (rng() % 3 == 0) line.garbage = true;
      c.set_line(i, line);
    }
    if (c.layer() == Layer::Elementary && rng() % 2 == 0) {
      c.set_output_permutation(testing::random_line_permutation(rng, n));
    }

    const std::string text = write_real(c);
    const Circuit back = parse_real(text);

    // A file holding only t1/t2 gates always reads back as reversible; the
    // gate semantics still round-trip exactly.
    bool ambiguous = c.layer() == Layer::Elementary;
    if (ambiguous) {
      ambiguous = true;
      for (const auto& g : c.elementary_gates()) {
        if (g.kind == ElemKind::CV || g.kind == ElemKind::CVD) {
          ambiguous = false;
          break;
        }
      }
    }
    if (ambiguous) {
      CHECK(back.width() == c.width());
      CHECK(back.lines() == c.lines());
      CHECK(back.output_permutation() == c.output_permutation());
      CHECK(extract_permutation_modulo(back) == extract_permutation_modulo(c));
    } else {
      CHECK(back == c);
    }
  }
}

TEST_CASE("output permutation round-trips through .outputs") {
  Circuit c(3, Layer::Elementary);
  c.add(ElementaryGate::cx(0, 1));
  c.add(ElementaryGate::cv(1, 2));
  c.set_output_permutation({2, 0, 1});
  const std::string text = write_real(c);
  CHECK(text.find(".outputs") != std::string::npos);
  const Circuit back = parse_real(text);
  REQUIRE(back.output_permutation().has_value());
  CHECK(*back.output_permutation() == std::vector<LineId>{2, 0, 1});
}

TEST_CASE("cosmetic .outputs names are accepted and dropped") {
  const Circuit c = parse_real(
      ".numvars 2\n.variables a b\n.inputs a b\n.outputs sum carry\n"
      ".begin\nt2 a b\n.end\n");
  CHECK_FALSE(c.output_permutation().has_value());
}

TEST_CASE("line names survive verbatim") {
  const std::string text =
      ".numvars 2\n.variables in_x in_y\n.begin\nt2 in_x in_y\n.end\n";
  const Circuit c = parse_real(text);
  CHECK(c.line(0).name == "in_x");
  CHECK(write_real(c).find("in_x in_y") != std::string::npos);
}
