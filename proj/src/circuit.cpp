// Copyright 2026 The revlnn authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revlnn/circuit.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace revlnn {

namespace {

void check_distinct(const std::vector<LineId>& lines, const char* what) {
  std::set<LineId> seen(lines.begin(), lines.end());
  if (seen.size() != lines.size()) {
    throw InvalidGate(std::string(what) + ": duplicate line id");
  }
}

}  // namespace

ReversibleGate ReversibleGate::toffoli(std::vector<LineId> controls,
                                       LineId target) {
  ReversibleGate g{RevKind::Toffoli, std::move(controls), {target}};
  std::vector<LineId> all = g.controls;
  all.push_back(target);
  check_distinct(all, "toffoli");
  return g;
}

ReversibleGate ReversibleGate::fredkin(std::vector<LineId> controls, LineId t1,
                                       LineId t2) {
  if (t1 > t2) std::swap(t1, t2);
  std::sort(controls.begin(), controls.end());
  ReversibleGate g{RevKind::Fredkin, std::move(controls), {t1, t2}};
  std::vector<LineId> all = g.controls;
  all.push_back(t1);
  all.push_back(t2);
  check_distinct(all, "fredkin");
  return g;
}

ReversibleGate ReversibleGate::peres(LineId control, LineId t1, LineId t2) {
  ReversibleGate g{RevKind::Peres, {control}, {t1, t2}};
  check_distinct({control, t1, t2}, "peres");
  return g;
}

LineId ReversibleGate::max_line() const {
  LineId m = 0;
  for (LineId l : controls) m = std::max(m, l);
  for (LineId l : targets) m = std::max(m, l);
  return m;
}

ElementaryGate ElementaryGate::x(LineId target) {
  return {ElemKind::X, target, target};
}

namespace {
ElementaryGate make_two_qubit(ElemKind kind, LineId control, LineId target) {
  if (control == target) {
    throw InvalidGate("two-qubit gate: control equals target");
  }
  return {kind, control, target};
}
}  // namespace

ElementaryGate ElementaryGate::cx(LineId control, LineId target) {
  return make_two_qubit(ElemKind::CX, control, target);
}

ElementaryGate ElementaryGate::cv(LineId control, LineId target) {
  return make_two_qubit(ElemKind::CV, control, target);
}

ElementaryGate ElementaryGate::cvd(LineId control, LineId target) {
  return make_two_qubit(ElemKind::CVD, control, target);
}

LineId ElementaryGate::max_line() const { return std::max(control, target); }

std::string to_string(FourVal v) {
  switch (v) {
    case FourVal::Zero: return "0";
    case FourVal::V0: return "V0";
    case FourVal::One: return "1";
    case FourVal::V1: return "V1";
  }
  return "?";
}

Circuit::Circuit(LineId width, Layer layer) : width_(width), layer_(layer) {
  if (width == 0) throw Error("circuit width must be positive");
  lines_.resize(width);
  const auto names = default_line_names(width);
  for (LineId i = 0; i < width; ++i) lines_[i].name = names[i];
}

void Circuit::add(ReversibleGate gate) {
  if (layer_ != Layer::Reversible) {
    throw LayerMismatch("cannot add a reversible gate to an elementary circuit");
  }
  if (gate.max_line() >= width_) {
    throw Error("gate references line beyond circuit width");
  }
  rev_.push_back(std::move(gate));
}

void Circuit::add(ElementaryGate gate) {
  if (layer_ != Layer::Elementary) {
    throw LayerMismatch("cannot add an elementary gate to a reversible circuit");
  }
  if (gate.max_line() >= width_) {
    throw Error("gate references line beyond circuit width");
  }
  elem_.push_back(gate);
}

const std::vector<ReversibleGate>& Circuit::reversible_gates() const {
  if (layer_ != Layer::Reversible) {
    throw LayerMismatch("circuit holds elementary gates");
  }
  return rev_;
}

const std::vector<ElementaryGate>& Circuit::elementary_gates() const {
  if (layer_ != Layer::Elementary) {
    throw LayerMismatch("circuit holds reversible gates");
  }
  return elem_;
}

std::size_t Circuit::num_gates() const {
  return layer_ == Layer::Reversible ? rev_.size() : elem_.size();
}

const Line& Circuit::line(LineId i) const {
  if (i >= width_) throw Error("line index out of range");
  return lines_[i];
}

void Circuit::set_line(LineId i, Line line) {
  if (i >= width_) throw Error("line index out of range");
  lines_[i] = std::move(line);
}

unsigned Circuit::num_constant_inputs() const {
  unsigned n = 0;
  for (const auto& l : lines_) n += l.constant.has_value() ? 1 : 0;
  return n;
}

unsigned Circuit::num_garbage_outputs() const {
  unsigned n = 0;
  for (const auto& l : lines_) n += l.garbage ? 1 : 0;
  return n;
}

void Circuit::set_output_permutation(std::vector<LineId> perm) {
  check_bijection(perm, width_);
  bool identity = true;
  for (LineId i = 0; i < width_; ++i) {
    if (perm[i] != i) {
      identity = false;
      break;
    }
  }
  if (identity) {
    output_permutation_.reset();
  } else {
    output_permutation_ = std::move(perm);
  }
}

void check_bijection(const std::vector<LineId>& perm, std::size_t n) {
  if (perm.size() != n) {
    throw NotABijection("mapping has wrong size");
  }
  std::vector<bool> seen(n, false);
  for (LineId v : perm) {
    if (v >= n || seen[v]) {
      throw NotABijection("mapping is not a bijection on the circuit lines");
    }
    seen[v] = true;
  }
}

std::vector<std::string> default_line_names(LineId width) {
  std::vector<std::string> names;
  names.reserve(width);
  for (LineId i = 0; i < width; ++i) {
    names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

}  // namespace revlnn
