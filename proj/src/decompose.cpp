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

#include "revlnn/decompose.hpp"

#include <algorithm>
#include <string>

namespace revlnn {

namespace {

std::string describe(const ReversibleGate& g) {
  std::string s;
  switch (g.kind) {
    case RevKind::Toffoli: s = "t" + std::to_string(g.controls.size() + 1); break;
    case RevKind::Fredkin: s = "f" + std::to_string(g.controls.size() + 2); break;
    case RevKind::Peres: s = "p"; break;
  }
  s += "(";
  bool first = true;
  for (LineId c : g.controls) {
    if (!first) s += ",";
    s += std::to_string(c);
    first = false;
  }
  for (LineId t : g.targets) {
    if (!first) s += ",";
    s += std::to_string(t);
    first = false;
  }
  return s + ")";
}

/// Lowest-index line not used by `used`.
LineId lowest_free_line(const std::vector<LineId>& used, LineId width) {
  std::vector<bool> taken(width, false);
  for (LineId l : used) taken[l] = true;
  for (LineId i = 0; i < width; ++i) {
    if (!taken[i]) return i;
  }
  throw InsufficientFreeLines("no free line available");
}

void emit_mct(const std::vector<LineId>& controls, LineId target, LineId width,
              std::vector<ElementaryGate>& out) {
  const std::size_t m = controls.size();
  if (m == 0) {
    out.push_back(ElementaryGate::x(target));
    return;
  }
  if (m == 1) {
    out.push_back(ElementaryGate::cx(controls[0], target));
    return;
  }
  if (m == 2) {
    const auto gates = decompose_toffoli2(controls[0], controls[1], target);
    out.insert(out.end(), gates.begin(), gates.end());
    return;
  }
  std::vector<LineId> used = controls;
  used.push_back(target);
  const LineId h = lowest_free_line(used, width);
  const std::size_t k1 = (m + 1) / 2;
  std::vector<LineId> first(controls.begin(), controls.begin() + k1);
  std::vector<LineId> second(controls.begin() + k1, controls.end());
  second.push_back(h);
  for (int round = 0; round < 2; ++round) {
    emit_mct(first, h, width, out);
    emit_mct(second, target, width, out);
  }
}

}  // namespace

std::vector<ElementaryGate> decompose_toffoli2(LineId a, LineId b, LineId c) {
  return {ElementaryGate::cv(b, c), ElementaryGate::cx(a, b),
          ElementaryGate::cvd(b, c), ElementaryGate::cx(a, b),
          ElementaryGate::cv(a, c)};
}

std::vector<ElementaryGate> decompose_peres(LineId control, LineId t1,
                                            LineId t2) {
  return {ElementaryGate::cv(t1, t2), ElementaryGate::cx(control, t1),
          ElementaryGate::cvd(t1, t2), ElementaryGate::cv(control, t2)};
}

std::vector<ElementaryGate> decompose_fredkin(const std::vector<LineId>& controls,
                                              LineId t1, LineId t2, LineId width,
                                              const DecompositionOptions& options) {
  std::vector<ElementaryGate> out;
  if (controls.empty()) {
    out.push_back(ElementaryGate::cx(t1, t2));
    out.push_back(ElementaryGate::cx(t2, t1));
    out.push_back(ElementaryGate::cx(t1, t2));
    return out;
  }
  out.push_back(ElementaryGate::cx(t2, t1));
  std::vector<LineId> mct_controls = controls;
  mct_controls.push_back(t1);
  const auto inner = decompose_mct(mct_controls, t2, width, options);
  out.insert(out.end(), inner.begin(), inner.end());
  out.push_back(ElementaryGate::cx(t2, t1));
  return out;
}

std::vector<ElementaryGate> decompose_mct(const std::vector<LineId>& controls,
                                          LineId target, LineId width,
                                          const DecompositionOptions& options) {
  const std::size_t m = controls.size();
  if (m >= 3) {
    if (options.ancilla_policy ==
        DecompositionOptions::AncillaPolicy::FailIfInsufficient) {
      throw InsufficientFreeLines(
          "gate t" + std::to_string(m + 1) +
          " needs a borrowed line and the ancilla policy forbids borrowing");
    }
    if (m + 1 >= width) {
      // m = n-1: every line is touched by the gate; the remaining known
      // construction needs gates outside the elementary library.
      throw InsufficientFreeLines(
          "t" + std::to_string(m + 1) + " with " + std::to_string(m) +
          " controls in a " + std::to_string(width) +
          "-line circuit leaves no free line");
    }
  }
  std::vector<ElementaryGate> out;
  emit_mct(controls, target, width, out);
  return out;
}

std::vector<ElementaryGate> decompose_gate(const ReversibleGate& gate,
                                           LineId width,
                                           const DecompositionOptions& options) {
  switch (gate.kind) {
    case RevKind::Toffoli:
      return decompose_mct(gate.controls, gate.targets[0], width, options);
    case RevKind::Fredkin:
      return decompose_fredkin(gate.controls, gate.targets[0], gate.targets[1],
                               width, options);
    case RevKind::Peres:
      return decompose_peres(gate.controls[0], gate.targets[0], gate.targets[1]);
  }
  throw Error("unreachable");
}

Circuit decompose_circuit(const Circuit& circuit,
                          const DecompositionOptions& options) {
  Circuit result(circuit.width(), Layer::Elementary);
  for (LineId i = 0; i < circuit.width(); ++i) {
    result.set_line(i, circuit.line(i));
  }
  if (circuit.output_permutation()) {
    result.set_output_permutation(*circuit.output_permutation());
  }
  for (const auto& g : circuit.reversible_gates()) {
    try {
      for (const auto& eg : decompose_gate(g, circuit.width(), options)) {
        result.add(eg);
      }
    } catch (const InsufficientFreeLines& e) {
      throw InsufficientFreeLines(describe(g) + ": " + e.what());
    }
  }
  return result;
}

}  // namespace revlnn
