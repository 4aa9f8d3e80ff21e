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

#include "revlnn/simulate.hpp"

#include <algorithm>
#include <string>

namespace revlnn {

namespace {

void apply_reversible_gate(const ReversibleGate& g, std::vector<bool>& state) {
  bool fire = true;
  for (LineId c : g.controls) fire = fire && state[c];
  switch (g.kind) {
    case RevKind::Toffoli:
      if (fire) state[g.targets[0]] = !state[g.targets[0]];
      break;
    case RevKind::Fredkin:
      if (fire) {
        const bool tmp = state[g.targets[0]];
        state[g.targets[0]] = state[g.targets[1]];
        state[g.targets[1]] = tmp;
      }
      break;
    case RevKind::Peres: {
      // t2({control, t1}, t2) then t1({control}, t1)
      const LineId a = g.controls[0];
      const LineId t1 = g.targets[0];
      const LineId t2 = g.targets[1];
      if (state[a] && state[t1]) state[t2] = !state[t2];
      if (state[a]) state[t1] = !state[t1];
      break;
    }
  }
}

FourVal require_boolean_control(FourVal v, const ElementaryGate& g) {
  if (!is_boolean(v)) {
    throw ControlNotBoolean("control line " + std::to_string(g.control) +
                            " holds " + to_string(v));
  }
  return v;
}

}  // namespace

std::vector<bool> simulate_reversible(const Circuit& circuit,
                                      const std::vector<bool>& input) {
  if (input.size() != circuit.width()) {
    throw WidthMismatch("input length does not match circuit width");
  }
  std::vector<bool> state = input;
  for (const auto& g : circuit.reversible_gates()) {
    apply_reversible_gate(g, state);
  }
  return state;
}

namespace {

/// True when gates[i..i+2] spell a SWAP: CX(p,q) CX(q,p) CX(p,q).
bool is_swap_triple(const std::vector<ElementaryGate>& gates, std::size_t i) {
  if (i + 2 >= gates.size()) return false;
  const auto& a = gates[i];
  const auto& b = gates[i + 1];
  const auto& c = gates[i + 2];
  return a.kind == ElemKind::CX && b.kind == ElemKind::CX &&
         c.kind == ElemKind::CX && a == c && b.control == a.target &&
         b.target == a.control;
}

}  // namespace

std::vector<FourVal> simulate_elementary(const Circuit& circuit,
                                         const std::vector<FourVal>& input) {
  if (input.size() != circuit.width()) {
    throw WidthMismatch("input length does not match circuit width");
  }
  std::vector<FourVal> state = input;
  const auto& gates = circuit.elementary_gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    // Three CNOTs spelling a SWAP exchange the wire values outright. On
    // Boolean values this matches applying them one by one; it additionally
    // keeps routed circuits simulable when a V value crosses a swap.
    if (is_swap_triple(gates, i)) {
      std::swap(state[gates[i].control], state[gates[i].target]);
      i += 2;
      continue;
    }
    const auto& g = gates[i];
    switch (g.kind) {
      case ElemKind::X:
        state[g.target] = apply_x(state[g.target]);
        break;
      case ElemKind::CX:
        if (require_boolean_control(state[g.control], g) == FourVal::One) {
          state[g.target] = apply_x(state[g.target]);
        }
        break;
      case ElemKind::CV:
        if (require_boolean_control(state[g.control], g) == FourVal::One) {
          state[g.target] = apply_v(state[g.target]);
        }
        break;
      case ElemKind::CVD:
        if (require_boolean_control(state[g.control], g) == FourVal::One) {
          state[g.target] = apply_vdagger(state[g.target]);
        }
        break;
    }
  }
  return state;
}

std::vector<FourVal> simulate_elementary(const Circuit& circuit,
                                         const std::vector<bool>& input) {
  std::vector<FourVal> vals(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    vals[i] = input[i] ? FourVal::One : FourVal::Zero;
  }
  return simulate_elementary(circuit, vals);
}

std::vector<bool> index_to_bits(std::uint32_t index, LineId width) {
  std::vector<bool> bits(width);
  for (LineId l = 0; l < width; ++l) {
    bits[l] = ((index >> (width - 1 - l)) & 1u) != 0;
  }
  return bits;
}

std::uint32_t bits_to_index(const std::vector<bool>& bits) {
  std::uint32_t index = 0;
  for (bool b : bits) index = (index << 1) | (b ? 1u : 0u);
  return index;
}

Permutation extract_permutation(const Circuit& circuit, unsigned max_width) {
  const LineId n = circuit.width();
  if (n > max_width) {
    throw Error("circuit width " + std::to_string(n) +
                " exceeds the permutation extraction bound " +
                std::to_string(max_width));
  }
  const std::uint32_t rows = 1u << n;
  Permutation perm(rows);
  if (circuit.layer() == Layer::Reversible) {
    for (std::uint32_t i = 0; i < rows; ++i) {
      perm[i] = bits_to_index(simulate_reversible(circuit, index_to_bits(i, n)));
    }
  } else {
    for (std::uint32_t i = 0; i < rows; ++i) {
      std::vector<FourVal> out;
      try {
        out = simulate_elementary(circuit, index_to_bits(i, n));
      } catch (const ControlNotBoolean& e) {
        throw NotBooleanReversible(std::string("input ") + std::to_string(i) +
                                   ": " + e.what());
      }
      std::vector<bool> bits(n);
      for (LineId l = 0; l < n; ++l) {
        if (!is_boolean(out[l])) {
          throw NotBooleanReversible("input " + std::to_string(i) + ": line " +
                                     std::to_string(l) + " ends as " +
                                     to_string(out[l]));
        }
        bits[l] = out[l] == FourVal::One;
      }
      perm[i] = bits_to_index(bits);
    }
  }
  return perm;
}

Permutation extract_permutation_modulo(const Circuit& circuit,
                                       unsigned max_width) {
  Permutation raw = extract_permutation(circuit, max_width);
  const auto& out_perm = circuit.output_permutation();
  if (!out_perm) return raw;
  const LineId n = circuit.width();
  Permutation adjusted(raw.size());
  for (std::uint32_t i = 0; i < raw.size(); ++i) {
    const auto wires = index_to_bits(raw[i], n);
    std::vector<bool> logical(n);
    for (LineId l = 0; l < n; ++l) logical[l] = wires[(*out_perm)[l]];
    adjusted[i] = bits_to_index(logical);
  }
  return adjusted;
}

bool equivalent(const Circuit& a, const Circuit& b, bool modulo_permutation) {
  if (a.width() != b.width()) {
    throw WidthMismatch("cannot compare circuits of different widths");
  }
  const Permutation pa =
      modulo_permutation ? extract_permutation_modulo(a) : extract_permutation(a);
  const Permutation pb =
      modulo_permutation ? extract_permutation_modulo(b) : extract_permutation(b);
  return pa == pb;
}

Circuit apply_line_relabeling(const Circuit& circuit,
                              const std::vector<LineId>& perm) {
  const LineId n = circuit.width();
  check_bijection(perm, n);
  Circuit result(n, circuit.layer());
  for (LineId i = 0; i < n; ++i) {
    result.set_line(perm[i], circuit.line(i));
  }
  if (circuit.layer() == Layer::Reversible) {
    for (const auto& g : circuit.reversible_gates()) {
      ReversibleGate mapped = g;
      for (LineId& l : mapped.controls) l = perm[l];
      for (LineId& l : mapped.targets) l = perm[l];
      if (mapped.kind == RevKind::Fredkin) {
        std::sort(mapped.controls.begin(), mapped.controls.end());
        std::sort(mapped.targets.begin(), mapped.targets.end());
      }
      result.add(std::move(mapped));
    }
  } else {
    for (const auto& g : circuit.elementary_gates()) {
      ElementaryGate mapped = g;
      mapped.control = perm[g.control];
      mapped.target = perm[g.target];
      result.add(mapped);
    }
  }
  if (circuit.output_permutation()) {
    // Relabel both the logical and the wire side of the recorded mapping.
    const auto& old = *circuit.output_permutation();
    std::vector<LineId> mapped(n);
    for (LineId l = 0; l < n; ++l) mapped[perm[l]] = perm[old[l]];
    result.set_output_permutation(std::move(mapped));
  }
  return result;
}

}  // namespace revlnn
