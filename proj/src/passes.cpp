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

#include "revlnn/passes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "revlnn/decompose.hpp"
#include "revlnn/metrics.hpp"

namespace revlnn {

namespace {

void require_elementary(const Circuit& c, const char* pass) {
  if (c.layer() != Layer::Elementary) {
    throw LayerMismatch(std::string(pass) + " expects an elementary circuit");
  }
}

/// SWAP of the adjacent pair (lo, lo+1) as 3 CNOTs.
void emit_swap(LineId lo, std::vector<ElementaryGate>& out) {
  out.push_back(ElementaryGate::cx(lo, lo + 1));
  out.push_back(ElementaryGate::cx(lo + 1, lo));
  out.push_back(ElementaryGate::cx(lo, lo + 1));
}

/// Routes one gate: walk the control next to the target, fire, walk back.
void route_gate(const ElementaryGate& g, std::vector<ElementaryGate>& out) {
  if (!g.two_qubit() || gate_nnc(g) == 0) {
    out.push_back(g);
    return;
  }
  const LineId c = g.control;
  const LineId t = g.target;
  std::vector<LineId> swap_los;
  if (c < t) {
    for (LineId p = c; p + 1 < t; ++p) swap_los.push_back(p);
  } else {
    for (LineId p = c; p > t + 1; --p) swap_los.push_back(p - 1);
  }
  for (LineId lo : swap_los) emit_swap(lo, out);
  const LineId moved = c < t ? t - 1 : t + 1;
  out.push_back(ElementaryGate{g.kind, moved, t});
  for (auto it = swap_los.rbegin(); it != swap_los.rend(); ++it) {
    emit_swap(*it, out);
  }
}

Circuit with_metadata_of(const Circuit& src, Layer layer) {
  Circuit out(src.width(), layer);
  for (LineId i = 0; i < src.width(); ++i) out.set_line(i, src.line(i));
  return out;
}

PassResult finish(Circuit&& circuit) {
  PassResult r;
  r.qc = static_cast<std::int64_t>(circuit.num_gates());
  r.output_permutation = circuit.output_permutation();
  r.circuit = std::move(circuit);
  return r;
}

}  // namespace

PassResult naive_pass(const Circuit& circuit) {
  require_elementary(circuit, "naive_pass");
  Circuit out = with_metadata_of(circuit, Layer::Elementary);
  std::vector<ElementaryGate> gates;
  for (const auto& g : circuit.elementary_gates()) route_gate(g, gates);
  for (const auto& g : gates) out.add(g);
  if (circuit.output_permutation()) {
    out.set_output_permutation(*circuit.output_permutation());
  }
  return finish(std::move(out));
}

// ---------------------------------------------------------------------------
// Macro substitution
// ---------------------------------------------------------------------------

namespace {

bool same_gate_modulo_control_order(const ReversibleGate& a,
                                    const ReversibleGate& b) {
  if (a.kind != b.kind || a.targets != b.targets) return false;
  std::vector<LineId> ca = a.controls;
  std::vector<LineId> cb = b.controls;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return ca == cb;
}

ReversibleGate map_gate(const ReversibleGate& g, unsigned width, LineId base,
                        bool reflected) {
  auto map_line = [&](LineId l) {
    return base + (reflected ? width - 1 - l : l);
  };
  switch (g.kind) {
    case RevKind::Toffoli: {
      std::vector<LineId> controls;
      for (LineId c : g.controls) controls.push_back(map_line(c));
      return ReversibleGate::toffoli(std::move(controls), map_line(g.targets[0]));
    }
    case RevKind::Fredkin: {
      std::vector<LineId> controls;
      for (LineId c : g.controls) controls.push_back(map_line(c));
      return ReversibleGate::fredkin(std::move(controls), map_line(g.targets[0]),
                                     map_line(g.targets[1]));
    }
    case RevKind::Peres:
      return ReversibleGate::peres(map_line(g.controls[0]),
                                   map_line(g.targets[0]),
                                   map_line(g.targets[1]));
  }
  throw Error("unreachable");
}

ElementaryGate map_elem_gate(const ElementaryGate& g, unsigned width,
                             LineId base, bool reflected) {
  auto map_line = [&](LineId l) {
    return base + (reflected ? width - 1 - l : l);
  };
  ElementaryGate mapped = g;
  mapped.control = map_line(g.control);
  mapped.target = map_line(g.target);
  return mapped;
}

struct MacroMatch {
  const Macro* macro = nullptr;
  LineId base = 0;
  bool reflected = false;
};

std::optional<MacroMatch> match_at(const std::vector<ReversibleGate>& gates,
                                   std::size_t pos, const MacroLibrary& library,
                                   LineId width, std::size_t pattern_len) {
  for (const auto& macro : library.entries) {
    if (macro.pattern.size() != pattern_len) continue;
    if (macro.width > width) continue;
    for (LineId base = 0; base + macro.width <= width; ++base) {
      for (bool reflected : {false, true}) {
        bool ok = pos + pattern_len <= gates.size();
        for (std::size_t k = 0; ok && k < pattern_len; ++k) {
          ok = same_gate_modulo_control_order(
              gates[pos + k], map_gate(macro.pattern[k], macro.width, base,
                                       reflected));
        }
        if (ok) return MacroMatch{&macro, base, reflected};
      }
    }
  }
  return std::nullopt;
}

/// Window-local check that the spliced realization still simulates to the
/// pattern cascade (catches stale library data).
void check_splice(const MacroMatch& match) {
  if (!verify_macro(*match.macro)) {
    throw MacroVerificationFailed("macro '" + match.macro->name +
                                  "' failed its splice-time check");
  }
}

}  // namespace

PassResult macro_pass(const Circuit& circuit, const MacroLibrary& library) {
  if (circuit.layer() != Layer::Reversible) {
    throw LayerMismatch("macro_pass expects a reversible circuit");
  }
  const auto& gates = circuit.reversible_gates();
  Circuit out = with_metadata_of(circuit, Layer::Elementary);
  std::vector<ElementaryGate> emitted;
  std::size_t i = 0;
  while (i < gates.size()) {
    std::optional<MacroMatch> match =
        match_at(gates, i, library, circuit.width(), 2);
    if (!match) match = match_at(gates, i, library, circuit.width(), 1);
    if (match) {
      check_splice(*match);
      for (const auto& g : match->macro->realization.elementary_gates()) {
        emitted.push_back(
            map_elem_gate(g, match->macro->width, match->base, match->reflected));
      }
      i += match->macro->pattern.size();
    } else {
      for (const auto& eg : decompose_gate(gates[i], circuit.width())) {
        route_gate(eg, emitted);
      }
      ++i;
    }
  }
  for (const auto& g : emitted) out.add(g);
  if (circuit.output_permutation()) {
    out.set_output_permutation(*circuit.output_permutation());
  }
  return finish(std::move(out));
}

// ---------------------------------------------------------------------------
// Line reordering
// ---------------------------------------------------------------------------

std::vector<double> compute_impacts(const Circuit& circuit) {
  require_elementary(circuit, "compute_impacts");
  std::vector<double> imp(circuit.width(), 0.0);
  for (const auto& g : circuit.elementary_gates()) {
    const auto v = static_cast<double>(gate_nnc(g));
    if (v > 0) {
      imp[g.control] += v / 2.0;
      imp[g.target] += v / 2.0;
    }
  }
  return imp;
}

namespace {

LineId middle_line(LineId n) { return n % 2 == 1 ? n / 2 : n / 2 - 1; }

/// Highest-impact line, skipping the middle line if it tops the list.
/// Ties fall to the lowest index.
std::optional<LineId> pick_candidate(const std::vector<double>& imp, LineId middle) {
  auto argmax_excluding = [&](std::optional<LineId> excluded) {
    std::optional<LineId> best;
    for (LineId i = 0; i < imp.size(); ++i) {
      if (excluded && i == *excluded) continue;
      if (!best || imp[i] > imp[*best]) best = i;
    }
    return best;
  };
  const auto best = argmax_excluding(std::nullopt);
  if (best && *best == middle) return argmax_excluding(middle);
  return best;
}

/// The accepted transpositions, composed into one relabeling.
std::vector<LineId> global_reorder_search(const Circuit& circuit) {
  const LineId n = circuit.width();
  std::vector<LineId> total(n);
  for (LineId i = 0; i < n; ++i) total[i] = i;
  Circuit current = circuit;
  const LineId middle = middle_line(n);
  while (true) {
    const std::int64_t before = nnc(current);
    if (before == 0) break;
    const auto imp = compute_impacts(current);
    const auto candidate = pick_candidate(imp, middle);
    if (!candidate || *candidate == middle) break;
    std::vector<LineId> swap(n);
    for (LineId i = 0; i < n; ++i) swap[i] = i;
    swap[*candidate] = middle;
    swap[middle] = *candidate;
    Circuit tentative = apply_line_relabeling(current, swap);
    if (nnc(tentative) >= before) break;
    current = std::move(tentative);
    for (LineId i = 0; i < n; ++i) total[i] = swap[total[i]];
  }
  return total;
}

bool is_identity(const std::vector<LineId>& perm) {
  for (LineId i = 0; i < perm.size(); ++i) {
    if (perm[i] != i) return false;
  }
  return true;
}

}  // namespace

PassResult global_reorder_pass(const Circuit& circuit) {
  require_elementary(circuit, "global_reorder_pass");
  const auto relabeling = global_reorder_search(circuit);
  const Circuit relabeled = apply_line_relabeling(circuit, relabeling);
  PassResult result = naive_pass(relabeled);
  if (!is_identity(relabeling)) result.input_relabeling = relabeling;
  return result;
}

PassResult local_reorder_pass(const Circuit& circuit, bool restore_order) {
  require_elementary(circuit, "local_reorder_pass");
  const LineId n = circuit.width();
  std::vector<LineId> pos(n);       // line -> wire
  std::vector<LineId> line_at(n);   // wire -> line
  for (LineId i = 0; i < n; ++i) pos[i] = line_at[i] = i;
  auto swap_wires = [&](LineId lo) {
    const LineId u = line_at[lo];
    const LineId v = line_at[lo + 1];
    std::swap(line_at[lo], line_at[lo + 1]);
    std::swap(pos[u], pos[v]);
  };
  std::vector<ElementaryGate> emitted;
  for (const auto& g : circuit.elementary_gates()) {
    if (!g.two_qubit()) {
      emitted.push_back(ElementaryGate::x(pos[g.target]));
      continue;
    }
    LineId c = pos[g.control];
    const LineId t = pos[g.target];
    while (c + 1 < t) {
      emit_swap(c, emitted);
      swap_wires(c);
      ++c;
    }
    while (c > t + 1) {
      emit_swap(c - 1, emitted);
      swap_wires(c - 1);
      --c;
    }
    emitted.push_back(ElementaryGate{g.kind, c, t});
  }
  if (restore_order) {
    // Bubble the wires back into line order.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (LineId w = 0; w + 1 < n; ++w) {
        if (line_at[w] > line_at[w + 1]) {
          emit_swap(w, emitted);
          swap_wires(w);
          dirty = true;
        }
      }
    }
  }
  Circuit out = with_metadata_of(circuit, Layer::Elementary);
  for (const auto& g : emitted) out.add(g);
  if (circuit.output_permutation()) {
    // compose with whatever reordering the input already carried
    const auto& prior = *circuit.output_permutation();
    std::vector<LineId> total(n);
    for (LineId l = 0; l < n; ++l) total[l] = pos[prior[l]];
    out.set_output_permutation(total);
  } else {
    out.set_output_permutation(pos);
  }
  PassResult result = finish(std::move(out));
  result.output_permutation = result.circuit.output_permutation();
  return result;
}

PassResult combined_pass(const Circuit& circuit, bool restore_order) {
  require_elementary(circuit, "combined_pass");
  const auto relabeling = global_reorder_search(circuit);
  const Circuit relabeled = apply_line_relabeling(circuit, relabeling);
  PassResult result = local_reorder_pass(relabeled, restore_order);
  if (!is_identity(relabeling)) result.input_relabeling = relabeling;
  return result;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Naive: return "naive";
    case Strategy::Macro: return "macro";
    case Strategy::Global: return "global";
    case Strategy::Local: return "local";
    case Strategy::GlobalLocal: return "global-local";
  }
  return "?";
}

PassResult run_strategy(const Circuit& circuit, Strategy strategy,
                        const MacroLibrary& library, bool restore_order) {
  if (circuit.layer() != Layer::Reversible) {
    throw LayerMismatch("optimization strategies start from reversible circuits");
  }
  if (strategy == Strategy::Macro) return macro_pass(circuit, library);
  const Circuit decomposed = decompose_circuit(circuit);
  switch (strategy) {
    case Strategy::Naive: return naive_pass(decomposed);
    case Strategy::Global: return global_reorder_pass(decomposed);
    case Strategy::Local: return local_reorder_pass(decomposed, restore_order);
    case Strategy::GlobalLocal: return combined_pass(decomposed, restore_order);
    case Strategy::Macro: break;
  }
  throw Error("unreachable");
}

std::pair<PassResult, Strategy> best_of(const Circuit& circuit,
                                        const MacroLibrary& library) {
  static constexpr Strategy kOrder[] = {Strategy::Naive, Strategy::Macro,
                                        Strategy::Global, Strategy::Local,
                                        Strategy::GlobalLocal};
  std::optional<std::pair<PassResult, Strategy>> best;
  for (Strategy s : kOrder) {
    PassResult r = run_strategy(circuit, s, library);
    if (!best || r.qc < best->first.qc) {
      best = {std::move(r), s};
    }
  }
  return std::move(*best);
}

Permutation conjugate_by_line_permutation(const Permutation& perm,
                                          const std::vector<LineId>& relabeling,
                                          LineId width) {
  check_bijection(relabeling, width);
  auto relabel_index = [&](std::uint32_t index) {
    const auto bits = index_to_bits(index, width);
    std::vector<bool> mapped(width);
    for (LineId l = 0; l < width; ++l) mapped[relabeling[l]] = bits[l];
    return bits_to_index(mapped);
  };
  Permutation out(perm.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) {
    out[relabel_index(i)] = relabel_index(perm[i]);
  }
  return out;
}

bool pass_preserves_function(const Circuit& source, const PassResult& result,
                             unsigned max_width) {
  Permutation expected = extract_permutation_modulo(source, max_width);
  if (result.input_relabeling) {
    expected = conjugate_by_line_permutation(expected, *result.input_relabeling,
                                             source.width());
  }
  const Permutation actual =
      extract_permutation_modulo(result.circuit, max_width);
  return expected == actual;
}

}  // namespace revlnn
