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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revlnn/circuit.hpp"
#include "revlnn/macro_library.hpp"
#include "revlnn/simulate.hpp"

namespace revlnn {

/// A reversible function to synthesize over the adjacent-only gate library.
struct SynthesisTarget {
  unsigned width = 0;                  // up to 4 lines
  Permutation permutation;             // bijection over {0..2^width-1}
};

/// The restricted library: X on every line plus CX/CV/CV+ in both
/// orientations on every adjacent pair, n + 6(n-1) gates in a fixed order.
/// Every gate has NNC 0 by construction.
std::vector<ElementaryGate> adjacent_gate_library(LineId n);

/// Minimum-gate-count circuit over adjacent_gate_library(width) realizing the
/// target under four-valued simulation from Boolean inputs, or nullopt when
/// no realization with at most `max_cost` gates exists. The result is proven
/// minimal and, among equal-cost circuits, is the lexicographically smallest
/// gate sequence in library order. Bidirectional search: forward states from
/// the identity meet backward states from the target through gate inverses.
std::optional<Circuit> synthesize_minimal(const SynthesisTarget& target,
                                          unsigned max_cost);

/// Plain iterative-deepening reference search. Much slower; kept as an
/// independent cross-check of the bidirectional engine.
std::optional<Circuit> synthesize_minimal_iddfs(const SynthesisTarget& target,
                                                unsigned max_cost);

/// A reversible gate template to turn into a macro.
struct MacroPattern {
  std::string name;
  unsigned width = 0;
  std::vector<ReversibleGate> gates;  // over lines 0..width-1
};

/// Synthesizes an exact NNC-0 realization for each pattern cascade and pairs
/// it with the per-gate SWAP-insertion cost of the template (Peres gates are
/// costed through their Toffoli+CNOT cascade form). Throws SynthesisNotFound
/// when a pattern has no realization within `max_cost` gates.
MacroLibrary generate_macro_library(const std::vector<MacroPattern>& patterns,
                                    unsigned max_cost = 13);

/// The stock template list shipped with the tool (JSON with name/width/gates
/// entries); see data/patterns/.
std::vector<MacroPattern> parse_macro_patterns(const std::string& json_text);
std::string write_macro_patterns(const std::vector<MacroPattern>& patterns);

/// Per-gate naive routing cost used for macro bookkeeping.
std::int64_t pattern_gate_naive_cost(const ReversibleGate& gate, LineId width);

}  // namespace revlnn
