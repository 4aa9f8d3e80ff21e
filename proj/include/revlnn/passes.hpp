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
#include <utility>
#include <vector>

#include "revlnn/circuit.hpp"
#include "revlnn/macro_library.hpp"
#include "revlnn/simulate.hpp"

namespace revlnn {

/// Output of an NNC-elimination pass: an elementary circuit with NNC 0 and
/// realized quantum cost `qc` (its gate count). Global reordering records the
/// line relabeling it applied to the inputs; local reordering records the
/// permutation its outputs ended up in.
struct PassResult {
  Circuit circuit{1, Layer::Elementary};
  std::int64_t qc = 0;
  std::optional<std::vector<LineId>> input_relabeling;
  std::optional<std::vector<LineId>> output_permutation;
};

/// Conjugates a non-adjacent gate with adjacent SWAPs (3 CNOTs each): the
/// control walks to the target, the gate fires, the walk is undone. Adds
/// exactly 6 * (|c-t|-1) gates per two-qubit gate.
PassResult naive_pass(const Circuit& circuit);

/// Scans the reversible cascade left to right, splicing in library macros
/// (two-gate templates first, then one-gate ones, matched modulo window
/// translation and vertical reflection); unmatched gates fall back to
/// standard decomposition plus SWAP insertion.
PassResult macro_pass(const Circuit& circuit, const MacroLibrary& library);

/// Per-line share of the total NNC: each two-qubit gate adds half its NNC
/// value to both of its lines.
std::vector<double> compute_impacts(const Circuit& circuit);

/// Repeatedly swaps the highest-impact line with the middle line while that
/// strictly decreases the NNC, then routes the remaining non-adjacent gates
/// with SWAPs.
PassResult global_reorder_pass(const Circuit& circuit);

/// Inserts one adjacent SWAP at a time in front of a non-adjacent gate and
/// keeps the new line ordering for the rest of the circuit. With
/// `restore_order` the final ordering is bubbled back at 3 gates per swap.
PassResult local_reorder_pass(const Circuit& circuit, bool restore_order = false);

/// Global reordering first, then local reordering on the relabeled circuit.
PassResult combined_pass(const Circuit& circuit, bool restore_order = false);

enum class Strategy { Naive, Macro, Global, Local, GlobalLocal };

std::string to_string(Strategy s);

/// Runs every strategy on a reversible circuit (passes operate on its
/// standard decomposition) and returns the cheapest result; ties go to the
/// earlier strategy in declaration order.
std::pair<PassResult, Strategy> best_of(const Circuit& circuit,
                                        const MacroLibrary& library);

/// Runs one strategy on a reversible circuit.
PassResult run_strategy(const Circuit& circuit, Strategy strategy,
                        const MacroLibrary& library,
                        bool restore_order = false);

/// Exhaustive-simulation oracle: does the pass output realize the source
/// circuit's function, modulo the recorded relabeling/permutation?
bool pass_preserves_function(const Circuit& source, const PassResult& result,
                             unsigned max_width = 16);

/// Conjugation of a truth-table permutation by a line relabeling.
Permutation conjugate_by_line_permutation(const Permutation& perm,
                                          const std::vector<LineId>& relabeling,
                                          LineId width);

}  // namespace revlnn
