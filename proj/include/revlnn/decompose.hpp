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

#include <vector>

#include "revlnn/circuit.hpp"

namespace revlnn {

struct DecompositionOptions {
  enum class AncillaPolicy {
    /// Borrow any line the gate does not touch (restored on every input).
    UseFreeLines,
    /// Reject any gate whose decomposition would need to borrow a line.
    FailIfInsufficient,
  };
  AncillaPolicy ancilla_policy = AncillaPolicy::UseFreeLines;
};

/// Standard 5-gate decomposition of a Toffoli with controls (a, b) and
/// target c: CV(b,c) CX(a,b) CV+(b,c) CX(a,b) CV(a,c).
std::vector<ElementaryGate> decompose_toffoli2(LineId a, LineId b, LineId c);

/// 4-gate Peres decomposition: CV(t1,t2) CX(c,t1) CV+(t1,t2) CV(c,t2);
/// realizes t2({c,t1},t2) followed by t1({c},t1).
std::vector<ElementaryGate> decompose_peres(LineId control, LineId t1,
                                            LineId t2);

/// SWAP as 3 CNOTs for m = 0; for m >= 1 a t_{m+1} with extra control t1 and
/// target t2, conjugated by CX(t2,t1) on both sides.
std::vector<ElementaryGate> decompose_fredkin(const std::vector<LineId>& controls,
                                              LineId t1, LineId t2, LineId width,
                                              const DecompositionOptions& options = {});

/// Multiple-control Toffoli via the recursive borrowed-ancilla split: the
/// control set is halved onto a free line h, emitting
/// t_{k1}(C1,h) t_{k2}(C2+h,t) t_{k1}(C1,h) t_{k2}(C2+h,t) until everything
/// is a plain Toffoli. h is the lowest-index line the gate does not touch and
/// is restored on every input. Throws InsufficientFreeLines when m >= 3 and
/// no free line exists (m = n-1).
std::vector<ElementaryGate> decompose_mct(const std::vector<LineId>& controls,
                                          LineId target, LineId width,
                                          const DecompositionOptions& options = {});

/// Dispatch on one reversible gate.
std::vector<ElementaryGate> decompose_gate(const ReversibleGate& gate,
                                           LineId width,
                                           const DecompositionOptions& options = {});

/// Concatenates the per-gate decompositions in cascade order; line metadata
/// is preserved and the result realizes the same permutation.
Circuit decompose_circuit(const Circuit& circuit,
                          const DecompositionOptions& options = {});

}  // namespace revlnn
