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

#include <cstdint>
#include <vector>

#include "revlnn/circuit.hpp"

namespace revlnn {

/// Truth-table permutation over {0..2^n-1}. Line 0 (the top line) is the most
/// significant bit of a row index.
using Permutation = std::vector<std::uint32_t>;

/// Applies each reversible gate left to right. Total on valid circuits.
std::vector<bool> simulate_reversible(const Circuit& circuit,
                                      const std::vector<bool>& input);

/// Four-valued simulation of an elementary circuit. Throws ControlNotBoolean
/// when a two-qubit gate fires with its control holding V0 or V1. Three
/// consecutive CNOTs spelling a SWAP are applied as a wire exchange, so
/// routed circuits stay simulable when a V value crosses a swap.
std::vector<FourVal> simulate_elementary(const Circuit& circuit,
                                         const std::vector<FourVal>& input);

/// Convenience overload starting from Boolean values.
std::vector<FourVal> simulate_elementary(const Circuit& circuit,
                                         const std::vector<bool>& input);

/// Tabulates simulate over all 2^n Boolean inputs. For elementary circuits
/// every output must be Boolean and no control may be violated, otherwise
/// NotBooleanReversible is thrown. Widths above `max_width` are rejected.
Permutation extract_permutation(const Circuit& circuit,
                                unsigned max_width = 16);

/// Helpers between row indices and per-line bit assignments (MSB = line 0).
std::vector<bool> index_to_bits(std::uint32_t index, LineId width);
std::uint32_t bits_to_index(const std::vector<bool>& bits);

/// True iff both circuits realize the same permutation. With
/// `modulo_permutation` set, each circuit's recorded output_permutation is
/// applied to its outputs before comparing.
bool equivalent(const Circuit& a, const Circuit& b,
                bool modulo_permutation = false);

/// Permutation of a circuit with its recorded output_permutation applied
/// (used by the equivalence check and the CLI verifier).
Permutation extract_permutation_modulo(const Circuit& circuit,
                                       unsigned max_width = 16);

/// Maps every gate's line ids through `perm` (perm[old] = new) and moves the
/// line metadata along. Gate order is unchanged.
Circuit apply_line_relabeling(const Circuit& circuit,
                              const std::vector<LineId>& perm);

}  // namespace revlnn
