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

#include <string>
#include <vector>

#include "revlnn/circuit.hpp"

namespace revlnn {

/// A reversible gate template over w consecutive lines together with a
/// pre-computed NNC-0 elementary realization of the whole template cascade.
/// `cost` is the realization's gate count; `naive_cost` is the per-gate cost
/// of routing one template gate with SWAP insertion instead (Peres gates
/// costed through their Toffoli+CNOT cascade form).
struct Macro {
  std::string name;
  unsigned width = 0;
  std::vector<ReversibleGate> pattern;  // over lines 0..width-1
  Circuit realization{1, Layer::Elementary};
  std::int64_t cost = 0;
  std::int64_t naive_cost = 0;
};

struct MacroLibrary {
  std::vector<Macro> entries;
};

/// Re-simulates the realization against the pattern cascade over all Boolean
/// inputs and checks NNC 0 and the stored cost. Returns false on mismatch.
bool verify_macro(const Macro& macro);

/// Gate mnemonics over symbolic lines a..d, e.g. "t3 a b c", "p a b c",
/// "f2 a b". Line letter i maps to position i.
std::vector<ReversibleGate> parse_pattern(const std::vector<std::string>& gates,
                                          unsigned width);
std::vector<std::string> pattern_to_strings(const std::vector<ReversibleGate>& pattern);

/// Elementary mnemonics over line indices, e.g. "v 1 2", "t2 0 1", "t1 2".
Circuit parse_realization(const std::vector<std::string>& gates, unsigned width);
std::vector<std::string> realization_to_strings(const Circuit& realization);

/// JSON (de)serialization. Loading verifies every entry and throws
/// MacroVerificationFailed on the first failure.
MacroLibrary parse_macro_library(const std::string& json_text);
std::string write_macro_library(const MacroLibrary& library);
MacroLibrary load_macro_library_file(const std::string& path);
void write_macro_library_file(const MacroLibrary& library,
                              const std::string& path);

}  // namespace revlnn
