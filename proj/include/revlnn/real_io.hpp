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

#include "revlnn/circuit.hpp"

namespace revlnn {

// RevLib `.real` text format, restricted to the subset used here:
//
//   .version <string>
//   .numvars <n>
//   .variables <n names>
//   .inputs <n names>          (optional, labels only)
//   .outputs <n names>         (optional; when it spells a permutation of the
//                               variable names it records the circuit's
//                               output permutation)
//   .constants <string over {0,1,-}>
//   .garbage <string over {1,-}>
//   .begin
//   <one gate per line>
//   .end
//
// Gate mnemonics: `t<k>` is a Toffoli touching k lines (k-1 controls, last
// token the target; t1 = NOT, t2 = CNOT, t3 = Toffoli); `f<k>` a Fredkin
// touching k lines (last two tokens are the swap targets); `p a b c` a Peres
// gate (control, target1, target2); `v a b` / `v+ a b` the Controlled-V /
// Controlled-V+ with control a and target b. Lines starting with `#` are
// comments. Files mixing v/v+ with t3+/f/p mnemonics are rejected; a file
// containing only t1/t2 gates parses as a reversible circuit.

/// Parses a `.real` document into a circuit.
Circuit parse_real(const std::string& text);

/// Serializes a circuit; parse_real(write_real(c)) restores width, line
/// metadata, output permutation and gate list.
std::string write_real(const Circuit& circuit);

/// File convenience wrappers.
Circuit read_real_file(const std::string& path);
void write_real_file(const Circuit& circuit, const std::string& path);

}  // namespace revlnn
