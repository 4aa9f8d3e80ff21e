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
#include <optional>
#include <string>
#include <vector>

#include "revlnn/circuit.hpp"

namespace revlnn {

/// All cost metrics of one circuit. For reversible circuits gc/qc/TrC refer
/// to the reversible gate list while NNC, depth and the gate distribution are
/// measured on its standard decomposition (decomposed_for_quantum_metrics is
/// set in that case). Transistor cost is absent for elementary circuits.
struct MetricsReport {
  std::string name;
  unsigned n = 0;
  unsigned n_c = 0;
  unsigned n_g = 0;
  std::uint64_t gc = 0;
  std::int64_t qc = 0;
  std::int64_t nnc = 0;
  std::uint64_t depth = 0;
  std::vector<std::uint64_t> dis;
  std::uint64_t dis_min = 0;
  std::uint64_t dis_max = 0;
  std::optional<std::int64_t> trc;
  bool decomposed_for_quantum_metrics = false;

  /// Exact average of dis over the lines, rendered with one decimal.
  std::string dis_avg_string() const;
  double dis_avg() const;
};

/// Number of gates in the cascade.
std::uint64_t gate_count(const Circuit& circuit);

/// Cost of a multiple-control Toffoli with m controls in an n-line circuit:
/// 1 for m <= 1, 5 for m = 2, 2^n - 3 for m = n-1, then 12m - 22 for
/// 3 <= m <= ceil(n/2) and 24m - 64 up to m = n-2. Exact rows win over the
/// band formulas.
std::int64_t mct_quantum_cost(std::size_t m, LineId n);

/// Fredkin cost: 3 for m = 0, otherwise 2 + mct_quantum_cost(m+1, n).
std::int64_t fredkin_quantum_cost(std::size_t m, LineId n);

/// Per-gate cost table applied to a single reversible gate.
std::int64_t gate_quantum_cost(const ReversibleGate& gate, LineId n);

/// Sum of per-gate costs. Elementary gates cost 1 each, so the quantum cost
/// of an elementary circuit equals its gate count.
std::int64_t quantum_cost(const Circuit& circuit);

/// 8 transistors per control line; a Peres gate counts as its Toffoli+CNOT
/// cascade (24). Reversible circuits only.
std::int64_t transistor_cost(const Circuit& circuit);

/// Sum over two-qubit gates of |control - target| - 1. Zero means every
/// interaction is between adjacent lines. Elementary circuits only.
std::int64_t nnc(const Circuit& circuit);

/// Per-gate distance of an elementary gate (0 for one-qubit gates).
std::int64_t gate_nnc(const ElementaryGate& gate);

/// Number of execution steps under the concurrency rule: two gates may share
/// a step when neither controls a line the other targets and their targets
/// differ. Greedy as-soon-as-possible layering.
std::uint64_t depth(const Circuit& circuit);

struct Distribution {
  std::vector<std::uint64_t> dis;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  std::uint64_t sum = 0;
};

/// Gates touching each line (controls and targets both count).
Distribution distribution(const Circuit& circuit);

/// Populates every metric for one circuit.
MetricsReport full_report(const Circuit& circuit, const std::string& name = "");

/// One-decimal rendering of sum/n with round-half-up.
std::string render_one_decimal(std::uint64_t sum, std::uint64_t n);

std::string report_to_json(const MetricsReport& report);
MetricsReport report_from_json(const std::string& json_text);
std::string reports_to_json(const std::vector<MetricsReport>& reports);

/// CSV row in the column order name, n, n_g, n_c, gc, qc, nnc, depth,
/// dis_avg, trc.
std::string report_csv_header();
std::string report_to_csv_row(const MetricsReport& report);

}  // namespace revlnn
