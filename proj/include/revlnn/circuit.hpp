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

#include "revlnn/errors.hpp"

namespace revlnn {

/// 0-based line position, counted from the top line of a circuit.
using LineId = std::uint32_t;

// ---------------------------------------------------------------------------
// Reversible gates
// ---------------------------------------------------------------------------

enum class RevKind { Toffoli, Fredkin, Peres };

/// A multiple-control Toffoli, multiple-control Fredkin, or Peres gate.
///
/// Toffoli t_m: `controls` holds the m control lines in a fixed order (the
/// order steers the standard decomposition), `targets` the single target.
/// Fredkin f_m: `controls` is a set (stored sorted), `targets` the unordered
/// pair of swap lines (stored sorted).
/// Peres: `controls` = {control}, `targets` = (t1, t2); the gate acts as the
/// Toffoli t_2({control, t1}, t2) followed by the CNOT t_1({control}, t1).
struct ReversibleGate {
  RevKind kind;
  std::vector<LineId> controls;
  std::vector<LineId> targets;

  static ReversibleGate toffoli(std::vector<LineId> controls, LineId target);
  static ReversibleGate fredkin(std::vector<LineId> controls, LineId t1,
                                LineId t2);
  static ReversibleGate peres(LineId control, LineId t1, LineId t2);

  /// Number of control lines (m in the t_m / f_m naming).
  std::size_t num_controls() const { return controls.size(); }

  /// Highest line id referenced by this gate.
  LineId max_line() const;

  bool operator==(const ReversibleGate&) const = default;
};

// ---------------------------------------------------------------------------
// Elementary quantum gates
// ---------------------------------------------------------------------------

/// The four-gate elementary library: NOT, CNOT, Controlled-V and
/// Controlled-V+ (V being the square root of NOT).
enum class ElemKind { X, CX, CV, CVD };

struct ElementaryGate {
  ElemKind kind;
  LineId control;  // unused for X (kept equal to target)
  LineId target;

  static ElementaryGate x(LineId target);
  static ElementaryGate cx(LineId control, LineId target);
  static ElementaryGate cv(LineId control, LineId target);
  static ElementaryGate cvd(LineId control, LineId target);

  bool two_qubit() const { return kind != ElemKind::X; }
  LineId max_line() const;

  bool operator==(const ElementaryGate&) const = default;
};

// ---------------------------------------------------------------------------
// Four-valued simulation domain
// ---------------------------------------------------------------------------

/// Simulation values {0, 1, V0, V1} with V0 = V|0>, V1 = V|1>. The numeric
/// encoding makes V a +1 step in Z4, V+ a -1 step and X a +2 step.
enum class FourVal : std::uint8_t { Zero = 0, V0 = 1, One = 2, V1 = 3 };

inline bool is_boolean(FourVal v) {
  return v == FourVal::Zero || v == FourVal::One;
}

inline FourVal apply_v(FourVal v) {
  return static_cast<FourVal>((static_cast<std::uint8_t>(v) + 1) & 3u);
}

inline FourVal apply_vdagger(FourVal v) {
  return static_cast<FourVal>((static_cast<std::uint8_t>(v) + 3) & 3u);
}

inline FourVal apply_x(FourVal v) {
  return static_cast<FourVal>((static_cast<std::uint8_t>(v) + 2) & 3u);
}

std::string to_string(FourVal v);

// ---------------------------------------------------------------------------
// Circuit
// ---------------------------------------------------------------------------

enum class Layer { Reversible, Elementary };

/// Per-line metadata.
struct Line {
  std::string name;
  std::optional<bool> constant;  // set when the input is a constant 0/1
  bool garbage = false;          // output not part of the function

  bool operator==(const Line&) const = default;
};

/// An ordered cascade of gates over `width` lines. A circuit holds either
/// reversible gates or elementary gates, never both; the layer is fixed at
/// construction.
///
/// Circuits are plain values: copy freely, share const references across
/// threads.
class Circuit {
 public:
  explicit Circuit(LineId width, Layer layer = Layer::Reversible);

  LineId width() const { return width_; }
  Layer layer() const { return layer_; }

  void add(ReversibleGate gate);
  void add(ElementaryGate gate);

  const std::vector<ReversibleGate>& reversible_gates() const;
  const std::vector<ElementaryGate>& elementary_gates() const;

  std::size_t num_gates() const;
  bool empty() const { return num_gates() == 0; }

  const std::vector<Line>& lines() const { return lines_; }
  const Line& line(LineId i) const;
  void set_line(LineId i, Line line);

  /// Count of lines with a constant input value (n_c).
  unsigned num_constant_inputs() const;
  /// Count of garbage-flagged lines (n_g).
  unsigned num_garbage_outputs() const;

  /// Line reordering left behind by a pass: output_permutation()[l] is the
  /// wire that carries line l's output. Identity mappings are normalized
  /// away (stored as nullopt).
  const std::optional<std::vector<LineId>>& output_permutation() const {
    return output_permutation_;
  }
  void set_output_permutation(std::vector<LineId> perm);
  void clear_output_permutation() { output_permutation_.reset(); }

  bool operator==(const Circuit&) const = default;

 private:
  LineId width_;
  Layer layer_;
  std::vector<ReversibleGate> rev_;
  std::vector<ElementaryGate> elem_;
  std::vector<Line> lines_;
  std::optional<std::vector<LineId>> output_permutation_;
};

/// Throws NotABijection unless `perm` is a bijection on {0..n-1}.
void check_bijection(const std::vector<LineId>& perm, std::size_t n);

/// Default line names x1..xn.
std::vector<std::string> default_line_names(LineId width);

}  // namespace revlnn
