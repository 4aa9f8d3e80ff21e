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

#include "revlnn/exact_synth.hpp"

#include <algorithm>
#include <cstdint>

#include <json.hpp>

#include "revlnn/decompose.hpp"
#include "revlnn/metrics.hpp"

namespace revlnn {

std::vector<ElementaryGate> adjacent_gate_library(LineId n) {
  std::vector<ElementaryGate> lib;
  for (LineId i = 0; i < n; ++i) lib.push_back(ElementaryGate::x(i));
  for (LineId p = 0; p + 1 < n; ++p) {
    lib.push_back(ElementaryGate::cx(p, p + 1));
    lib.push_back(ElementaryGate::cx(p + 1, p));
    lib.push_back(ElementaryGate::cv(p, p + 1));
    lib.push_back(ElementaryGate::cv(p + 1, p));
    lib.push_back(ElementaryGate::cvd(p, p + 1));
    lib.push_back(ElementaryGate::cvd(p + 1, p));
  }
  return lib;
}

namespace {

// The search state packs the four-valued simulation of all Boolean inputs:
// row r (one per input assignment) lives in byte r of a 128-bit word, line l
// in bits 2l..2l+1 of that byte, encoded Zero=0, V0=1, One=2, V1=3 so that V
// is +1 mod 4, V+ is -1 and X is +2.
using State = unsigned __int128;

struct PackedGate {
  enum class Type : std::uint8_t { X, CX, CV, CVD } type;
  unsigned control_shift = 0;  // 2c
  unsigned target_shift = 0;   // 2t
  State xor_mask = 0;          // X only
};

struct Engine {
  unsigned n = 0;
  std::uint32_t rows = 0;
  State row_lsb = 0;  // bit 0 of every active row byte
  std::vector<ElementaryGate> lib;
  std::vector<PackedGate> ops;
  std::vector<PackedGate> inverse_ops;
  std::vector<std::size_t> inverse_index;

  explicit Engine(unsigned width) : n(width), rows(1u << width) {
    for (std::uint32_t r = 0; r < rows; ++r) {
      row_lsb |= static_cast<State>(1) << (8 * r);
    }
    lib = adjacent_gate_library(n);
    for (const auto& g : lib) ops.push_back(pack(g));
    for (std::size_t i = 0; i < lib.size(); ++i) {
      ElementaryGate inv = lib[i];
      if (inv.kind == ElemKind::CV) {
        inv.kind = ElemKind::CVD;
      } else if (inv.kind == ElemKind::CVD) {
        inv.kind = ElemKind::CV;
      }
      inverse_ops.push_back(pack(inv));
      inverse_index.push_back(
          std::find(lib.begin(), lib.end(), inv) - lib.begin());
    }
  }

  PackedGate pack(const ElementaryGate& g) const {
    PackedGate p;
    p.control_shift = 2u * g.control;
    p.target_shift = 2u * g.target;
    switch (g.kind) {
      case ElemKind::X:
        p.type = PackedGate::Type::X;
        p.xor_mask = row_lsb << (p.target_shift + 1);
        break;
      case ElemKind::CX: p.type = PackedGate::Type::CX; break;
      case ElemKind::CV: p.type = PackedGate::Type::CV; break;
      case ElemKind::CVD: p.type = PackedGate::Type::CVD; break;
    }
    return p;
  }

  /// Applies a gate; false when the control holds V0/V1 in some row.
  bool apply(const PackedGate& g, State& s) const {
    if (g.type == PackedGate::Type::X) {
      s ^= g.xor_mask;
      return true;
    }
    if ((s >> g.control_shift) & row_lsb) return false;
    const State ctrl = (s >> (g.control_shift + 1)) & row_lsb;
    switch (g.type) {
      case PackedGate::Type::CX:
        s ^= ctrl << (g.target_shift + 1);
        break;
      case PackedGate::Type::CV: {
        const State low = (s >> g.target_shift) & row_lsb;
        s ^= (ctrl << g.target_shift) ^ ((ctrl & low) << (g.target_shift + 1));
        break;
      }
      case PackedGate::Type::CVD: {
        const State low = (s >> g.target_shift) & row_lsb;
        s ^= (ctrl << g.target_shift) ^
             ((ctrl & (low ^ row_lsb)) << (g.target_shift + 1));
        break;
      }
      case PackedGate::Type::X: break;
    }
    return true;
  }

  State identity_state() const {
    State s = 0;
    for (std::uint32_t r = 0; r < rows; ++r) {
      State byte = 0;
      for (unsigned l = 0; l < n; ++l) {
        const unsigned bit = (r >> (n - 1 - l)) & 1u;
        byte |= static_cast<State>(bit ? 2 : 0) << (2 * l);
      }
      s |= byte << (8 * r);
    }
    return s;
  }

  State target_state(const Permutation& perm) const {
    State s = 0;
    for (std::uint32_t r = 0; r < rows; ++r) {
      State byte = 0;
      for (unsigned l = 0; l < n; ++l) {
        const unsigned bit = (perm[r] >> (n - 1 - l)) & 1u;
        byte |= static_cast<State>(bit ? 2 : 0) << (2 * l);
      }
      s |= byte << (8 * r);
    }
    return s;
  }

  /// Gates commute (and stay valid under exchange) when neither targets the
  /// other's control line.
  bool commute_safe(std::size_t a, std::size_t b) const {
    const auto& ga = lib[a];
    const auto& gb = lib[b];
    if (ga.two_qubit() && gb.target == ga.control) return false;
    if (gb.two_qubit() && ga.target == gb.control) return false;
    return true;
  }
};

using Level = std::vector<State>;

bool level_contains(const Level& level, State s) {
  return std::binary_search(level.begin(), level.end(), s);
}

/// Expands `levels.back()` one step, dropping states already seen at any
/// earlier depth; levels stay sorted and globally deduplicated. The
/// candidate buffer is compacted periodically to bound the working set.
void grow_level(const Engine& eng, const std::vector<PackedGate>& ops,
                std::vector<Level>& levels) {
  constexpr std::size_t kCompactionThreshold = std::size_t{1} << 24;
  Level next;
  std::size_t sorted_prefix = 0;
  auto compact = [&] {
    std::sort(next.begin() + sorted_prefix, next.end());
    std::inplace_merge(next.begin(), next.begin() + sorted_prefix, next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sorted_prefix = next.size();
  };
  for (State s : levels.back()) {
    for (const auto& op : ops) {
      State t = s;
      if (eng.apply(op, t)) next.push_back(t);
    }
    if (next.size() - sorted_prefix > kCompactionThreshold) compact();
  }
  compact();
  Level fresh;
  fresh.reserve(next.size());
  for (State s : next) {
    bool seen = false;
    for (const auto& level : levels) {
      if (level_contains(level, s)) {
        seen = true;
        break;
      }
    }
    if (!seen) fresh.push_back(s);
  }
  levels.push_back(std::move(fresh));
}

/// Lexicographically smallest path of exact length `depth` from `from` to
/// `to`, walking `ops` and pruning against the per-depth state sets (every
/// prefix of a shortest path sits in the level of its own length).
bool oracle_path(const Engine& eng, const std::vector<PackedGate>& ops,
                 const std::vector<Level>& levels_from, State from, State to,
                 unsigned depth, std::vector<std::size_t>& path) {
  if (depth == 0) return from == to;
  for (std::size_t g = 0; g < ops.size(); ++g) {
    State s = from;
    if (!eng.apply(ops[g], s)) continue;
    // Moving away from `from`, the state after j gates must be at forward
    // distance exactly j.
    const std::size_t j = path.size() + 1;
    if (j < levels_from.size() && !level_contains(levels_from[j], s) &&
        depth > 1) {
      continue;
    }
    path.push_back(g);
    if (oracle_path(eng, ops, levels_from, s, to, depth - 1, path)) return true;
    path.pop_back();
  }
  return false;
}

/// Lexicographically smallest forward suffix of length `depth` leading from
/// `from` to the target, guided by the backward levels.
bool oracle_suffix(const Engine& eng, const std::vector<Level>& blevels,
                   State from, unsigned depth, std::vector<std::size_t>& path) {
  if (depth == 0) return from == blevels[0][0];
  for (std::size_t g = 0; g < eng.ops.size(); ++g) {
    State s = from;
    if (!eng.apply(eng.ops[g], s)) continue;
    if (!level_contains(blevels[depth - 1], s)) continue;
    path.push_back(g);
    if (oracle_suffix(eng, blevels, s, depth - 1, path)) return true;
    path.pop_back();
  }
  return false;
}

struct DfsHit {
  std::vector<std::size_t> prefix;
  State state = 0;
};

/// Depth-first enumeration of forward sequences in lexicographic order; the
/// first sequence whose end state appears in `goal` wins. Immediate inverse
/// pairs and descending commuting pairs are skipped (the lexicographically
/// smallest minimal sequence contains neither).
bool dfs_forward(const Engine& eng, State s, unsigned remaining,
                 std::size_t prev, const Level& goal,
                 std::vector<std::size_t>& path, DfsHit& hit) {
  if (remaining == 0) {
    if (!level_contains(goal, s)) return false;
    hit.prefix = path;
    hit.state = s;
    return true;
  }
  for (std::size_t g = 0; g < eng.ops.size(); ++g) {
    if (prev != SIZE_MAX) {
      if (eng.inverse_index[g] == prev) continue;
      if (g < prev && eng.commute_safe(prev, g)) continue;
    }
    State t = s;
    if (!eng.apply(eng.ops[g], t)) continue;
    path.push_back(g);
    if (dfs_forward(eng, t, remaining - 1, g, goal, path, hit)) return true;
    path.pop_back();
  }
  return false;
}

Circuit circuit_from_indices(const Engine& eng,
                             const std::vector<std::size_t>& indices) {
  Circuit c(eng.n, Layer::Elementary);
  for (std::size_t g : indices) c.add(eng.lib[g]);
  return c;
}

// Forward levels beyond this point switch to streaming DFS instead of being
// materialized (keeps the 4-line searches within a few GB).
constexpr std::size_t kMaxStoredLevelStates = 80'000'000;

}  // namespace

std::optional<Circuit> synthesize_minimal(const SynthesisTarget& target,
                                          unsigned max_cost) {
  if (target.width == 0 || target.width > 4) {
    throw Error("exact synthesis supports 1 to 4 lines");
  }
  const std::uint32_t rows = 1u << target.width;
  if (target.permutation.size() != rows) {
    throw Error("permutation size does not match width");
  }
  {
    std::vector<bool> seen(rows, false);
    for (auto v : target.permutation) {
      if (v >= rows || seen[v]) throw NotABijection("target is not a bijection");
      seen[v] = true;
    }
  }

  const Engine eng(target.width);
  const State initial = eng.identity_state();
  const State goal = eng.target_state(target.permutation);
  if (initial == goal) return circuit_from_indices(eng, {});

  std::vector<Level> flevels{{initial}};
  std::vector<Level> blevels{{goal}};
  std::size_t fstored = 1;
  std::size_t bstored = 1;

  auto grow_forward = [&] {
    grow_level(eng, eng.ops, flevels);
    fstored += flevels.back().size();
  };
  auto grow_backward = [&] {
    grow_level(eng, eng.inverse_ops, blevels);
    bstored += blevels.back().size();
  };

  for (unsigned cost = 1; cost <= max_cost; ++cost) {
    unsigned d_b = cost / 2;
    while (blevels.size() <= d_b && bstored < kMaxStoredLevelStates) {
      grow_backward();
    }
    d_b = std::min<unsigned>(d_b, static_cast<unsigned>(blevels.size()) - 1);
    const unsigned d_f = cost - d_b;

    const bool forward_stored_ok =
        flevels.size() > d_f ||
        (fstored < kMaxStoredLevelStates && d_f <= d_b + 1);
    if (forward_stored_ok) {
      while (flevels.size() <= d_f) grow_forward();
      // sorted intersection of the two frontiers
      std::vector<State> matches;
      std::set_intersection(flevels[d_f].begin(), flevels[d_f].end(),
                            blevels[d_b].begin(), blevels[d_b].end(),
                            std::back_inserter(matches));
      if (!matches.empty()) {
        std::optional<std::vector<std::size_t>> best;
        for (State s : matches) {
          std::vector<std::size_t> prefix;
          if (!oracle_path(eng, eng.ops, flevels, initial, s, d_f, prefix)) {
            throw Error("internal: lost forward path during reconstruction");
          }
          std::vector<std::size_t> suffix;
          if (!oracle_suffix(eng, blevels, s, d_b, suffix)) {
            throw Error("internal: lost backward path during reconstruction");
          }
          prefix.insert(prefix.end(), suffix.begin(), suffix.end());
          if (!best || prefix < *best) best = std::move(prefix);
        }
        return circuit_from_indices(eng, *best);
      }
    } else {
      DfsHit hit;
      std::vector<std::size_t> path;
      if (dfs_forward(eng, initial, d_f, SIZE_MAX, blevels[d_b], path, hit)) {
        std::vector<std::size_t> full = hit.prefix;
        std::vector<std::size_t> suffix;
        if (!oracle_suffix(eng, blevels, hit.state, d_b, suffix)) {
          throw Error("internal: lost backward path during reconstruction");
        }
        full.insert(full.end(), suffix.begin(), suffix.end());
        return circuit_from_indices(eng, full);
      }
    }
  }
  return std::nullopt;
}

namespace {

bool iddfs(const Engine& eng, State s, State goal, unsigned remaining,
           std::vector<std::size_t>& path) {
  if (remaining == 0) return s == goal;
  for (std::size_t g = 0; g < eng.ops.size(); ++g) {
    State t = s;
    if (!eng.apply(eng.ops[g], t)) continue;
    path.push_back(g);
    if (iddfs(eng, t, goal, remaining - 1, path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Circuit> synthesize_minimal_iddfs(const SynthesisTarget& target,
                                                unsigned max_cost) {
  if (target.width == 0 || target.width > 4) {
    throw Error("exact synthesis supports 1 to 4 lines");
  }
  const Engine eng(target.width);
  const State initial = eng.identity_state();
  const State goal = eng.target_state(target.permutation);
  for (unsigned cost = 0; cost <= max_cost; ++cost) {
    std::vector<std::size_t> path;
    if (iddfs(eng, initial, goal, cost, path)) {
      return circuit_from_indices(eng, path);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Macro generation
// ---------------------------------------------------------------------------

std::int64_t pattern_gate_naive_cost(const ReversibleGate& gate, LineId width) {
  std::vector<ReversibleGate> expanded;
  if (gate.kind == RevKind::Peres) {
    expanded.push_back(ReversibleGate::toffoli(
        {gate.controls[0], gate.targets[0]}, gate.targets[1]));
    expanded.push_back(
        ReversibleGate::toffoli({gate.controls[0]}, gate.targets[0]));
  } else {
    expanded.push_back(gate);
  }
  std::int64_t cost = 0;
  for (const auto& g : expanded) {
    for (const auto& eg : decompose_gate(g, width)) {
      cost += 1 + 6 * gate_nnc(eg);
    }
  }
  return cost;
}

MacroLibrary generate_macro_library(const std::vector<MacroPattern>& patterns,
                                    unsigned max_cost) {
  MacroLibrary lib;
  for (const auto& p : patterns) {
    Circuit cascade(p.width, Layer::Reversible);
    for (const auto& g : p.gates) cascade.add(g);
    SynthesisTarget target{p.width, extract_permutation(cascade)};
    auto realization = synthesize_minimal(target, max_cost);
    if (!realization) throw SynthesisNotFound(max_cost);
    Macro m;
    m.name = p.name;
    m.width = p.width;
    m.pattern = p.gates;
    m.cost = static_cast<std::int64_t>(realization->num_gates());
    m.realization = std::move(*realization);
    m.naive_cost = 0;
    for (const auto& g : p.gates) {
      m.naive_cost = std::max(m.naive_cost, pattern_gate_naive_cost(g, p.width));
    }
    if (!verify_macro(m)) {
      throw MacroVerificationFailed("generated macro '" + m.name +
                                    "' failed verification");
    }
    lib.entries.push_back(std::move(m));
  }
  return lib;
}

std::vector<MacroPattern> parse_macro_patterns(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw Error(std::string("pattern file is not valid JSON: ") + e.what());
  }
  std::vector<MacroPattern> out;
  for (const auto& entry : j.at("patterns")) {
    MacroPattern p;
    p.name = entry.at("name").get<std::string>();
    p.width = entry.at("width").get<unsigned>();
    p.gates = parse_pattern(entry.at("gates").get<std::vector<std::string>>(),
                            p.width);
    out.push_back(std::move(p));
  }
  return out;
}

std::string write_macro_patterns(const std::vector<MacroPattern>& patterns) {
  nlohmann::ordered_json j;
  j["patterns"] = nlohmann::ordered_json::array();
  for (const auto& p : patterns) {
    nlohmann::ordered_json e;
    e["name"] = p.name;
    e["width"] = p.width;
    e["gates"] = pattern_to_strings(p.gates);
    j["patterns"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace revlnn
