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

#include "revlnn/real_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace revlnn {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

struct GateLine {
  std::size_t lineno;
  std::vector<std::string> tokens;
};

enum class Family { Common, ReversibleOnly, ElementaryOnly };

Family mnemonic_family(const std::string& mn) {
  if (mn == "v" || mn == "v+") return Family::ElementaryOnly;
  if (mn == "t1" || mn == "t2") return Family::Common;
  return Family::ReversibleOnly;  // t3+, f*, p (validated later)
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Circuit run() {
    read_header_and_body();
    validate_header();
    const Layer layer = decide_layer();
    Circuit circuit(static_cast<LineId>(numvars_), layer);
    apply_line_metadata(circuit);
    for (const auto& g : gates_) add_gate(circuit, g, layer);
    apply_output_permutation(circuit);
    return circuit;
  }

 private:
  void read_header_and_body() {
    std::istringstream in(text_);
    std::string raw;
    std::size_t lineno = 0;
    bool in_body = false;
    bool saw_end = false;
    while (std::getline(in, raw)) {
      ++lineno;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (is_comment_or_blank(raw)) continue;
      auto tokens = tokenize(raw);
      if (saw_end) {
        throw SyntaxError(lineno, "content after .end");
      }
      if (tokens[0] == ".begin") {
        if (in_body) throw SyntaxError(lineno, "nested .begin");
        in_body = true;
        saw_begin_ = true;
        continue;
      }
      if (tokens[0] == ".end") {
        if (!in_body) throw SyntaxError(lineno, ".end without .begin");
        in_body = false;
        saw_end = true;
        continue;
      }
      if (in_body) {
        gates_.push_back({lineno, std::move(tokens)});
      } else {
        directive(lineno, tokens);
      }
    }
    if (saw_begin_ && !saw_end) {
      throw SyntaxError(lineno, "missing .end");
    }
    if (!saw_begin_) {
      throw SyntaxError(lineno, "missing .begin");
    }
  }

  void directive(std::size_t lineno, const std::vector<std::string>& tokens) {
    const std::string& key = tokens[0];
    if (key == ".version") {
      return;  // accepted, not part of the circuit model
    }
    if (key == ".numvars") {
      if (tokens.size() != 2) throw SyntaxError(lineno, ".numvars wants one value");
      try {
        numvars_ = std::stoul(tokens[1]);
      } catch (const std::exception&) {
        throw SyntaxError(lineno, "invalid .numvars value");
      }
      if (numvars_ == 0) throw SyntaxError(lineno, ".numvars must be positive");
      numvars_line_ = lineno;
      return;
    }
    if (key == ".variables" || key == ".inputs" || key == ".outputs") {
      std::vector<std::string> names(tokens.begin() + 1, tokens.end());
      if (key == ".variables") {
        variables_ = std::move(names);
        variables_line_ = lineno;
      } else if (key == ".inputs") {
        inputs_ = std::move(names);
        inputs_line_ = lineno;
      } else {
        outputs_ = std::move(names);
        outputs_line_ = lineno;
      }
      return;
    }
    if (key == ".constants") {
      if (tokens.size() != 2) throw SyntaxError(lineno, ".constants wants one string");
      constants_ = tokens[1];
      constants_line_ = lineno;
      return;
    }
    if (key == ".garbage") {
      if (tokens.size() != 2) throw SyntaxError(lineno, ".garbage wants one string");
      garbage_ = tokens[1];
      garbage_line_ = lineno;
      return;
    }
    throw SyntaxError(lineno, "unsupported directive " + key);
  }

  void validate_header() {
    if (numvars_ == 0) throw SyntaxError(1, "missing .numvars");
    if (variables_.empty()) throw SyntaxError(1, "missing .variables");
    if (variables_.size() != numvars_) {
      throw SyntaxError(variables_line_, ".variables length does not match .numvars");
    }
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      for (std::size_t j = i + 1; j < variables_.size(); ++j) {
        if (variables_[i] == variables_[j]) {
          throw SyntaxError(variables_line_, "duplicate variable name " + variables_[i]);
        }
      }
      var_index_[variables_[i]] = static_cast<LineId>(i);
    }
    if (!inputs_.empty() && inputs_.size() != numvars_) {
      throw SyntaxError(inputs_line_, ".inputs length does not match .numvars");
    }
    if (!outputs_.empty() && outputs_.size() != numvars_) {
      throw SyntaxError(outputs_line_, ".outputs length does not match .numvars");
    }
    if (!constants_.empty()) {
      if (constants_.size() != numvars_) {
        throw SyntaxError(constants_line_, ".constants length does not match .numvars");
      }
      for (char c : constants_) {
        if (c != '0' && c != '1' && c != '-') {
          throw SyntaxError(constants_line_, ".constants must be over {0,1,-}");
        }
      }
    }
    if (!garbage_.empty()) {
      if (garbage_.size() != numvars_) {
        throw SyntaxError(garbage_line_, ".garbage length does not match .numvars");
      }
      for (char c : garbage_) {
        if (c != '1' && c != '-') {
          throw SyntaxError(garbage_line_, ".garbage must be over {1,-}");
        }
      }
    }
  }

  Layer decide_layer() const {
    bool has_elem = false;
    bool has_rev = false;
    std::size_t first_elem_line = 0;
    std::size_t first_rev_line = 0;
    for (const auto& g : gates_) {
      switch (mnemonic_family(g.tokens[0])) {
        case Family::ElementaryOnly:
          if (!has_elem) first_elem_line = g.lineno;
          has_elem = true;
          break;
        case Family::ReversibleOnly:
          if (!has_rev) first_rev_line = g.lineno;
          has_rev = true;
          break;
        case Family::Common:
          break;
      }
    }
    if (has_elem && has_rev) {
      throw MixedLayers(std::max(first_elem_line, first_rev_line),
                        "file mixes elementary and reversible gate mnemonics");
    }
    return has_elem ? Layer::Elementary : Layer::Reversible;
  }

  void apply_line_metadata(Circuit& circuit) const {
    for (LineId i = 0; i < circuit.width(); ++i) {
      Line line;
      line.name = variables_[i];
      if (!constants_.empty() && constants_[i] != '-') {
        line.constant = constants_[i] == '1';
      }
      if (!garbage_.empty() && garbage_[i] == '1') {
        line.garbage = true;
      }
      circuit.set_line(i, line);
    }
  }

  LineId resolve(std::size_t lineno, const std::string& name) const {
    auto it = var_index_.find(name);
    if (it == var_index_.end()) {
      throw SyntaxError(lineno, "unknown variable " + name);
    }
    return it->second;
  }

  void add_gate(Circuit& circuit, const GateLine& g, Layer layer) const {
    const std::string& mn = g.tokens[0];
    const std::size_t arity = g.tokens.size() - 1;
    std::vector<LineId> lines;
    lines.reserve(arity);
    for (std::size_t i = 1; i < g.tokens.size(); ++i) {
      lines.push_back(resolve(g.lineno, g.tokens[i]));
    }
    try {
      if (mn == "v" || mn == "v+") {
        if (arity != 2) throw ArityMismatch(g.lineno, mn + " wants 2 lines");
        circuit.add(mn == "v" ? ElementaryGate::cv(lines[0], lines[1])
                              : ElementaryGate::cvd(lines[0], lines[1]));
        return;
      }
      if (mn == "p") {
        if (arity != 3) throw ArityMismatch(g.lineno, "p wants 3 lines");
        circuit.add(ReversibleGate::peres(lines[0], lines[1], lines[2]));
        return;
      }
      if (mn.size() >= 2 && (mn[0] == 't' || mn[0] == 'f')) {
        unsigned long k = 0;
        try {
          std::size_t pos = 0;
          k = std::stoul(mn.substr(1), &pos);
          if (pos != mn.size() - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw UnknownGate(g.lineno, "unknown gate " + mn);
        }
        if (k != arity) {
          throw ArityMismatch(g.lineno, mn + " wants " + std::to_string(k) +
                                            " lines, got " + std::to_string(arity));
        }
        if (mn[0] == 't') {
          if (k < 1) throw UnknownGate(g.lineno, "unknown gate " + mn);
          std::vector<LineId> controls(lines.begin(), lines.end() - 1);
          if (layer == Layer::Elementary) {
            // t1/t2 only; decide_layer() guarantees no larger t here.
            if (k == 1) {
              circuit.add(ElementaryGate::x(lines[0]));
            } else {
              circuit.add(ElementaryGate::cx(lines[0], lines[1]));
            }
          } else {
            circuit.add(ReversibleGate::toffoli(std::move(controls), lines.back()));
          }
        } else {
          if (k < 2) throw UnknownGate(g.lineno, "unknown gate " + mn);
          std::vector<LineId> controls(lines.begin(), lines.end() - 2);
          circuit.add(ReversibleGate::fredkin(std::move(controls),
                                              lines[lines.size() - 2],
                                              lines[lines.size() - 1]));
        }
        return;
      }
      throw UnknownGate(g.lineno, "unknown gate " + mn);
    } catch (const InvalidGate& e) {
      throw SyntaxError(g.lineno, e.what());
    }
  }

  void apply_output_permutation(Circuit& circuit) const {
    if (outputs_.empty()) return;
    // Interpret .outputs as a recorded output permutation only when it is a
    // reordering of the variable names.
    std::vector<LineId> perm(numvars_);
    std::vector<bool> used(numvars_, false);
    for (std::size_t w = 0; w < outputs_.size(); ++w) {
      auto it = var_index_.find(outputs_[w]);
      if (it == var_index_.end() || used[it->second]) return;
      used[it->second] = true;
      perm[it->second] = static_cast<LineId>(w);  // line -> wire carrying it
    }
    circuit.set_output_permutation(std::move(perm));
  }

  const std::string& text_;
  std::size_t numvars_ = 0;
  std::size_t numvars_line_ = 0;
  std::vector<std::string> variables_, inputs_, outputs_;
  std::size_t variables_line_ = 0, inputs_line_ = 0, outputs_line_ = 0;
  std::string constants_, garbage_;
  std::size_t constants_line_ = 0, garbage_line_ = 0;
  std::map<std::string, LineId> var_index_;
  std::vector<GateLine> gates_;
  bool saw_begin_ = false;
};

}  // namespace

Circuit parse_real(const std::string& text) { return Parser(text).run(); }

std::string write_real(const Circuit& circuit) {
  std::ostringstream out;
  const LineId n = circuit.width();
  out << ".version 1.0\n";
  out << ".numvars " << n << "\n";
  out << ".variables";
  for (LineId i = 0; i < n; ++i) out << ' ' << circuit.line(i).name;
  out << "\n";
  if (circuit.output_permutation()) {
    const auto& perm = *circuit.output_permutation();
    std::vector<std::string> outputs(n);
    for (LineId l = 0; l < n; ++l) outputs[perm[l]] = circuit.line(l).name;
    out << ".outputs";
    for (const auto& name : outputs) out << ' ' << name;
    out << "\n";
  }
  if (circuit.num_constant_inputs() > 0) {
    out << ".constants ";
    for (LineId i = 0; i < n; ++i) {
      const auto& c = circuit.line(i).constant;
      out << (c ? (*c ? '1' : '0') : '-');
    }
    out << "\n";
  }
  if (circuit.num_garbage_outputs() > 0) {
    out << ".garbage ";
    for (LineId i = 0; i < n; ++i) out << (circuit.line(i).garbage ? '1' : '-');
    out << "\n";
  }
  out << ".begin\n";
  if (circuit.layer() == Layer::Reversible) {
    for (const auto& g : circuit.reversible_gates()) {
      switch (g.kind) {
        case RevKind::Toffoli:
          out << 't' << (g.controls.size() + 1);
          for (LineId c : g.controls) out << ' ' << circuit.line(c).name;
          out << ' ' << circuit.line(g.targets[0]).name;
          break;
        case RevKind::Fredkin:
          out << 'f' << (g.controls.size() + 2);
          for (LineId c : g.controls) out << ' ' << circuit.line(c).name;
          out << ' ' << circuit.line(g.targets[0]).name << ' '
              << circuit.line(g.targets[1]).name;
          break;
        case RevKind::Peres:
          out << "p " << circuit.line(g.controls[0]).name << ' '
              << circuit.line(g.targets[0]).name << ' '
              << circuit.line(g.targets[1]).name;
          break;
      }
      out << "\n";
    }
  } else {
    for (const auto& g : circuit.elementary_gates()) {
      switch (g.kind) {
        case ElemKind::X:
          out << "t1 " << circuit.line(g.target).name;
          break;
        case ElemKind::CX:
          out << "t2 " << circuit.line(g.control).name << ' '
              << circuit.line(g.target).name;
          break;
        case ElemKind::CV:
          out << "v " << circuit.line(g.control).name << ' '
              << circuit.line(g.target).name;
          break;
        case ElemKind::CVD:
          out << "v+ " << circuit.line(g.control).name << ' '
              << circuit.line(g.target).name;
          break;
      }
      out << "\n";
    }
  }
  out << ".end\n";
  return out.str();
}

Circuit read_real_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_real(buf.str());
}

void write_real_file(const Circuit& circuit, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << write_real(circuit);
}

}  // namespace revlnn
