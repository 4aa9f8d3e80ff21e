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

#include "revlnn/macro_library.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "revlnn/metrics.hpp"
#include "revlnn/simulate.hpp"

namespace revlnn {

namespace {

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

LineId symbolic_line(const std::string& tok, unsigned width) {
  if (tok.size() != 1 || tok[0] < 'a' || tok[0] >= static_cast<char>('a' + width)) {
    throw Error("bad symbolic line '" + tok + "' for width " +
                std::to_string(width));
  }
  return static_cast<LineId>(tok[0] - 'a');
}

LineId index_line(const std::string& tok, unsigned width) {
  unsigned long v = 0;
  try {
    std::size_t pos = 0;
    v = std::stoul(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Error("bad line index '" + tok + "'");
  }
  if (v >= width) throw Error("line index " + tok + " out of range");
  return static_cast<LineId>(v);
}

std::string line_letter(LineId l) { return std::string(1, static_cast<char>('a' + l)); }

}  // namespace

std::vector<ReversibleGate> parse_pattern(const std::vector<std::string>& gates,
                                          unsigned width) {
  std::vector<ReversibleGate> pattern;
  for (const auto& s : gates) {
    const auto tokens = split(s);
    if (tokens.empty()) throw Error("empty pattern gate");
    const std::string& mn = tokens[0];
    std::vector<LineId> lines;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      lines.push_back(symbolic_line(tokens[i], width));
    }
    if (mn == "p") {
      if (lines.size() != 3) throw Error("p wants 3 lines");
      pattern.push_back(ReversibleGate::peres(lines[0], lines[1], lines[2]));
    } else if (mn.size() >= 2 && mn[0] == 't') {
      const std::size_t k = std::stoul(mn.substr(1));
      if (k != lines.size() || k < 1) throw Error("bad arity for " + mn);
      std::vector<LineId> controls(lines.begin(), lines.end() - 1);
      pattern.push_back(ReversibleGate::toffoli(std::move(controls), lines.back()));
    } else if (mn.size() >= 2 && mn[0] == 'f') {
      const std::size_t k = std::stoul(mn.substr(1));
      if (k != lines.size() || k < 2) throw Error("bad arity for " + mn);
      std::vector<LineId> controls(lines.begin(), lines.end() - 2);
      pattern.push_back(ReversibleGate::fredkin(std::move(controls),
                                                lines[lines.size() - 2],
                                                lines[lines.size() - 1]));
    } else {
      throw Error("unknown pattern gate " + mn);
    }
  }
  return pattern;
}

std::vector<std::string> pattern_to_strings(const std::vector<ReversibleGate>& pattern) {
  std::vector<std::string> out;
  for (const auto& g : pattern) {
    std::ostringstream s;
    switch (g.kind) {
      case RevKind::Toffoli:
        s << 't' << (g.controls.size() + 1);
        for (LineId c : g.controls) s << ' ' << line_letter(c);
        s << ' ' << line_letter(g.targets[0]);
        break;
      case RevKind::Fredkin:
        s << 'f' << (g.controls.size() + 2);
        for (LineId c : g.controls) s << ' ' << line_letter(c);
        s << ' ' << line_letter(g.targets[0]) << ' ' << line_letter(g.targets[1]);
        break;
      case RevKind::Peres:
        s << "p " << line_letter(g.controls[0]) << ' '
          << line_letter(g.targets[0]) << ' ' << line_letter(g.targets[1]);
        break;
    }
    out.push_back(s.str());
  }
  return out;
}

Circuit parse_realization(const std::vector<std::string>& gates, unsigned width) {
  Circuit c(width, Layer::Elementary);
  for (const auto& s : gates) {
    const auto tokens = split(s);
    if (tokens.empty()) throw Error("empty realization gate");
    const std::string& mn = tokens[0];
    std::vector<LineId> lines;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      lines.push_back(index_line(tokens[i], width));
    }
    if (mn == "t1" && lines.size() == 1) {
      c.add(ElementaryGate::x(lines[0]));
    } else if (mn == "t2" && lines.size() == 2) {
      c.add(ElementaryGate::cx(lines[0], lines[1]));
    } else if (mn == "v" && lines.size() == 2) {
      c.add(ElementaryGate::cv(lines[0], lines[1]));
    } else if (mn == "v+" && lines.size() == 2) {
      c.add(ElementaryGate::cvd(lines[0], lines[1]));
    } else {
      throw Error("unknown realization gate '" + s + "'");
    }
  }
  return c;
}

std::vector<std::string> realization_to_strings(const Circuit& realization) {
  std::vector<std::string> out;
  for (const auto& g : realization.elementary_gates()) {
    std::ostringstream s;
    switch (g.kind) {
      case ElemKind::X: s << "t1 " << g.target; break;
      case ElemKind::CX: s << "t2 " << g.control << ' ' << g.target; break;
      case ElemKind::CV: s << "v " << g.control << ' ' << g.target; break;
      case ElemKind::CVD: s << "v+ " << g.control << ' ' << g.target; break;
    }
    out.push_back(s.str());
  }
  return out;
}

bool verify_macro(const Macro& macro) {
  if (macro.width == 0 || macro.width > 8) return false;
  if (macro.realization.width() != macro.width) return false;
  if (macro.cost != static_cast<std::int64_t>(macro.realization.num_gates())) {
    return false;
  }
  if (nnc(macro.realization) != 0) return false;
  Circuit cascade(macro.width, Layer::Reversible);
  for (const auto& g : macro.pattern) {
    if (g.max_line() >= macro.width) return false;
    cascade.add(g);
  }
  try {
    return extract_permutation(cascade) == extract_permutation(macro.realization);
  } catch (const NotBooleanReversible&) {
    return false;
  }
}

MacroLibrary parse_macro_library(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw Error(std::string("macro library is not valid JSON: ") + e.what());
  }
  MacroLibrary lib;
  for (const auto& entry : j.at("macros")) {
    Macro m;
    m.name = entry.at("name").get<std::string>();
    m.width = entry.at("width").get<unsigned>();
    m.pattern = parse_pattern(entry.at("pattern").get<std::vector<std::string>>(),
                              m.width);
    m.realization = parse_realization(
        entry.at("realization").get<std::vector<std::string>>(), m.width);
    m.cost = entry.at("cost").get<std::int64_t>();
    m.naive_cost = entry.at("naive_cost").get<std::int64_t>();
    if (!verify_macro(m)) {
      throw MacroVerificationFailed("macro '" + m.name +
                                    "' failed its verification check");
    }
    lib.entries.push_back(std::move(m));
  }
  return lib;
}

std::string write_macro_library(const MacroLibrary& library) {
  nlohmann::ordered_json j;
  j["macros"] = nlohmann::ordered_json::array();
  for (const auto& m : library.entries) {
    nlohmann::ordered_json e;
    e["name"] = m.name;
    e["width"] = m.width;
    e["pattern"] = pattern_to_strings(m.pattern);
    e["realization"] = realization_to_strings(m.realization);
    e["cost"] = m.cost;
    e["naive_cost"] = m.naive_cost;
    j["macros"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

MacroLibrary load_macro_library_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_macro_library(buf.str());
}

void write_macro_library_file(const MacroLibrary& library,
                              const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << write_macro_library(library);
}

}  // namespace revlnn
