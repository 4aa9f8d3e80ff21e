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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "revlnn/decompose.hpp"
#include "revlnn/errors.hpp"
#include "revlnn/exact_synth.hpp"
#include "revlnn/macro_library.hpp"
#include "revlnn/metrics.hpp"
#include "revlnn/passes.hpp"
#include "revlnn/real_io.hpp"
#include "revlnn/simulate.hpp"

namespace {

// Exit codes: 0 ok, 1 not equivalent, 2 parse error, 3 decomposition error,
// 4 synthesis budget exhausted, 5 non-Boolean circuit.
constexpr int kExitOk = 0;
constexpr int kExitNotEquivalent = 1;
constexpr int kExitParse = 2;
constexpr int kExitDecompose = 3;
constexpr int kExitBudget = 4;
constexpr int kExitNotBoolean = 5;

std::string two_decimals(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

/// 100 * (1 - exact/naive), rounded half-up to a whole percent.
long improvement_percent(std::int64_t naive, std::int64_t exact) {
  if (naive <= 0) return 0;
  const long long num = 100 * (naive - exact);
  return static_cast<long>((2 * num + naive) / (2 * naive));
}

revlnn::Circuit load_or_exit(const std::string& path) {
  try {
    return revlnn::read_real_file(path);
  } catch (const revlnn::ParseError& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    std::exit(kExitParse);
  } catch (const revlnn::Error& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    std::exit(kExitParse);
  }
}

std::string permutation_to_string(const std::vector<revlnn::LineId>& perm) {
  std::ostringstream out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out << ' ';
    out << perm[i];
  }
  return out.str();
}

int cmd_metrics(const std::vector<std::string>& files, const std::string& format) {
  std::vector<revlnn::MetricsReport> reports;
  for (const auto& path : files) {
    revlnn::Circuit circuit = load_or_exit(path);
    try {
      reports.push_back(revlnn::full_report(circuit, path));
    } catch (const revlnn::InsufficientFreeLines& e) {
      std::cerr << "error: " << path << ": " << e.what() << "\n";
      return kExitDecompose;
    }
  }
  if (format == "csv") {
    std::cout << revlnn::report_csv_header() << "\n";
    for (const auto& r : reports) std::cout << revlnn::report_to_csv_row(r) << "\n";
  } else if (format == "json") {
    std::cout << revlnn::reports_to_json(reports) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << r.name << ": n=" << r.n << " n_c=" << r.n_c << " n_g=" << r.n_g
                << " gc=" << r.gc << " qc=" << r.qc << " nnc=" << r.nnc
                << " depth=" << r.depth << " dis_avg=" << r.dis_avg_string()
                << " dis_min=" << r.dis_min << " dis_max=" << r.dis_max;
      if (r.trc) std::cout << " trc=" << *r.trc;
      if (r.decomposed_for_quantum_metrics) {
        std::cout << "  (nnc/depth/dis measured on the standard decomposition)";
      }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_decompose(const std::string& file, const std::string& out_path) {
  revlnn::Circuit circuit = load_or_exit(file);
  if (circuit.layer() != revlnn::Layer::Reversible) {
    std::cerr << "error: " << file << ": already an elementary circuit\n";
    return kExitParse;
  }
  try {
    const revlnn::Circuit decomposed = revlnn::decompose_circuit(circuit);
    std::cout << "table qc:    " << revlnn::quantum_cost(circuit) << "\n";
    std::cout << "realized qc: " << decomposed.num_gates() << "\n";
    std::cout << "nnc:         " << revlnn::nnc(decomposed) << "\n";
    if (!out_path.empty()) revlnn::write_real_file(decomposed, out_path);
    return kExitOk;
  } catch (const revlnn::InsufficientFreeLines& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDecompose;
  }
}

int cmd_optimize(const std::string& file, const std::string& strategy_name,
                 const std::string& macros_path, bool restore_order,
                 const std::string& out_path) {
  revlnn::Circuit circuit = load_or_exit(file);
  if (circuit.layer() != revlnn::Layer::Reversible) {
    std::cerr << "error: " << file << ": optimize expects a reversible circuit\n";
    return kExitParse;
  }
  revlnn::MacroLibrary library;
  if (!macros_path.empty()) {
    try {
      library = revlnn::load_macro_library_file(macros_path);
    } catch (const revlnn::Error& e) {
      std::cerr << "error: " << macros_path << ": " << e.what() << "\n";
      return kExitParse;
    }
  }
  try {
    const std::int64_t table_qc = revlnn::quantum_cost(circuit);
    const revlnn::Circuit decomposed = revlnn::decompose_circuit(circuit);
    const std::int64_t realized_qc =
        static_cast<std::int64_t>(decomposed.num_gates());
    const std::int64_t nnc_before = revlnn::nnc(decomposed);

    revlnn::PassResult result;
    std::string chosen = strategy_name;
    if (strategy_name == "best") {
      auto [r, s] = revlnn::best_of(circuit, library);
      result = std::move(r);
      chosen = revlnn::to_string(s);
    } else {
      revlnn::Strategy s;
      if (strategy_name == "naive") s = revlnn::Strategy::Naive;
      else if (strategy_name == "macro") s = revlnn::Strategy::Macro;
      else if (strategy_name == "global") s = revlnn::Strategy::Global;
      else if (strategy_name == "local") s = revlnn::Strategy::Local;
      else if (strategy_name == "global-local") s = revlnn::Strategy::GlobalLocal;
      else {
        std::cerr << "error: unknown strategy " << strategy_name << "\n";
        return kExitParse;
      }
      result = revlnn::run_strategy(circuit, s, library, restore_order);
      if (restore_order && (s == revlnn::Strategy::Local ||
                            s == revlnn::Strategy::GlobalLocal)) {
        const revlnn::PassResult permuted =
            revlnn::run_strategy(circuit, s, library, false);
        std::cout << "restore cost:    " << (result.qc - permuted.qc) << "\n";
      }
    }

    std::cout << "strategy:        " << chosen << "\n";
    std::cout << "original qc:     " << table_qc << " (table), " << realized_qc
              << " (realized)\n";
    std::cout << "original nnc:    " << nnc_before
              << " (standard decomposition)\n";
    std::cout << "result qc:       " << result.qc << "\n";
    std::cout << "result nnc:      " << revlnn::nnc(result.circuit) << "\n";
    std::cout << "overhead:        "
              << two_decimals(static_cast<double>(result.qc) /
                              static_cast<double>(table_qc))
              << "\n";
    if (result.input_relabeling) {
      std::cout << "input relabeling: "
                << permutation_to_string(*result.input_relabeling) << "\n";
    }
    if (result.output_permutation) {
      std::cout << "output permutation: "
                << permutation_to_string(*result.output_permutation) << "\n";
    }
    if (!out_path.empty()) revlnn::write_real_file(result.circuit, out_path);
    return kExitOk;
  } catch (const revlnn::InsufficientFreeLines& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDecompose;
  }
}

int cmd_macro_gen(const std::string& patterns_path, const std::string& out_path,
                  unsigned max_cost) {
  std::vector<revlnn::MacroPattern> patterns;
  try {
    std::ifstream in(patterns_path);
    if (!in) {
      std::cerr << "error: cannot open " << patterns_path << "\n";
      return kExitParse;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    patterns = revlnn::parse_macro_patterns(buf.str());
  } catch (const revlnn::Error& e) {
    std::cerr << "error: " << patterns_path << ": " << e.what() << "\n";
    return kExitParse;
  }
  try {
    const revlnn::MacroLibrary library =
        revlnn::generate_macro_library(patterns, max_cost);
    std::printf("%-28s %5s %6s %6s %6s\n", "name", "n", "naive", "exact", "impr");
    for (const auto& m : library.entries) {
      std::printf("%-28s %5u %6lld %6lld %5ld%%\n", m.name.c_str(), m.width,
                  static_cast<long long>(m.naive_cost),
                  static_cast<long long>(m.cost),
                  improvement_percent(m.naive_cost, m.cost));
    }
    if (!out_path.empty()) revlnn::write_macro_library_file(library, out_path);
    return kExitOk;
  } catch (const revlnn::SynthesisNotFound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  }
}

int cmd_verify(const std::string& file_a, const std::string& file_b,
               bool modulo_permutation) {
  const revlnn::Circuit a = load_or_exit(file_a);
  revlnn::Circuit b = load_or_exit(file_b);
  if (a.width() != b.width()) {
    std::cerr << "error: width mismatch (" << a.width() << " vs " << b.width()
              << ")\n";
    return kExitParse;
  }
  try {
    if (modulo_permutation) {
      // Align lines by name when the optimizer reordered them.
      bool same_names = true;
      std::vector<revlnn::LineId> align(b.width());
      for (revlnn::LineId i = 0; i < b.width(); ++i) {
        bool found = false;
        for (revlnn::LineId j = 0; j < a.width(); ++j) {
          if (a.line(j).name == b.line(i).name) {
            align[i] = j;
            found = true;
            break;
          }
        }
        if (!found) {
          same_names = false;
          break;
        }
      }
      if (same_names) {
        try {
          b = revlnn::apply_line_relabeling(b, align);
        } catch (const revlnn::NotABijection&) {
          // duplicate names; keep positional comparison
        }
      }
    }
    const revlnn::Permutation pa = modulo_permutation
                                       ? revlnn::extract_permutation_modulo(a)
                                       : revlnn::extract_permutation(a);
    const revlnn::Permutation pb = modulo_permutation
                                       ? revlnn::extract_permutation_modulo(b)
                                       : revlnn::extract_permutation(b);
    if (pa == pb) {
      std::cout << "equivalent\n";
      return kExitOk;
    }
    for (std::uint32_t i = 0; i < pa.size(); ++i) {
      if (pa[i] != pb[i]) {
        std::cout << "not equivalent: input ";
        for (bool bit : revlnn::index_to_bits(i, a.width())) std::cout << (bit ? '1' : '0');
        std::cout << " maps to " << pa[i] << " vs " << pb[i] << "\n";
        break;
      }
    }
    return kExitNotEquivalent;
  } catch (const revlnn::NotBooleanReversible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotBoolean;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reversible-to-quantum compilation with nearest-neighbor optimization"};
  app.require_subcommand(1);

  auto* metrics = app.add_subcommand("metrics", "report cost metrics per circuit");
  std::vector<std::string> metric_files;
  std::string format = "text";
  metrics->add_option("files", metric_files, "input .real files")->required();
  metrics->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* decompose = app.add_subcommand("decompose", "standard decomposition to elementary gates");
  std::string dec_file, dec_out;
  decompose->add_option("file", dec_file, "input .real file")->required();
  decompose->add_option("--out", dec_out, "output .real path");

  auto* optimize = app.add_subcommand("optimize", "produce an NNC-0 elementary circuit");
  std::string opt_file, opt_out, opt_macros;
  std::string strategy = "best";
  bool restore_order = false;
  optimize->add_option("file", opt_file, "input .real file")->required();
  optimize->add_option("--strategy", strategy,
                       "naive, macro, global, local, global-local or best")
      ->check(CLI::IsMember({"naive", "macro", "global", "local", "global-local", "best"}));
  optimize->add_option("--macros", opt_macros, "macro library JSON");
  optimize->add_flag("--restore-order", restore_order,
                     "append SWAPs restoring the original line order");
  optimize->add_option("--out", opt_out, "output .real path");

  auto* macro_gen = app.add_subcommand("macro-gen", "synthesize a macro library");
  std::string gen_patterns, gen_out;
  unsigned max_cost = 13;
  macro_gen->add_option("--patterns", gen_patterns, "pattern JSON file")->required();
  macro_gen->add_option("--out", gen_out, "output library JSON path");
  macro_gen->add_option("--max-cost", max_cost, "gate-count budget for the search");

  auto* verify = app.add_subcommand("verify", "check two circuits for equivalence");
  std::string ver_a, ver_b;
  bool modulo_permutation = false;
  verify->add_option("file_a", ver_a, "first .real file")->required();
  verify->add_option("file_b", ver_b, "second .real file")->required();
  verify->add_flag("--modulo-permutation", modulo_permutation,
                   "honor recorded line reorderings and output permutations");

  CLI11_PARSE(app, argc, argv);

  if (metrics->parsed()) return cmd_metrics(metric_files, format);
  if (decompose->parsed()) return cmd_decompose(dec_file, dec_out);
  if (optimize->parsed()) {
    return cmd_optimize(opt_file, strategy, opt_macros, restore_order, opt_out);
  }
  if (macro_gen->parsed()) return cmd_macro_gen(gen_patterns, gen_out, max_cost);
  if (verify->parsed()) return cmd_verify(ver_a, ver_b, modulo_permutation);
  return kExitOk;
}
