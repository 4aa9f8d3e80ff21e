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

#include "revlnn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "revlnn/decompose.hpp"

namespace revlnn {

std::uint64_t gate_count(const Circuit& circuit) { return circuit.num_gates(); }

std::int64_t mct_quantum_cost(std::size_t m, LineId n) {
  if (m + 1 > n) throw Error("toffoli does not fit the circuit width");
  if (m <= 1) return 1;
  if (m == 2) return 5;
  if (m == static_cast<std::size_t>(n) - 1) {
    return (std::int64_t{1} << n) - 3;
  }
  const std::size_t half = (n + 1) / 2;  // ceil(n/2)
  if (m <= half) return 12 * static_cast<std::int64_t>(m) - 22;
  return 24 * static_cast<std::int64_t>(m) - 64;
}

std::int64_t fredkin_quantum_cost(std::size_t m, LineId n) {
  if (m == 0) return 3;
  return 2 + mct_quantum_cost(m + 1, n);
}

std::int64_t gate_quantum_cost(const ReversibleGate& gate, LineId n) {
  switch (gate.kind) {
    case RevKind::Toffoli: return mct_quantum_cost(gate.controls.size(), n);
    case RevKind::Fredkin: return fredkin_quantum_cost(gate.controls.size(), n);
    case RevKind::Peres: return 4;
  }
  throw Error("unreachable");
}

std::int64_t quantum_cost(const Circuit& circuit) {
  if (circuit.layer() == Layer::Elementary) {
    return static_cast<std::int64_t>(circuit.num_gates());
  }
  std::int64_t total = 0;
  for (const auto& g : circuit.reversible_gates()) {
    total += gate_quantum_cost(g, circuit.width());
  }
  return total;
}

std::int64_t transistor_cost(const Circuit& circuit) {
  if (circuit.layer() != Layer::Reversible) {
    throw LayerMismatch("transistor cost is defined for reversible circuits");
  }
  std::int64_t total = 0;
  for (const auto& g : circuit.reversible_gates()) {
    if (g.kind == RevKind::Peres) {
      total += 24;  // t2 + t1 cascade: 8*2 + 8*1
    } else {
      total += 8 * static_cast<std::int64_t>(g.controls.size());
    }
  }
  return total;
}

std::int64_t gate_nnc(const ElementaryGate& gate) {
  if (!gate.two_qubit()) return 0;
  const std::int64_t c = gate.control;
  const std::int64_t t = gate.target;
  return std::abs(c - t) - 1;
}

std::int64_t nnc(const Circuit& circuit) {
  if (circuit.layer() != Layer::Elementary) {
    throw LayerMismatch(
        "nnc is defined on elementary circuits; decompose first");
  }
  std::int64_t total = 0;
  for (const auto& g : circuit.elementary_gates()) total += gate_nnc(g);
  return total;
}

namespace {

bool concurrent(const ElementaryGate& a, const ElementaryGate& b) {
  // Controls may be shared; a control of one must not be a target of the
  // other and targets must differ.
  if (a.target == b.target) return false;
  if (a.two_qubit() && a.control == b.target) return false;
  if (b.two_qubit() && b.control == a.target) return false;
  return true;
}

}  // namespace

std::uint64_t depth(const Circuit& circuit) {
  const auto& gates = circuit.elementary_gates();
  std::vector<std::uint64_t> layer_of;
  layer_of.reserve(gates.size());
  std::uint64_t max_layer = 0;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    std::uint64_t earliest = 1;
    for (std::size_t j = 0; j < i; ++j) {
      if (!concurrent(gates[i], gates[j])) {
        earliest = std::max(earliest, layer_of[j] + 1);
      }
    }
    layer_of.push_back(earliest);
    max_layer = std::max(max_layer, earliest);
  }
  return max_layer;
}

Distribution distribution(const Circuit& circuit) {
  Distribution d;
  d.dis.assign(circuit.width(), 0);
  for (const auto& g : circuit.elementary_gates()) {
    d.dis[g.target] += 1;
    if (g.two_qubit()) d.dis[g.control] += 1;
  }
  d.min = *std::min_element(d.dis.begin(), d.dis.end());
  d.max = *std::max_element(d.dis.begin(), d.dis.end());
  for (auto v : d.dis) d.sum += v;
  return d;
}

std::string render_one_decimal(std::uint64_t sum, std::uint64_t n) {
  // round-half-up of 10*sum/n, rendered as an exact decimal
  const std::uint64_t tenths = (20 * sum + n) / (2 * n);
  std::ostringstream out;
  out << tenths / 10 << '.' << tenths % 10;
  return out.str();
}

std::string MetricsReport::dis_avg_string() const {
  if (n == 0) return "0.0";
  std::uint64_t sum = 0;
  for (auto v : dis) sum += v;
  return render_one_decimal(sum, n);
}

double MetricsReport::dis_avg() const {
  if (n == 0) return 0.0;
  std::uint64_t sum = 0;
  for (auto v : dis) sum += v;
  return static_cast<double>(sum) / static_cast<double>(n);
}

MetricsReport full_report(const Circuit& circuit, const std::string& name) {
  MetricsReport r;
  r.name = name;
  r.n = circuit.width();
  r.n_c = circuit.num_constant_inputs();
  r.n_g = circuit.num_garbage_outputs();
  r.gc = gate_count(circuit);
  r.qc = quantum_cost(circuit);
  const Circuit* quantum = &circuit;
  Circuit decomposed(1, Layer::Elementary);
  if (circuit.layer() == Layer::Reversible) {
    r.trc = transistor_cost(circuit);
    decomposed = decompose_circuit(circuit);
    quantum = &decomposed;
    r.decomposed_for_quantum_metrics = true;
  }
  r.nnc = nnc(*quantum);
  r.depth = depth(*quantum);
  const Distribution d = distribution(*quantum);
  r.dis = d.dis;
  r.dis_min = d.min;
  r.dis_max = d.max;
  return r;
}

namespace {

nlohmann::ordered_json report_json(const MetricsReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["n"] = r.n;
  j["n_g"] = r.n_g;
  j["n_c"] = r.n_c;
  j["gc"] = r.gc;
  j["qc"] = r.qc;
  j["nnc"] = r.nnc;
  j["depth"] = r.depth;
  j["dis"] = r.dis;
  j["dis_avg"] = r.dis_avg_string();
  j["dis_min"] = r.dis_min;
  j["dis_max"] = r.dis_max;
  if (r.trc) {
    j["trc"] = *r.trc;
  } else {
    j["trc"] = nullptr;
  }
  j["decomposed_for_quantum_metrics"] = r.decomposed_for_quantum_metrics;
  return j;
}

}  // namespace

std::string report_to_json(const MetricsReport& r) {
  return report_json(r).dump(2);
}

std::string reports_to_json(const std::vector<MetricsReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

MetricsReport report_from_json(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  MetricsReport r;
  r.name = j.at("name").get<std::string>();
  r.n = j.at("n").get<unsigned>();
  r.n_g = j.at("n_g").get<unsigned>();
  r.n_c = j.at("n_c").get<unsigned>();
  r.gc = j.at("gc").get<std::uint64_t>();
  r.qc = j.at("qc").get<std::int64_t>();
  r.nnc = j.at("nnc").get<std::int64_t>();
  r.depth = j.at("depth").get<std::uint64_t>();
  r.dis = j.at("dis").get<std::vector<std::uint64_t>>();
  r.dis_min = j.at("dis_min").get<std::uint64_t>();
  r.dis_max = j.at("dis_max").get<std::uint64_t>();
  if (!j.at("trc").is_null()) r.trc = j.at("trc").get<std::int64_t>();
  r.decomposed_for_quantum_metrics =
      j.at("decomposed_for_quantum_metrics").get<bool>();
  return r;
}

std::string report_csv_header() {
  return "name,n,n_g,n_c,gc,qc,nnc,depth,dis_avg,trc";
}

std::string report_to_csv_row(const MetricsReport& r) {
  std::ostringstream out;
  out << r.name << ',' << r.n << ',' << r.n_g << ',' << r.n_c << ',' << r.gc
      << ',' << r.qc << ',' << r.nnc << ',' << r.depth << ','
      << r.dis_avg_string() << ',';
  if (r.trc) out << *r.trc;
  return out.str();
}

}  // namespace revlnn
