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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "revlnn/circuit.hpp"
#include "revlnn/decompose.hpp"
#include "revlnn/errors.hpp"
#include "revlnn/exact_synth.hpp"
#include "revlnn/macro_library.hpp"
#include "revlnn/metrics.hpp"
#include "revlnn/passes.hpp"
#include "revlnn/real_io.hpp"
#include "revlnn/simulate.hpp"

namespace py = pybind11;

using namespace revlnn;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reversible-to-quantum compilation with nearest-neighbor optimization";

  py::register_exception<Error>(m, "Error");

  py::enum_<Layer>(m, "Layer")
      .value("Reversible", Layer::Reversible)
      .value("Elementary", Layer::Elementary);

  py::enum_<FourVal>(m, "FourVal")
      .value("Zero", FourVal::Zero)
      .value("V0", FourVal::V0)
      .value("One", FourVal::One)
      .value("V1", FourVal::V1);

  py::enum_<RevKind>(m, "RevKind")
      .value("Toffoli", RevKind::Toffoli)
      .value("Fredkin", RevKind::Fredkin)
      .value("Peres", RevKind::Peres);

  py::enum_<ElemKind>(m, "ElemKind")
      .value("X", ElemKind::X)
      .value("CX", ElemKind::CX)
      .value("CV", ElemKind::CV)
      .value("CVD", ElemKind::CVD);

  py::enum_<Strategy>(m, "Strategy")
      .value("Naive", Strategy::Naive)
      .value("Macro", Strategy::Macro)
      .value("Global", Strategy::Global)
      .value("Local", Strategy::Local)
      .value("GlobalLocal", Strategy::GlobalLocal);

  py::class_<ReversibleGate>(m, "ReversibleGate")
      .def_static("toffoli", &ReversibleGate::toffoli, py::arg("controls"),
                  py::arg("target"))
      .def_static("fredkin", &ReversibleGate::fredkin, py::arg("controls"),
                  py::arg("t1"), py::arg("t2"))
      .def_static("peres", &ReversibleGate::peres, py::arg("control"),
                  py::arg("t1"), py::arg("t2"))
      .def_readonly("kind", &ReversibleGate::kind)
      .def_readonly("controls", &ReversibleGate::controls)
      .def_readonly("targets", &ReversibleGate::targets)
      .def("__eq__", [](const ReversibleGate& a, const ReversibleGate& b) {
        return a == b;
      });

  py::class_<ElementaryGate>(m, "ElementaryGate")
      .def_static("x", &ElementaryGate::x, py::arg("target"))
      .def_static("cx", &ElementaryGate::cx, py::arg("control"), py::arg("target"))
      .def_static("cv", &ElementaryGate::cv, py::arg("control"), py::arg("target"))
      .def_static("cvd", &ElementaryGate::cvd, py::arg("control"), py::arg("target"))
      .def_readonly("kind", &ElementaryGate::kind)
      .def_readonly("control", &ElementaryGate::control)
      .def_readonly("target", &ElementaryGate::target)
      .def("two_qubit", &ElementaryGate::two_qubit)
      .def("__eq__", [](const ElementaryGate& a, const ElementaryGate& b) {
        return a == b;
      });

  py::class_<Line>(m, "Line")
      .def(py::init<>())
      .def_readwrite("name", &Line::name)
      .def_readwrite("constant", &Line::constant)
      .def_readwrite("garbage", &Line::garbage);

  py::class_<Circuit>(m, "Circuit")
      .def(py::init<LineId, Layer>(), py::arg("width"),
           py::arg("layer") = Layer::Reversible)
      .def_property_readonly("width", &Circuit::width)
      .def_property_readonly("layer", &Circuit::layer)
      .def("add", py::overload_cast<ReversibleGate>(&Circuit::add))
      .def("add", py::overload_cast<ElementaryGate>(&Circuit::add))
      .def("reversible_gates", &Circuit::reversible_gates)
      .def("elementary_gates", &Circuit::elementary_gates)
      .def("num_gates", &Circuit::num_gates)
      .def("lines", &Circuit::lines)
      .def("set_line", &Circuit::set_line)
      .def("num_constant_inputs", &Circuit::num_constant_inputs)
      .def("num_garbage_outputs", &Circuit::num_garbage_outputs)
      .def_property_readonly("output_permutation",
                             [](const Circuit& c) { return c.output_permutation(); })
      .def("set_output_permutation", &Circuit::set_output_permutation)
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; });

  m.def("parse_real", &parse_real, py::arg("text"));
  m.def("write_real", &write_real, py::arg("circuit"));
  m.def("read_real_file", &read_real_file, py::arg("path"));
  m.def("write_real_file", &write_real_file, py::arg("circuit"), py::arg("path"));

  m.def("simulate_reversible", &simulate_reversible, py::arg("circuit"),
        py::arg("input"));
  m.def("simulate_elementary",
        py::overload_cast<const Circuit&, const std::vector<FourVal>&>(
            &simulate_elementary),
        py::arg("circuit"), py::arg("input"));
  m.def("extract_permutation", &extract_permutation, py::arg("circuit"),
        py::arg("max_width") = 16);
  m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"),
        py::arg("modulo_permutation") = false);
  m.def("apply_line_relabeling", &apply_line_relabeling, py::arg("circuit"),
        py::arg("perm"));

  py::class_<MetricsReport>(m, "MetricsReport")
      .def_readonly("name", &MetricsReport::name)
      .def_readonly("n", &MetricsReport::n)
      .def_readonly("n_c", &MetricsReport::n_c)
      .def_readonly("n_g", &MetricsReport::n_g)
      .def_readonly("gc", &MetricsReport::gc)
      .def_readonly("qc", &MetricsReport::qc)
      .def_readonly("nnc", &MetricsReport::nnc)
      .def_readonly("depth", &MetricsReport::depth)
      .def_readonly("dis", &MetricsReport::dis)
      .def_readonly("dis_min", &MetricsReport::dis_min)
      .def_readonly("dis_max", &MetricsReport::dis_max)
      .def_readonly("trc", &MetricsReport::trc)
      .def("dis_avg", &MetricsReport::dis_avg)
      .def("dis_avg_string", &MetricsReport::dis_avg_string)
      .def("to_json", [](const MetricsReport& r) { return report_to_json(r); })
      .def("to_csv_row",
           [](const MetricsReport& r) { return report_to_csv_row(r); });

  m.def("gate_count", &gate_count);
  m.def("quantum_cost", &quantum_cost);
  m.def("mct_quantum_cost", &mct_quantum_cost, py::arg("m"), py::arg("n"));
  m.def("fredkin_quantum_cost", &fredkin_quantum_cost, py::arg("m"), py::arg("n"));
  m.def("transistor_cost", &transistor_cost);
  m.def("nnc", &nnc);
  m.def("depth", &depth);
  m.def("full_report", &full_report, py::arg("circuit"), py::arg("name") = "");

  m.def(
      "decompose_circuit",
      [](const Circuit& c) { return decompose_circuit(c); }, py::arg("circuit"));

  py::class_<PassResult>(m, "PassResult")
      .def_readonly("circuit", &PassResult::circuit)
      .def_readonly("qc", &PassResult::qc)
      .def_readonly("input_relabeling", &PassResult::input_relabeling)
      .def_readonly("output_permutation", &PassResult::output_permutation);

  m.def("naive_pass", &naive_pass, py::arg("circuit"));
  m.def("macro_pass", &macro_pass, py::arg("circuit"), py::arg("library"));
  m.def("compute_impacts", &compute_impacts, py::arg("circuit"));
  m.def("global_reorder_pass", &global_reorder_pass, py::arg("circuit"));
  m.def("local_reorder_pass", &local_reorder_pass, py::arg("circuit"),
        py::arg("restore_order") = false);
  m.def("combined_pass", &combined_pass, py::arg("circuit"),
        py::arg("restore_order") = false);
  m.def("run_strategy", &run_strategy, py::arg("circuit"), py::arg("strategy"),
        py::arg("library"), py::arg("restore_order") = false);
  m.def("best_of", &best_of, py::arg("circuit"), py::arg("library"));
  m.def("pass_preserves_function", &pass_preserves_function, py::arg("source"),
        py::arg("result"), py::arg("max_width") = 16);

  py::class_<Macro>(m, "Macro")
      .def_readonly("name", &Macro::name)
      .def_readonly("width", &Macro::width)
      .def_readonly("pattern", &Macro::pattern)
      .def_readonly("realization", &Macro::realization)
      .def_readonly("cost", &Macro::cost)
      .def_readonly("naive_cost", &Macro::naive_cost);

  py::class_<MacroLibrary>(m, "MacroLibrary")
      .def(py::init<>())
      .def_readonly("entries", &MacroLibrary::entries);

  m.def("verify_macro", &verify_macro, py::arg("macro"));
  m.def("parse_macro_library", &parse_macro_library, py::arg("json_text"));
  m.def("write_macro_library", &write_macro_library, py::arg("library"));
  m.def("load_macro_library_file", &load_macro_library_file, py::arg("path"));

  py::class_<SynthesisTarget>(m, "SynthesisTarget")
      .def(py::init([](unsigned width, Permutation permutation) {
             return SynthesisTarget{width, std::move(permutation)};
           }),
           py::arg("width"), py::arg("permutation"))
      .def_readwrite("width", &SynthesisTarget::width)
      .def_readwrite("permutation", &SynthesisTarget::permutation);

  py::class_<MacroPattern>(m, "MacroPattern")
      .def(py::init([](std::string name, unsigned width,
                       std::vector<ReversibleGate> gates) {
             return MacroPattern{std::move(name), width, std::move(gates)};
           }),
           py::arg("name"), py::arg("width"), py::arg("gates"))
      .def_readwrite("name", &MacroPattern::name)
      .def_readwrite("width", &MacroPattern::width)
      .def_readwrite("gates", &MacroPattern::gates);

  m.def("adjacent_gate_library", &adjacent_gate_library, py::arg("n"));
  m.def("synthesize_minimal", &synthesize_minimal, py::arg("target"),
        py::arg("max_cost"));
  m.def("synthesize_minimal_iddfs", &synthesize_minimal_iddfs, py::arg("target"),
        py::arg("max_cost"));
  m.def("generate_macro_library", &generate_macro_library, py::arg("patterns"),
        py::arg("max_cost") = 13);
  m.def("parse_macro_patterns", &parse_macro_patterns, py::arg("json_text"));
}
