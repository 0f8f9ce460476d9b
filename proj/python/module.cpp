/*
 * Copyright 2026 The rcamsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rcam/calibration.hpp"
#include "rcam/resource_model.hpp"
#include "rcam/update_engines.hpp"
#include "rcam/workload.hpp"

namespace py = pybind11;
using namespace rcam;

namespace {

// Python dicts cross the boundary as JSON text.
nlohmann::json to_cpp_json(const py::object& obj) {
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::object to_py_json(const nlohmann::ordered_json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

ExperimentConfig config_from(const py::object& obj) {
    if (obj.is_none()) return {};
    auto c = ExperimentConfig::from_json(to_cpp_json(obj));
    c.validate();
    return c;
}

std::vector<std::size_t> matches(const MatchVector& m) { return extract_match_addresses(m, ExtractMode::All); }

} // namespace

PYBIND11_MODULE(rcamsim, m) {
    m.doc() = "Cycle-level simulator of RAM-based binary CAMs and their update paths";
    m.attr("__version__") = kVersion;

    py::enum_<Architecture>(m, "Architecture")
        .value("S1", Architecture::S1)
        .value("S2", Architecture::S2)
        .value("S3", Architecture::S3);

    py::class_<WordLocation>(m, "WordLocation")
        .def_readonly("rcb", &WordLocation::rcb)
        .def_readonly("group", &WordLocation::group)
        .def_readonly("position", &WordLocation::position)
        .def("__repr__", [](const WordLocation& l) {
            return "WordLocation(rcb=" + std::to_string(l.rcb) + ", group=" + std::to_string(l.group) +
                   ", position=" + std::to_string(l.position) + ")";
        });

    py::class_<CamGeometry>(m, "CamGeometry")
        .def(py::init(&CamGeometry::make), py::arg("architecture"), py::arg("depth"), py::arg("word_width"),
             py::arg("bus_width") = 256, py::arg("partitions") = 8)
        .def_property_readonly("architecture", &CamGeometry::architecture)
        .def_property_readonly("depth", &CamGeometry::depth)
        .def_property_readonly("word_width", &CamGeometry::word_width)
        .def_property_readonly("bus_width", &CamGeometry::bus_width)
        .def_property_readonly("slices", &CamGeometry::slices)
        .def_property_readonly("words_per_beat_k", &CamGeometry::words_per_beat_k)
        .def_property_readonly("rcb_count", &CamGeometry::rcb_count)
        .def_property_readonly("beat_count", &CamGeometry::beat_count)
        .def_property_readonly("rcu_count", &CamGeometry::rcu_count)
        .def("locate", &CamGeometry::locate)
        .def("word_index", &CamGeometry::word_index)
        .def("__repr__", &CamGeometry::describe);

    py::class_<BusModel>(m, "BusModel")
        .def_static("ideal", &BusModel::ideal, py::arg("bus_width") = 256)
        .def_static("calibrated", &BusModel::calibrated, py::arg("stream_efficiency"),
                    py::arg("burst_overhead_cycles"), py::arg("bus_width") = 256)
        .def_readwrite("clock_mhz", &BusModel::clock_mhz)
        .def_readwrite("burst_length", &BusModel::burst_length)
        .def_readonly("bus_width", &BusModel::bus_width_b)
        .def_readonly("stream_efficiency", &BusModel::stream_efficiency)
        .def_readonly("burst_overhead_cycles", &BusModel::burst_overhead_cycles)
        .def("theoretical_gbps", &BusModel::theoretical_gbps)
        .def("to_dict", [](const BusModel& b) { return to_py_json(bus_to_json(b)); });

    py::class_<CycleSpan>(m, "CycleSpan")
        .def_readonly("first", &CycleSpan::first)
        .def_readonly("last", &CycleSpan::last)
        .def("__len__", [](const CycleSpan& s) { return s.length(); });

    py::class_<UpdateTrace>(m, "UpdateTrace")
        .def_readonly("architecture", &UpdateTrace::architecture)
        .def_readonly("total_cycles", &UpdateTrace::total_cycles)
        .def_readonly("bus_read_cycles", &UpdateTrace::bus_read_cycles)
        .def_readonly("stall_cycles", &UpdateTrace::stall_cycles)
        .def_readonly("erase_span", &UpdateTrace::erase_span)
        .def_readonly("write_span", &UpdateTrace::write_span)
        .def_readonly("catch_up_cycles", &UpdateTrace::catch_up_cycles)
        .def("to_jsonl", &UpdateTrace::to_jsonl);

    py::enum_<Phase>(m, "Phase")
        .value("Idle", Phase::Idle)
        .value("Interleaved", Phase::Interleaved)
        .value("Erase", Phase::Erase)
        .value("Write", Phase::Write);

    py::class_<UpdateEngine>(m, "Engine")
        .def(py::init([](const CamGeometry& g, const BusModel& bus, bool record_events, bool s1_prefetch) {
                 EngineOptions o;
                 o.record_events = record_events;
                 o.s1_prefetch = s1_prefetch;
                 return UpdateEngine::create(g, bus, o);
             }),
             py::arg("geometry"), py::arg("bus") = BusModel::ideal(), py::arg("record_events") = true,
             py::arg("s1_prefetch") = false)
        .def(
            "update",
            [](UpdateEngine& e, std::vector<std::uint64_t> words) {
                return e.update({e.geometry().word_width(), std::move(words)});
            },
            py::return_value_policy::copy, py::arg("words"))
        .def("begin",
             [](UpdateEngine& e, std::vector<std::uint64_t> words) {
                 e.begin({e.geometry().word_width(), std::move(words)});
             })
        .def("step", &UpdateEngine::step)
        .def_property_readonly("busy", &UpdateEngine::busy)
        .def_property_readonly("phase", &UpdateEngine::phase)
        .def_property_readonly("cycle", &UpdateEngine::cycle)
        .def_property_readonly("geometry", &UpdateEngine::geometry)
        .def_property_readonly("search_cycles", &UpdateEngine::search_cycles)
        .def(
            "search", [](UpdateEngine& e, std::uint64_t key) { return matches(e.search(key)); },
            "Indices of every stored word equal to key.")
        .def(
            "probe", [](const UpdateEngine& e, std::uint64_t key) { return matches(e.probe(key)); },
            "Search without the idle check, for inspecting an update in flight.")
        .def("all_zero", [](const UpdateEngine& e) { return e.cam().all_zero(); });

    py::class_<ResourceReport>(m, "ResourceReport")
        .def_readonly("architecture", &ResourceReport::architecture)
        .def_readonly("rcu_blocks", &ResourceReport::rcu_blocks)
        .def_readonly("erase_blocks", &ResourceReport::erase_blocks)
        .def_readonly("total_m10k", &ResourceReport::total_m10k)
        .def_readonly("device_fraction", &ResourceReport::device_fraction)
        .def_readonly("erase_utilization", &ResourceReport::erase_utilization)
        .def_readonly("saving_vs_s1", &ResourceReport::saving_vs_s1);
    m.def("m10k_count", py::overload_cast<Architecture, std::size_t, std::size_t>(&m10k_count),
          py::arg("architecture"), py::arg("depth"), py::arg("word_width"));
    m.def("memory_saving", &memory_saving);

    m.def(
        "generate_payload",
        [](std::uint64_t seed, std::size_t depth, std::size_t width) {
            return generate_payload(seed, depth, width).words;
        },
        py::arg("seed"), py::arg("depth"), py::arg("word_width"));

    m.def(
        "calibrate",
        [](std::optional<double> s1, std::optional<double> s2, std::optional<double> s3) {
            CalibrationTargets t{s1, s2, s3};
            if (!s1 && !s2 && !s3) t = reference_targets();
            return to_py_json(calibration_to_json(calibrate(BusModel::ideal(), t)));
        },
        py::arg("s1") = py::none(), py::arg("s2") = py::none(), py::arg("s3") = py::none(),
        "Fit the bus model; with no targets, fits the reference efficiencies.");

    m.def(
        "run_experiment",
        [](const py::object& config) { return to_py_json(report_to_json(run_experiment(config_from(config)))); },
        py::arg("config") = py::none(), "Run the configured architectures; returns the report as a dict.");
    m.def(
        "run_sweep",
        [](const py::object& config, const std::vector<std::size_t>& widths) {
            return to_py_json(report_to_json(run_sweep(config_from(config), widths)));
        },
        py::arg("config") = py::none(), py::arg("widths") = std::vector<std::size_t>{8, 16, 32, 64});
    m.def(
        "report_csv",
        [](const py::object& report) {
            std::ostringstream out;
            write_csv(out, report_from_json(to_cpp_json(report)));
            return out.str();
        },
        "Render a report dict as CSV.");
}
