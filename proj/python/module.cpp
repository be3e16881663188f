#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "catbench/cli.hpp"
#include "catbench/report.hpp"

namespace py = pybind11;
using namespace catbench;

PYBIND11_MODULE(_catbench, m) {
    m.doc() = "verification workbench for finite path categories and display maps";

    py::class_<Finding>(m, "Finding")
        .def_readonly("what", &Finding::what)
        .def_readonly("ids", &Finding::ids)
        .def("__repr__", [](const Finding& f) {
            std::string s = "<Finding " + f.what;
            for (const auto& id : f.ids) s += " " + id;
            return s + ">";
        });

    py::class_<Report>(m, "Report")
        .def_readonly("check", &Report::check)
        .def_readonly("passed", &Report::pass)
        .def_readonly("witnesses", &Report::witnesses)
        .def_readonly("counterexamples", &Report::counterexamples)
        .def_readonly("children", &Report::children)
        .def("to_text", [](const Report& r) { return r.to_text(); })
        .def("to_json", [](const Report& r) { return r.to_json().dump(2); })
        .def("__bool__", [](const Report& r) { return r.pass; })
        .def("__repr__", [](const Report& r) {
            return "<Report " + r.check + (r.pass ? " pass>" : " FAIL>");
        });

    py::class_<CommandResult>(m, "CommandResult")
        .def_readonly("exit_code", &CommandResult::exit_code)
        .def_readonly("report", &CommandResult::report)
        .def_readonly("error", &CommandResult::error)
        .def("__repr__", [](const CommandResult& r) {
            return "<CommandResult exit " + std::to_string(r.exit_code) + ">";
        });

    m.def("run", &run_command, py::arg("args"),
          "Run one workbench command line (program name excluded).");
    m.def("usage", &usage);
}
