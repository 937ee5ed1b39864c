#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clcs/cyclic_solver.hpp"
#include "clcs/oracle.hpp"
#include "clcs/seq_io.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_clcs, m) {
    m.doc() = "Cyclic longest common subsequence in O(mn) via shortest "
              "path tree re-rooting";

    py::class_<clcs::ClcsResult>(m, "ClcsResult")
        .def_readonly("length", &clcs::ClcsResult::length)
        .def_readonly("cut_a", &clcs::ClcsResult::cut_a)
        .def_readonly("cut_b", &clcs::ClcsResult::cut_b)
        .def_readonly("subsequence", &clcs::ClcsResult::subsequence)
        .def_readonly("swapped", &clcs::ClcsResult::swapped)
        .def("__repr__", [](const clcs::ClcsResult& r) {
            return "ClcsResult(length=" + std::to_string(r.length) +
                   ", cut_a=" + std::to_string(r.cut_a) +
                   ", cut_b=" + std::to_string(r.cut_b) + ", subsequence='" +
                   r.subsequence + "', swapped=" +
                   (r.swapped ? "True" : "False") + ")";
        })
        .def("to_json", [](const clcs::ClcsResult& r) {
            return clcs::io::result_to_json(r);
        });

    m.def("cut", &clcs::cut, py::arg("s"), py::arg("k"),
          "Rotation of s starting at index k mod len(s).");
    m.def("clcs", &clcs::clcs, py::arg("a"), py::arg("b"),
          "Cyclic LCS with traceback.");
    m.def("clcs_len", &clcs::clcs_len, py::arg("a"), py::arg("b"),
          "Cyclic LCS length only (fast path).");
    m.def("lcs_len",
          [](const std::string& a, const std::string& b) {
              return clcs::oracle::naive_lcs(a, b).length;
          },
          py::arg("a"), py::arg("b"), "Plain (non-cyclic) LCS length.");
    m.def("is_subsequence", &clcs::oracle::is_subsequence, py::arg("s"),
          py::arg("t"));
}
