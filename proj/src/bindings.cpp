// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fpqs/qasm.hpp"
#include "fpqs/report.hpp"
#include "fpqs/sampling.hpp"
#include "fpqs/schedule.hpp"
#include "fpqs/search.hpp"
#include "fpqs/statevector.hpp"
#include "fpqs/tomography.hpp"

namespace py = pybind11;
using namespace fpqs;

namespace {

OracleMode mode_of(const std::string& name) {
    if (name == "direct") {
        return OracleMode::Direct;
    }
    if (name == "ancilla") {
        return OracleMode::Ancilla;
    }
    throw std::invalid_argument("unknown oracle mode: " + name);
}

QasmLayout layout_of(const std::string& name) {
    if (name == "logical") {
        return QasmLayout::Logical;
    }
    if (name == "reversed_hardware") {
        return QasmLayout::ReversedHardware;
    }
    throw std::invalid_argument("unknown layout: " + name);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Statevector simulator for fixed-point quantum search";

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<int>(), py::arg("n_qubits"))
        .def_readonly("n_qubits", &Circuit::n_qubits)
        .def("h", &Circuit::h)
        .def("x", &Circuit::x)
        .def("z", &Circuit::z)
        .def("s", &Circuit::s)
        .def("sdg", &Circuit::sdg)
        .def("t", &Circuit::t)
        .def("tdg", &Circuit::tdg)
        .def("phase", &Circuit::phase)
        .def("rotz", &Circuit::rotz)
        .def("cnot", &Circuit::cnot)
        .def("cphase", &Circuit::cphase)
        .def("toffoli", &Circuit::toffoli)
        .def("zc_toffoli", &Circuit::zc_toffoli)
        .def("gate_count", &Circuit::gate_count)
        .def("depth", &Circuit::depth);

    py::class_<Statevector>(m, "Statevector")
        .def_static("zero_state", &Statevector::zero_state, py::arg("n_qubits"))
        .def_readonly("n_qubits", &Statevector::n_qubits)
        .def_readonly("amplitudes", &Statevector::amplitudes)
        .def("norm_sq", &Statevector::norm_sq);

    py::class_<AngleSchedule>(m, "AngleSchedule")
        .def_readonly("reflections", &AngleSchedule::reflections)
        .def_readonly("gamma", &AngleSchedule::gamma)
        .def_readonly("alphas", &AngleSchedule::alphas)
        .def_readonly("betas", &AngleSchedule::betas);

    py::class_<SearchCircuit>(m, "SearchCircuit")
        .def_readonly("circuit", &SearchCircuit::circuit)
        .def_readonly("schedule", &SearchCircuit::schedule)
        .def_readonly("predicted_probability", &SearchCircuit::predicted_probability);

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def_readonly("n_qubits", &DensityMatrix::n_qubits)
        .def_readonly("entries", &DensityMatrix::entries);

    py::class_<TomographyResult>(m, "TomographyResult")
        .def_readonly("rho", &TomographyResult::rho)
        .def_readonly("pauli_expectations", &TomographyResult::pauli_expectations)
        .def_readonly("fidelity", &TomographyResult::fidelity);

    m.def("apply_circuit", [](const Statevector& s, const Circuit& c) { return apply_circuit(s, c); },
          py::arg("state"), py::arg("circuit"));
    m.def(
        "probability",
        [](const Statevector& s, const std::string& bits) { return probability(s, bits); },
        py::arg("state"), py::arg("bits"));
    m.def(
        "marginal_probability",
        [](const Statevector& s, const std::vector<int>& qubits, const std::string& bits) {
            return probability(s, qubits, bits);
        },
        py::arg("state"), py::arg("qubits"), py::arg("bits"));

    m.def("chebyshev_t", &chebyshev_t, py::arg("order"), py::arg("x"));
    m.def("compute_gamma", &compute_gamma, py::arg("delta"), py::arg("reflections"));
    m.def(
        "compute_schedule", [](int l, double delta) { return compute_schedule(l, delta); },
        py::arg("iterations"), py::arg("delta"));

    m.def(
        "build_selective_phase",
        [](int n, const std::vector<std::string>& targets, double theta, const std::string& mode) {
            return build_selective_phase(n, targets, theta, mode_of(mode));
        },
        py::arg("n_qubits"), py::arg("targets"), py::arg("theta"), py::arg("mode") = "direct");
    m.def(
        "build_ofpqs_circuit",
        [](int n, const std::vector<std::string>& targets, int l, double delta,
           const std::string& mode) {
            SearchParams params{n, targets, l, delta};
            return build_ofpqs_circuit(params, mode_of(mode));
        },
        py::arg("n_qubits"), py::arg("targets"), py::arg("iterations"), py::arg("delta"),
        py::arg("mode") = "direct");
    m.def(
        "build_grover_circuit",
        [](int n, const std::vector<std::string>& targets, int k, const std::string& mode) {
            return build_grover_circuit(n, targets, k, mode_of(mode));
        },
        py::arg("n_qubits"), py::arg("targets"), py::arg("iterations"), py::arg("mode") = "direct");
    m.def("predict_success_probability", &predict_success_probability, py::arg("marked_fraction"),
          py::arg("iterations"), py::arg("delta"));
    m.def("grover_success_probability", &grover_success_probability, py::arg("marked_fraction"),
          py::arg("iterations"));

    m.def(
        "sample",
        [](const Statevector& s, const std::vector<int>& qubits, int shots, std::uint64_t seed) {
            return sample(s, qubits, shots, seed).counts;
        },
        py::arg("state"), py::arg("qubits"), py::arg("shots"), py::arg("seed"));
    m.def(
        "run_noisy",
        [](const Circuit& c, double p1, double p2, double readout, int shots, std::uint64_t seed,
           const std::vector<int>& qubits) {
            return run_noisy(c, NoiseModel{p1, p2, readout}, shots, seed, qubits).counts;
        },
        py::arg("circuit"), py::arg("p1"), py::arg("p2"), py::arg("readout"), py::arg("shots"),
        py::arg("seed"), py::arg("qubits"));

    m.def("tomography_settings", &tomography_settings, py::arg("n_qubits"));
    m.def(
        "reconstruct",
        [](const std::map<std::string, std::map<std::string, double>>& probs, int n,
           const Statevector& reference) { return reconstruct(probs, n, reference); },
        py::arg("probs_per_setting"), py::arg("n_qubits"), py::arg("reference"));
    m.def("fidelity_pure", &fidelity_pure, py::arg("rho"), py::arg("target_bits"));

    m.def(
        "export_qasm",
        [](const Circuit& c, const std::string& layout) { return export_qasm(c, layout_of(layout)); },
        py::arg("circuit"), py::arg("layout") = "logical");

    m.attr("__version__") = "0.1.0";
}
