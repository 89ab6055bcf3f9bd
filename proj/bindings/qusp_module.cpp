#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "qusp/analytics.hpp"
#include "qusp/builder.hpp"
#include "qusp/circuit.hpp"
#include "qusp/errors.hpp"
#include "qusp/io.hpp"
#include "qusp/lowering.hpp"
#include "qusp/plan.hpp"
#include "qusp/statevector.hpp"

namespace py = pybind11;

namespace {

py::array_t<std::complex<double>> amplitudes_array(const qusp::Statevector& sv) {
    const auto amps = sv.amplitudes();
    const std::vector<py::ssize_t> shape{static_cast<py::ssize_t>(amps.size())};
    return py::array_t<std::complex<double>>(shape, amps.data());
}

py::array_t<double> probabilities_array(const qusp::Statevector& sv) {
    const std::vector<double> probs = sv.probabilities();
    const std::vector<py::ssize_t> shape{static_cast<py::ssize_t>(probs.size())};
    return py::array_t<double>(shape, probs.data());
}

std::string gate_repr(const qusp::Gate& gate) {
    std::ostringstream os;
    os << "Gate(" << qusp::kind_name(gate.kind);
    if (gate.control) {
        os << ", control=" << *gate.control;
    }
    os << ", target=" << gate.target;
    if (gate.theta) {
        os << ", theta=" << *gate.theta;
    }
    os << ")";
    return os.str();
}

} // namespace

PYBIND11_MODULE(_qusp, m) {
    m.doc() = "Logarithmic-gate-count circuits for uniform and block-uniform "
              "superposition states, with a dense statevector oracle";

    py::register_exception<qusp::CapacityError>(m, "CapacityError", PyExc_RuntimeError);

    py::enum_<qusp::GateKind>(m, "GateKind")
        .value("PauliX", qusp::GateKind::PauliX)
        .value("Hadamard", qusp::GateKind::Hadamard)
        .value("RotY", qusp::GateKind::RotY)
        .value("PauliZ", qusp::GateKind::PauliZ)
        .value("OpenControlledHadamard", qusp::GateKind::OpenControlledHadamard)
        .value("OpenControlledRotY", qusp::GateKind::OpenControlledRotY)
        .value("ControlledNot", qusp::GateKind::ControlledNot)
        .value("OpenControlledNot", qusp::GateKind::OpenControlledNot);

    py::class_<qusp::Gate>(m, "Gate")
        .def_readonly("kind", &qusp::Gate::kind)
        .def_readonly("target", &qusp::Gate::target)
        .def_readonly("control", &qusp::Gate::control)
        .def_readonly("theta", &qusp::Gate::theta)
        .def_static("x", &qusp::Gate::x, py::arg("target"))
        .def_static("h", &qusp::Gate::h, py::arg("target"))
        .def_static("z", &qusp::Gate::z, py::arg("target"))
        .def_static("ry", &qusp::Gate::ry, py::arg("target"), py::arg("theta"))
        .def_static("open_ch", &qusp::Gate::open_ch, py::arg("control"), py::arg("target"))
        .def_static("open_cry", &qusp::Gate::open_cry, py::arg("control"), py::arg("target"),
                    py::arg("theta"))
        .def_static("cx", &qusp::Gate::cx, py::arg("control"), py::arg("target"))
        .def_static("open_cx", &qusp::Gate::open_cx, py::arg("control"), py::arg("target"))
        .def("__eq__", [](const qusp::Gate& a, const qusp::Gate& b) { return a == b; })
        .def("__repr__", &gate_repr);

    py::class_<qusp::Circuit>(m, "Circuit")
        .def(py::init<int, std::string>(), py::arg("n"), py::arg("label") = "")
        .def_readwrite("label", &qusp::Circuit::label)
        .def_readonly("n", &qusp::Circuit::n)
        .def_readonly("gates", &qusp::Circuit::gates)
        .def("push", &qusp::Circuit::push, py::arg("gate"))
        .def("__len__", [](const qusp::Circuit& c) { return c.size(); })
        .def("__repr__", [](const qusp::Circuit& c) {
            std::ostringstream os;
            os << "Circuit(n=" << c.n << ", gates=" << c.size() << ", label='" << c.label
               << "')";
            return os.str();
        });

    py::class_<qusp::BitPlan>(m, "BitPlan")
        .def_readonly("m", &qusp::BitPlan::m)
        .def_readonly("n", &qusp::BitPlan::n)
        .def_readonly("exponents", &qusp::BitPlan::exponents)
        .def_readonly("partial_sums", &qusp::BitPlan::partial_sums)
        .def_readonly("thetas", &qusp::BitPlan::thetas)
        .def_readonly("is_power_of_two", &qusp::BitPlan::is_power_of_two)
        .def_property_readonly("k", &qusp::BitPlan::k);

    py::class_<qusp::CoefficientPair>(m, "CoefficientPair")
        .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
        .def_readonly("a", &qusp::CoefficientPair::a)
        .def_readonly("b", &qusp::CoefficientPair::b)
        .def("__repr__", [](const qusp::CoefficientPair& p) {
            std::ostringstream os;
            os << "CoefficientPair(a=" << p.a << ", b=" << p.b << ")";
            return os.str();
        });

    py::class_<qusp::AmplitudeBlock>(m, "AmplitudeBlock")
        .def_readonly("gamma", &qusp::AmplitudeBlock::gamma)
        .def_readonly("block_start", &qusp::AmplitudeBlock::block_start)
        .def_readonly("block_len", &qusp::AmplitudeBlock::block_len);

    py::class_<qusp::CountReport>(m, "CountReport")
        .def_readonly("m", &qusp::CountReport::m)
        .def_readonly("k", &qusp::CountReport::k)
        .def_readonly("l0", &qusp::CountReport::l0)
        .def_readonly("lk", &qusp::CountReport::lk)
        .def_readonly("is_power_of_two", &qusp::CountReport::is_power_of_two)
        .def_readonly("total_gates", &qusp::CountReport::total_gates)
        .def_readonly("cnot_predicted", &qusp::CountReport::cnot_predicted)
        .def_readonly("cnot_measured", &qusp::CountReport::cnot_measured)
        .def_readonly("depth_measured", &qusp::CountReport::depth_measured)
        .def_readonly("lower_bound", &qusp::CountReport::lower_bound)
        .def_readonly("upper_bound", &qusp::CountReport::upper_bound)
        .def_readonly("qiskit_reference", &qusp::CountReport::qiskit_reference);

    py::class_<qusp::Statevector>(m, "Statevector")
        .def(py::init<int>(), py::arg("n"))
        .def_static("basis", &qusp::Statevector::basis, py::arg("n"), py::arg("index"))
        .def_property_readonly("n", &qusp::Statevector::num_qubits)
        .def("apply", &qusp::Statevector::apply, py::arg("gate"))
        .def("norm", &qusp::Statevector::norm)
        .def("amplitudes", &amplitudes_array)
        .def("probabilities", &probabilities_array)
        .def("__len__", [](const qusp::Statevector& sv) { return sv.size(); });

    // planning
    m.def("required_qubits", &qusp::required_qubits, py::arg("m"));
    m.def("decompose", &qusp::decompose, py::arg("m"), py::arg("n") = std::nullopt);
    m.def("coefficients", &qusp::coefficients, py::arg("plan"));
    m.def("predict_amplitudes", &qusp::predict_amplitudes, py::arg("plan"),
          py::arg("overrides") = std::nullopt);
    m.def("dense_amplitudes", &qusp::dense_amplitudes, py::arg("profile"), py::arg("n"));
    m.def("pair_for_angle", &qusp::pair_for_angle, py::arg("theta"));
    m.def("angle_for_pair", &qusp::angle_for_pair, py::arg("pair"));

    // circuit queries
    m.def("depth", &qusp::depth, py::arg("circuit"));
    m.def("tally", &qusp::tally, py::arg("circuit"));

    // builders
    m.def("build_uniform", &qusp::build_uniform, py::arg("m"), py::arg("n") = std::nullopt);
    m.def(
        "build_general",
        [](std::uint64_t m, const std::vector<double>& angles, std::optional<int> n) {
            return qusp::build_general(m, angles, n);
        },
        py::arg("m"), py::arg("angles"), py::arg("n") = std::nullopt);
    m.def("build_qba", &qusp::build_qba, py::arg("n_agents"));

    // simulation
    m.def("qubit_cap", &qusp::qubit_cap);
    m.def("run", py::overload_cast<const qusp::Circuit&>(&qusp::run), py::arg("circuit"));
    m.def("run", py::overload_cast<const qusp::Circuit&, qusp::Statevector>(&qusp::run),
          py::arg("circuit"), py::arg("initial"));

    // lowering
    m.def("lower_gate", &qusp::lower_gate, py::arg("gate"));
    m.def("lower_circuit", &qusp::lower_circuit, py::arg("circuit"));
    m.def("cnot_count", &qusp::cnot_count, py::arg("m"));
    m.def("verify_equivalence", &qusp::verify_equivalence, py::arg("gate"));
    m.def("cancel_adjacent_x", &qusp::cancel_adjacent_x, py::arg("circuit"));

    // analytics
    m.attr("QISKIT_REFERENCE_VERSION") = std::string(qusp::kQiskitReferenceVersion);
    m.def("report", &qusp::report, py::arg("m"));
    m.def("qiskit_reference", &qusp::qiskit_reference, py::arg("m"));
    m.def("sweep", &qusp::sweep, py::arg("m_lo"), py::arg("m_hi"));
    m.def(
        "reports_csv",
        [](const std::vector<qusp::CountReport>& reports) {
            std::ostringstream os;
            qusp::write_reports_csv(os, reports);
            return os.str();
        },
        py::arg("reports"));
    m.def(
        "reports_json",
        [](const std::vector<qusp::CountReport>& reports) {
            std::ostringstream os;
            qusp::write_reports_json(os, reports);
            return os.str();
        },
        py::arg("reports"));

    // serialization
    m.def(
        "circuit_to_json",
        [](const qusp::Circuit& circuit) { return qusp::circuit_to_json(circuit).dump(2); },
        py::arg("circuit"));
    m.def(
        "circuit_from_json",
        [](const std::string& text) {
            return qusp::circuit_from_json(nlohmann::json::parse(text));
        },
        py::arg("text"));
    m.def("emit_qasm", &qusp::emit_qasm, py::arg("circuit"), py::arg("raw_comments") = false);
    m.def(
        "parse_qasm", [](const std::string& text) { return qusp::parse_qasm(text); },
        py::arg("text"));
    m.def(
        "probabilities_csv",
        [](const qusp::Statevector& sv) {
            std::ostringstream os;
            qusp::write_probabilities_csv(os, sv);
            return os.str();
        },
        py::arg("sv"));
}
