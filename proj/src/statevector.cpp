#include "qusp/statevector.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qusp/errors.hpp"

namespace qusp {

int qubit_cap() {
    static const int cap = [] {
        constexpr int kDefault = 24;
        const char* env = std::getenv("QUSP_QUBIT_CAP");
        if (env == nullptr || *env == '\0') {
            return kDefault;
        }
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || parsed < 1 || parsed > 30) {
            return kDefault;
        }
        return static_cast<int>(parsed);
    }();
    return cap;
}

Statevector::Statevector(int n) : n_(n) {
    if (n < 1) {
        throw CapacityError("statevector: need at least one qubit");
    }
    if (n > qubit_cap()) {
        throw CapacityError("statevector: " + std::to_string(n) + " qubits exceeds the cap of " +
                            std::to_string(qubit_cap()) +
                            " (set QUSP_QUBIT_CAP to raise it)");
    }
    amps_.assign(std::uint64_t{1} << n, {0.0, 0.0});
    amps_[0] = {1.0, 0.0};
}

Statevector Statevector::basis(int n, std::uint64_t index) {
    Statevector sv(n);
    if (index >= sv.size()) {
        throw std::invalid_argument("statevector: basis index out of range");
    }
    sv.amps_[0] = {0.0, 0.0};
    sv.amps_[index] = {1.0, 0.0};
    return sv;
}

void Statevector::apply_one_qubit(int target, int control, int control_value, double u00,
                                  double u01, double u10, double u11) {
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t low_mask = tbit - 1;
    const std::uint64_t pairs = size() >> 1;
    for (std::uint64_t p = 0; p < pairs; ++p) {
        // p enumerates the n-1 non-target bits; splice a 0 in at the target.
        const std::uint64_t i0 = ((p & ~low_mask) << 1) | (p & low_mask);
        if (control >= 0 &&
            static_cast<int>((i0 >> control) & 1u) != control_value) {
            continue;
        }
        const std::uint64_t i1 = i0 | tbit;
        const std::complex<double> a0 = amps_[i0];
        const std::complex<double> a1 = amps_[i1];
        amps_[i0] = u00 * a0 + u01 * a1;
        amps_[i1] = u10 * a0 + u11 * a1;
    }
}

void Statevector::apply(const Gate& gate) {
    gate.validate();
    if (gate.target >= n_ || (gate.control && *gate.control >= n_)) {
        throw std::invalid_argument("statevector: qubit index out of range for n=" +
                                    std::to_string(n_));
    }
    const int control = gate.control.value_or(-1);
    const int fire_on = is_open_controlled(gate.kind) ? 0 : 1;
    constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;

    switch (gate.kind) {
    case GateKind::PauliX:
        apply_one_qubit(gate.target, -1, 0, 0.0, 1.0, 1.0, 0.0);
        break;
    case GateKind::Hadamard:
        apply_one_qubit(gate.target, -1, 0, inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
        break;
    case GateKind::PauliZ:
        apply_one_qubit(gate.target, -1, 0, 1.0, 0.0, 0.0, -1.0);
        break;
    case GateKind::RotY: {
        const double c = std::cos(*gate.theta / 2.0);
        const double s = std::sin(*gate.theta / 2.0);
        apply_one_qubit(gate.target, -1, 0, c, -s, s, c);
        break;
    }
    case GateKind::OpenControlledHadamard:
        apply_one_qubit(gate.target, control, fire_on, inv_sqrt2, inv_sqrt2, inv_sqrt2,
                        -inv_sqrt2);
        break;
    case GateKind::OpenControlledRotY: {
        const double c = std::cos(*gate.theta / 2.0);
        const double s = std::sin(*gate.theta / 2.0);
        apply_one_qubit(gate.target, control, fire_on, c, -s, s, c);
        break;
    }
    case GateKind::ControlledNot:
    case GateKind::OpenControlledNot:
        apply_one_qubit(gate.target, control, fire_on, 0.0, 1.0, 1.0, 0.0);
        break;
    }
}

double Statevector::norm() const {
    double total = 0.0;
    for (const std::complex<double>& a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> probs(amps_.size());
    for (std::uint64_t j = 0; j < amps_.size(); ++j) {
        probs[j] = std::norm(amps_[j]);
    }
    return probs;
}

Statevector run(const Circuit& circuit) {
    return run(circuit, Statevector(circuit.n));
}

Statevector run(const Circuit& circuit, Statevector initial) {
    if (initial.num_qubits() != circuit.n) {
        throw std::invalid_argument("run: initial state width does not match circuit");
    }
    for (const Gate& gate : circuit.gates) {
        initial.apply(gate);
    }
    return initial;
}

} // namespace qusp
