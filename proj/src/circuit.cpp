#include "qusp/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qusp {

std::string_view kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::PauliX: return "x";
    case GateKind::Hadamard: return "h";
    case GateKind::RotY: return "ry";
    case GateKind::PauliZ: return "z";
    case GateKind::OpenControlledHadamard: return "och";
    case GateKind::OpenControlledRotY: return "ocry";
    case GateKind::ControlledNot: return "cx";
    case GateKind::OpenControlledNot: return "ocx";
    }
    throw std::invalid_argument("kind_name: unknown gate kind");
}

std::optional<GateKind> kind_from_name(std::string_view name) {
    static constexpr GateKind kAll[] = {
        GateKind::PauliX,         GateKind::Hadamard,
        GateKind::RotY,           GateKind::PauliZ,
        GateKind::OpenControlledHadamard, GateKind::OpenControlledRotY,
        GateKind::ControlledNot,  GateKind::OpenControlledNot,
    };
    for (GateKind kind : kAll) {
        if (kind_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

void Gate::validate() const {
    if (target < 0) {
        throw std::invalid_argument("gate: negative target index");
    }
    if (control.has_value() != is_controlled(kind)) {
        throw std::invalid_argument(control ? "gate: control on a single-qubit kind"
                                            : "gate: controlled kind without a control");
    }
    if (control) {
        if (*control < 0) {
            throw std::invalid_argument("gate: negative control index");
        }
        if (*control == target) {
            throw std::invalid_argument("gate: control equals target");
        }
    }
    if (theta.has_value() != has_theta(kind)) {
        throw std::invalid_argument(theta ? "gate: angle on a non-rotation kind"
                                          : "gate: rotation kind without an angle");
    }
}

Circuit::Circuit(int n, std::string label) : n(n), label(std::move(label)) {
    if (n < 1) {
        throw std::invalid_argument("circuit: need at least one qubit");
    }
}

void Circuit::push(Gate gate) {
    gate.validate();
    if (gate.target >= n || (gate.control && *gate.control >= n)) {
        throw std::invalid_argument("circuit: qubit index out of range for n=" +
                                    std::to_string(n));
    }
    gates.push_back(gate);
}

std::size_t depth(const Circuit& circuit) {
    std::vector<std::size_t> layer(circuit.n, 0);
    std::size_t deepest = 0;
    for (const Gate& gate : circuit.gates) {
        std::size_t at = layer[gate.target];
        if (gate.control) {
            at = std::max(at, layer[*gate.control]);
        }
        ++at;
        layer[gate.target] = at;
        if (gate.control) {
            layer[*gate.control] = at;
        }
        deepest = std::max(deepest, at);
    }
    return deepest;
}

std::map<GateKind, std::size_t> tally(const Circuit& circuit) {
    std::map<GateKind, std::size_t> counts;
    for (const Gate& gate : circuit.gates) {
        ++counts[gate.kind];
    }
    return counts;
}

} // namespace qusp
