#pragma once

// Circuit IR shared by the builder, the lowering pass, the simulator and the
// exporters. Qubit indexing is little-endian: q0 is the least significant bit
// of a basis-state integer |j>. "Open" controls fire when the control qubit
// is |0>.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qusp {

enum class GateKind {
    PauliX,
    Hadamard,
    RotY,
    PauliZ,
    OpenControlledHadamard,
    OpenControlledRotY,
    ControlledNot,
    OpenControlledNot,
};

constexpr bool is_controlled(GateKind kind) {
    return kind == GateKind::OpenControlledHadamard || kind == GateKind::OpenControlledRotY ||
           kind == GateKind::ControlledNot || kind == GateKind::OpenControlledNot;
}

constexpr bool is_open_controlled(GateKind kind) {
    return kind == GateKind::OpenControlledHadamard || kind == GateKind::OpenControlledRotY ||
           kind == GateKind::OpenControlledNot;
}

constexpr bool has_theta(GateKind kind) {
    return kind == GateKind::RotY || kind == GateKind::OpenControlledRotY;
}

/// Short mnemonic used by the JSON schema: x, h, ry, z, och, ocry, cx, ocx.
std::string_view kind_name(GateKind kind);
std::optional<GateKind> kind_from_name(std::string_view name);

/// One instruction. control is present exactly for controlled kinds, theta
/// exactly for the RotY kinds.
struct Gate {
    GateKind kind = GateKind::PauliX;
    int target = 0;
    std::optional<int> control;
    std::optional<double> theta;

    static Gate x(int target) { return {GateKind::PauliX, target, {}, {}}; }
    static Gate h(int target) { return {GateKind::Hadamard, target, {}, {}}; }
    static Gate z(int target) { return {GateKind::PauliZ, target, {}, {}}; }
    static Gate ry(int target, double theta) { return {GateKind::RotY, target, {}, theta}; }
    static Gate open_ch(int control, int target) {
        return {GateKind::OpenControlledHadamard, target, control, {}};
    }
    static Gate open_cry(int control, int target, double theta) {
        return {GateKind::OpenControlledRotY, target, control, theta};
    }
    static Gate cx(int control, int target) {
        return {GateKind::ControlledNot, target, control, {}};
    }
    static Gate open_cx(int control, int target) {
        return {GateKind::OpenControlledNot, target, control, {}};
    }

    /// Structural checks (control/theta presence, control != target,
    /// non-negative indices). Throws std::invalid_argument.
    void validate() const;

    bool operator==(const Gate&) const = default;
};

/// Ordered gate list over n qubits; gates[0] is applied first.
struct Circuit {
    int n = 0;
    std::vector<Gate> gates;
    std::string label;

    Circuit() = default;
    explicit Circuit(int n, std::string label = "");

    /// Append after validating the gate and its qubit indices against n.
    void push(Gate gate);

    std::size_t size() const { return gates.size(); }
};

/// Longest chain of gates sharing qubits: a gate's layer is one past the
/// deepest layer among the qubits it touches.
std::size_t depth(const Circuit& circuit);

/// Exact per-kind gate counts.
std::map<GateKind, std::size_t> tally(const Circuit& circuit);

} // namespace qusp
