#include "qusp/lowering.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qusp/plan.hpp"
#include "qusp/statevector.hpp"

namespace qusp {

std::vector<Gate> lower_gate(const Gate& gate) {
    gate.validate();
    constexpr double quarter_pi = std::numbers::pi / 4.0;
    switch (gate.kind) {
    case GateKind::OpenControlledHadamard: {
        const int c = *gate.control;
        const int t = gate.target;
        return {Gate::x(c),  Gate::ry(t, quarter_pi), Gate::cx(c, t),
                Gate::ry(t, -quarter_pi), Gate::x(c)};
    }
    case GateKind::OpenControlledRotY: {
        const int c = *gate.control;
        const int t = gate.target;
        const double half = *gate.theta / 2.0;
        return {Gate::x(c),        Gate::ry(t, half), Gate::cx(c, t),
                Gate::ry(t, -half), Gate::cx(c, t),   Gate::x(c)};
    }
    default:
        return {gate};
    }
}

Circuit lower_circuit(const Circuit& circuit) {
    Circuit lowered(circuit.n, circuit.label.empty() ? "lowered" : circuit.label + " lowered");
    for (const Gate& gate : circuit.gates) {
        for (const Gate& out : lower_gate(gate)) {
            lowered.push(out);
        }
    }
    return lowered;
}

std::uint64_t cnot_count(std::uint64_t m) {
    const BitPlan plan = decompose(m);
    if (plan.is_power_of_two) {
        return 0;
    }
    const std::uint64_t k = static_cast<std::uint64_t>(plan.k());
    return static_cast<std::uint64_t>(plan.exponents.back() - plan.exponents.front()) +
           2 * (k - 1);
}

namespace {

using Mat4 = std::array<std::array<std::complex<double>, 4>, 4>;

// Column j of the operator, obtained by running the gates on |j> over a
// two-qubit register with the original control on q1 and target on q0.
Mat4 matrix_of(const std::vector<Gate>& gates, int control, int target) {
    const auto remap = [&](int qubit) { return qubit == control ? 1 : 0; };
    Mat4 mat{};
    for (std::uint64_t col = 0; col < 4; ++col) {
        Statevector sv = Statevector::basis(2, col);
        for (const Gate& g : gates) {
            Gate local = g;
            local.target = remap(g.target);
            if (g.control) {
                local.control = remap(*g.control);
            }
            sv.apply(local);
        }
        for (std::uint64_t row = 0; row < 4; ++row) {
            mat[row][col] = sv.amp(row);
        }
    }
    return mat;
}

} // namespace

bool verify_equivalence(const Gate& gate) {
    gate.validate();
    if (!gate.control) {
        throw std::invalid_argument("verify_equivalence: expected a controlled gate");
    }
    const Mat4 reference = matrix_of({gate}, *gate.control, gate.target);
    const Mat4 rewritten = matrix_of(lower_gate(gate), *gate.control, gate.target);

    // Factor out a global phase using the largest reference entry.
    std::uint64_t r_max = 0;
    std::uint64_t c_max = 0;
    double best = 0.0;
    for (std::uint64_t r = 0; r < 4; ++r) {
        for (std::uint64_t c = 0; c < 4; ++c) {
            if (std::abs(reference[r][c]) > best) {
                best = std::abs(reference[r][c]);
                r_max = r;
                c_max = c;
            }
        }
    }
    const std::complex<double> phase = rewritten[r_max][c_max] / reference[r_max][c_max];
    if (std::abs(std::abs(phase) - 1.0) > 1e-12) {
        return false;
    }
    for (std::uint64_t r = 0; r < 4; ++r) {
        for (std::uint64_t c = 0; c < 4; ++c) {
            if (std::abs(rewritten[r][c] - phase * reference[r][c]) >= 1e-12) {
                return false;
            }
        }
    }
    return true;
}

Circuit cancel_adjacent_x(const Circuit& circuit) {
    Circuit cleaned(circuit.n, circuit.label);
    for (const Gate& gate : circuit.gates) {
        if (gate.kind == GateKind::PauliX && !cleaned.gates.empty() &&
            cleaned.gates.back().kind == GateKind::PauliX &&
            cleaned.gates.back().target == gate.target) {
            cleaned.gates.pop_back();
            continue;
        }
        cleaned.push(gate);
    }
    return cleaned;
}

} // namespace qusp
