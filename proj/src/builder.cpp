#include "qusp/builder.hpp"

#include <stdexcept>
#include <string>

#include "qusp/plan.hpp"

namespace qusp {
namespace {

Circuit build_from_plan(const BitPlan& plan, std::span<const double> angles, std::string label) {
    Circuit circuit(plan.n, std::move(label));
    const std::vector<int>& l = plan.exponents;

    if (plan.is_power_of_two) {
        for (int i = 0; i < l[0]; ++i) {
            circuit.push(Gate::h(i));
        }
        return circuit;
    }

    const int k = plan.k();
    for (int r = 1; r <= k; ++r) {
        circuit.push(Gate::x(l[r]));
    }
    for (int i = 0; i < l[0]; ++i) {
        circuit.push(Gate::h(i));
    }
    circuit.push(Gate::ry(l[1], angles[0]));
    for (int i = l[0]; i < l[1]; ++i) {
        circuit.push(Gate::open_ch(l[1], i));
    }
    for (int r = 1; r < k; ++r) {
        circuit.push(Gate::open_cry(l[r], l[r + 1], angles[r]));
        for (int i = l[r]; i < l[r + 1]; ++i) {
            circuit.push(Gate::open_ch(l[r + 1], i));
        }
    }
    return circuit;
}

} // namespace

Circuit build_uniform(std::uint64_t m, std::optional<int> n_override) {
    const BitPlan plan = decompose(m, n_override);
    return build_from_plan(plan, plan.thetas, "uniform m=" + std::to_string(m));
}

Circuit build_general(std::uint64_t m, std::span<const double> angles,
                      std::optional<int> n_override) {
    const BitPlan plan = decompose(m, n_override);
    if (plan.is_power_of_two) {
        throw std::invalid_argument("build_general: m must not be a power of two");
    }
    if (static_cast<int>(angles.size()) != plan.k()) {
        throw std::invalid_argument("build_general: expected " + std::to_string(plan.k()) +
                                    " angles, got " + std::to_string(angles.size()));
    }
    return build_from_plan(plan, angles, "general m=" + std::to_string(m));
}

Circuit build_qba(std::uint64_t n_agents) {
    if (n_agents < 2) {
        throw std::invalid_argument("build_qba: need at least 2 agents");
    }
    if (n_agents > 2642245) { // cube would overflow 64 bits
        throw std::invalid_argument("build_qba: n_agents too large");
    }
    const std::uint64_t m = n_agents * n_agents * n_agents;
    const int n = std::max(static_cast<int>(n_agents), required_qubits(m));
    Circuit circuit = build_uniform(m, n);
    circuit.label = "QBA n=" + std::to_string(n_agents) + " m=" + std::to_string(m);
    return circuit;
}

} // namespace qusp
