#pragma once

// Emits the O(log2 m) state-preparation circuits driven by a BitPlan.
//
// For m = 2^r the circuit is r Hadamards. Otherwise the gate order is:
//   1. X on q_{l_1}..q_{l_k}                       (ascending qubit index)
//   2. H on q_0..q_{l_0 - 1}                       (only when l_0 > 0)
//   3. R_Y(theta_0) on q_{l_1}
//   4. open-controlled H, control q_{l_1}, targets q_{l_0}..q_{l_1 - 1}
//   5. for r = 1..k-1:
//        open-controlled R_Y(theta_r), control q_{l_r}, target q_{l_{r+1}}
//        open-controlled H, control q_{l_{r+1}}, targets q_{l_r}..q_{l_{r+1} - 1}
//
// The controlled-H fans are emitted as separate two-qubit gates sharing one
// control; no multi-target or multi-control gates appear in the IR.

#include <cstdint>
#include <optional>
#include <span>

#include "qusp/circuit.hpp"

namespace qusp {

/// Circuit preparing (1/sqrt(m)) * sum_{j=0}^{m-1} |j>.
Circuit build_uniform(std::uint64_t m, std::optional<int> n_override = std::nullopt);

/// Same gate skeleton as build_uniform(m) with the k rotation angles replaced
/// by the caller's values. Each angle theta implies the coefficient pair
/// (a, b) = (-sin(theta/2), cos(theta/2)); callers holding (a, b) pairs can
/// convert with angle_for_pair(). Requires m not a power of two and exactly
/// k angles.
Circuit build_general(std::uint64_t m, std::span<const double> angles,
                      std::optional<int> n_override = std::nullopt);

/// Uniform superposition over n_agents^3 states on max(n_agents,
/// required_qubits(n_agents^3)) qubits, as used by quantum Byzantine
/// agreement. Requires n_agents >= 2.
Circuit build_qba(std::uint64_t n_agents);

} // namespace qusp
