#pragma once

// Rewrites the IR's controlled gates into CNOT plus single-qubit gates.
//
// Closed-control identities (left to right = application order):
//   controlled-H       = R_Y(pi/4) target; CNOT; R_Y(-pi/4) target
//   controlled-R_Y(t)  = R_Y(t/2) target; CNOT; R_Y(-t/2) target; CNOT
// both exact: R_Y(-pi/4) X R_Y(pi/4) = H and X R_Y(-t/2) X R_Y(t/2) = R_Y(t).
// Open controls are realized by X-conjugating the control wire, so an
// open-controlled H costs 1 CNOT and an open-controlled R_Y costs 2.

#include <cstdint>
#include <vector>

#include "qusp/circuit.hpp"

namespace qusp {

/// Rewrite one gate into {single-qubit, ControlledNot/OpenControlledNot}
/// gates, unitarily equal up to global phase. Non-controlled gates and CNOT
/// kinds pass through unchanged.
std::vector<Gate> lower_gate(const Gate& gate);

/// lower_gate over every gate, in order.
Circuit lower_circuit(const Circuit& circuit);

/// CNOT total of the lowered uniform-superposition circuit for m:
/// 0 when m is a power of two, (l_k - l_0) + 2(k - 1) otherwise.
std::uint64_t cnot_count(std::uint64_t m);

/// Check a two-qubit controlled gate against its lowering by brute-force
/// 4x4 matrix comparison (columns from basis-state application), equal up to
/// global phase with max elementwise deviation < 1e-12.
bool verify_equivalence(const Gate& gate);

/// Optional cleanup: drop adjacent X-X pairs on the same qubit, as produced
/// between consecutive lowered gates sharing a control. Never changes CNOT
/// counts or the prepared state.
Circuit cancel_adjacent_x(const Circuit& circuit);

} // namespace qusp
