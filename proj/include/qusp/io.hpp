#pragma once

// Serialization surfaces: the JSON circuit schema, OpenQASM 2.0 emission
// restricted to {x, h, z, ry, cx}, a parser for that same subset, and the
// probability CSV.

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qusp/circuit.hpp"
#include "qusp/statevector.hpp"

namespace qusp {

/// {"n": int, "label": string, "gates": [{"kind", "target", "control",
/// "theta"}]} with exactly that field order; control/theta are null when
/// absent.
nlohmann::ordered_json circuit_to_json(const Circuit& circuit);

/// Inverse of circuit_to_json. Throws std::invalid_argument on schema
/// violations.
Circuit circuit_from_json(const nlohmann::json& j);

/// OpenQASM 2.0 text. Controlled IR gates are emitted in lowered form so the
/// output uses only {x, h, z, ry, cx}; with raw_comments each controlled IR
/// gate is additionally announced by a comment line. Angles carry 17
/// significant digits.
std::string emit_qasm(const Circuit& circuit, bool raw_comments = false);

/// Parse the emitted subset back into a circuit (x, h, z, ry, cx over one
/// qreg named q; comments ignored). Throws std::invalid_argument on any
/// construct outside that subset.
Circuit parse_qasm(std::string_view text);

/// CSV with header index,probability and one row per basis state.
void write_probabilities_csv(std::ostream& os, const Statevector& sv);

} // namespace qusp
