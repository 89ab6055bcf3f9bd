#pragma once

// Closed-form gate and CNOT predictions, measured counts, bound curves, and
// the published per-family reference counts for comparison sweeps.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace qusp {

/// Qiskit release whose transpiler the reference-count formulas describe.
/// The formulas are static data; nothing here shells out to any framework.
inline constexpr std::string_view kQiskitReferenceVersion = "0.43.1";

struct CountReport {
    std::uint64_t m = 0;
    int k = 0;                    ///< last exponent index (popcount - 1)
    int l0 = 0;
    int lk = 0;
    bool is_power_of_two = false;
    std::uint64_t total_gates = 0;    ///< l_k + 2k, or log2 m for powers of two
    std::uint64_t cnot_predicted = 0; ///< (l_k - l_0) + 2(k - 1), 0 for powers of two
    std::uint64_t cnot_measured = 0;  ///< CNOT tally of the lowered circuit
    std::uint64_t depth_measured = 0; ///< depth of the unlowered circuit
    double lower_bound = 0.0;         ///< log2 m
    double upper_bound = 0.0;         ///< 3 (log2(m + 1) - 1)
    std::optional<std::uint64_t> qiskit_reference;
};

/// Build, lower and measure the uniform circuit for m, alongside the
/// closed-form predictions.
CountReport report(std::uint64_t m);

/// Reference CNOT count for the covered families:
///   m = 2^r - 1 (r >= 2) -> 2^r - 2        m = 2^r + 2 (r >= 2) -> 2^r + 2r - 2
///   m = 2^r + 1 (r >= 3) -> 2r             m = 2^r - 2 (r >= 3) -> 2^r - 2
/// absent for every other m.
std::optional<std::uint64_t> qiskit_reference(std::uint64_t m);

/// One report per m in [m_lo, m_hi], ordered by m.
std::vector<CountReport> sweep(std::uint64_t m_lo, std::uint64_t m_hi);

/// CSV with header m,k,l0,lk,total,cnot_pred,cnot_meas,depth,lb,ub,qiskit_ref.
void write_reports_csv(std::ostream& os, std::span<const CountReport> reports);

/// JSON mirror of the CSV fields plus the reference version string.
void write_reports_json(std::ostream& os, std::span<const CountReport> reports);

} // namespace qusp
