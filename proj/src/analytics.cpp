#include "qusp/analytics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qusp/builder.hpp"
#include "qusp/lowering.hpp"
#include "qusp/plan.hpp"

namespace qusp {

CountReport report(std::uint64_t m) {
    const BitPlan plan = decompose(m);
    const Circuit circuit = build_uniform(m);
    const Circuit lowered = lower_circuit(circuit);

    CountReport rep;
    rep.m = m;
    rep.k = plan.k();
    rep.l0 = plan.exponents.front();
    rep.lk = plan.exponents.back();
    rep.is_power_of_two = plan.is_power_of_two;
    rep.total_gates = plan.is_power_of_two
                          ? static_cast<std::uint64_t>(plan.exponents.front())
                          : static_cast<std::uint64_t>(plan.exponents.back()) +
                                2 * static_cast<std::uint64_t>(plan.k());
    rep.cnot_predicted = cnot_count(m);
    rep.cnot_measured = tally(lowered)[GateKind::ControlledNot];
    rep.depth_measured = depth(circuit);
    rep.lower_bound = std::log2(static_cast<double>(m));
    rep.upper_bound = 3.0 * (std::log2(static_cast<double>(m) + 1.0) - 1.0);
    rep.qiskit_reference = qiskit_reference(m);
    return rep;
}

std::optional<std::uint64_t> qiskit_reference(std::uint64_t m) {
    for (int r = 2; r < 63; ++r) {
        const std::uint64_t pow = std::uint64_t{1} << r;
        if (m == pow - 1) {
            return pow - 2;
        }
        if (m == pow + 2) {
            return pow + 2 * static_cast<std::uint64_t>(r) - 2;
        }
        if (r >= 3 && m == pow + 1) {
            return 2 * static_cast<std::uint64_t>(r);
        }
        if (r >= 3 && m == pow - 2) {
            return pow - 2;
        }
    }
    return std::nullopt;
}

std::vector<CountReport> sweep(std::uint64_t m_lo, std::uint64_t m_hi) {
    if (m_lo < 2 || m_lo > m_hi) {
        throw std::invalid_argument("sweep: need 2 <= m_lo <= m_hi");
    }
    std::vector<CountReport> reports;
    reports.reserve(m_hi - m_lo + 1);
    for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
        reports.push_back(report(m));
    }
    return reports;
}

namespace {

std::string fmt_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

} // namespace

void write_reports_csv(std::ostream& os, std::span<const CountReport> reports) {
    os << "m,k,l0,lk,total,cnot_pred,cnot_meas,depth,lb,ub,qiskit_ref\n";
    for (const CountReport& r : reports) {
        os << r.m << ',' << r.k << ',' << r.l0 << ',' << r.lk << ',' << r.total_gates << ','
           << r.cnot_predicted << ',' << r.cnot_measured << ',' << r.depth_measured << ','
           << fmt_double(r.lower_bound) << ',' << fmt_double(r.upper_bound) << ',';
        if (r.qiskit_reference) {
            os << *r.qiskit_reference;
        }
        os << '\n';
    }
}

void write_reports_json(std::ostream& os, std::span<const CountReport> reports) {
    nlohmann::ordered_json doc;
    doc["qiskit_reference_version"] = kQiskitReferenceVersion;
    doc["reports"] = nlohmann::ordered_json::array();
    for (const CountReport& r : reports) {
        nlohmann::ordered_json row;
        row["m"] = r.m;
        row["k"] = r.k;
        row["l0"] = r.l0;
        row["lk"] = r.lk;
        row["total"] = r.total_gates;
        row["cnot_pred"] = r.cnot_predicted;
        row["cnot_meas"] = r.cnot_measured;
        row["depth"] = r.depth_measured;
        row["lb"] = r.lower_bound;
        row["ub"] = r.upper_bound;
        if (r.qiskit_reference) {
            row["qiskit_ref"] = *r.qiskit_reference;
        } else {
            row["qiskit_ref"] = nullptr;
        }
        doc["reports"].push_back(std::move(row));
    }
    os << doc.dump(2) << '\n';
}

} // namespace qusp
