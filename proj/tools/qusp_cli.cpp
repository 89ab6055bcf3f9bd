// Command-line front end: synthesize circuits to OpenQASM/JSON, verify
// prepared states against their predicted amplitude profiles, sweep gate and
// CNOT counts to CSV/JSON, and export sampling probabilities.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qusp/analytics.hpp"
#include "qusp/builder.hpp"
#include "qusp/errors.hpp"
#include "qusp/io.hpp"
#include "qusp/lowering.hpp"
#include "qusp/plan.hpp"
#include "qusp/statevector.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct RangeSpec {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

RangeSpec parse_range(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
        throw CLI::ValidationError("--range", "expected LO:HI");
    }
    RangeSpec range;
    range.lo = std::stoull(text.substr(0, colon));
    range.hi = std::stoull(text.substr(colon + 1));
    if (range.lo < 2 || range.lo > range.hi) {
        throw CLI::ValidationError("--range", "need 2 <= LO <= HI");
    }
    return range;
}

// Default rotation angles with an optional forced zero at index s (which
// collapses the amplitude of every block above s onto block s).
std::vector<double> effective_angles(const qusp::BitPlan& plan,
                                     const std::vector<double>& explicit_angles,
                                     std::optional<int> zero_angle_at) {
    std::vector<double> angles = explicit_angles.empty() ? plan.thetas : explicit_angles;
    if (zero_angle_at) {
        if (*zero_angle_at < 0 || *zero_angle_at >= plan.k()) {
            throw CLI::ValidationError("--zero-angle-at",
                                       "index must lie in [0, k) for this m");
        }
        angles[*zero_angle_at] = 0.0;
    }
    return angles;
}

bool uses_custom_angles(const std::vector<double>& explicit_angles,
                        std::optional<int> zero_angle_at) {
    return !explicit_angles.empty() || zero_angle_at.has_value();
}

qusp::Circuit synthesize(std::uint64_t m, std::optional<int> n_override,
                         const std::vector<double>& explicit_angles,
                         std::optional<int> zero_angle_at) {
    const qusp::BitPlan plan = qusp::decompose(m, n_override);
    if (!uses_custom_angles(explicit_angles, zero_angle_at)) {
        return qusp::build_uniform(m, n_override);
    }
    const std::vector<double> angles = effective_angles(plan, explicit_angles, zero_angle_at);
    return qusp::build_general(m, angles, n_override);
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        throw std::runtime_error("cannot open output file: " + out_path);
    }
    os << payload;
}

// Max deviation between the simulated state and the predicted block profile.
double profile_deviation(const qusp::Statevector& sv, const qusp::AmplitudeProfile& profile) {
    const std::vector<double> expected = qusp::dense_amplitudes(profile, sv.num_qubits());
    double worst = 0.0;
    for (std::uint64_t j = 0; j < sv.size(); ++j) {
        worst = std::max(worst, std::abs(sv.amp(j) - std::complex<double>(expected[j], 0.0)));
    }
    return worst;
}

int cmd_verify(const RangeSpec& range, double tol, const std::vector<double>& explicit_angles,
               std::optional<int> zero_angle_at) {
    bool all_pass = true;
    for (std::uint64_t m = range.lo; m <= range.hi; ++m) {
        const qusp::BitPlan plan = qusp::decompose(m);
        const qusp::Circuit circuit = synthesize(m, std::nullopt, explicit_angles, zero_angle_at);

        std::optional<std::vector<qusp::CoefficientPair>> overrides;
        if (uses_custom_angles(explicit_angles, zero_angle_at)) {
            const std::vector<double> angles =
                effective_angles(plan, explicit_angles, zero_angle_at);
            std::vector<qusp::CoefficientPair> pairs;
            pairs.reserve(angles.size());
            for (double theta : angles) {
                pairs.push_back(qusp::pair_for_angle(theta));
            }
            overrides = std::move(pairs);
        }
        const qusp::AmplitudeProfile profile = qusp::predict_amplitudes(plan, overrides);

        const double deviation = profile_deviation(qusp::run(circuit), profile);
        const bool pass = deviation <= tol;
        all_pass = all_pass && pass;
        std::cout << "m=" << m << (pass ? " pass" : " FAIL") << " (max deviation " << deviation
                  << ")\n";
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Logarithmic-depth circuits for uniform and block-uniform superposition states"};
    app.require_subcommand(1);

    // synth
    auto* synth = app.add_subcommand("synth", "Emit a state-preparation circuit");
    std::uint64_t synth_m = 0;
    std::optional<int> synth_n;
    std::vector<double> synth_angles;
    std::string synth_format = "qasm";
    std::string synth_out;
    bool synth_raw = false;
    synth->add_option("--m", synth_m, "Number of superposed states")->required();
    synth->add_option("--n", synth_n, "Register width (defaults to ceil(log2 m))");
    synth->add_option("--angles", synth_angles, "Rotation-angle overrides, radians")
        ->delimiter(',');
    synth->add_option("--format", synth_format, "Output format")
        ->check(CLI::IsMember({"qasm", "json"}));
    synth->add_option("--out", synth_out, "Output path (default stdout)");
    synth->add_flag("--raw", synth_raw,
                    "Annotate QASM with the pre-lowering controlled gates as comments");

    // verify
    auto* verify = app.add_subcommand("verify", "Simulate and check prepared states");
    std::optional<std::uint64_t> verify_m;
    std::string verify_range;
    double verify_tol = 1e-10;
    std::vector<double> verify_angles;
    std::optional<int> verify_zero_at;
    verify->add_option("--m", verify_m, "Single state count to verify");
    verify->add_option("--range", verify_range, "Inclusive range LO:HI of state counts");
    verify->add_option("--tol", verify_tol, "Per-amplitude tolerance")->capture_default_str();
    verify->add_option("--angles", verify_angles, "Rotation-angle overrides, radians")
        ->delimiter(',');
    verify->add_option("--zero-angle-at", verify_zero_at, "Force angle at index s to zero");

    // counts
    auto* counts = app.add_subcommand("counts", "Gate/CNOT count sweep");
    std::string counts_range;
    std::string counts_out;
    bool counts_json = false;
    counts->add_option("--range", counts_range, "Inclusive range LO:HI of state counts")
        ->required();
    counts->add_option("--out", counts_out, "Output path (default stdout)");
    counts->add_flag("--json", counts_json, "Emit JSON instead of CSV");

    // probs
    auto* probs = app.add_subcommand("probs", "Sampling probabilities of the prepared state");
    std::uint64_t probs_m = 0;
    std::optional<int> probs_n;
    std::vector<double> probs_angles;
    std::optional<int> probs_zero_at;
    std::string probs_out;
    probs->add_option("--m", probs_m, "Number of superposed states")->required();
    probs->add_option("--n", probs_n, "Register width (defaults to ceil(log2 m))");
    probs->add_option("--angles", probs_angles, "Rotation-angle overrides, radians")
        ->delimiter(',');
    probs->add_option("--zero-angle-at", probs_zero_at, "Force angle at index s to zero");
    probs->add_option("--out", probs_out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);

        if (synth->parsed()) {
            const qusp::Circuit circuit =
                synthesize(synth_m, synth_n, synth_angles, std::nullopt);
            if (synth_format == "qasm") {
                write_output(synth_out, qusp::emit_qasm(circuit, synth_raw));
            } else {
                write_output(synth_out, qusp::circuit_to_json(circuit).dump(2) + "\n");
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            RangeSpec range;
            if (verify_m && verify_range.empty()) {
                range = {*verify_m, *verify_m};
            } else if (!verify_m && !verify_range.empty()) {
                range = parse_range(verify_range);
            } else {
                std::cerr << "verify: give exactly one of --m or --range\n";
                return kExitUsage;
            }
            if (range.lo != range.hi &&
                uses_custom_angles(verify_angles, verify_zero_at)) {
                std::cerr << "verify: angle overrides need a single --m\n";
                return kExitUsage;
            }
            return cmd_verify(range, verify_tol, verify_angles, verify_zero_at);
        }

        if (counts->parsed()) {
            const RangeSpec range = parse_range(counts_range);
            const std::vector<qusp::CountReport> reports = qusp::sweep(range.lo, range.hi);
            std::ostringstream os;
            if (counts_json) {
                qusp::write_reports_json(os, reports);
            } else {
                qusp::write_reports_csv(os, reports);
            }
            write_output(counts_out, os.str());
            return kExitOk;
        }

        if (probs->parsed()) {
            const qusp::Circuit circuit =
                synthesize(probs_m, probs_n, probs_angles, probs_zero_at);
            std::ostringstream os;
            qusp::write_probabilities_csv(os, qusp::run(circuit));
            write_output(probs_out, os.str());
            return kExitOk;
        }

        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
