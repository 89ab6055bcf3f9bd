#include "qusp/plan.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "qusp/errors.hpp"

namespace qusp {

int required_qubits(std::uint64_t m) {
    if (m < 2) {
        throw std::invalid_argument("required_qubits: m must be at least 2");
    }
    return std::bit_width(m - 1);
}

BitPlan decompose(std::uint64_t m, std::optional<int> n_override) {
    if (m < 2) {
        throw std::invalid_argument("decompose: m must be at least 2");
    }
    const int n_min = required_qubits(m);
    const int n = n_override.value_or(n_min);
    if (n < n_min) {
        throw CapacityError("decompose: " + std::to_string(n) + " qubits cannot hold " +
                            std::to_string(m) + " basis states (need " + std::to_string(n_min) +
                            ")");
    }

    BitPlan plan;
    plan.m = m;
    plan.n = n;
    std::uint64_t running = 0;
    for (int bit = 0; bit < 64; ++bit) {
        if ((m >> bit) & 1u) {
            plan.exponents.push_back(bit);
            running += std::uint64_t{1} << bit;
            plan.partial_sums.push_back(running);
        }
    }
    assert(running == m && plan.partial_sums.back() == m);
    plan.is_power_of_two = plan.exponents.size() == 1;

    // theta_r = -2 arccos(sqrt(2^{l_r} / (m - M_{r-1}))), M_{-1} = 0. The
    // ratio is strictly below 1 for every r < k, so each angle lands in
    // (-pi, 0).
    const int k = plan.k();
    std::uint64_t m_prev = 0;
    for (int r = 0; r < k; ++r) {
        const double ratio = static_cast<double>(std::uint64_t{1} << plan.exponents[r]) /
                             static_cast<double>(m - m_prev);
        const double theta = -2.0 * std::acos(std::sqrt(ratio));
        assert(theta < 0.0 && theta > -3.141592653589794);
        plan.thetas.push_back(theta);
        m_prev = plan.partial_sums[r];
    }
    return plan;
}

std::vector<CoefficientPair> coefficients(const BitPlan& plan) {
    std::vector<CoefficientPair> pairs;
    const int k = plan.k();
    pairs.reserve(k);
    std::uint64_t m_prev = 0;
    for (int r = 0; r < k; ++r) {
        const double denom = static_cast<double>(plan.m - m_prev);
        const double block = static_cast<double>(std::uint64_t{1} << plan.exponents[r]);
        const double rest = static_cast<double>(plan.m - plan.partial_sums[r]);
        pairs.push_back({std::sqrt(rest / denom), std::sqrt(block / denom)});
        m_prev = plan.partial_sums[r];
    }
    return pairs;
}

AmplitudeProfile predict_amplitudes(const BitPlan& plan,
                                    const std::optional<std::vector<CoefficientPair>>& overrides) {
    const int k = plan.k();
    std::vector<CoefficientPair> pairs;
    if (overrides) {
        if (static_cast<int>(overrides->size()) != k) {
            throw std::invalid_argument("predict_amplitudes: expected " + std::to_string(k) +
                                        " coefficient pairs, got " +
                                        std::to_string(overrides->size()));
        }
        for (const CoefficientPair& p : *overrides) {
            if (std::abs(p.a * p.a + p.b * p.b - 1.0) > 1e-12) {
                throw std::invalid_argument(
                    "predict_amplitudes: coefficient pair violates a^2 + b^2 = 1");
            }
        }
        pairs = *overrides;
    } else {
        pairs = coefficients(plan);
    }

    AmplitudeProfile profile;
    profile.reserve(k + 1);
    double prefix = 1.0; // a_0 a_1 ... a_{r-1}
    for (int r = 0; r <= k; ++r) {
        const std::uint64_t len = std::uint64_t{1} << plan.exponents[r];
        const double scale = std::sqrt(static_cast<double>(len));
        const double gamma = (r == k) ? prefix / scale : prefix * pairs[r].b / scale;
        profile.push_back({gamma, plan.m - plan.partial_sums[r], len});
        if (r < k) {
            prefix *= pairs[r].a;
        }
    }
    return profile;
}

std::vector<double> dense_amplitudes(const AmplitudeProfile& profile, int n) {
    std::vector<double> amps(std::uint64_t{1} << n, 0.0);
    for (const AmplitudeBlock& block : profile) {
        if (block.block_start + block.block_len > amps.size()) {
            throw std::invalid_argument("dense_amplitudes: block exceeds register");
        }
        for (std::uint64_t j = 0; j < block.block_len; ++j) {
            amps[block.block_start + j] = block.gamma;
        }
    }
    return amps;
}

CoefficientPair pair_for_angle(double theta) {
    return {-std::sin(theta / 2.0), std::cos(theta / 2.0)};
}

double angle_for_pair(const CoefficientPair& pair) {
    if (pair.a < 0.0 || pair.b < 0.0) {
        throw std::invalid_argument("angle_for_pair: requires a >= 0 and b >= 0");
    }
    if (std::abs(pair.a * pair.a + pair.b * pair.b - 1.0) > 1e-12) {
        throw std::invalid_argument("angle_for_pair: pair violates a^2 + b^2 = 1");
    }
    return -2.0 * std::acos(std::min(pair.b, 1.0));
}

} // namespace qusp
