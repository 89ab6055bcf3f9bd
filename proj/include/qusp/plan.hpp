#pragma once

// Binary-decomposition planning for superposition-state circuits.
//
// Every circuit this library emits is parameterized by the set-bit positions
// l_0 < l_1 < ... < l_k of the state count M, the partial sums
// M_r = sum_{j<=r} 2^{l_j}, and one rotation angle per partial sum:
//
//     theta_r = -2 * arccos( sqrt( 2^{l_r} / (M - M_{r-1}) ) ),   M_{-1} = 0.
//
// The rotation R_Y(theta_r) maps |1> to a_r|0> + b_r|1> with
// b_r = sqrt(2^{l_r} / (M - M_{r-1})) and a_r = sqrt((M - M_r) / (M - M_{r-1})),
// which makes every block amplitude collapse to 1/sqrt(M). Replacing the
// angles with arbitrary values produces a piecewise-uniform state whose block
// amplitudes are predicted by predict_amplitudes().

#include <cstdint>
#include <optional>
#include <vector>

namespace qusp {

/// Full parameterization of the state-preparation circuit for a given m.
struct BitPlan {
    std::uint64_t m = 0;                     ///< number of superposed states, >= 2
    int n = 0;                               ///< register width, >= ceil(log2 m)
    std::vector<int> exponents;              ///< l_0 < l_1 < ... < l_k, set bits of m
    std::vector<std::uint64_t> partial_sums; ///< M_r = sum_{j<=r} 2^{l_j}; M_k == m
    std::vector<double> thetas;              ///< theta_0..theta_{k-1}, radians, each in (-pi, 0)
    bool is_power_of_two = false;            ///< k == 0; Hadamard-only circuit

    /// Index of the last exponent (popcount(m) - 1).
    int k() const { return static_cast<int>(exponents.size()) - 1; }
};

/// One rotation's action on |1>: R_Y(theta)|1> = a|0> + b|1>.
/// Satisfies a^2 + b^2 = 1.
struct CoefficientPair {
    double a = 0.0;
    double b = 0.0;
};

/// A run of 2^{l_r} consecutive basis states sharing one amplitude.
struct AmplitudeBlock {
    double gamma = 0.0;             ///< common amplitude of the block
    std::uint64_t block_start = 0;  ///< first basis index, m - M_r
    std::uint64_t block_len = 0;    ///< 2^{l_r}
};

/// Predicted output profile: blocks r = 0..k, disjoint, covering [0, m).
using AmplitudeProfile = std::vector<AmplitudeBlock>;

/// Smallest register that can hold basis states 0..m-1.
int required_qubits(std::uint64_t m);

/// Decompose m into its bit plan.
///
/// n_override embeds the state in a wider register (unused high qubits stay
/// |0>). Throws std::invalid_argument for m < 2 and CapacityError when
/// n_override is smaller than required_qubits(m).
BitPlan decompose(std::uint64_t m, std::optional<int> n_override = std::nullopt);

/// The (a_r, b_r) pairs realized by the plan's own angles, r = 0..k-1.
/// Empty for a power-of-two plan.
std::vector<CoefficientPair> coefficients(const BitPlan& plan);

/// Block amplitudes gamma_r for the plan, using the plan's own coefficient
/// pairs or caller-supplied overrides (length k, each normalized to 1e-12).
///
///   gamma_0 = b_0 / sqrt(2^{l_0})
///   gamma_r = a_0...a_{r-1} b_r / sqrt(2^{l_r})    0 < r < k
///   gamma_k = a_0...a_{k-1} / sqrt(2^{l_k})
///
/// Without overrides every gamma_r equals 1/sqrt(m).
AmplitudeProfile predict_amplitudes(
    const BitPlan& plan,
    const std::optional<std::vector<CoefficientPair>>& overrides = std::nullopt);

/// Expand a profile into per-basis-state amplitudes over an n-qubit register.
std::vector<double> dense_amplitudes(const AmplitudeProfile& profile, int n);

/// (a, b) = (-sin(theta/2), cos(theta/2)); the pair realized by R_Y(theta)|1>.
CoefficientPair pair_for_angle(double theta);

/// Inverse of pair_for_angle for the sign convention a, b >= 0: returns
/// theta = -2*arccos(b) in [-pi, 0]. Throws std::invalid_argument if the
/// pair is unnormalized or has a negative component.
double angle_for_pair(const CoefficientPair& pair);

} // namespace qusp
