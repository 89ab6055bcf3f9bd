#pragma once

// Dense statevector engine. Gates act in place on the 2^n amplitude array
// via target-bit pair enumeration and control-bit masking; no gate matrix is
// ever expanded to 2^n x 2^n.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qusp/circuit.hpp"

namespace qusp {

/// Maximum register width accepted by the simulator. Defaults to 24 qubits
/// (256 MiB of complex doubles); override with the QUSP_QUBIT_CAP
/// environment variable.
int qubit_cap();

class Statevector {
public:
    /// |0...0> on n qubits. Throws CapacityError for n < 1 or n > qubit_cap().
    explicit Statevector(int n);

    /// Basis state |index> on n qubits.
    static Statevector basis(int n, std::uint64_t index);

    int num_qubits() const { return n_; }
    std::uint64_t size() const { return static_cast<std::uint64_t>(amps_.size()); }
    std::complex<double> amp(std::uint64_t index) const { return amps_.at(index); }
    std::span<const std::complex<double>> amplitudes() const { return amps_; }

    /// Apply one gate in place. Throws std::invalid_argument when a qubit
    /// index is out of range.
    void apply(const Gate& gate);

    double norm() const;

    /// |amps[j]|^2 for every basis state.
    std::vector<double> probabilities() const;

private:
    void apply_one_qubit(int target, int control, int control_value, double u00, double u01,
                         double u10, double u11);

    int n_;
    std::vector<std::complex<double>> amps_;
};

/// Fold the circuit's gates over |0...0>.
Statevector run(const Circuit& circuit);

/// Fold the circuit's gates over a caller-supplied initial state, whose
/// width must equal circuit.n.
Statevector run(const Circuit& circuit, Statevector initial);

} // namespace qusp
