#pragma once

#include <stdexcept>
#include <string>

namespace qusp {

/// Thrown when a request exceeds a configured resource limit (register too
/// small for the state, statevector larger than the qubit cap, ...).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qusp
