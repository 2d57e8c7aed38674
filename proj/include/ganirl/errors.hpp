#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ganirl {

/// Invalid configuration (bad dimensions, malformed config file, ...).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A call violated an operation's preconditions.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Trajectory enumeration would exceed the configured cap.
class EnumerationLimitError : public std::runtime_error {
public:
    EnumerationLimitError(std::uint64_t requested, std::uint64_t cap)
        : std::runtime_error("trajectory enumeration of " + std::to_string(requested) +
                             " exceeds cap " + std::to_string(cap)),
          requested(requested),
          cap(cap) {}

    std::uint64_t requested;
    std::uint64_t cap;
};

/// The self-referential partition estimate failed to converge; carries the
/// iterate history for diagnostics.
class FixedPointDivergenceError : public std::runtime_error {
public:
    explicit FixedPointDivergenceError(std::vector<double> iterates)
        : std::runtime_error("partition fixed point did not converge in " +
                             std::to_string(iterates.size()) + " iterations"),
          history(std::move(iterates)) {}

    std::vector<double> history;
};

}  // namespace ganirl
