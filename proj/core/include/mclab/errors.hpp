#ifndef MCLAB_ERRORS_HPP
#define MCLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mclab {

// Error taxonomy mirrored by the CLI exit codes:
//   InputError -> 2, ProtocolError -> 3, LimitError -> 4.

// Malformed files, out-of-range ids, invalid arguments.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Data fed to a learner violates the realizability contract.
struct ProtocolError : std::runtime_error {
    explicit ProtocolError(const std::string& msg) : std::runtime_error(msg) {}
};

// A request exceeds a hard combinatorial cap (tree depth, vertex count, ...).
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// Lower-bound generators signal a degenerate class this way.
struct ConstructionError : std::runtime_error {
    explicit ConstructionError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace mclab

#endif
