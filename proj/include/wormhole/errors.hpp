#pragma once

#include <stdexcept>
#include <string>

namespace wormhole {

// Bad user-facing input (malformed chains, out-of-range arguments). CLI exit 1.
struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string& msg) : std::invalid_argument(msg) {}
};

// A mathematical invariant that the library guarantees failed to hold.
// Reaching this means either corrupted input slipped past validation or a
// genuine finding against the theory. CLI exit 2.
struct InvariantFailure : std::logic_error {
    explicit InvariantFailure(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace wormhole
