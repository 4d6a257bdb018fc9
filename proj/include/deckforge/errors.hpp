#pragma once

#include <stdexcept>
#include <string>

namespace deckforge {

// Bad input: malformed graphs, out-of-range indices, unparseable files.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was hit. The message names the cap and its value.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal self-check failed (e.g. a normal-form certificate). Always a bug.
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace deckforge
