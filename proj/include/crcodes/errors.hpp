#pragma once

#include <stdexcept>
#include <string>

namespace crc {

// Invalid argument relative to the mathematical contract (bad q, shape, index).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed serialized input.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation would exceed a configured guard.
struct ResourceError : std::runtime_error {
    ResourceError(std::string guard_name, const std::string& what)
        : std::runtime_error(what), guard(std::move(guard_name)) {}
    std::string guard;
};

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal consistency assertion failed; always a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace crc
