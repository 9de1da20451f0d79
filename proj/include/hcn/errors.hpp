#pragma once

#include <stdexcept>

namespace hcn {

// Bad arguments: values outside an operation's domain, malformed ids,
// non-positive bounds. The CLI maps these to exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A coefficient beyond the known precision was requested. Never silently
// zero-filled; see the QSeries contract.
struct PrecisionError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Malformed persistent data (class-number cache files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hcn
