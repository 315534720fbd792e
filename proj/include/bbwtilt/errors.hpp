#pragma once

#include <stdexcept>
#include <string>

namespace bbwtilt {

/// Malformed textual input (weights, expressions, registry files).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An invariant the algorithms guarantee was violated; indicates a bug or corrupt data.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The stable-range decomposition of a symbolic expression did not stabilise.
class StabilityFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bbwtilt
