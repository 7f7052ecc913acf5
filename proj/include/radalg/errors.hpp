#pragma once

#include <stdexcept>
#include <string>

namespace radalg {

/// A configured enumeration or memory cap would be exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An F-provider returned data the construction cannot absorb.
class ProviderError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant failed; always indicates a bug in the construction.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Bad user configuration (schedule spec, caps, field).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace radalg
