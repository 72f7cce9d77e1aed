#pragma once

#include <stdexcept>
#include <string>

namespace conmatch {

struct ClassUnderflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyPool : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownOp : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonFiniteLoss : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateLabels : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Configuration/validation failure; `key` names the offending entry.
struct ConfigError : std::runtime_error {
    std::string key;
    ConfigError(std::string k, const std::string& message)
        : std::runtime_error(message), key(std::move(k)) {}
};

} // namespace conmatch
