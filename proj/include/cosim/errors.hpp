#pragma once

#include <stdexcept>
#include <string>

namespace cosim {

// Configuration file problems: missing file, bad JSON, bad values.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Socket-level failures (bind, connect, peer closed mid-frame).
class TransportError : public std::runtime_error {
public:
    explicit TransportError(const std::string& msg) : std::runtime_error(msg) {}
};

// Access outside any mapped peripheral region.
class BusError : public std::runtime_error {
public:
    explicit BusError(const std::string& msg) : std::runtime_error(msg) {}
};

// Iterative solver failed to converge.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cosim
