#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arena {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input data (non-positive price, unknown symbol, malformed fixture row).
class ValidationError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

class ProviderError : public Error {
public:
    using Error::Error;
};

// Event log corruption or sequencing violation. `seq` is the first sequence
// number that could not be accepted or read.
class IntegrityError : public Error {
public:
    IntegrityError(std::uint64_t seq, const std::string& what)
        : Error("integrity error at seq " + std::to_string(seq) + ": " + what), seq_(seq) {}

    std::uint64_t seq() const noexcept { return seq_; }

private:
    std::uint64_t seq_;
};

} // namespace arena
