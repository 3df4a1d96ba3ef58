#pragma once

#include <stdexcept>
#include <string>

namespace icsfdi {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Codec errors.
struct DecodeError : Error {
    using Error::Error;
};
struct DataTooLong : Error {
    using Error::Error;
};
struct Truncated : DecodeError {
    using DecodeError::DecodeError;
};
struct BadProtoId : DecodeError {
    using DecodeError::DecodeError;
};

// Trace / config file errors.
struct FormatError : Error {
    FormatError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    explicit FormatError(const std::string& msg) : Error(msg), line(0) {}
    std::size_t line;
};
struct VersionError : Error {
    using Error::Error;
};
struct ConfigInvalid : Error {
    using Error::Error;
};

// Inference errors.
struct NoPeriodFound : Error {
    using Error::Error;
};
struct GroupTooSmall : Error {
    using Error::Error;
};

// Injection errors.
struct PolicyViolation : Error {
    using Error::Error;
};
struct UnknownFlow : Error {
    using Error::Error;
};
struct ConnectFailed : Error {
    using Error::Error;
};

}  // namespace icsfdi
