#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace degcorr {

enum class ErrorKind {
    invalid_parameter,
    empty_input,
    incompatible_inputs,
    unsupported_mode,
    invalid_state,
    parse_error,
    io_error,
    usage,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
    if (!condition) fail(kind, message);
}

}  // namespace degcorr
