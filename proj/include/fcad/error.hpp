#pragma once

#include <stdexcept>
#include <string>

namespace fcad {

// Failure categories, aligned with the CLI exit codes: bad input data or
// misuse (2), a structure that failed validation (1), and requests that
// exceed a configured enumeration bound (3).
enum class ErrorKind {
    InvalidInput,
    Validation,
    SizeLimit,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& msg) {
    throw Error(ErrorKind::InvalidInput, msg);
}
[[noreturn]] inline void fail_validation(const std::string& msg) {
    throw Error(ErrorKind::Validation, msg);
}
[[noreturn]] inline void fail_limit(const std::string& msg) {
    throw Error(ErrorKind::SizeLimit, msg);
}

}  // namespace fcad
