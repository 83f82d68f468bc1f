#pragma once

#include <stdexcept>
#include <string>

namespace qfrep {

enum class ErrorKind {
    InvalidArgument,  // malformed or out-of-range input
    Domain,           // mathematically degenerate input (singular curve, pole, ...)
    Verification,     // an exact check that should hold failed
    Parse,            // malformed JSON / rational literal
    Internal
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void domain_error(const std::string& msg) { throw Error(ErrorKind::Domain, msg); }
[[noreturn]] inline void invalid_argument(const std::string& msg) {
    throw Error(ErrorKind::InvalidArgument, msg);
}

}  // namespace qfrep
