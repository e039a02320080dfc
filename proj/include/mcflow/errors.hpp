#pragma once

#include <stdexcept>
#include <string>

namespace mcflow {

enum class ErrorKind {
    invalid_parameter,
    domain_error,
    rechart_failure,
    stiffness_failure,
    numerical_failure,
    construction_failure,
    foliation_violation,
    window_invalid,
    io_error,
    config_error,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool cond, ErrorKind kind, const std::string& what)
{
    if (!cond) fail(kind, what);
}

} // namespace mcflow
