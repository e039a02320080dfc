#include "mcflow/errors.hpp"

namespace mcflow {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::domain_error: return "domain-error";
    case ErrorKind::rechart_failure: return "rechart-failure";
    case ErrorKind::stiffness_failure: return "stiffness-failure";
    case ErrorKind::numerical_failure: return "numerical-failure";
    case ErrorKind::construction_failure: return "construction-failure";
    case ErrorKind::foliation_violation: return "foliation-violation";
    case ErrorKind::window_invalid: return "window-invalid";
    case ErrorKind::io_error: return "io-error";
    case ErrorKind::config_error: return "config-error";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace mcflow
