#ifndef CHEBKIT_ERRORS_HPP
#define CHEBKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cheb {

enum class ErrorCode {
    parse_error,
    validation_error,
    non_convergence,
    trace_error,
    domain_error,
    degree_error,
    branch_error,
    rank_deficient,
    stalled,
    bad_reference,
    lsq_failure,
    no_progress,
    integral_diverged,
    quadrature_diverged,
    estimate_unstable,
    series_unstable,
    unsupported_series,
    io_error,
};

const char* error_code_name(ErrorCode c);

/// Library-wide exception carrying a machine-readable code.
class ChebError : public std::runtime_error {
public:
    ChebError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw ChebError(code, what);
}

} // namespace cheb

#endif
