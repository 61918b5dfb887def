#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Argument outside the mathematical domain of an operation (e.g. mu <= -1/2).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Iterative numerics that failed to converge within their budget.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller-supplied discretization or configuration that cannot deliver the
/// requested accuracy.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require_dunkl_mu(double mu, const char* where)
{
    if (!(mu > -0.5)) {
        throw DomainError(std::string(where) + ": Dunkl parameter mu must satisfy mu > -1/2, got " +
                          std::to_string(mu));
    }
}

}  // namespace dunkl
