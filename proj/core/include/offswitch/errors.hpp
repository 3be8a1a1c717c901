#pragma once

#include <stdexcept>
#include <string>

namespace offswitch {

// Bad parameters: negative std, empty sample list, beta <= 0, ragged grids.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An integrand produced a non-finite value at a quadrature node.
class NumericalDomainError : public std::domain_error {
public:
    NumericalDomainError(const std::string& what, double abscissa)
        : std::domain_error(what), abscissa_(abscissa) {}

    double abscissa() const noexcept { return abscissa_; }

private:
    double abscissa_;
};

// Inputs where a formula is indeterminate, e.g. the step policy at a point mass on 0.
class DegenerateInputError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotDifferentiableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A sweep point whose two independent evaluations disagree.
class CrossCheckError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace offswitch
