#pragma once

#include <stdexcept>
#include <string>

namespace cmf {

/// Input outside the mathematical domain of an operation (e.g. Im(tau) <= 0).
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Input violates a hypothesis of one of the factorization theorems
/// (non-fundamental or non-coprime discriminants, wrong residue mod 8).
class hypothesis_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Integer recognition did not succeed at the available precision.
class precision_error : public std::runtime_error
{
public:
    precision_error(std::string const & what, double residual)
        : std::runtime_error(what), residual_(residual)
    {
    }

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// An internal consistency check of a constructed object failed.
class construction_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace cmf
