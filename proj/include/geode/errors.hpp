#pragma once

#include <stdexcept>
#include <string>

namespace geode {

/// Two series (or a series and an exponent vector) disagree on the number of variables.
class VariableMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Some homogeneous layer of the dividend is not a multiple of t_1 + ... + t_r.
class NotDivisible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Division by t_1 + ... + t_r was asked of a series with nonzero constant term.
class NonzeroConstant : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A coefficient was requested beyond the retained truncation degree.
/// Distinct from a coefficient that is known to be zero.
class OutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A formula that is claimed to produce an integer left a remainder.
class NotIntegral : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace geode
