#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

// Base of every error raised by the library. Callers that only need a
// diagnostic can catch this; the CLI maps it to exit code 2.
class math_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero : public math_error {
public:
    division_by_zero() : math_error("division by zero in Q(q)") {}
};

class pole_at_specialization : public math_error {
public:
    explicit pole_at_specialization(std::string what, long exponent = 0, bool has_exponent = false)
        : math_error(std::move(what)), exponent_(exponent), has_exponent_(has_exponent) {}

    // Exponent of x whose coefficient has the pole, when the failure came from
    // a series specialization.
    long exponent() const noexcept { return exponent_; }
    bool has_exponent() const noexcept { return has_exponent_; }

private:
    long exponent_;
    bool has_exponent_;
};

class indeterminate_valuation : public math_error {
public:
    explicit indeterminate_valuation(long known_zero_below)
        : math_error("valuation indeterminate: series is O(x^" + std::to_string(known_zero_below) + ")"),
          bound_(known_zero_below) {}
    long bound() const noexcept { return bound_; }

private:
    long bound_;
};

class insufficient_precision : public math_error {
public:
    using math_error::math_error;
};

class degenerate_sequence : public math_error {
public:
    using math_error::math_error;
};

class unsupported_valuation : public math_error {
public:
    using math_error::math_error;
};

class missing_endpoint_coefficient : public math_error {
public:
    using math_error::math_error;
};

class non_integer_slope : public math_error {
public:
    using math_error::math_error;
};

class duplicate_node : public math_error {
public:
    using math_error::math_error;
};

class unknown_identity : public math_error {
public:
    explicit unknown_identity(const std::string& id) : math_error("unknown identity: " + id) {}
};

class invalid_argument : public math_error {
public:
    using math_error::math_error;
};

} // namespace qeuler
