#ifndef COVFN_ERRORS_HPP
#define COVFN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace covfn {

// Base class for everything this library throws on bad input or refused work.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A modulus that is not a positive integer.
class invalid_modulus_error : public error {
public:
    using error::error;
};

// Dense enumeration refused: lcm of the moduli exceeds the caller's cap.
class period_too_large_error : public error {
public:
    using error::error;
};

// Frequency alpha = c/d is an integer, or alpha*N is not an integer.
class invalid_frequency_error : public error {
public:
    using error::error;
};

// Ring arithmetic on cyclotomic elements of different orders.
class order_mismatch_error : public error {
public:
    using error::error;
};

// A checker or generator precondition does not hold (k <= 1, non-distinct
// moduli, weight/length mismatch, pool too small, ...).
class precondition_error : public error {
public:
    using error::error;
};

// A generator's built-in self-verification failed.
class verification_error : public error {
public:
    using error::error;
};

// An input document does not match the expected schema.
class parse_error : public error {
public:
    using error::error;
};

} // namespace covfn

#endif
