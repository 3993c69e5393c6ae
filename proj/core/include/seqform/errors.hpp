#ifndef SEQFORM_ERRORS_HPP
#define SEQFORM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqform {

/// Base class for all seqform-specific failures.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input text could not be parsed; `position` is a 0-based byte offset.
struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// The generating function has a pole at the origin, so it has no power
/// series expansion there.
struct non_analytic : error {
    non_analytic() : error("function is not analytic at the origin (denominator vanishes at 0)") {}
};

/// No interlacing modulus m within the search bound admits a spanning
/// hypergeometric basis over the rationals.
struct no_hypergeometric_basis : error {
    explicit no_hypergeometric_basis(const std::string& msg) : error(msg) {}
};

/// An internal size/degree cap was exceeded (factorization degree cap,
/// start-index scan cap, ...).
struct cap_exceeded : error {
    explicit cap_exceeded(const std::string& msg) : error(msg) {}
};

} // namespace seqform

#endif
