// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors

#ifndef RELAYLINK_ERRORS_HPP
#define RELAYLINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relaylink {

// Base class for all errors raised by this library. Everything thrown here
// also derives from std::runtime_error, so callers that do not care about
// the taxonomy can catch a single type.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A caller supplied a parameter outside its documented domain
// (non-positive SNR, empty interference profile, bad enum string, ...).
class invalid_parameter_error : public error {
public:
    using error::error;
};

// The requested configuration is structurally impossible for the scheme,
// e.g. zero-forcing with fewer antennas than interferers.
class feasibility_error : public invalid_parameter_error {
public:
    using invalid_parameter_error::invalid_parameter_error;
};

// A formula was asked to evaluate a profile it does not cover,
// e.g. the MMSE closed forms with unequal interferer powers.
class unsupported_profile_error : public invalid_parameter_error {
public:
    using invalid_parameter_error::invalid_parameter_error;
};

// An internal consistency check failed: a probability left [0,1] by more
// than the permitted excursion, a dual-route identity did not hold, or an
// intermediate overflowed. Indicates a numerical problem, not bad input.
class numerical_error : public error {
public:
    using error::error;
};

// Raised when adaptive quadrature exhausts its evaluation budget before
// certifying the requested tolerance. Carries the best estimate so far so
// callers can report context.
class quadrature_error : public numerical_error {
public:
    quadrature_error(const std::string& what, double best_estimate,
                     double error_estimate, long evaluations)
        : numerical_error(what),
          best_estimate_(best_estimate),
          error_estimate_(error_estimate),
          evaluations_(evaluations) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }
    long evaluations() const noexcept { return evaluations_; }

private:
    double best_estimate_;
    double error_estimate_;
    long evaluations_;
};

// A channel draw is unusable for the requested combiner (rank-deficient
// interference matrix, zero channel vector). Has probability zero under the
// fading model; simulation redraws and counts these.
class degenerate_draw_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

// Failure to parse serialized state (sweep configs, curve files).
class parse_error : public error {
public:
    using error::error;
};

} // namespace relaylink

#endif // RELAYLINK_ERRORS_HPP
