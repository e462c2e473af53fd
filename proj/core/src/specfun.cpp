// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors

#include "relaylink/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "specfun_impl.hpp"

namespace relaylink::specfun {

double gamma_int(int n) {
    if (n < 1)
        throw invalid_parameter_error("gamma_int: n must be >= 1, got " +
                                      std::to_string(n));
    if (n > 170)
        throw invalid_parameter_error(
            "gamma_int: n = " + std::to_string(n) +
            " exceeds 170, result would overflow double");
    return detail::gamma_int_t<double>(n);
}

double upper_inc_gamma_int(int n, double x) {
    if (n < 1 || n > 170)
        throw invalid_parameter_error(
            "upper_inc_gamma_int: n must be in [1, 170], got " +
            std::to_string(n));
    if (!(x >= 0))
        throw invalid_parameter_error(
            "upper_inc_gamma_int: x must be >= 0, got " + std::to_string(x));
    return detail::upper_inc_gamma_int_t<double>(n, x);
}

double bessel_k_int(int v, double x) {
    if (!(x > 0))
        throw std::domain_error("bessel_k_int: x must be > 0, got " +
                                std::to_string(x));
    return detail::bessel_k_int_t<double>(v, x);
}

double scaled_bessel_k(int v, double b) {
    if (!(b > 0))
        throw std::domain_error("scaled_bessel_k: B must be > 0, got " +
                                std::to_string(b));
    return detail::scaled_bessel_k_t<double>(v, b);
}

void scaled_bessel_k_row(int vmin, int vmax, double b, double* out) {
    if (!(b > 0))
        throw std::domain_error("scaled_bessel_k_row: B must be > 0, got " +
                                std::to_string(b));
    if (vmin > vmax)
        throw invalid_parameter_error("scaled_bessel_k_row: vmin > vmax");
    detail::scaled_bessel_k_row_t<double>(vmin, vmax, b, out);
}

double gauss_2f1_family(int a, int b, double z) {
    if (a < 1 || b < 1)
        throw invalid_parameter_error(
            "gauss_2f1_family: a and b must be >= 1, got a = " +
            std::to_string(a) + ", b = " + std::to_string(b));
    if (!(z >= 0))
        throw invalid_parameter_error("gauss_2f1_family: z must be >= 0, got " +
                                      std::to_string(z));
    return detail::gauss_2f1_family_t<double>(a, b, z);
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double abs_tol, long budget) {
    if (!(abs_tol > 0))
        throw invalid_parameter_error(
            "integrate_semi_infinite: abs_tol must be > 0");
    if (budget < 150)
        throw invalid_parameter_error(
            "integrate_semi_infinite: budget must allow at least 150 "
            "evaluations");
    auto r = detail::integrate_semi_infinite_t<double>(
        [&f](double x) { return f(x); }, abs_tol, budget);
    QuadratureResult out{r.value, r.abs_error, r.evaluations, r.converged};
    if (r.bad_value)
        throw numerical_error(
            "integrate_semi_infinite: integrand produced a non-finite value");
    if (!r.converged)
        throw quadrature_error(
            "integrate_semi_infinite: evaluation budget " +
                std::to_string(budget) +
                " exhausted before certifying abs_tol = " +
                std::to_string(abs_tol) +
                " (best estimate " + std::to_string(r.value) +
                ", error bound " + std::to_string(r.abs_error) + ")",
            out.value, out.abs_error_estimate, out.evaluations);
    return out;
}

}  // namespace relaylink::specfun
