#ifndef BESSELINT_QUADRATURE_HPP
#define BESSELINT_QUADRATURE_HPP

#include <cstdint>
#include <functional>

namespace besselint {

enum class QuadStatus { converged, max_subdivisions, accelerated, failed };

struct IntegralResult {
    double value = 0.0;
    double abs_err_est = 0.0;
    QuadStatus status = QuadStatus::failed;
    std::int64_t evaluations = 0;
};

// Zero-spacing information for conditionally convergent oscillatory tails,
// e.g. pi/sqrt(alpha) for Bessel-type integrands.
struct OscillationHint {
    double asymptotic_zero_spacing = 0.0;
    double first_partition_point = 0.0;
};

using Integrand = std::function<double(double)>;

// Globally adaptive Gauss(7)/Kronrod(15) bisection on [lo, hi].
// Error estimate is the summed rule-pair difference; subdivision cap 10^4.
IntegralResult integrate_finite(const Integrand& f, double lo, double hi, double tol);

// int_{-inf}^{inf} f, for |f| decaying faster than x^{-2}; algebraic
// transform x = t/(1-t^2) onto (-1, 1).
IntegralResult integrate_real_line_decay(const Integrand& f, double tol);

// int_0^inf f for eventually sign-alternating, conditionally convergent f:
// partial integrals over hint-spaced intervals, partial sums accelerated by
// Wynn's epsilon algorithm until two successive accelerated estimates differ
// by less than tol. Fails if no convergence after 200 intervals.
IntegralResult integrate_semi_oscillatory(const Integrand& f,
                                          const OscillationHint& hint, double tol);

// int_0^inf f for exponentially decaying f; transform x = -ln(1-t).
IntegralResult integrate_semi_decay(const Integrand& f, double tol);

} // namespace besselint

#endif
