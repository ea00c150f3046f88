#ifndef BESSELINT_POLYS_HPP
#define BESSELINT_POLYS_HPP

#include "besselint/series_control.hpp"

#include <cstddef>

namespace besselint {

// Two-variable Hermite polynomial
//   H_n(x, y) = n! sum_{k<=n/2} x^{n-2k} y^k / ((n-2k)! k!)
double hermite2(std::size_t n, double x, double y);

// n! times the t^n coefficient of the Cauchy product of the exp(x t) and
// exp(y t^2) series. Agrees with hermite2; kept as the independent
// generating-function route.
double hermite_gf_coeff(std::size_t n, double x, double y,
                        const SeriesControl& trunc = {});

// Hermite-like auxiliary polynomial with an entire reciprocal gamma factor:
//   B_n(x, y; nu) = n! sum_{k<=n/2} x^{n-2k} y^k /
//                   ((n-2k)! k! Gamma(nu - k + 1/2))
// Total in nu: terms where Gamma sits at a pole contribute 0.
double bpoly(std::size_t n, double x, double y, double nu);

// n! times the t^n coefficient of exp(x t) * W_{-1, nu+1/2}(y t^2),
// the generating-function route for bpoly. Only the first n/2+1 terms of
// the W series can touch t^n, so no convergence question arises.
double bpoly_gf_coeff(std::size_t n, double x, double y, double nu,
                      const SeriesControl& trunc = {});

} // namespace besselint

#endif
