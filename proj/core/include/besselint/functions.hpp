#ifndef BESSELINT_FUNCTIONS_HPP
#define BESSELINT_FUNCTIONS_HPP

#include "besselint/series_control.hpp"

#include <cstddef>

namespace besselint {

struct FnEvalResult {
    double value = 0.0;
    std::size_t terms_used = 0;
    bool truncation_flag = false; // max_terms hit before convergence
};

// Bessel function of the first kind, nu > -1, by its power series.
// Non-integer nu requires x >= 0; integer nu accepts any real x (parity).
FnEvalResult bessel_j(double nu, double x, const SeriesControl& trunc = {});

// The even entire kernel J_nu(u) / u^nu, defined by the series in u^2, so
// it is meaningful for negative u at non-integer nu. Used by the integral
// identities to build real-line integrands.
FnEvalResult bessel_j_scaled(double nu, double u, const SeriesControl& trunc = {});

// Spherical Bessel j_n extended to all real x by its even/odd-true series;
// j_n(-x) = (-1)^n j_n(x), j_0(0) = 1, j_n(0) = 0 for n > 0.
FnEvalResult sph_bessel(std::size_t n, double x, const SeriesControl& trunc = {});

// F_n(x; a, b) = sum_k C(n,k) a^{n-k} b^k J_{n-k}(x)
FnEvalResult f_n_combo(std::size_t n, double x, double a, double b,
                       const SeriesControl& trunc = {});

// Struve function H_nu(x), x >= 0, nu > -3/2.
FnEvalResult struve_h(double nu, double x, const SeriesControl& trunc = {});

// Wright-Bessel W_{alpha,beta}(x) = sum x^k / (k! Gamma(k alpha + beta)).
// alpha > -1 converges everywhere; alpha = -1 is admitted for |x| < 1;
// alpha < 0 requires beta not an integer; alpha < -1 is rejected.
FnEvalResult wright_w(double alpha, double beta, double x,
                      const SeriesControl& trunc = {});

// Mittag-Leffler E_{alpha,beta}(x) = sum x^k / Gamma(alpha k + beta),
// alpha > 0; alpha = 0 admitted as the geometric case for |x| < 1.
FnEvalResult mittag_leffler(double alpha, double beta, double x,
                            const SeriesControl& trunc = {});

} // namespace besselint

#endif
