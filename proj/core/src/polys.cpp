#include "besselint/polys.hpp"

#include "besselint/detail/double_double.hpp"
#include "besselint/gamma.hpp"

#include <cmath>
#include <vector>

namespace besselint {

namespace {

double factorial(std::size_t n) {
    double f = 1.0;
    for (std::size_t i = 2; i <= n; ++i)
        f *= static_cast<double>(i);
    return f;
}

// coefficients of exp(x t): x^j / j! for j = 0..n
std::vector<double> exp_series_coeffs(double x, std::size_t n) {
    std::vector<double> a(n + 1);
    a[0] = 1.0;
    for (std::size_t j = 1; j <= n; ++j)
        a[j] = a[j - 1] * x / static_cast<double>(j);
    return a;
}

} // namespace

double hermite2(std::size_t n, double x, double y) {
    detail::kahan sum;
    double comb = 1.0; // n! / ((n-2k)! k!)
    double yk = 1.0;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        const std::size_t m = n - 2 * k;
        sum.add(comb * std::pow(x, static_cast<double>(m)) * yk);
        if (2 * (k + 1) <= n) {
            comb *= static_cast<double>(m) * static_cast<double>(m - 1) /
                    static_cast<double>(k + 1);
            yk *= y;
        }
    }
    return sum.sum;
}

double hermite_gf_coeff(std::size_t n, double x, double y,
                        const SeriesControl& trunc) {
    trunc.validate();
    const auto a = exp_series_coeffs(x, n);
    // exp(y t^2) contributes y^k/k! at t^{2k}
    detail::kahan sum;
    double b = 1.0;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        sum.add(a[n - 2 * k] * b);
        b *= y / static_cast<double>(k + 1);
    }
    return factorial(n) * sum.sum;
}

double bpoly(std::size_t n, double x, double y, double nu) {
    detail::kahan sum;
    double comb = 1.0;
    double yk = 1.0;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        const std::size_t m = n - 2 * k;
        sum.add(comb * std::pow(x, static_cast<double>(m)) * yk *
                recip_gamma1p(nu - static_cast<double>(k) - 0.5));
        if (2 * (k + 1) <= n) {
            comb *= static_cast<double>(m) * static_cast<double>(m - 1) /
                    static_cast<double>(k + 1);
            yk *= y;
        }
    }
    return sum.sum;
}

double bpoly_gf_coeff(std::size_t n, double x, double y, double nu,
                      const SeriesControl& trunc) {
    trunc.validate();
    const auto a = exp_series_coeffs(x, n);
    // W_{-1, nu+1/2}(y t^2) contributes y^k / (k! Gamma(nu + 1/2 - k)) at t^{2k}
    detail::kahan sum;
    double yk_over_kfact = 1.0;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        sum.add(a[n - 2 * k] * yk_over_kfact *
                recip_gamma1p(nu - static_cast<double>(k) - 0.5));
        yk_over_kfact *= y / static_cast<double>(k + 1);
    }
    return factorial(n) * sum.sum;
}

} // namespace besselint
