#include "besselint/functions.hpp"

#include "besselint/detail/double_double.hpp"
#include "besselint/detail/recip_gamma_dd.hpp"
#include "besselint/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace besselint {

namespace detail_series {

using besselint::detail::dd;

// Alternating hypergeometric-type series
//   prefactor * sum_k t_k,   t_0 = t0,  t_{k+1} = -t_k * q / ((k+c1)(k+c2))
// summed in double-double. The ratio recursion keeps term errors perfectly
// correlated with t0, so cancellation at large q costs no accuracy until the
// largest term exceeds ~1e22 * |result|.
FnEvalResult alternating_0f1(double prefactor, double t0, double q,
                             double c1, double c2, const SeriesControl& ctrl) {
    ctrl.validate();
    dd sum(0.0);
    dd term(t0);
    std::size_t small_count = 0;
    FnEvalResult r;
    for (std::size_t k = 0; k < ctrl.max_terms; ++k) {
        sum = sum + term;
        ++r.terms_used;
        if (besselint::detail::abs_hi(term) <=
            ctrl.rel_tol * (besselint::detail::abs_hi(sum) + 1e-300)) {
            if (++small_count >= ctrl.small_terms_required)
                break;
        } else {
            small_count = 0;
        }
        const double kk = static_cast<double>(k);
        term = -(term * q) / ((kk + c1) * (kk + c2));
    }
    r.truncation_flag = (r.terms_used == ctrl.max_terms && small_count < ctrl.small_terms_required);
    r.value = prefactor * static_cast<double>(sum);
    return r;
}

} // namespace detail_series

namespace {

bool is_integer(double x) { return x == std::floor(x); }

} // namespace

FnEvalResult bessel_j(double nu, double x, const SeriesControl& trunc) {
    if (!(nu > -1.0))
        throw std::domain_error("bessel_j: requires nu > -1");
    double sign = 1.0;
    if (x < 0.0) {
        if (!is_integer(nu))
            throw std::domain_error("bessel_j: negative x requires integer nu");
        x = -x;
        if (std::fmod(nu, 2.0) == 1.0)
            sign = -1.0;
    }
    const double h = x * 0.5;
    const double q = h * h;
    // J_nu(x) = (x/2)^nu sum_k (-1)^k q^k / (k! Gamma(nu+k+1))
    return detail_series::alternating_0f1(sign * std::pow(h, nu),
                                          recip_gamma1p(nu), q, 1.0, nu + 1.0, trunc);
}

FnEvalResult bessel_j_scaled(double nu, double u, const SeriesControl& trunc) {
    if (!(nu > -1.0))
        throw std::domain_error("bessel_j_scaled: requires nu > -1");
    const double h = u * 0.5;
    const double q = h * h;
    // J_nu(u)/u^nu = 2^{-nu} sum_k (-1)^k q^k / (k! Gamma(nu+k+1))
    return detail_series::alternating_0f1(std::pow(2.0, -nu),
                                          recip_gamma1p(nu), q, 1.0, nu + 1.0, trunc);
}

FnEvalResult sph_bessel(std::size_t n, double x, const SeriesControl& trunc) {
    const double h = x * 0.5;
    const double q = h * h;
    const double dn = static_cast<double>(n);
    // j_n(x) = sqrt(pi) 2^{-(n+1)} x^n sum_k (-1)^k q^k / (k! Gamma(n+k+3/2))
    const double pref = std::sqrt(std::numbers::pi) * std::pow(2.0, -(dn + 1.0)) *
                        std::pow(x, dn);
    return detail_series::alternating_0f1(pref, recip_gamma1p(dn + 0.5), q,
                                          1.0, dn + 1.5, trunc);
}

FnEvalResult f_n_combo(std::size_t n, double x, double a, double b,
                       const SeriesControl& trunc) {
    detail::kahan sum;
    FnEvalResult out;
    double comb = 1.0; // C(n, k)
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t order = n - k;
        const FnEvalResult j = bessel_j(static_cast<double>(order), x, trunc);
        sum.add(comb * std::pow(a, static_cast<double>(order)) *
                std::pow(b, static_cast<double>(k)) * j.value);
        out.terms_used = std::max(out.terms_used, j.terms_used);
        out.truncation_flag = out.truncation_flag || j.truncation_flag;
        comb *= static_cast<double>(n - k) / static_cast<double>(k + 1);
    }
    out.value = sum.sum;
    return out;
}

FnEvalResult struve_h(double nu, double x, const SeriesControl& trunc) {
    trunc.validate();
    if (x < 0.0)
        throw std::domain_error("struve_h: requires x >= 0");
    if (!(nu > -1.5))
        throw std::domain_error("struve_h: requires nu > -3/2");
    const double t = x * 0.5;
    const double q = t * t;
    if (x <= 20.0) {
        // plain-double path, term for term the same arithmetic as the
        // umbral geometric expansion (see struve_umbral_eval)
        const double pref = std::pow(t, nu + 1.0);
        detail::kahan sum;
        double g = 1.0;
        FnEvalResult r;
        std::size_t small_count = 0;
        for (std::size_t k = 0; k < trunc.max_terms; ++k) {
            const double kk = static_cast<double>(k);
            const double term = ((pref * g) * recip_gamma1p(kk + 0.5)) *
                                recip_gamma1p(kk + nu + 0.5);
            sum.add(term);
            ++r.terms_used;
            if (std::fabs(term) <= trunc.rel_tol * (std::fabs(sum.sum) + 1e-300)) {
                if (++small_count >= trunc.small_terms_required)
                    break;
            } else {
                small_count = 0;
            }
            g *= -q;
        }
        r.truncation_flag =
            (r.terms_used == trunc.max_terms && small_count < trunc.small_terms_required);
        r.value = sum.sum;
        return r;
    }
    // large x: double-double with ratio recursion,
    // t_{k+1} = -t_k q / ((k+3/2)(k+nu+3/2))
    const double t0 = std::pow(t, nu + 1.0) * recip_gamma1p(0.5) * recip_gamma1p(nu + 0.5);
    return detail_series::alternating_0f1(1.0, t0, q, 1.5, nu + 1.5, trunc);
}

FnEvalResult wright_w(double alpha, double beta, double x,
                      const SeriesControl& trunc) {
    trunc.validate();
    if (alpha < -1.0)
        throw std::domain_error("wright_w: alpha < -1 not supported");
    if (alpha == -1.0 && !(std::fabs(x) < 1.0))
        throw std::domain_error("wright_w: alpha = -1 requires |x| < 1");
    if (alpha < 0.0 && is_integer(beta))
        throw std::domain_error("wright_w: alpha < 0 requires non-integer beta");

    using detail::dd;
    FnEvalResult r;
    dd sum(0.0);
    std::size_t small_count = 0;
    double max_term = 0.0;

    // Under heavy cancellation the running |sum| is transiently huge, so a
    // plain relative test against it would stop while the tail still matters
    // for the small final value. Also require terms to sink below the
    // double-double noise floor set by the largest term seen so far.
    auto converged = [&](const dd& term) {
        const double t = detail::abs_hi(term);
        max_term = std::max(max_term, t);
        const double s = detail::abs_hi(sum) + 1e-300;
        if (t <= trunc.rel_tol * s && t <= 1e-31 * max_term) {
            return ++small_count >= trunc.small_terms_required;
        }
        small_count = 0;
        return false;
    };

    {
        // Every term carries its own double-double gamma factor: the series
        // cancels across terms whose gamma arguments differ, so per-term
        // gamma accuracy (not the accumulator) bounds the final error at
        // ~1e-30 * (largest term).
        dd p(1.0); // x^k / k!
        bool done = false;
        for (std::size_t k = 0; k < trunc.max_terms && !done; ++k) {
            // Form the gamma argument k*alpha + beta - 1 in double-double:
            // double rounding of the argument alone would inject uncorrelated
            // ~1e-15 relative errors per term, amplified by the cancellation.
            const dd arg = detail::two_prod(static_cast<double>(k), alpha) +
                           detail::two_sum(beta, -1.0);
            dd term = p * detail::recip_gamma_dd(arg);
            sum = sum + term;
            ++r.terms_used;
            done = converged(term);
            p = p * x / static_cast<double>(k + 1);
        }
        r.truncation_flag = !done && r.terms_used == trunc.max_terms;
    }
    r.value = static_cast<double>(sum);
    return r;
}

FnEvalResult mittag_leffler(double alpha, double beta, double x,
                            const SeriesControl& trunc) {
    trunc.validate();
    if (alpha < 0.0)
        throw std::domain_error("mittag_leffler: requires alpha >= 0");
    if (alpha == 0.0 && !(std::fabs(x) < 1.0))
        throw std::domain_error("mittag_leffler: alpha = 0 requires |x| < 1");
    using detail::dd;
    FnEvalResult r;
    dd sum(0.0);
    dd p(1.0); // x^k
    std::size_t small_count = 0;
    bool done = false;
    for (std::size_t k = 0; k < trunc.max_terms && !done; ++k) {
        dd term = p * recip_gamma1p(alpha * static_cast<double>(k) + beta - 1.0);
        sum = sum + term;
        ++r.terms_used;
        if (detail::abs_hi(term) <= trunc.rel_tol * (detail::abs_hi(sum) + 1e-300)) {
            done = ++small_count >= trunc.small_terms_required;
        } else {
            small_count = 0;
        }
        p = p * x;
    }
    r.truncation_flag = !done && r.terms_used == trunc.max_terms;
    r.value = static_cast<double>(sum);
    return r;
}

} // namespace besselint
