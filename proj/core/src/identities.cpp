#include "besselint/identities.hpp"

#include "besselint/detail/double_double.hpp"
#include "besselint/functions.hpp"
#include "besselint/gamma.hpp"
#include "besselint/polys.hpp"
#include "besselint/umbral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace besselint {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double get_param(const Params& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end())
        throw ConstraintError("missing parameter: " + name);
    return it->second;
}

double get_param_or(const Params& p, const std::string& name, double dflt) {
    auto it = p.find(name);
    return it == p.end() ? dflt : it->second;
}

std::size_t get_count(const Params& p, const std::string& name) {
    double v = get_param(p, name);
    if (v < 0.0 || v != std::floor(v))
        throw ConstraintError("parameter " + name + " must be a non-negative integer");
    return static_cast<std::size_t>(v);
}

bool near_integer(double x, double tol = 1e-9) {
    return std::fabs(x - std::round(x)) <= tol;
}

// Even part of y -> (a y + b)^n at y = x, i.e. ((ax+b)^n + (b-ax)^n) / 2.
// The identities over the real line keep only this part; the odd part
// integrates to zero against the even Bessel kernels.
double even_poly_part(std::size_t n, double a, double b, double x) {
    const double p = std::pow(a * x + b, static_cast<double>(n));
    const double q = std::pow(b - a * x, static_cast<double>(n));
    return 0.5 * (p + q);
}

} // namespace

// ---- closed forms -------------------------------------------------------

double gaussian_moment(std::size_t n, double a, double b, double alpha) {
    if (!(alpha > 0.0))
        throw std::domain_error("gaussian_moment: requires alpha > 0");
    return std::sqrt(std::numbers::pi / alpha) *
           hermite2(n, b, a * a / (4.0 * alpha));
}

double bessel_j0_integral(double alpha) {
    if (!(alpha > 0.0))
        throw std::domain_error("bessel_j0_integral: requires alpha > 0");
    return 2.0 / std::sqrt(alpha);
}

double weighted_bessel_moment(std::size_t n, double a, double b,
                              double alpha, double nu) {
    if (!(alpha > 0.0))
        throw std::domain_error("weighted_bessel_moment: requires alpha > 0");
    if (!(nu > static_cast<double>(n)))
        throw ConstraintError("weighted_bessel_moment: requires nu > n");
    return std::pow(2.0, 1.0 - nu) * kSqrtPi / std::sqrt(alpha) *
           bpoly(n, b, a * a / alpha, nu);
}

double weighted_bessel_poly(const std::vector<double>& coeffs, double a,
                            double b, double alpha, double nu) {
    if (!(alpha > 0.0))
        throw std::domain_error("weighted_bessel_poly: requires alpha > 0");
    std::size_t degree = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0.0)
            degree = k;
    if (!(nu > static_cast<double>(degree)))
        throw ConstraintError("weighted_bessel_poly: requires nu > deg f");
    detail::kahan sum;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0.0)
            sum.add(coeffs[k] * bpoly(k, b, a * a / alpha, nu));
    return std::pow(2.0, 1.0 - nu) * kSqrtPi / std::sqrt(alpha) * sum.sum;
}

double fn_combo_integral(std::size_t n, double a, double b) {
    // 2 sqrt(pi) n! sum_k b^{n-2k} a^{2k} / (4^k (n-2k)! k! Gamma(k+1/2))
    detail::kahan sum;
    double comb = 1.0; // n! / ((n-2k)! k!)
    double a2k = 1.0;  // (a^2/4)^k
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        const std::size_t m = n - 2 * k;
        sum.add(comb * std::pow(b, static_cast<double>(m)) * a2k *
                recip_gamma1p(static_cast<double>(k) - 0.5));
        if (2 * (k + 1) <= n) {
            comb *= static_cast<double>(m) * static_cast<double>(m - 1) /
                    static_cast<double>(k + 1);
            a2k *= a * a / 4.0;
        }
    }
    return 2.0 * kSqrtPi * sum.sum;
}

double sph_bessel_integral(std::size_t n) {
    if (n % 2 == 1)
        return 0.0;
    const std::size_t m = n / 2;
    double v = std::numbers::pi; // pi (2m)! / (4^m (m!)^2)
    for (std::size_t j = 1; j <= m; ++j)
        v *= static_cast<double>(2 * j - 1) / static_cast<double>(2 * j);
    return v;
}

double struve_mellin(double mu, double nu) {
    const double s = mu + nu;
    if (near_integer(s / 2.0))
        throw ConstraintError("struve_mellin: mu+nu is an even integer");
    // -2^mu pi / (sin((mu+nu) pi/2) Gamma((1-mu-nu)/2) Gamma((1-mu+nu)/2));
    // reciprocal gammas keep the formula total where Gamma hits a pole
    return -std::pow(2.0, mu) * std::numbers::pi / sin_pi(s / 2.0) *
           recip_gamma1p((1.0 - s) / 2.0 - 1.0) *
           recip_gamma1p((1.0 - mu + nu) / 2.0 - 1.0);
}

double wright_gaussian_integral(double alpha, double beta) {
    return kSqrtPi * recip_gamma1p(beta - alpha / 2.0 - 1.0);
}

double wright_laplace(double alpha, double beta, double d) {
    if (!(d > 0.0))
        throw ConstraintError("wright_laplace: requires d > 0");
    if (alpha < 0.0)
        throw std::domain_error("wright_laplace: requires alpha >= 0");
    if (alpha == 0.0 && !(d > 1.0))
        throw ConstraintError("wright_laplace: alpha = 0 requires d > 1");
    return mittag_leffler(alpha, beta, -1.0 / d).value / d;
}

// ---- umbral derivation routes -------------------------------------------

double umbral_gaussian_moment(std::size_t n, double a, double b, double alpha) {
    if (!(alpha > 0.0))
        throw std::domain_error("umbral_gaussian_moment: requires alpha > 0");
    return evaluate(gaussian_reduce(n, b, UmbralMonomial{a, {0.0, 0.0}},
                                    UmbralMonomial{alpha, {0.0, 0.0}}));
}

double umbral_bessel_j0_integral(double alpha) {
    // J_0(sqrt(a) x) = e^{-c (a/4) x^2} phi(0)
    return evaluate(gaussian_reduce(0, 0.0, UmbralMonomial{1.0, {0.0, 0.0}},
                                    UmbralMonomial{alpha / 4.0, {1.0, 0.0}}));
}

double umbral_weighted_bessel_moment(std::size_t n, double a, double b,
                                     double alpha, double nu) {
    // J_nu(u)/u^nu = (c/2)^nu e^{-c u^2/4} phi(0), u = sqrt(alpha) x
    UmbralExpr pref = UmbralExpr::monomial(std::pow(2.0, -nu), nu);
    UmbralExpr red = gaussian_reduce(n, b, UmbralMonomial{a, {0.0, 0.0}},
                                     UmbralMonomial{alpha / 4.0, {1.0, 0.0}});
    return evaluate(mul(pref, red));
}

double umbral_fn_combo_integral(std::size_t n, double a, double b) {
    // F_n(x) = (a x c / 2 + b)^n e^{-c x^2/4} phi(0)
    return evaluate(gaussian_reduce(n, b, UmbralMonomial{a / 2.0, {1.0, 0.0}},
                                    UmbralMonomial{0.25, {1.0, 0.0}}));
}

double umbral_sph_bessel_integral(std::size_t n) {
    const double dn = static_cast<double>(n);
    UmbralExpr pref = UmbralExpr::monomial(kSqrtPi * std::pow(2.0, -(dn + 1.0)),
                                           dn + 0.5);
    UmbralExpr red = gaussian_reduce(n, 0.0, UmbralMonomial{1.0, {0.0, 0.0}},
                                     UmbralMonomial{0.25, {1.0, 0.0}});
    return evaluate(mul(pref, red));
}

double umbral_wright_gaussian_integral(double alpha, double beta) {
    // W_{a,b}(-x^2) = c^{b-1} e^{-c^a x^2} phi(0)
    UmbralExpr pref = UmbralExpr::monomial(1.0, beta - 1.0);
    UmbralExpr red = gaussian_reduce(0, 0.0, UmbralMonomial{1.0, {0.0, 0.0}},
                                     UmbralMonomial{1.0, {alpha, 0.0}});
    return evaluate(mul(pref, red));
}

// ---- oracle construction ------------------------------------------------

namespace {

// H_nu(x) minus the algebraic part of its large-x behavior,
//   H_nu - Y_nu ~ (1/pi) sum_k Gamma(k+1/2) (x/2)^{nu-2k-1} / Gamma(nu+1/2-k),
// so the remainder is purely oscillatory and partition extrapolation
// converges fast. The split-off powers are integrated in closed form.
constexpr int kStruveAsympTerms = 4;

double struve_algebraic_part(double nu, double x) {
    double v = 0.0;
    for (int k = 0; k < kStruveAsympTerms; ++k) {
        v += gamma(static_cast<double>(k) + 0.5) *
             recip_gamma1p(nu - 0.5 - static_cast<double>(k)) *
             std::pow(x / 2.0, nu - 2.0 * k - 1.0);
    }
    return v / std::numbers::pi;
}

// exact int_{z0}^inf x^mu * algebraic_part dx (each power integrable in the
// oracle strip mu+nu < 0)
double struve_algebraic_tail(double mu, double nu, double z0) {
    double v = 0.0;
    for (int k = 0; k < kStruveAsympTerms; ++k) {
        const double c = gamma(static_cast<double>(k) + 0.5) *
                         recip_gamma1p(nu - 0.5 - static_cast<double>(k)) /
                         std::numbers::pi / std::pow(2.0, nu - 2.0 * k - 1.0);
        const double p = mu + nu - 2.0 * k - 1.0; // power of x
        v += -c * std::pow(z0, p + 1.0) / (p + 1.0);
    }
    return v;
}

OracleProblem make_gaussian_moment_oracle(std::size_t n, double a, double b,
                                          double alpha) {
    OracleProblem pr;
    pr.route = Route::real_line_decay;
    pr.integrand = [n, a, b, alpha](double x) {
        const double e = alpha * x * x;
        if (e > 700.0)
            return 0.0;
        return std::pow(a * x + b, static_cast<double>(n)) * std::exp(-e);
    };
    return pr;
}

OracleProblem make_bessel_j0_oracle(double alpha) {
    OracleProblem pr;
    pr.route = Route::semi_infinite_oscillatory;
    const double ra = std::sqrt(alpha);
    pr.integrand = [ra](double x) { return 2.0 * bessel_j_scaled(0.0, ra * x).value; };
    pr.hint = {std::numbers::pi / ra, 2.404825557695773 / ra};
    return pr;
}

OracleProblem make_weighted_bessel_oracle(const std::vector<double>& coeffs,
                                          double a, double b, double alpha,
                                          double nu) {
    OracleProblem pr;
    pr.route = Route::semi_infinite_oscillatory;
    const double ra = std::sqrt(alpha);
    pr.integrand = [coeffs, a, b, nu, ra](double x) {
        double poly = 0.0;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k] != 0.0)
                poly += coeffs[k] * even_poly_part(k, a, b, x);
        return 2.0 * poly * bessel_j_scaled(nu, ra * x).value;
    };
    pr.hint = {std::numbers::pi / ra, (2.40482555769577 + nu) / ra};
    return pr;
}

OracleProblem make_fn_combo_oracle(std::size_t n, double a, double b) {
    OracleProblem pr;
    pr.route = Route::semi_infinite_oscillatory;
    pr.integrand = [n, a, b](double x) {
        // even part of F_n; the odd part integrates to zero
        return f_n_combo(n, x, a, b).value + f_n_combo(n, -x, a, b).value;
    };
    pr.hint = {std::numbers::pi, 2.5};
    return pr;
}

OracleProblem make_sph_bessel_oracle(std::size_t n) {
    OracleProblem pr;
    pr.route = Route::semi_infinite_oscillatory;
    if (n % 2 == 1) {
        pr.integrand = [](double) { return 0.0; }; // odd integrand over R
    } else {
        pr.integrand = [n](double x) { return 2.0 * sph_bessel(n, x).value; };
    }
    pr.hint = {std::numbers::pi, 3.0 + static_cast<double>(n)};
    return pr;
}

OracleProblem make_struve_mellin_oracle(double mu, double nu) {
    OracleProblem pr;
    const double s = mu + nu;
    if (!(s > -2.0 && s < 0.0)) {
        pr.available = false;
        pr.note = "closed form only, oracle unavailable outside -2 < mu+nu < 0";
        return pr;
    }
    pr.route = Route::semi_infinite_oscillatory;
    const double z0 = std::numbers::pi;
    pr.integrand = [mu, nu, z0](double x) {
        double h = struve_h(nu, x).value;
        if (x > z0)
            h -= struve_algebraic_part(nu, x);
        return std::pow(x, mu) * h;
    };
    pr.hint = {std::numbers::pi, z0};
    pr.additive_offset = struve_algebraic_tail(mu, nu, z0);
    return pr;
}

OracleProblem make_wright_gaussian_oracle(double alpha, double beta) {
    OracleProblem pr;
    if (!(beta - alpha / 2.0 > 0.0) || alpha < 0.0 || alpha > 1.0 ||
        (alpha > 0.6 && alpha != 1.0)) {
        pr.available = false;
        pr.note = "closed form only, oracle restricted to alpha in [0, 0.6] or alpha = 1";
        return pr;
    }
    if (alpha == 1.0) {
        // Bessel regime: oscillatory with zero spacing pi/2 in x
        pr.route = Route::semi_infinite_oscillatory;
        pr.integrand = [beta](double x) {
            return 2.0 * wright_w(1.0, beta, -x * x).value;
        };
        pr.hint = {std::numbers::pi / 2.0, 1.5};
    } else {
        // The kernel decays super-exponentially, but the series that computes
        // it cancels across terms: with double-double gamma factors the error
        // is ~1e-32 * (largest term). Truncate at the largest |x| where that
        // largest term stays below ~1e20 (pointwise error <~ 1e-12); the
        // kernel is far below the quadrature tolerance there.
        auto log_max_term = [alpha, beta](double y) {
            const double ly = std::log(y);
            double best = -std::numeric_limits<double>::infinity();
            for (int k = 1; k < 600; ++k)
                best = std::max(best, k * ly - std::lgamma(k + 1.0) -
                                          std::lgamma(alpha * k + beta));
            return best;
        };
        double cutoff = 14.0;
        while (cutoff > 4.0 && log_max_term(cutoff * cutoff) > 46.0)
            cutoff -= 0.25;
        const double edge = std::fabs(wright_w(alpha, beta, -cutoff * cutoff).value);
        if (edge > 1e-8) {
            pr.available = false;
            pr.note = "closed form only, kernel too wide for the series cutoff";
            return pr;
        }
        pr.route = Route::real_line_decay;
        pr.integrand = [alpha, beta, cutoff](double x) {
            if (std::fabs(x) > cutoff)
                return 0.0;
            return wright_w(alpha, beta, -x * x).value;
        };
    }
    return pr;
}

OracleProblem make_wright_laplace_oracle(double alpha, double beta, double d) {
    OracleProblem pr;
    pr.route = Route::semi_infinite_decay;
    pr.integrand = [alpha, beta, d](double x) {
        const double e = d * x;
        if (e > 600.0)
            return 0.0;
        return wright_w(alpha, beta, -x).value * std::exp(-e);
    };
    return pr;
}

std::vector<double> coeffs_from_params(const Params& p) {
    std::vector<double> coeffs;
    for (std::size_t k = 0; k <= 5; ++k) {
        const double v = get_param_or(p, "f" + std::to_string(k), 0.0);
        coeffs.push_back(v);
    }
    while (coeffs.size() > 1 && coeffs.back() == 0.0)
        coeffs.pop_back();
    return coeffs;
}

std::vector<IdentitySpec> build_registry() {
    std::vector<IdentitySpec> reg;

    reg.push_back(IdentitySpec{
        "gaussian-moment",
        {"n", "a", "b", "alpha"},
        [](const Params& p) {
            get_count(p, "n");
            if (!(get_param(p, "alpha") > 0.0))
                throw ConstraintError("gaussian-moment: requires alpha > 0");
        },
        [](const Params& p) {
            return gaussian_moment(get_count(p, "n"), get_param(p, "a"),
                                   get_param(p, "b"), get_param(p, "alpha"));
        },
        [](const Params& p) {
            return make_gaussian_moment_oracle(get_count(p, "n"), get_param(p, "a"),
                                               get_param(p, "b"), get_param(p, "alpha"));
        }});

    reg.push_back(IdentitySpec{
        "bessel-j0-integral",
        {"alpha"},
        [](const Params& p) {
            if (!(get_param(p, "alpha") > 0.0))
                throw ConstraintError("bessel-j0-integral: requires alpha > 0");
        },
        [](const Params& p) { return bessel_j0_integral(get_param(p, "alpha")); },
        [](const Params& p) { return make_bessel_j0_oracle(get_param(p, "alpha")); }});

    reg.push_back(IdentitySpec{
        "weighted-bessel-moment",
        {"n", "a", "b", "alpha", "nu"},
        [](const Params& p) {
            const std::size_t n = get_count(p, "n");
            if (!(get_param(p, "alpha") > 0.0))
                throw ConstraintError("weighted-bessel-moment: requires alpha > 0");
            if (!(get_param(p, "nu") > static_cast<double>(n)))
                throw ConstraintError("weighted-bessel-moment: requires nu > n");
        },
        [](const Params& p) {
            return weighted_bessel_moment(get_count(p, "n"), get_param(p, "a"),
                                          get_param(p, "b"), get_param(p, "alpha"),
                                          get_param(p, "nu"));
        },
        [](const Params& p) {
            const std::size_t n = get_count(p, "n");
            std::vector<double> coeffs(n + 1, 0.0);
            coeffs[n] = 1.0;
            // the moment is the single-term case of the polynomial identity,
            // with f(y) = y^n applied to y = a x + b
            OracleProblem pr;
            const double a = get_param(p, "a");
            const double b = get_param(p, "b");
            const double alpha = get_param(p, "alpha");
            const double nu = get_param(p, "nu");
            const double ra = std::sqrt(alpha);
            pr.route = Route::semi_infinite_oscillatory;
            pr.integrand = [n, a, b, nu, ra](double x) {
                return 2.0 * even_poly_part(n, a, b, x) *
                       bessel_j_scaled(nu, ra * x).value;
            };
            pr.hint = {std::numbers::pi / ra, (2.40482555769577 + nu) / ra};
            return pr;
        }});

    reg.push_back(IdentitySpec{
        "weighted-bessel-poly",
        {"f0", "f1", "f2", "f3", "f4", "f5", "a", "b", "alpha", "nu"},
        [](const Params& p) {
            if (!(get_param(p, "alpha") > 0.0))
                throw ConstraintError("weighted-bessel-poly: requires alpha > 0");
            const auto coeffs = coeffs_from_params(p);
            std::size_t degree = 0;
            for (std::size_t k = 0; k < coeffs.size(); ++k)
                if (coeffs[k] != 0.0)
                    degree = k;
            if (!(get_param(p, "nu") > static_cast<double>(degree)))
                throw ConstraintError("weighted-bessel-poly: requires nu > deg f");
        },
        [](const Params& p) {
            return weighted_bessel_poly(coeffs_from_params(p), get_param(p, "a"),
                                        get_param(p, "b"), get_param(p, "alpha"),
                                        get_param(p, "nu"));
        },
        [](const Params& p) {
            return make_weighted_bessel_oracle(coeffs_from_params(p),
                                               get_param(p, "a"), get_param(p, "b"),
                                               get_param(p, "alpha"),
                                               get_param(p, "nu"));
        }});

    reg.push_back(IdentitySpec{
        "fn-combo-integral",
        {"n", "a", "b"},
        [](const Params& p) {
            get_count(p, "n");
            get_param(p, "a");
            get_param(p, "b");
        },
        [](const Params& p) {
            return fn_combo_integral(get_count(p, "n"), get_param(p, "a"),
                                     get_param(p, "b"));
        },
        [](const Params& p) {
            return make_fn_combo_oracle(get_count(p, "n"), get_param(p, "a"),
                                        get_param(p, "b"));
        }});

    reg.push_back(IdentitySpec{
        "sph-bessel-integral",
        {"n"},
        [](const Params& p) { get_count(p, "n"); },
        [](const Params& p) { return sph_bessel_integral(get_count(p, "n")); },
        [](const Params& p) { return make_sph_bessel_oracle(get_count(p, "n")); }});

    reg.push_back(IdentitySpec{
        "struve-mellin",
        {"mu", "nu"},
        [](const Params& p) {
            const double s = get_param(p, "mu") + get_param(p, "nu");
            if (near_integer(s / 2.0))
                throw ConstraintError("struve-mellin: mu+nu is an even integer");
        },
        [](const Params& p) {
            return struve_mellin(get_param(p, "mu"), get_param(p, "nu"));
        },
        [](const Params& p) {
            return make_struve_mellin_oracle(get_param(p, "mu"), get_param(p, "nu"));
        }});

    reg.push_back(IdentitySpec{
        "wright-gaussian",
        {"alpha", "beta"},
        [](const Params& p) {
            get_param(p, "alpha");
            get_param(p, "beta");
        },
        [](const Params& p) {
            return wright_gaussian_integral(get_param(p, "alpha"),
                                            get_param(p, "beta"));
        },
        [](const Params& p) {
            return make_wright_gaussian_oracle(get_param(p, "alpha"),
                                               get_param(p, "beta"));
        }});

    reg.push_back(IdentitySpec{
        "wright-laplace",
        {"alpha", "beta", "d"},
        [](const Params& p) {
            const double alpha = get_param(p, "alpha");
            const double d = get_param(p, "d");
            if (alpha < 0.0)
                throw ConstraintError("wright-laplace: requires alpha >= 0");
            if (!(d > 0.0))
                throw ConstraintError("wright-laplace: requires d > 0");
            if (alpha == 0.0 && !(d > 1.0))
                throw ConstraintError("wright-laplace: alpha = 0 requires d > 1");
        },
        [](const Params& p) {
            return wright_laplace(get_param(p, "alpha"), get_param(p, "beta"),
                                  get_param(p, "d"));
        },
        [](const Params& p) {
            return make_wright_laplace_oracle(get_param(p, "alpha"),
                                              get_param(p, "beta"),
                                              get_param(p, "d"));
        }});

    return reg;
}

} // namespace

const std::vector<IdentitySpec>& registry() {
    static const std::vector<IdentitySpec> reg = build_registry();
    return reg;
}

const IdentitySpec& find_identity(const std::string& id) {
    for (const auto& spec : registry())
        if (spec.id == id)
            return spec;
    throw std::invalid_argument("unknown identity id: " + id);
}

IntegralResult run_oracle(const OracleProblem& problem, double quad_tol) {
    IntegralResult res;
    switch (problem.route) {
    case Route::finite:
        res = integrate_finite(problem.integrand, 0.0, 1.0, quad_tol);
        break;
    case Route::real_line_decay:
        res = integrate_real_line_decay(problem.integrand, quad_tol);
        break;
    case Route::real_line_oscillatory:
    case Route::semi_infinite_oscillatory:
        res = integrate_semi_oscillatory(problem.integrand, problem.hint, quad_tol);
        break;
    case Route::semi_infinite_decay:
        res = integrate_semi_decay(problem.integrand, quad_tol);
        break;
    }
    res.value += problem.additive_offset;
    return res;
}

IdentityReport verify(const std::string& id, const Params& params,
                      double tol_abs, double tol_rel) {
    const IdentitySpec& spec = find_identity(id);
    spec.check(params);

    IdentityReport rep;
    rep.id = id;
    rep.params = params;
    rep.closed_value = spec.closed_form(params);
    rep.tolerance_used = std::max(tol_abs, tol_rel * std::fabs(rep.closed_value));

    OracleProblem problem = spec.oracle(params);
    if (!problem.available) {
        rep.oracle_available = false;
        rep.note = problem.note;
        rep.passed = true; // closed form only; nothing to compare
        return rep;
    }
    const bool oscillatory = problem.route == Route::semi_infinite_oscillatory ||
                             problem.route == Route::real_line_oscillatory;
    const double quad_tol = oscillatory
                                ? std::max(rep.tolerance_used / 20.0, 1e-9)
                                : std::max(rep.tolerance_used / 20.0, 1e-12);
    rep.oracle = run_oracle(problem, quad_tol);
    rep.abs_err = std::fabs(rep.closed_value - rep.oracle.value);
    rep.rel_err = rep.closed_value != 0.0
                      ? rep.abs_err / std::fabs(rep.closed_value)
                      : rep.abs_err;
    rep.passed = rep.abs_err <= rep.tolerance_used &&
                 rep.oracle.status != QuadStatus::failed;
    return rep;
}

} // namespace besselint
