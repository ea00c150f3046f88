#include "besselint/umbral.hpp"

#include "besselint/detail/double_double.hpp"
#include "besselint/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace besselint {

namespace {

// exponent vectors closer than this (per component) are treated as equal,
// so float-keyed terms do not fragment
constexpr double kExpMergeTol = 1e-12;

bool exps_equal(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return std::fabs(a[0] - b[0]) <= kExpMergeTol && std::fabs(a[1] - b[1]) <= kExpMergeTol;
}

bool exps_less(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    if (std::fabs(a[0] - b[0]) > kExpMergeTol)
        return a[0] < b[0];
    if (std::fabs(a[1] - b[1]) > kExpMergeTol)
        return a[1] < b[1];
    return false;
}

std::vector<UmbralMonomial> normalize(std::vector<UmbralMonomial> terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const UmbralMonomial& a, const UmbralMonomial& b) {
                         return exps_less(a.exps, b.exps);
                     });
    std::vector<UmbralMonomial> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        if (!out.empty() && exps_equal(out.back().exps, t.exps))
            out.back().coeff += t.coeff;
        else
            out.push_back(t);
    }
    std::erase_if(out, [](const UmbralMonomial& t) { return t.coeff == 0.0; });
    return out;
}

} // namespace

UmbralExpr::UmbralExpr(std::vector<UmbralMonomial> terms)
    : terms_(normalize(std::move(terms))) {}

UmbralExpr UmbralExpr::constant(double c) {
    return UmbralExpr({UmbralMonomial{c, {0.0, 0.0}}});
}

UmbralExpr UmbralExpr::monomial(double coeff, double e1, double e2) {
    return UmbralExpr({UmbralMonomial{coeff, {e1, e2}}});
}

UmbralExpr add(const UmbralExpr& e1, const UmbralExpr& e2) {
    std::vector<UmbralMonomial> terms = e1.terms();
    terms.insert(terms.end(), e2.terms().begin(), e2.terms().end());
    return UmbralExpr(std::move(terms));
}

UmbralExpr mul(const UmbralExpr& e1, const UmbralExpr& e2) {
    std::vector<UmbralMonomial> terms;
    terms.reserve(e1.terms().size() * e2.terms().size());
    for (const auto& a : e1.terms())
        for (const auto& b : e2.terms())
            terms.push_back(UmbralMonomial{a.coeff * b.coeff,
                                           {a.exps[0] + b.exps[0], a.exps[1] + b.exps[1]}});
    return UmbralExpr(std::move(terms));
}

UmbralExpr pow_int(const UmbralExpr& e, std::size_t n) {
    UmbralExpr acc = UmbralExpr::constant(1.0);
    for (std::size_t i = 0; i < n; ++i)
        acc = mul(acc, e);
    return acc;
}

double evaluate(const UmbralExpr& e) {
    detail::kahan sum;
    for (const auto& m : e.terms()) {
        double t = m.coeff;
        for (int s = 0; s < 2; ++s)
            if (m.exps[s] != 0.0)
                t *= recip_gamma1p(m.exps[s]);
        sum.add(t);
    }
    return sum.sum;
}

UmbralExpr gaussian_reduce(std::size_t n, double b,
                           const UmbralMonomial& A, const UmbralMonomial& C) {
    if (!(C.coeff > 0.0))
        throw std::domain_error("gaussian_reduce: C coefficient must be positive");

    // sqrt(pi) * C^{-1/2} * n! sum_k b^{n-2k} y^k / ((n-2k)! k!) with
    // y = A^2/(4C); exponent vector of the k-th term is
    // -C/2 + k (2A - C) in the symbol exponents.
    const double pref = std::sqrt(std::numbers::pi) / std::sqrt(C.coeff);
    const double y_coeff = A.coeff * A.coeff / (4.0 * C.coeff);
    const std::array<double, 2> y_exps{2.0 * A.exps[0] - C.exps[0],
                                       2.0 * A.exps[1] - C.exps[1]};

    std::vector<UmbralMonomial> terms;
    double comb = 1.0; // n! / ((n-2k)! k!)
    double yk = 1.0;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        const std::size_t m = n - 2 * k;
        UmbralMonomial t;
        t.coeff = pref * comb * std::pow(b, static_cast<double>(m)) * yk;
        t.exps = {-0.5 * C.exps[0] + static_cast<double>(k) * y_exps[0],
                  -0.5 * C.exps[1] + static_cast<double>(k) * y_exps[1]};
        terms.push_back(t);
        if (2 * (k + 1) <= n) {
            comb *= static_cast<double>(m) * static_cast<double>(m - 1) /
                    static_cast<double>(k + 1);
            yk *= y_coeff;
        }
    }
    return UmbralExpr(std::move(terms));
}

double struve_umbral_eval(double nu, double x, std::size_t K) {
    if (K < 1)
        throw std::invalid_argument("struve_umbral_eval: K must be >= 1");
    const double t = x * 0.5;
    const double q = t * t;

    // geometric expansion of 1/(1 + c1 c2 q), K terms
    std::vector<UmbralMonomial> geom;
    geom.reserve(K);
    UmbralMonomial g{1.0, {0.0, 0.0}};
    for (std::size_t k = 0; k < K; ++k) {
        geom.push_back(g);
        g.coeff *= -q;
        g.exps[0] += 1.0;
        g.exps[1] += 1.0;
    }

    UmbralExpr pref = UmbralExpr::monomial(std::pow(t, nu + 1.0), 0.5, nu + 0.5);
    return evaluate(mul(pref, UmbralExpr(std::move(geom))));
}

} // namespace besselint
