#include "besselint/functions.hpp"
#include "besselint/gamma.hpp"
#include "besselint/polys.hpp"
#include "besselint/umbral.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace besselint;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

TEST_CASE("expression normalization merges like terms") {
    UmbralExpr a = UmbralExpr::monomial(2.0, 1.0);
    UmbralExpr b = UmbralExpr::monomial(3.0, 1.0);
    UmbralExpr s = add(a, b);
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms()[0].coeff == doctest::Approx(5.0));
    CHECK(s.terms()[0].exps[0] == doctest::Approx(1.0));

    UmbralExpr z = add(a, UmbralExpr::monomial(-2.0, 1.0));
    CHECK(z.is_zero());
}

TEST_CASE("multiplication adds exponents") {
    UmbralExpr a = UmbralExpr::monomial(2.0, 0.5, 1.0);
    UmbralExpr b = UmbralExpr::monomial(0.5, 1.5, -1.0);
    UmbralExpr p = mul(a, b);
    REQUIRE(p.terms().size() == 1);
    CHECK(p.terms()[0].coeff == doctest::Approx(1.0));
    CHECK(p.terms()[0].exps[0] == doctest::Approx(2.0));
    CHECK(p.terms()[0].exps[1] == doctest::Approx(0.0));
}

TEST_CASE("ring laws hold under evaluation") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> cdist(-2.0, 2.0);
    std::uniform_int_distribution<int> edist(0, 3);
    auto random_expr = [&]() {
        UmbralExpr e = UmbralExpr::constant(0.0);
        for (int t = 0; t < 3; ++t)
            e = add(e, UmbralExpr::monomial(cdist(rng), edist(rng) * 0.5,
                                            edist(rng) * 0.5));
        return e;
    };
    for (int i = 0; i < 50; ++i) {
        UmbralExpr a = random_expr();
        UmbralExpr b = random_expr();
        UmbralExpr c = random_expr();
        const double comm = evaluate(mul(a, b)) - evaluate(mul(b, a));
        CHECK(std::fabs(comm) <= 1e-12);
        const double ab_c = evaluate(mul(mul(a, b), c));
        const double a_bc = evaluate(mul(a, mul(b, c)));
        CHECK(std::fabs(ab_c - a_bc) <= 1e-12 * (1.0 + std::fabs(ab_c)));
        const double lhs = evaluate(mul(a, add(b, c)));
        const double rhs = evaluate(mul(a, b)) + evaluate(mul(a, c));
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * (1.0 + std::fabs(lhs)));
    }
}

TEST_CASE("pow_int matches repeated multiplication") {
    UmbralExpr a = add(UmbralExpr::monomial(1.5, 0.5), UmbralExpr::constant(-0.5));
    UmbralExpr p = pow_int(a, 4);
    UmbralExpr m = mul(mul(a, a), mul(a, a));
    CHECK(evaluate(p) == doctest::Approx(evaluate(m)).epsilon(1e-13));
    CHECK(evaluate(pow_int(a, 0)) == doctest::Approx(1.0));
}

TEST_CASE("evaluation applies the reciprocal-gamma rule") {
    // c^{1/2} -> 1/Gamma(3/2) = 2/sqrt(pi)
    CHECK(evaluate(UmbralExpr::monomial(1.0, 0.5)) ==
          doctest::Approx(2.0 / kSqrtPi).epsilon(1e-14));
    // c1^{1/2} c2^{1/2} -> 1/Gamma(3/2)^2 = 4/pi
    CHECK(evaluate(UmbralExpr::monomial(1.0, 0.5, 0.5)) ==
          doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-14));
    // exponent 0 contributes no gamma factor
    CHECK(evaluate(UmbralExpr::constant(3.5)) == doctest::Approx(3.5));
    // a negative-integer exponent kills the term
    CHECK(evaluate(UmbralExpr::monomial(7.0, -2.0)) == 0.0);
}

TEST_CASE("gaussian reduction, constant-base cases") {
    const UmbralMonomial one{1.0, {0.0, 0.0}};
    const UmbralMonomial four{4.0, {0.0, 0.0}};

    // n = 0, plain Gaussian: integral = sqrt(pi/C)
    CHECK(evaluate(gaussian_reduce(0, 0.0, one, one)) ==
          doctest::Approx(kSqrtPi).epsilon(1e-14));
    CHECK(evaluate(gaussian_reduce(0, 0.0, one, four)) ==
          doctest::Approx(kSqrtPi / 2.0).epsilon(1e-14));

    // n = 2, b = 0, A = C = 1: sqrt(pi) * H_2(0, 1/4) = sqrt(pi)/2
    CHECK(evaluate(gaussian_reduce(2, 0.0, one, one)) ==
          doctest::Approx(kSqrtPi / 2.0).epsilon(1e-13));

    const UmbralMonomial bad{-1.0, {0.0, 0.0}};
    CHECK_THROWS_AS(gaussian_reduce(1, 0.0, one, bad), std::domain_error);
}

TEST_CASE("gaussian reduction with constant inputs matches the Hermite closed form") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> bdist(-2.0, 2.0);
    std::uniform_real_distribution<double> adist(0.2, 2.0);
    for (std::size_t n = 0; n <= 8; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const double b = bdist(rng);
            const double a = adist(rng);
            const double c = adist(rng);
            UmbralExpr r = gaussian_reduce(n, b, UmbralMonomial{a, {0.0, 0.0}},
                                           UmbralMonomial{c, {0.0, 0.0}});
            const double expect =
                kSqrtPi / std::sqrt(c) * hermite2(n, b, a * a / (4.0 * c));
            CHECK(std::fabs(evaluate(r) - expect) <=
                  1e-13 * (1.0 + std::fabs(expect)));
        }
    }
}

TEST_CASE("gaussian reduction with an umbral quadratic matches the hybrid polynomials") {
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> bdist(-1.5, 1.5);
    std::uniform_real_distribution<double> adist(0.3, 2.0);
    std::uniform_real_distribution<double> nudist(1.0, 4.0);
    for (std::size_t n = 0; n <= 8; ++n) {
        for (int rep = 0; rep < 4; ++rep) {
            const double b = bdist(rng);
            const double a = adist(rng);
            const double alpha = adist(rng);
            const double nu = nudist(rng) + static_cast<double>(n);
            UmbralExpr red =
                mul(UmbralExpr::monomial(std::pow(2.0, -nu), nu),
                    gaussian_reduce(n, b, UmbralMonomial{a, {0.0, 0.0}},
                                    UmbralMonomial{alpha / 4.0, {1.0, 0.0}}));
            // 2^{1-nu} sqrt(pi/alpha) B_n(b, a^2/alpha; nu)
            const double expect = std::pow(2.0, 1.0 - nu) *
                                  std::sqrt(std::numbers::pi / alpha) *
                                  bpoly(n, b, a * a / alpha, nu);
            CHECK(std::fabs(evaluate(red) - expect) <=
                  1e-12 * (1.0 + std::fabs(expect)));
        }
    }
}

TEST_CASE("truncated Struve evaluation, reference values") {
    // nu = 1/2: H_{1/2}(x) = sqrt(2/(pi x)) (1 - cos x); at x = pi this is 2 sqrt(2)/pi
    const double v = struve_umbral_eval(0.5, std::numbers::pi, 40);
    CHECK(v == doctest::Approx(0.90031631615710607).epsilon(1e-13));
    CHECK(struve_umbral_eval(1.0, 0.0, 5) == doctest::Approx(0.0));
    CHECK_THROWS_AS(struve_umbral_eval(0.5, 1.0, 0), std::invalid_argument);
}

TEST_CASE("truncated Struve evaluation reproduces the series function exactly") {
    const double nus[] = {0.0, 0.5, 1.0, 2.5, -1.0};
    const double xs[] = {0.1, 1.0, 3.0, 7.5, 15.0, 20.0};
    for (double nu : nus) {
        for (double x : xs) {
            FnEvalResult r = struve_h(nu, x);
            const double u = struve_umbral_eval(nu, x, r.terms_used);
            CHECK(u == r.value); // bit-exact: same term recipe, same accumulator
        }
    }
}
