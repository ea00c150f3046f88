#include "besselint/gamma.hpp"
#include "besselint/polys.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace besselint;

TEST_CASE("hermite2 small cases") {
    CHECK(hermite2(0, 3.0, 1.0) == doctest::Approx(1.0));
    CHECK(hermite2(1, 3.0, 1.0) == doctest::Approx(3.0));
    CHECK(hermite2(2, 3.0, 1.0) == doctest::Approx(11.0)); // x^2 + 2y
    CHECK(hermite2(3, 1.0, 1.0) == doctest::Approx(7.0));  // x^3 + 6xy
    CHECK(hermite2(4, 0.0, 1.0) == doctest::Approx(12.0)); // 12 y^2
}

TEST_CASE("hermite recurrence H_{n+1} = x H_n + 2 (n) y H_{n-1}") {
    std::mt19937 rng(555);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int rep = 0; rep < 40; ++rep) {
        const double x = dist(rng);
        const double y = dist(rng);
        for (std::size_t n = 1; n <= 20; ++n) {
            const double lhs = hermite2(n + 1, x, y);
            const double t1 = x * hermite2(n, x, y);
            const double t2 = 2.0 * static_cast<double>(n) * y * hermite2(n - 1, x, y);
            // the two recurrence terms can nearly cancel, so scale the
            // tolerance by their magnitudes rather than by the result
            const double scale = 1.0 + std::fabs(t1) + std::fabs(t2);
            CHECK(std::fabs(lhs - (t1 + t2)) <= 1e-11 * scale);
        }
    }
}

TEST_CASE("hermite generating-function route agrees with the direct sum") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int rep = 0; rep < 100; ++rep) {
        const double x = dist(rng);
        const double y = dist(rng);
        for (std::size_t n = 0; n <= 16; ++n) {
            const double direct = hermite2(n, x, y);
            const double gf = hermite_gf_coeff(n, x, y);
            CHECK(std::fabs(gf - direct) <= 1e-11 * (1.0 + std::fabs(direct)));
        }
    }
}

TEST_CASE("bpoly small cases and gamma-regularized totality") {
    // B_0(x, y; nu) = 1/Gamma(nu + 1/2)
    CHECK(bpoly(0, 2.0, 3.0, 1.0) == doctest::Approx(recip_gamma1p(0.5)).epsilon(1e-14));
    // B_n(x, 0; nu) = x^n / Gamma(nu + 1/2)
    CHECK(bpoly(3, 2.0, 0.0, 2.0) ==
          doctest::Approx(8.0 * recip_gamma1p(1.5)).epsilon(1e-13));
    // nu at a half-integer pole position: the k-term with the pole drops out,
    // the value stays finite
    const double v = bpoly(4, 1.0, 1.0, 0.5); // k=0 term has Gamma(1), k=1 Gamma(0)...
    CHECK(std::isfinite(v));
}

TEST_CASE("bpoly exact term expansion") {
    std::mt19937 rng(16);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    std::uniform_real_distribution<double> nudist(-2.0, 5.0);
    for (int rep = 0; rep < 60; ++rep) {
        const double x = dist(rng);
        const double y = dist(rng);
        const double nu = nudist(rng);
        for (std::size_t n = 0; n <= 8; ++n) {
            double expect = 0.0;
            double nfact = 1.0;
            for (std::size_t j = 2; j <= n; ++j)
                nfact *= static_cast<double>(j);
            for (std::size_t k = 0; 2 * k <= n; ++k) {
                double kfact = 1.0;
                for (std::size_t j = 2; j <= k; ++j)
                    kfact *= static_cast<double>(j);
                double mfact = 1.0;
                for (std::size_t j = 2; j <= n - 2 * k; ++j)
                    mfact *= static_cast<double>(j);
                expect += std::pow(x, static_cast<double>(n - 2 * k)) *
                          std::pow(y, static_cast<double>(k)) / (kfact * mfact) *
                          recip_gamma1p(nu - static_cast<double>(k) - 0.5);
            }
            expect *= nfact;
            CHECK(std::fabs(bpoly(n, x, y, nu) - expect) <=
                  1e-13 * (1.0 + std::fabs(expect)));
        }
    }
}

TEST_CASE("bpoly generating-function route agrees with the direct sum") {
    std::mt19937 rng(90125);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    std::uniform_real_distribution<double> nudist(-2.0, 5.0);
    for (int rep = 0; rep < 100; ++rep) {
        const double x = dist(rng);
        const double y = dist(rng);
        const double nu = nudist(rng);
        for (std::size_t n = 0; n <= 16; ++n) {
            const double direct = bpoly(n, x, y, nu);
            const double gf = bpoly_gf_coeff(n, x, y, nu);
            CHECK(std::fabs(gf - direct) <= 1e-11 * (1.0 + std::fabs(direct)));
        }
    }
}

TEST_CASE("bpoly is Appell in x: d/dx B_n = n B_{n-1}") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::uniform_real_distribution<double> nudist(-1.0, 4.0);
    const double h = 1e-5;
    for (int rep = 0; rep < 30; ++rep) {
        const double x = dist(rng);
        const double y = dist(rng);
        const double nu = nudist(rng);
        for (std::size_t n = 1; n <= 6; ++n) {
            const double fd = (bpoly(n, x + h, y, nu) - bpoly(n, x - h, y, nu)) / (2.0 * h);
            const double exact = static_cast<double>(n) * bpoly(n - 1, x, y, nu);
            CHECK(std::fabs(fd - exact) <= 1e-5 * (1.0 + std::fabs(exact)));
        }
    }
}

TEST_CASE("bpoly heat property: d/dy B_n = d^2/dx^2 B_n (both n(n-1) B_{n-2})") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    const double h = 1e-4;
    for (int rep = 0; rep < 20; ++rep) {
        const double x = dist(rng);
        const double y = dist(rng);
        const double nu = 2.5;
        for (std::size_t n = 2; n <= 6; ++n) {
            const double dxx =
                (bpoly(n, x + h, y, nu) - 2.0 * bpoly(n, x, y, nu) +
                 bpoly(n, x - h, y, nu)) /
                (h * h);
            const double exact = static_cast<double>(n) *
                                 static_cast<double>(n - 1) * bpoly(n - 2, x, y, nu);
            CHECK(std::fabs(dxx - exact) <= 1e-5 * (1.0 + std::fabs(exact)));
        }
    }
}

TEST_CASE("series control validation") {
    SeriesControl bad;
    bad.rel_tol = -1.0;
    CHECK_THROWS_AS(hermite_gf_coeff(4, 1.0, 1.0, bad), std::invalid_argument);
}
