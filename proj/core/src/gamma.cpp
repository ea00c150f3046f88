#include "besselint/gamma.hpp"

#include "besselint/detail/recip_gamma_dd.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace besselint {

namespace {

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set). Relative accuracy of
// the rational part is ~1e-15 for real arguments >= 1/2.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kGammaOverflowX = 171.624;

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Gamma for x >= 1/2 only.
double gamma_positive(double x) {
    if (x > kGammaOverflowX)
        throw std::overflow_error("gamma: argument above representable range");
    double z = x - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i)
        a += kLanczos[i] / (z + i);
    double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

} // namespace

double sin_pi(double x) {
    double n = std::round(x);
    double r = x - n;
    double s = std::sin(std::numbers::pi * r);
    // n odd flips the sign
    return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -s : s;
}

double gamma(double x) {
    if (std::isnan(x))
        return x;
    if (is_nonpositive_integer(x))
        throw std::domain_error("gamma: pole at non-positive integer");
    if (x >= 0.5)
        return gamma_positive(x);
    // reflection: Gamma(x) = pi / (sin(pi x) * Gamma(1 - x))
    double s = sin_pi(x);
    return std::numbers::pi / (s * gamma_positive(1.0 - x));
}

double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be > 0");
    if (x < 0.5) {
        // log Gamma(x) = log(pi / sin(pi x)) - log Gamma(1 - x), Gamma > 0 here
        return std::log(std::numbers::pi / sin_pi(x)) - log_gamma(1.0 - x);
    }
    double z = x - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i)
        a += kLanczos[i] / (z + i);
    double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

double recip_gamma1p(double mu) {
    double z = mu + 1.0;
    if (std::isnan(z))
        return z;
    if (z >= 0.5)
        return 1.0 / gamma_positive(z);
    // 1/Gamma(z) = sin(pi z) * Gamma(1 - z) / pi, entire in z; the sin factor
    // vanishes exactly at the poles of Gamma.
    double s = sin_pi(z);
    if (s == 0.0)
        return 0.0;
    double onemz = 1.0 - z;
    if (onemz > kGammaOverflowX) {
        // |1/Gamma| grows super-exponentially on the far negative axis
        double lg = log_gamma(onemz) + std::log(std::fabs(s) / std::numbers::pi);
        double sign = s > 0.0 ? 1.0 : -1.0;
        return sign * std::exp(lg); // may overflow to inf, as it should
    }
    return s * gamma_positive(onemz) / std::numbers::pi;
}

namespace detail {

namespace {

// Maclaurin coefficients of the entire function 1/Gamma(1 + z), split into
// double-double (hi, lo) pairs; accurate to ~1e-33 for |z| <= 1/2.
constexpr int kRgCoeffCount = 43;
constexpr double kRgCoeff[kRgCoeffCount][2] = {
    {1.0, 0.0},
    {0.5772156649015329, -4.942915152430645e-18},
    {-0.6558780715202539, 2.137185197068536e-17},
    {-0.04200263503409524, 1.4920306285650505e-18},
    {0.16653861138229148, 1.0189144546842026e-17},
    {-0.04219773455554433, -3.3579992682480134e-18},
    {-0.009621971527876973, -5.300031368830263e-19},
    {0.0072189432466631, -3.6006537063394283e-19},
    {-0.0011651675918590652, 5.659947853880981e-20},
    {-0.00021524167411495098, 2.3758686180729364e-21},
    {0.0001280502823881162, -9.359124499198967e-21},
    {-2.013485478078824e-05, 3.0488773972037385e-23},
    {-1.2504934821426706e-06, -2.66214092271898e-23},
    {1.133027231981696e-06, -4.622235212104869e-23},
    {-2.056338416977607e-07, -3.0061601618645134e-24},
    {6.116095104481416e-09, -2.693458298171306e-25},
    {5.002007644469223e-09, -1.538123614056751e-26},
    {-1.18127457048702e-09, -1.0052356155716208e-25},
    {1.0434267116911005e-10, -2.9298419956825035e-27},
    {7.782263439905071e-12, 4.397255556595848e-28},
    {-3.696805618642206e-12, 2.7050034921703885e-28},
    {5.100370287454476e-13, 2.253001461085878e-29},
    {-2.0583260535665066e-14, -1.4747481491954336e-30},
    {-5.348122539423018e-15, -1.6208384686356568e-31},
    {1.2267786282382608e-15, -5.072915146023867e-32},
    {-1.1812593016974588e-16, 6.422257838149681e-33},
    {1.1866922547516004e-18, -4.2037265494226014e-35},
    {1.4123806553180319e-18, -7.576946701116294e-35},
    {-2.29874568443537e-19, 1.3335481917069145e-36},
    {1.7144063219273374e-20, 5.230715150426935e-38},
    {1.337351730493693e-22, 2.6434059649079228e-39},
    {-2.0542335517666728e-22, 3.6856892424568953e-39},
    {2.736030048608e-23, -2.8599315416397774e-39},
    {-1.7323564459105165e-24, -1.7540883508197598e-40},
    {-2.3606190244992872e-26, -1.260225016995785e-42},
    {1.8649829417172943e-26, 8.774775617290965e-43},
    {-2.2180956242071973e-27, 6.809640315042753e-44},
    {1.2977819749479937e-28, -3.325692466804093e-45},
    {1.1806974749665284e-30, -4.184949275966516e-48},
    {-1.124584349277088e-30, -2.01842815487355e-47},
    {1.277085175140866e-31, 1.0535632367878753e-47},
    {-7.391451169615141e-33, 1.8114253268366145e-49},
    {1.1347502575542158e-35, -4.9791058715013306e-52},
};

} // namespace

dd recip_gamma_dd(dd mu) {
    const dd z = mu + 1.0;
    if (!(z.hi > 0.5) || z.hi > 400.0)
        return dd(recip_gamma1p(static_cast<double>(mu))); // outside the
                                                           // critical range
    // pull z - m into (0.5, 1.5], evaluate 1/Gamma(1 + u) with u = z - m - 1
    const int m = static_cast<int>(std::floor(z.hi - 0.5));
    const dd u = z - static_cast<double>(m + 1);
    dd s(kRgCoeff[kRgCoeffCount - 1][0], kRgCoeff[kRgCoeffCount - 1][1]);
    for (int k = kRgCoeffCount - 2; k >= 0; --k)
        s = s * u + dd(kRgCoeff[k][0], kRgCoeff[k][1]);
    // 1/Gamma(z) = (1/Gamma(z - m)) / ((z-1)(z-2)...(z-m)), divided stepwise
    // so large z underflows gracefully instead of overflowing the product
    for (int i = 1; i <= m; ++i)
        s = s / (z - static_cast<double>(i));
    return s;
}

} // namespace detail

} // namespace besselint
