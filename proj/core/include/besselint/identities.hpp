#ifndef BESSELINT_IDENTITIES_HPP
#define BESSELINT_IDENTITIES_HPP

#include "besselint/quadrature.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace besselint {

using Params = std::map<std::string, double>;

// A parameter fails its domain constraint (nu <= n, even-integer mu+nu, ...).
// Distinct from std::domain_error so callers can report "skipped" rather
// than "broken".
struct ConstraintError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Route {
    finite,
    real_line_decay,
    real_line_oscillatory,
    semi_infinite_oscillatory,
    semi_infinite_decay,
};

// The left-hand side of an identity, packaged for the quadrature oracle.
struct OracleProblem {
    Integrand integrand;
    Route route = Route::finite;
    OscillationHint hint{};
    // exact analytic part added to the quadrature value (used where an
    // integrable piece of the tail is split off in closed form)
    double additive_offset = 0.0;
    bool available = true; // false: closed form only, oracle out of range
    std::string note;
};

struct IdentitySpec {
    std::string id;
    std::vector<std::string> param_names;
    std::function<void(const Params&)> check; // throws ConstraintError
    std::function<double(const Params&)> closed_form;
    std::function<OracleProblem(const Params&)> oracle;
};

struct IdentityReport {
    std::string id;
    Params params;
    double closed_value = 0.0;
    IntegralResult oracle{};
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool passed = false;
    double tolerance_used = 0.0;
    bool oracle_available = true;
    std::string note;
};

// ---- closed forms -------------------------------------------------------

// int_R (a x + b)^n e^{-alpha x^2} dx = sqrt(pi/alpha) H_n(b, a^2/(4 alpha))
double gaussian_moment(std::size_t n, double a, double b, double alpha);

// int_R J_0(sqrt(alpha) x) dx = 2/sqrt(alpha)
double bessel_j0_integral(double alpha);

// int_R J_nu(sqrt(alpha) x) (a x + b)^n / (sqrt(alpha) x)^nu dx
//   = 2^{1-nu} sqrt(pi/alpha) B_n(b, a^2/alpha; nu),  nu > n
double weighted_bessel_moment(std::size_t n, double a, double b,
                              double alpha, double nu);

// same with a polynomial sum f(y) = sum f_k y^k, nu > deg f
double weighted_bessel_poly(const std::vector<double>& coeffs, double a,
                            double b, double alpha, double nu);

// int_R F_n(x; a, b) dx
double fn_combo_integral(std::size_t n, double a, double b);

// int_R j_n(x) dx: pi (2m)! / (2^{2m} (m!)^2) for n = 2m, 0 for odd n
double sph_bessel_integral(std::size_t n);

// int_0^inf x^mu H_nu(x) dx, mu+nu not an even integer
double struve_mellin(double mu, double nu);

// int_R W_{alpha,beta}(-x^2) dx = sqrt(pi) / Gamma(beta - alpha/2)
double wright_gaussian_integral(double alpha, double beta);

// int_0^inf W_{alpha,beta}(-x) e^{-d x} dx = (1/d) E_{alpha,beta}(-1/d)
double wright_laplace(double alpha, double beta, double d);

// ---- umbral derivation routes -------------------------------------------
// The same closed forms obtained through gaussian_reduce + evaluate instead
// of the direct formulas. These exist so the reduction chain can be checked
// against the tables.
double umbral_gaussian_moment(std::size_t n, double a, double b, double alpha);
double umbral_bessel_j0_integral(double alpha);
double umbral_weighted_bessel_moment(std::size_t n, double a, double b,
                                     double alpha, double nu);
double umbral_fn_combo_integral(std::size_t n, double a, double b);
double umbral_sph_bessel_integral(std::size_t n);
double umbral_wright_gaussian_integral(double alpha, double beta);

// ---- registry -----------------------------------------------------------

const std::vector<IdentitySpec>& registry();
const IdentitySpec& find_identity(const std::string& id); // std::invalid_argument

// Runs closed form and oracle; passed iff
// |closed - oracle| <= max(tol_abs, tol_rel * |closed|).
IdentityReport verify(const std::string& id, const Params& params,
                      double tol_abs = 1e-6, double tol_rel = 1e-6);

// Runs an already-constructed oracle problem at the given quadrature
// tolerance (used by verify; exposed for the test suites).
IntegralResult run_oracle(const OracleProblem& problem, double quad_tol);

} // namespace besselint

#endif
