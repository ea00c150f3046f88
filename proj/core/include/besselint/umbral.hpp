#ifndef BESSELINT_UMBRAL_HPP
#define BESSELINT_UMBRAL_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace besselint {

// A finite formal algebra over at most two umbral symbols c1, c2 with real
// exponents. Evaluation maps c_i^mu phi_i(0) to 1/Gamma(mu + 1), i.e. each
// symbol power becomes recip_gamma1p(exponent).

struct UmbralMonomial {
    double coeff = 0.0;
    // exponent of symbol 1 and symbol 2; 0 means the symbol is absent
    std::array<double, 2> exps{0.0, 0.0};
};

class UmbralExpr {
public:
    UmbralExpr() = default;
    explicit UmbralExpr(std::vector<UmbralMonomial> terms);

    static UmbralExpr constant(double c);
    static UmbralExpr monomial(double coeff, double e1, double e2 = 0.0);

    const std::vector<UmbralMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

private:
    // normalized: sorted by exponent vector, near-equal exponent vectors
    // merged, zero coefficients dropped
    std::vector<UmbralMonomial> terms_;
};

UmbralExpr add(const UmbralExpr& e1, const UmbralExpr& e2);
UmbralExpr mul(const UmbralExpr& e1, const UmbralExpr& e2);
UmbralExpr pow_int(const UmbralExpr& e, std::size_t n);

// Sum of coeff * recip_gamma1p(e1) * recip_gamma1p(e2) over all terms, in
// normalized (ascending exponent) order with compensated summation.
double evaluate(const UmbralExpr& e);

// Formal value of the Gaussian integral
//   int_{-inf}^{inf} (A x + b)^n exp(-C x^2) dx
// with the umbral symbols treated as constants:
//   sqrt(pi) * C^{-1/2} * H_n(b, A^2 / (4 C)),
// the Hermite polynomial expanded term by term into an UmbralExpr.
// Requires C.coeff > 0; throws std::domain_error otherwise.
UmbralExpr gaussian_reduce(std::size_t n, double b,
                           const UmbralMonomial& A, const UmbralMonomial& C);

// The two-symbol Struve representation, evaluated by expanding
// 1/(1 + c1 c2 (x/2)^2) as a K-term geometric series, multiplying by
// c1^{1/2} c2^{nu+1/2} (x/2)^{nu+1}, and applying the evaluation rule.
// Equals the K-term partial sum of the Struve series.
double struve_umbral_eval(double nu, double x, std::size_t K);

} // namespace besselint

#endif
