#ifndef BESSELINT_GAMMA_HPP
#define BESSELINT_GAMMA_HPP

namespace besselint {

// Gamma(x) for real x away from the poles at 0, -1, -2, ...
// Lanczos approximation, reflection for x < 1/2. Throws std::domain_error at
// a pole and std::overflow_error above the representable range (x > ~171.6).
double gamma(double x);

// ln Gamma(x) for x > 0. Throws std::domain_error for x <= 0.
double log_gamma(double x);

// The entire function 1/Gamma(mu + 1). Total on the reals: returns exactly 0
// at mu = -1, -2, -3, ... where Gamma has poles.
double recip_gamma1p(double mu);

// sin(pi * x) with argument reduction done on x itself, so the result is
// exactly 0 at integers and accurate near them.
double sin_pi(double x);

} // namespace besselint

#endif
