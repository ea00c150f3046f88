#ifndef BESSELINT_DETAIL_RECIP_GAMMA_DD_HPP
#define BESSELINT_DETAIL_RECIP_GAMMA_DD_HPP

#include "besselint/detail/double_double.hpp"

namespace besselint::detail {

// 1/Gamma(mu + 1) in double-double, ~30 significant digits for mu + 1 in
// (0.5, 400]. Used by series whose terms cancel against each other across
// independent gamma factors: there the per-term gamma error, not the
// accumulator, limits the final accuracy. Falls back to the plain double
// routine outside the supported range.
dd recip_gamma_dd(dd mu);

} // namespace besselint::detail

#endif
