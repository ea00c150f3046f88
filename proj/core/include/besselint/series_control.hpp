#ifndef BESSELINT_SERIES_CONTROL_HPP
#define BESSELINT_SERIES_CONTROL_HPP

#include <cstddef>
#include <stdexcept>

namespace besselint {

// Truncation policy shared by every series evaluator: stop once the term is
// below rel_tol of the running sum for small_terms_required consecutive
// terms, or give up at max_terms.
struct SeriesControl {
    double rel_tol = 1e-15;
    std::size_t small_terms_required = 3;
    std::size_t max_terms = 500;

    void validate() const {
        if (!(rel_tol > 0.0))
            throw std::invalid_argument("SeriesControl: rel_tol must be > 0");
        if (small_terms_required < 1)
            throw std::invalid_argument("SeriesControl: small_terms_required must be >= 1");
        if (max_terms < 1)
            throw std::invalid_argument("SeriesControl: max_terms must be >= 1");
    }
};

} // namespace besselint

#endif
