#ifndef BESSELINT_DETAIL_DOUBLE_DOUBLE_HPP
#define BESSELINT_DETAIL_DOUBLE_DOUBLE_HPP

#include <cmath>

namespace besselint::detail {

// Unevaluated sum of two doubles (Dekker/Knuth error-free transforms),
// roughly 31 significant digits. Used by the series evaluators so that
// alternating sums with huge intermediate terms keep full double accuracy
// in the final value. Requires -ffp-contract=off.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd operator+(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * dd(q1);
    double q2 = (r.hi + r.lo) / b.hi;
    return quick_two_sum(q1, q2);
}

inline dd operator+(dd a, double b) { return a + dd(b); }
inline dd operator*(dd a, double b) { return a * dd(b); }
inline dd operator/(dd a, double b) { return a / dd(b); }

inline double abs_hi(dd a) { return std::fabs(a.hi); }

// Compensated (Kahan) accumulator for plain-double sums. Both the umbral
// evaluator and the direct Struve series use this, in the same term order,
// so the two routes agree bit-for-bit.
struct kahan {
    double sum = 0.0;
    double c = 0.0;

    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

} // namespace besselint::detail

#endif
