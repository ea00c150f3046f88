#include "besselint/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace besselint {

namespace {

// 15-point Kronrod / 7-point Gauss pair on [-1, 1] (QUADPACK constants)
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelResult {
    double integral;
    double err;
};

PanelResult gk15(const Integrand& f, double a, double b, std::int64_t& evals) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(center - half * kXgk[i]);
        fv[14 - i] = f(center + half * kXgk[i]);
    }
    fv[7] = f(center);
    evals += 15;

    double result_k = kWgk[7] * fv[7];
    double result_g = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i)
        result_k += kWgk[i] * (fv[i] + fv[14 - i]);
    for (int i = 0; i < 3; ++i) {
        const int j = 2 * i + 1; // Gauss nodes sit at the odd Kronrod indices
        result_g += kWg[i] * (fv[j] + fv[14 - j]);
    }
    const double integral = result_k * half;
    const double err = std::fabs((result_k - result_g) * half);
    return {integral, err};
}

struct Segment {
    double a, b, integral, err;
};

} // namespace

IntegralResult integrate_finite(const Integrand& f, double lo, double hi, double tol) {
    IntegralResult out;
    if (!(lo < hi)) {
        out.status = QuadStatus::failed;
        return out;
    }
    constexpr std::size_t kMaxPanels = 10000;

    std::vector<Segment> segs;
    PanelResult first = gk15(f, lo, hi, out.evaluations);
    segs.push_back({lo, hi, first.integral, first.err});

    while (segs.size() < kMaxPanels) {
        double total_err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total_err += segs[i].err;
            if (segs[i].err > segs[worst].err)
                worst = i;
        }
        if (total_err <= tol)
            break;
        Segment s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b)
            break; // interval exhausted at machine precision
        PanelResult left = gk15(f, s.a, mid, out.evaluations);
        PanelResult right = gk15(f, mid, s.b, out.evaluations);
        segs[worst] = {s.a, mid, left.integral, left.err};
        segs.push_back({mid, s.b, right.integral, right.err});
    }

    // fixed summation order for determinism: sort by left endpoint
    std::sort(segs.begin(), segs.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    double value = 0.0, err = 0.0;
    for (const auto& s : segs) {
        value += s.integral;
        err += s.err;
    }
    out.value = value;
    out.abs_err_est = err;
    out.status = (err <= tol) ? QuadStatus::converged : QuadStatus::max_subdivisions;
    return out;
}

IntegralResult integrate_real_line_decay(const Integrand& f, double tol) {
    auto g = [&f](double t) {
        const double omt2 = 1.0 - t * t;
        const double x = t / omt2;
        const double w = (1.0 + t * t) / (omt2 * omt2);
        const double v = f(x) * w;
        return std::isfinite(v) ? v : 0.0;
    };
    return integrate_finite(g, -1.0, 1.0, tol);
}

IntegralResult integrate_semi_decay(const Integrand& f, double tol) {
    auto g = [&f](double t) {
        const double x = -std::log1p(-t);
        const double v = f(x) / (1.0 - t);
        return std::isfinite(v) ? v : 0.0;
    };
    return integrate_finite(g, 0.0, 1.0, tol);
}

namespace {

// Incremental Wynn epsilon table: push partial sums, read the accelerated
// estimate off the highest even column.
class EpsilonTable {
public:
    // returns the current best (even-column) estimate
    double push(double s) {
        std::vector<double> next(diag_.size() + 1);
        next[0] = s;
        for (std::size_t j = 1; j < next.size(); ++j) {
            const double denom = next[j - 1] - diag_[j - 1];
            const double lower = (j >= 2) ? diag_[j - 2] : 0.0;
            if (std::fabs(denom) < 1e-300) {
                // exact agreement: the sequence has converged here
                next.resize(j);
                break;
            }
            next[j] = lower + 1.0 / denom;
        }
        diag_ = std::move(next);
        std::size_t top = diag_.size() - 1;
        if (top % 2 == 1)
            --top; // odd columns are auxiliary
        return diag_[top];
    }

private:
    std::vector<double> diag_;
};

} // namespace

IntegralResult integrate_semi_oscillatory(const Integrand& f,
                                          const OscillationHint& hint, double tol) {
    IntegralResult out;
    if (!(hint.asymptotic_zero_spacing > 0.0) || !(hint.first_partition_point > 0.0)) {
        out.status = QuadStatus::failed;
        return out;
    }
    constexpr int kMaxIntervals = 200;
    const double inner_tol = tol / 20.0;

    IntegralResult head = integrate_finite(f, 0.0, hint.first_partition_point, inner_tol);
    out.evaluations += head.evaluations;
    double partial = head.value;
    double panel_err = head.abs_err_est;

    EpsilonTable eps;
    double prev_est = std::numeric_limits<double>::quiet_NaN();
    double est = partial;
    for (int k = 0; k < kMaxIntervals; ++k) {
        const double a = hint.first_partition_point + k * hint.asymptotic_zero_spacing;
        const double b = a + hint.asymptotic_zero_spacing;
        IntegralResult part = integrate_finite(f, a, b, inner_tol);
        out.evaluations += part.evaluations;
        partial += part.value;
        panel_err += part.abs_err_est;
        est = eps.push(partial);
        if (k >= 3 && std::fabs(est - prev_est) < tol) {
            out.value = est;
            out.abs_err_est = std::fabs(est - prev_est) + panel_err;
            out.status = QuadStatus::accelerated;
            return out;
        }
        prev_est = est;
    }
    out.value = est;
    out.abs_err_est = std::fabs(est - prev_est) + panel_err;
    out.status = QuadStatus::failed;
    return out;
}

} // namespace besselint
