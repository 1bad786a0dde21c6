#include "pinchperf/analytics.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pinchperf/quadrature.hpp"
#include "pinchperf/specfun.hpp"

namespace pinchperf {

namespace {

// Branch-boundary dust: radicands are non-negative on the row that uses them,
// so anything below comes from rounding.
double sqrt_clamped(double v) {
    if (v <= 0.0) {
        assert(v > -1e-12);
        return 0.0;
    }
    return std::sqrt(v);
}

double clamp_probability(double p) { return std::min(1.0, std::max(0.0, p)); }

constexpr double kLn2 = std::numbers::ln2;

} // namespace

const char* to_string(Method m) {
    switch (m) {
        case Method::closed_form: return "closed-form";
        case Method::monte_carlo: return "monte-carlo";
        case Method::quadrature: return "quadrature";
    }
    return "?";
}

const char* to_string(OutageBranch b) {
    switch (b) {
        case OutageBranch::uncovered_everywhere: return "uncovered-everywhere";
        case OutageBranch::partial_then_uncovered: return "partial-then-uncovered";
        case OutageBranch::covered_partial_uncovered: return "covered-partial-uncovered";
        case OutageBranch::partial_everywhere: return "partial-everywhere";
        case OutageBranch::covered_then_partial: return "covered-then-partial";
        case OutageBranch::covered_everywhere: return "covered-everywhere";
    }
    return "?";
}

namespace detail {

// Six mutually exclusive coverage patterns, tested first-match in this order.
// h2 is compared against c (coverage constant at the feed), ce (same after
// the full-length guide loss) and the quarter-width offset q = d_y^2/4.
RawOutage outage_lossy_raw(const Deployment& dep, double gamma_thr) {
    dep.validate();
    if (!(dep.alpha > 0.0))
        throw std::invalid_argument("outage_lossy: requires alpha > 0");
    const double c = derive_constants(dep, gamma_thr).c_const;
    const double h = dep.h;
    const double h2 = h * h;
    const double q = 0.25 * dep.d_y * dep.d_y;
    const double adx = dep.alpha * dep.d_x;
    const double adxdy = adx * dep.d_y;
    const double ce = c * std::exp(-adx);

    if (h2 >= c) {
        return {1.0, OutageBranch::uncovered_everywhere};
    }
    if (h2 <= c && h2 >= c - q && h2 >= ce) {
        const double r = sqrt_clamped(c - h2);
        return {1.0 + 4.0 / adxdy * (h * std::atan(r / h) - r),
                OutageBranch::partial_then_uncovered};
    }
    if (h2 <= c - q && h2 >= ce) {
        return {1.0 + (std::log((h2 + q) / c) - 2.0) / adx
                    + 4.0 * h * std::atan(dep.d_y / (2.0 * h)) / adxdy,
                OutageBranch::covered_partial_uncovered};
    }
    if (h2 >= c - q && h2 <= ce) {
        const double r1 = sqrt_clamped(ce - h2);
        const double r2 = sqrt_clamped(c - h2);
        return {1.0 + 4.0 / adxdy * (r1 - h * std::atan(r1 / h)
                                     - r2 + h * std::atan(r2 / h)),
                OutageBranch::partial_everywhere};
    }
    if (h2 <= c - q && h2 <= ce && h2 >= ce - q) {
        const double r1 = sqrt_clamped(ce - h2);
        return {1.0 + 4.0 / adxdy * (r1 - h * std::atan(r1 / h) - 0.5 * dep.d_y
                                     + h * std::atan(dep.d_y / (2.0 * h)))
                    + std::log((h2 + q) / c) / adx,
                OutageBranch::covered_then_partial};
    }
    // remaining region: h2 <= ce - q
    return {0.0, OutageBranch::covered_everywhere};
}

RawOutage outage_lossless_raw(const Deployment& dep, double gamma_thr) {
    dep.validate();
    const double c = derive_constants(dep, gamma_thr).c_const;
    const double h2 = dep.h * dep.h;
    const double q = 0.25 * dep.d_y * dep.d_y;
    if (h2 >= c) return {1.0, OutageBranch::uncovered_everywhere};
    if (c <= h2 + q)
        return {1.0 - 2.0 / dep.d_y * sqrt_clamped(c - h2),
                OutageBranch::partial_everywhere};
    return {0.0, OutageBranch::covered_everywhere};
}

} // namespace detail

OutageResult outage_lossy(const Deployment& dep, double gamma_thr) {
    const auto raw = detail::outage_lossy_raw(dep, gamma_thr);
    return {clamp_probability(raw.value), raw.branch, Method::closed_form};
}

OutageResult outage_lossless(const Deployment& dep, double gamma_thr) {
    const auto raw = detail::outage_lossless_raw(dep, gamma_thr);
    return {clamp_probability(raw.value), raw.branch, Method::closed_form};
}

namespace {

// Antiderivative assembled from the rate derivation; eps = x^2 - h^2 is
// passed explicitly so ln((x-h)/(x+h)) stays accurate when x approaches h.
double rate_bracket_term(double x, double eps, double h, double d_y) {
    const double q = 0.25 * d_y * d_y;
    const double at = std::atan(d_y / (2.0 * x));
    const double log_ratio = std::log(eps) - 2.0 * std::log(x + h);
    return 0.25 * d_y * std::log(q + x * x) + x * at + 0.5 * h * at * log_ratio
           + 0.25 * h * (z_kernel(x, h, d_y) - z_kernel(x, -h, d_y));
}

} // namespace

RateResult avg_rate_lossy(const Deployment& dep) {
    dep.validate();
    if (!(dep.alpha > 0.0))
        throw std::invalid_argument("avg_rate_lossy: requires alpha > 0");
    const double a = derive_constants(dep, 1.0).a_const;
    const double h = dep.h;
    const double k = h * h + 0.25 * dep.d_y * dep.d_y;
    const double s_end = std::exp(-dep.alpha * dep.d_x);

    const double li_term = dep.d_y / (dep.alpha * kLn2)
                           * (dilog(-a * s_end / k) - dilog(-a / k));
    const double atan_term =
        4.0 * h * dep.d_x / kLn2 * std::atan(dep.d_y / (2.0 * h));

    const double eps_lo = a;           // at the feed end of the bracket
    const double eps_hi = a * s_end;   // after the full-length guide loss
    const double upper = std::sqrt(eps_hi + h * h);
    const double lower = std::sqrt(eps_lo + h * h);
    const double bracket = rate_bracket_term(upper, eps_hi, h, dep.d_y)
                           - rate_bracket_term(lower, eps_lo, h, dep.d_y);

    const double rate =
        (li_term - atan_term - 8.0 / (dep.alpha * kLn2) * bracket)
        / (dep.d_x * dep.d_y);
    return {std::max(0.0, rate), Method::closed_form};
}

RateResult avg_rate_lossless_numeric(const Deployment& dep) {
    dep.validate();
    const double a = derive_constants(dep, 1.0).a_const;
    const double h2 = dep.h * dep.h;
    // x-independent integrand once the guide loss is dropped
    const auto inner = [&](double y) {
        return std::log1p(a / (y * y + h2)) / kLn2;
    };
    QuadOptions opts;
    opts.abs_tol = 0.0;
    opts.rel_tol = 1e-8;
    const double iy = integrate(inner, 0.0, 0.5 * dep.d_y, opts);
    return {2.0 * iy / dep.d_y, Method::quadrature};
}

} // namespace pinchperf
