#pragma once

#include "pinchperf/model.hpp"

namespace pinchperf {

enum class Method { closed_form, monte_carlo, quadrature };

const char* to_string(Method m);

// Coverage pattern along the waveguide axis.  At a given x the user strip is
// either fully covered (the SNR circle spans |y| <= d_y/2), partially covered,
// or uncovered.  The six branches enumerate how the partial-coverage window
// [x_b, x_a] sits relative to [0, d_x]; the lossless formula only produces the
// three x-independent patterns.
enum class OutageBranch {
    uncovered_everywhere,      // threshold unreachable even at the feed point
    partial_then_uncovered,    // partial from x = 0, total outage past x_a
    covered_partial_uncovered, // all three zones inside the service area
    partial_everywhere,        // partial at every x
    covered_then_partial,      // covered until x_b, partial to the far edge
    covered_everywhere,        // zero outage
};

const char* to_string(OutageBranch b);

struct OutageResult {
    double probability;
    OutageBranch branch;
    Method method;
};

struct RateResult {
    double rate;  // ergodic rate [bit/s/Hz]
    Method method;
};

// Closed-form outage probability of a pinching element parked at the user's
// x coordinate, user uniform over the service area, lossy guide (alpha > 0).
OutageResult outage_lossy(const Deployment& dep, double gamma_thr);

// Lossless-guide specialization (alpha ignored).
OutageResult outage_lossless(const Deployment& dep, double gamma_thr);

// Closed-form ergodic rate of the same strategy, lossy guide (alpha > 0).
RateResult avg_rate_lossy(const Deployment& dep);

// Lossless ergodic rate; no closed form is used, the defining integral is
// evaluated by adaptive quadrature to 1e-8 relative accuracy.
RateResult avg_rate_lossless_numeric(const Deployment& dep);

namespace detail {
// Pre-clamp branch value, exposed so tests can assert the [0,1] invariant
// holds to 1e-12 before clamping.
struct RawOutage {
    double value;
    OutageBranch branch;
};
RawOutage outage_lossy_raw(const Deployment& dep, double gamma_thr);
RawOutage outage_lossless_raw(const Deployment& dep, double gamma_thr);
} // namespace detail

} // namespace pinchperf
