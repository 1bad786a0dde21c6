#pragma once

#include <functional>
#include <span>

#include "pinchperf/errors.hpp"

namespace pinchperf {

struct QuadOptions {
    double abs_tol = 1e-12;
    double rel_tol = 0.0;
    int max_levels = 60;  // bisection depth cap per subinterval chain
};

// Globally adaptive Gauss-Kronrod 7/15 integration of f over [a, b].
// interior_breakpoints are seeded as initial subdivision points (kinks,
// branch boundaries); values outside (a, b) are ignored.  Throws
// ConvergenceError if the error estimate stays above tolerance once every
// worst interval has reached the level cap.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opts = {},
                 std::span<const double> interior_breakpoints = {});

} // namespace pinchperf
