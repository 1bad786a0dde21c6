#pragma once

#include "pinchperf/model.hpp"

namespace pinchperf {

enum class PlacementBranch { interior_root, double_root, feed_point };

const char* to_string(PlacementBranch b);

struct PlacementSolution {
    double x_star;           // optimal pinch coordinate in [0, d_x]
    PlacementBranch branch;
    double objective;        // f(x_star)
    double discriminant;     // 4 - 4 alpha^2 (y_m^2 + h^2)
};

// Placement objective f(x_p) = exp(-alpha x_p) / ((x_m - x_p)^2 + y_m^2 + h^2),
// proportional to the received SNR.
double snr_objective(const Deployment& dep, const UserPosition& user, double x_p);

// Argmax of f over x_p >= 0. The stationarity condition
//   -alpha ((x_m - x)^2 + y_m^2 + h^2) + 2 (x_m - x) = 0
// has discriminant D = 4 - 4 alpha^2 (y_m^2 + h^2); the interior root is taken
// when it is feasible and beats the feed point, the double root when |D| is
// within 1e-12 of zero, the feed point x = 0 otherwise.  alpha = 0 collapses
// to x_star = x_m.
PlacementSolution optimal_position(const Deployment& dep, const UserPosition& user);

// f(x_star) / f(x_m): SNR factor gained by repositioning away from the
// user's own x coordinate. Always >= 1 up to rounding.
double placement_gain(const Deployment& dep, const UserPosition& user);

} // namespace pinchperf
