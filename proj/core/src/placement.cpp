#include "pinchperf/placement.hpp"

#include <cmath>

namespace pinchperf {

const char* to_string(PlacementBranch b) {
    switch (b) {
        case PlacementBranch::interior_root: return "interior-root";
        case PlacementBranch::double_root: return "double-root";
        case PlacementBranch::feed_point: return "feed-point";
    }
    return "?";
}

double snr_objective(const Deployment& dep, const UserPosition& user, double x_p) {
    const double dx = user.x_m - x_p;
    return std::exp(-dep.alpha * x_p) / (dx * dx + user.y_m * user.y_m + dep.h * dep.h);
}

PlacementSolution optimal_position(const Deployment& dep, const UserPosition& user) {
    const double s = user.y_m * user.y_m + dep.h * dep.h;
    const double alpha = dep.alpha;
    const double disc = 4.0 - 4.0 * alpha * alpha * s;

    if (alpha == 0.0) {
        // no guide loss: sit right at the user
        return {user.x_m, PlacementBranch::interior_root,
                snr_objective(dep, user, user.x_m), disc};
    }

    constexpr double kDiscDust = 1e-12;
    if (disc > kDiscDust) {
        // interior root of -alpha((x_m-x)^2+s) + 2(x_m-x) = 0, rationalized so
        // the deviation from x_m stays accurate for small alpha
        const double root = std::sqrt(1.0 - alpha * alpha * s);
        const double x_o1 = user.x_m - alpha * s / (1.0 + root);
        if (x_o1 > 0.0 &&
            snr_objective(dep, user, x_o1) > snr_objective(dep, user, 0.0)) {
            return {x_o1, PlacementBranch::interior_root,
                    snr_objective(dep, user, x_o1), disc};
        }
    } else if (disc >= -kDiscDust) {
        const double x_o2 = user.x_m - 1.0 / alpha;
        if (x_o2 > 0.0) {
            return {x_o2, PlacementBranch::double_root,
                    snr_objective(dep, user, x_o2), disc};
        }
    }
    return {0.0, PlacementBranch::feed_point, snr_objective(dep, user, 0.0), disc};
}

double placement_gain(const Deployment& dep, const UserPosition& user) {
    return optimal_position(dep, user).objective / snr_objective(dep, user, user.x_m);
}

} // namespace pinchperf
