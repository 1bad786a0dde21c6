#pragma once

#include <array>
#include <string>
#include <vector>

#include "pinchperf/analytics.hpp"
#include "pinchperf/model.hpp"

namespace pinchperf {

struct ValidationTolerances {
    double outage_abs = 1e-9;    // closed form vs quadrature, absolute
    double rate_rel = 1e-6;      // closed form vs 2-D quadrature, relative
    double lossless_abs = 1e-5;  // alpha -> 0 limit vs lossless formula
};

struct ValidationIssue {
    std::string check;
    double gamma_t_db;
    double alpha;
    double d_x;
    OutageBranch branch;
    double delta;
    double tolerance;
};

struct ValidationReport {
    struct Worst {
        double delta = 0.0;
        double gamma_t_db = 0.0;
        double alpha = 0.0;
        double d_x = 0.0;
        bool seen = false;
    };
    // Worst deviation observed per outage branch, plus overall extremes.
    std::array<Worst, 6> outage_by_branch{};
    double outage_worst = 0.0;
    double rate_worst_rel = 0.0;
    double lossless_worst = 0.0;
    std::vector<ValidationIssue> violations;
    ValidationTolerances tolerances{};

    bool passed() const { return violations.empty(); }
    std::string to_text() const;
};

// Dual-route consistency grids: closed-form outage vs quadrature over
// gamma_t in [90, 115] dB (20 points) x alpha {0.001, 0.01, 0.05, 0.1}
// x d_x {10, 30}; closed-form rate vs quadrature over gamma_t
// {80, 90, 100, 110} x alpha {0.01, 0.05, 0.1} x d_x {10, 30}; and the
// alpha = 1e-8 outage limit against the lossless formula (alpha = 0 rows
// route to the lossless formula directly).
ValidationReport run_validate(const Deployment& base, double gamma_thr,
                              const ValidationTolerances& tol = {});

} // namespace pinchperf
