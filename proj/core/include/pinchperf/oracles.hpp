#pragma once

#include <cstdint>

#include "pinchperf/analytics.hpp"
#include "pinchperf/model.hpp"

namespace pinchperf {

// Antenna placement policies compared across the study.
enum class Strategy {
    pinch_at_user,      // pinching element at the user's x coordinate
    pinch_optimal,      // pinching element at the SNR-optimal coordinate
    conventional_feed,  // fixed corner antenna, no repositioning
};

const char* to_string(Strategy s);

struct McEstimate {
    double value;
    double std_error;
    std::uint64_t n_samples;
    std::uint64_t seed;
};

// Monte Carlo outage probability over uniformly drawn user positions.
// Deterministic for fixed (seed, n_samples) regardless of n_threads
// (0 = hardware concurrency).
McEstimate simulate_outage(const Deployment& dep, double gamma_thr, Strategy strategy,
                           std::uint64_t n_samples, std::uint64_t seed,
                           int n_threads = 0);

// Monte Carlo ergodic rate E[log2(1 + snr)] with the same determinism contract.
McEstimate simulate_rate(const Deployment& dep, Strategy strategy,
                         std::uint64_t n_samples, std::uint64_t seed,
                         int n_threads = 0);

// Outage probability by adaptive quadrature of the defining integral,
// independent of the closed-form branch logic (dual-route verification).
OutageResult outage_quadrature(const Deployment& dep, double gamma_thr);

// Ergodic rate by nested 2-D adaptive quadrature of the defining integral.
RateResult rate_quadrature(const Deployment& dep);

// Deterministic outage for any strategy: closed form for pinch_at_user,
// quadrature otherwise.
double outage_for_strategy(const Deployment& dep, double gamma_thr, Strategy strategy);

// Deterministic rate for any strategy (closed form where available).
double rate_for_strategy(const Deployment& dep, Strategy strategy);

// Smallest transmit SNR gamma_t [dB] whose outage hits target_p (within 5%
// relative), searched by bisection over [60, 140] dB.  Throws BracketError
// when the target is not attainable strictly inside the bracket and
// std::invalid_argument for target_p outside (0, 1).
double find_power_for_outage(const Deployment& dep, double gamma_thr,
                             double target_p, Strategy strategy);

} // namespace pinchperf
