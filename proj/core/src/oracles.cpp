#include "pinchperf/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "pinchperf/errors.hpp"
#include "pinchperf/placement.hpp"
#include "pinchperf/quadrature.hpp"
#include "pinchperf/rng.hpp"

namespace pinchperf {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// Samples are addressed globally as (block, offset) so any worker layout
// reproduces the same draws; block partials are merged in block order.
constexpr std::uint64_t kBlockSize = 16384;

struct BlockPartial {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t count = 0;
};

// Neumaier-compensated accumulator
struct Kahan {
    double s = 0.0;
    double c = 0.0;
    void add(double v) {
        const double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    double total() const { return s + c; }
};

int resolve_threads(int n_threads) {
    if (n_threads > 0) return n_threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <typename PerSample>
std::vector<BlockPartial> run_blocks(std::uint64_t n_samples, std::uint64_t seed,
                                     int n_threads, const PerSample& value_of) {
    const std::uint64_t n_blocks = (n_samples + kBlockSize - 1) / kBlockSize;
    std::vector<BlockPartial> partials(n_blocks);
    std::atomic<std::uint64_t> next{0};

    const auto worker = [&] {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            const std::uint64_t begin = b * kBlockSize;
            const std::uint64_t end = std::min(begin + kBlockSize, n_samples);
            Kahan sum, sum_sq;
            for (std::uint64_t i = begin; i < end; ++i) {
                double u, v;
                uniform_pair(seed, b, i - begin, u, v);
                const double val = value_of(u, v);
                sum.add(val);
                sum_sq.add(val * val);
            }
            partials[b] = {sum.total(), sum_sq.total(), end - begin};
        }
    };

    const int t = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(resolve_threads(n_threads)), n_blocks));
    if (t <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(t);
        for (int i = 0; i < t; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return partials;
}

template <typename PerSample>
McEstimate estimate_mean(std::uint64_t n_samples, std::uint64_t seed, int n_threads,
                         bool bernoulli, const PerSample& value_of) {
    if (n_samples == 0)
        throw std::invalid_argument("simulate: n_samples must be positive");
    const auto partials = run_blocks(n_samples, seed, n_threads, value_of);
    Kahan sum, sum_sq;
    for (const auto& p : partials) {
        sum.add(p.sum);
        sum_sq.add(p.sum_sq);
    }
    const double n = static_cast<double>(n_samples);
    const double mean = sum.total() / n;
    double se;
    if (bernoulli) {
        se = std::sqrt(std::max(0.0, mean * (1.0 - mean)) / n);
    } else {
        const double var =
            n > 1.0 ? std::max(0.0, (sum_sq.total() - n * mean * mean) / (n - 1.0))
                    : 0.0;
        se = std::sqrt(var / n);
    }
    return {mean, se, n_samples, seed};
}

double strategy_snr(const Deployment& dep, Strategy strategy, const UserPosition& user) {
    switch (strategy) {
        case Strategy::pinch_at_user:
            return received_snr(dep, user.x_m, user);
        case Strategy::pinch_optimal:
            return received_snr(dep, optimal_position(dep, user).x_star, user);
        case Strategy::conventional_feed:
            return benchmark_snr(dep, user);
    }
    throw std::logic_error("unknown strategy");
}

} // namespace

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::pinch_at_user: return "pinch-at-user-x";
        case Strategy::pinch_optimal: return "pinch-optimal";
        case Strategy::conventional_feed: return "conventional-feed-point";
    }
    return "?";
}

McEstimate simulate_outage(const Deployment& dep, double gamma_thr, Strategy strategy,
                           std::uint64_t n_samples, std::uint64_t seed, int n_threads) {
    dep.validate();
    if (!(gamma_thr > 0.0))
        throw std::invalid_argument("simulate_outage: gamma_thr must be positive");
    return estimate_mean(n_samples, seed, n_threads, true, [&](double u, double v) {
        const UserPosition user{u * dep.d_x, (v - 0.5) * dep.d_y};
        return strategy_snr(dep, strategy, user) <= gamma_thr ? 1.0 : 0.0;
    });
}

McEstimate simulate_rate(const Deployment& dep, Strategy strategy,
                         std::uint64_t n_samples, std::uint64_t seed, int n_threads) {
    dep.validate();
    return estimate_mean(n_samples, seed, n_threads, false, [&](double u, double v) {
        const UserPosition user{u * dep.d_x, (v - 0.5) * dep.d_y};
        return std::log1p(strategy_snr(dep, strategy, user)) / kLn2;
    });
}

OutageResult outage_quadrature(const Deployment& dep, double gamma_thr) {
    dep.validate();
    const double c = derive_constants(dep, gamma_thr).c_const;
    const double h2 = dep.h * dep.h;
    const double half_dy = 0.5 * dep.d_y;

    // outage probability at axis position x, straight from the definition
    const auto p_at = [&](double x) {
        const double g = c * std::exp(-dep.alpha * x) - h2;
        if (g <= 0.0) return 1.0;
        return 1.0 - std::min(half_dy, std::sqrt(g)) / half_dy;
    };

    std::vector<double> kinks;
    if (dep.alpha > 0.0) {
        if (c > h2) kinks.push_back(std::log(c / h2) / dep.alpha);
        const double k = h2 + half_dy * half_dy;
        if (c > k) kinks.push_back(std::log(c / k) / dep.alpha);
    }
    const double integral = integrate(p_at, 0.0, dep.d_x, {}, kinks);
    const auto branch = dep.alpha > 0.0
                            ? detail::outage_lossy_raw(dep, gamma_thr).branch
                            : detail::outage_lossless_raw(dep, gamma_thr).branch;
    return {std::min(1.0, std::max(0.0, integral / dep.d_x)), branch,
            Method::quadrature};
}

RateResult rate_quadrature(const Deployment& dep) {
    dep.validate();
    const double a = derive_constants(dep, 1.0).a_const;
    const double h2 = dep.h * dep.h;
    QuadOptions inner_opts;
    inner_opts.abs_tol = 0.0;
    inner_opts.rel_tol = 1e-11;
    QuadOptions outer_opts;
    outer_opts.abs_tol = 0.0;
    outer_opts.rel_tol = 1e-9;

    const auto outer = [&](double x) {
        const double ax = a * std::exp(-dep.alpha * x);
        return integrate(
            [&](double y) { return std::log1p(ax / (y * y + h2)); }, 0.0,
            0.5 * dep.d_y, inner_opts);
    };
    const double val = integrate(outer, 0.0, dep.d_x, outer_opts);
    return {2.0 * val / (dep.d_x * dep.d_y * kLn2), Method::quadrature};
}

namespace {

// Corner-antenna outage: served set is the disk r^2 < c_b clipped to the
// service rectangle (the 1 m clamp only matters once c_b <= 1).
double benchmark_outage(const Deployment& dep, double gamma_thr) {
    const double c_b = derive_constants(dep, gamma_thr).c_const;
    if (c_b <= 1.0) return 1.0;
    const double half_dy = 0.5 * dep.d_y;
    const double reach = std::sqrt(c_b);
    const double x_end = std::min(dep.d_x, reach);
    const auto width = [&](double x) {
        const double g = c_b - x * x;
        if (g <= 0.0) return 0.0;
        return 2.0 * std::min(half_dy, std::sqrt(g));
    };
    std::vector<double> kinks{reach};
    if (c_b > half_dy * half_dy) kinks.push_back(std::sqrt(c_b - half_dy * half_dy));
    // the covered area can reach O(d_x * d_y), so a bare 1e-12 absolute target
    // would sit below double resolution; the relative floor keeps it reachable
    QuadOptions opts;
    opts.rel_tol = 1e-13;
    const double covered = integrate(width, 0.0, x_end, opts, kinks);
    return std::min(1.0, std::max(0.0, 1.0 - covered / (dep.d_x * dep.d_y)));
}

// Outage under optimal repositioning.  The best achievable SNR falls
// monotonically in |y|, so per axis position the served half-width y_c is
// found by bisection and averaged.
double pinch_optimal_outage(const Deployment& dep, double gamma_thr) {
    const double c = derive_constants(dep, gamma_thr).c_const;
    const double thr = 1.0 / c;  // outage iff objective f(x_star) <= 1/c
    const double half_dy = 0.5 * dep.d_y;

    const auto best = [&](double x, double y) {
        return optimal_position(dep, UserPosition{x, y}).objective;
    };
    const auto p_at = [&](double x) {
        if (best(x, 0.0) <= thr) return 1.0;
        if (best(x, half_dy) > thr) return 0.0;
        double lo = 0.0, hi = half_dy;
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            (best(x, mid) > thr ? lo : hi) = mid;
        }
        return 1.0 - lo / half_dy;
    };
    QuadOptions opts;
    opts.rel_tol = 1e-13;
    const double integral = integrate(p_at, 0.0, dep.d_x, opts);
    return std::min(1.0, std::max(0.0, integral / dep.d_x));
}

double quadrature_rate_of_snr(const Deployment& dep,
                              const std::function<double(const UserPosition&)>& snr,
                              std::span<const double> outer_kinks = {},
                              bool inner_unit_kink = false) {
    QuadOptions inner_opts;
    inner_opts.abs_tol = 0.0;
    inner_opts.rel_tol = 1e-11;
    QuadOptions outer_opts;
    outer_opts.abs_tol = 0.0;
    outer_opts.rel_tol = 1e-9;
    const double half_dy = 0.5 * dep.d_y;

    const auto outer = [&](double x) {
        std::vector<double> kinks;
        if (inner_unit_kink && x < 1.0) kinks.push_back(std::sqrt(1.0 - x * x));
        return integrate(
            [&](double y) { return std::log1p(snr(UserPosition{x, y})); }, 0.0,
            half_dy, inner_opts, kinks);
    };
    const double val = integrate(outer, 0.0, dep.d_x, outer_opts, outer_kinks);
    return 2.0 * val / (dep.d_x * dep.d_y * kLn2);
}

} // namespace

double outage_for_strategy(const Deployment& dep, double gamma_thr, Strategy strategy) {
    dep.validate();
    switch (strategy) {
        case Strategy::pinch_at_user:
            return dep.alpha > 0.0 ? outage_lossy(dep, gamma_thr).probability
                                   : outage_lossless(dep, gamma_thr).probability;
        case Strategy::pinch_optimal:
            return pinch_optimal_outage(dep, gamma_thr);
        case Strategy::conventional_feed:
            return benchmark_outage(dep, gamma_thr);
    }
    throw std::logic_error("unknown strategy");
}

double rate_for_strategy(const Deployment& dep, Strategy strategy) {
    dep.validate();
    switch (strategy) {
        case Strategy::pinch_at_user:
            return dep.alpha > 0.0 ? avg_rate_lossy(dep).rate
                                   : avg_rate_lossless_numeric(dep).rate;
        case Strategy::pinch_optimal:
            return quadrature_rate_of_snr(dep, [&](const UserPosition& u) {
                return received_snr(dep, optimal_position(dep, u).x_star, u);
            });
        case Strategy::conventional_feed: {
            const double kink[] = {1.0};
            return quadrature_rate_of_snr(
                dep, [&](const UserPosition& u) { return benchmark_snr(dep, u); },
                kink, true);
        }
    }
    throw std::logic_error("unknown strategy");
}

double find_power_for_outage(const Deployment& dep, double gamma_thr,
                             double target_p, Strategy strategy) {
    dep.validate();
    if (!(target_p > 0.0 && target_p < 1.0))
        throw std::invalid_argument(
            "find_power_for_outage: target must lie strictly inside (0, 1)");

    const auto outage_at = [&](double gamma_t_db) {
        Deployment d = dep;
        d.p_t = p_t_for_gamma_t_db(gamma_t_db, d.sigma2);
        return outage_for_strategy(d, gamma_thr, strategy);
    };

    double lo = 60.0, hi = 140.0;
    const double p_lo = outage_at(lo);
    const double p_hi = outage_at(hi);
    // outage is non-increasing in transmit power
    if (p_lo < target_p || p_hi > target_p)
        throw BracketError(
            "find_power_for_outage: target not attainable inside [60, 140] dB");

    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double p = outage_at(mid);
        if (std::abs(p - target_p) <= 0.05 * target_p) return mid;
        (p >= target_p ? lo : hi) = mid;
    }
    throw ConvergenceError(
        "find_power_for_outage: bisection did not reach the target tolerance");
}

} // namespace pinchperf
