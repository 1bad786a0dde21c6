// End-to-end acceptance gate.  Each criterion prints one [PASS]/[FAIL] line
// with the measured figure of merit and its budget; the process exits nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "pinchperf/analytics.hpp"
#include "pinchperf/model.hpp"
#include "pinchperf/oracles.hpp"
#include "pinchperf/placement.hpp"
#include "pinchperf/specfun.hpp"
#include "ref_oracles.hpp"

using namespace pinchperf;

namespace {

int g_failures = 0;

struct Outcome {
    bool pass;
    std::string detail;
};

template <typename Body>
void criterion(int id, const char* title, double budget_seconds, const Body& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_seconds > 0.0 && secs > budget_seconds) {
        outcome.pass = false;
        outcome.detail += " [over budget]";
    }
    if (!outcome.pass) ++g_failures;
    std::printf("[%s] %d. %s: %s (%.2f s, budget %s)\n",
                outcome.pass ? "PASS" : "FAIL", id, title, outcome.detail.c_str(),
                secs, budget_seconds > 0.0
                          ? (std::to_string(int(budget_seconds)) + " s").c_str()
                          : "none");
    std::fflush(stdout);
}

Deployment setup(double gamma_t_db, double alpha, double d_x) {
    Deployment dep;
    dep.alpha = alpha;
    dep.d_x = d_x;
    dep.p_t = p_t_for_gamma_t_db(gamma_t_db, dep.sigma2);
    return dep;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

constexpr double kGammaThr = 100.0;
constexpr double kGammaGridLo = 90.0, kGammaGridHi = 115.0;
constexpr int kGammaGridPoints = 20;
constexpr double kAlphaGrid[] = {0.001, 0.01, 0.05, 0.1};
constexpr double kLengthGrid[] = {10.0, 30.0};

// ---------------------------------------------------------------- criteria

Outcome closed_form_outage_vs_quadrature() {
    double worst = 0.0;
    int points = 0;
    for (int i = 0; i < kGammaGridPoints; ++i) {
        const double g = kGammaGridLo +
                         (kGammaGridHi - kGammaGridLo) * i / (kGammaGridPoints - 1.0);
        for (double alpha : kAlphaGrid)
            for (double d_x : kLengthGrid) {
                const Deployment dep = setup(g, alpha, d_x);
                const double delta =
                    std::abs(outage_lossy(dep, kGammaThr).probability -
                             outage_quadrature(dep, kGammaThr).probability);
                worst = std::max(worst, delta);
                ++points;
            }
    }
    return {worst <= 1e-9,
            fmt("max |closed form - quadrature| = %.3g over %g tuples, tol 1e-9",
                worst, double(points))};
}

Outcome closed_form_outage_vs_monte_carlo() {
    struct Point {
        double g, alpha, d_x;
    };
    const Point points[] = {
        {91, 0.01, 10}, {92, 0.01, 10}, {93, 0.01, 10}, {94, 0.01, 10},
        {95, 0.01, 10}, {96, 0.01, 10}, {94, 0.1, 30},  {97, 0.1, 30},
        {100, 0.1, 30}, {103, 0.1, 30}, {92, 0.05, 10}, {95, 0.05, 10},
    };
    constexpr std::uint64_t kSamples = 1'000'000;
    double worst_sigma = 0.0;
    int index = 0;
    for (const Point& p : points) {
        const Deployment dep = setup(p.g, p.alpha, p.d_x);
        const double exact = outage_lossy(dep, kGammaThr).probability;
        const McEstimate est = simulate_outage(dep, kGammaThr,
                                               Strategy::pinch_at_user, kSamples,
                                               1000 + index++, /*n_threads=*/1);
        if (est.std_error == 0.0) return {false, "degenerate estimate"};
        worst_sigma = std::max(worst_sigma, std::abs(est.value - exact) / est.std_error);
    }
    return {worst_sigma <= 4.0,
            fmt("worst |closed form - estimate| = %.2f sigma over 12 points at 1e6 "
                "samples, limit 4",
                worst_sigma)};
}

Outcome closed_form_rate_vs_quadrature() {
    double worst = 0.0;
    for (double g : {80.0, 90.0, 100.0, 110.0})
        for (double alpha : {0.01, 0.05, 0.1})
            for (double d_x : kLengthGrid) {
                const Deployment dep = setup(g, alpha, d_x);
                const double quad = rate_quadrature(dep).rate;
                worst = std::max(worst,
                                 std::abs(avg_rate_lossy(dep).rate - quad) / quad);
            }
    return {worst <= 1e-6,
            fmt("max relative delta = %.3g over 24 tuples, tol 1e-6", worst)};
}

Outcome lossless_limit_and_branch_continuity() {
    // the alpha -> 0 limit of the lossy expression lands on the lossless one
    double worst_limit = 0.0;
    for (int i = 0; i < kGammaGridPoints; ++i) {
        const double g = kGammaGridLo +
                         (kGammaGridHi - kGammaGridLo) * i / (kGammaGridPoints - 1.0);
        for (double d_x : kLengthGrid) {
            Deployment near = setup(g, 1e-8, d_x);
            Deployment at = setup(g, 0.0, d_x);
            worst_limit = std::max(
                worst_limit, std::abs(outage_lossy(near, kGammaThr).probability -
                                      outage_lossless(at, kGammaThr).probability));
        }
    }
    if (worst_limit > 1e-5)
        return {false, fmt("limit mismatch %.3g > 1e-5", worst_limit)};

    // adjacent branch expressions agree at both seams of the piecewise form;
    // +/-1e-9 nudges flip the selected branch without a discontinuous jump
    const Deployment base = setup(95.0, 0.0, 10.0);
    const double h2 = base.h * base.h;
    const double q = 0.25 * base.d_y * base.d_y;
    const auto with_c = [&](double c) {
        Deployment d = base;
        d.p_t = c * kGammaThr * d.sigma2 / (d.eta() * d.n_antennas);
        return d;
    };
    const auto mid_expr = [&](double c) {
        return 1.0 - 2.0 / base.d_y * std::sqrt(std::max(0.0, c - h2));
    };

    double worst_seam = std::abs(1.0 - mid_expr(h2));        // full-outage seam
    worst_seam = std::max(worst_seam, std::abs(mid_expr(h2 + q) - 0.0));
    if (worst_seam > 1e-10)
        return {false, fmt("branch expressions disagree by %.3g at a seam", worst_seam)};

    double worst_jump = 0.0;
    for (double boundary : {h2, h2 + q}) {
        const double at = outage_lossless(with_c(boundary), kGammaThr).probability;
        for (double eps : {-1e-9, 1e-9}) {
            const double nudged =
                outage_lossless(with_c(boundary * (1.0 + eps)), kGammaThr).probability;
            worst_jump = std::max(worst_jump, std::abs(nudged - at));
        }
    }
    // the square root's infinite slope maps a 1e-9 nudge to ~2e-5; anything
    // materially larger would mean the wrong branch was selected
    if (worst_jump > 1e-4)
        return {false, fmt("selection jump %.3g across a seam", worst_jump)};
    return {true, fmt("limit delta %.3g (tol 1e-5); seam agreement %.3g (tol 1e-10); "
                      "nudge response %.3g",
                      worst_limit, worst_seam, worst_jump)};
}

Outcome power_gap_between_guide_lengths() {
    const Deployment short_guide = setup(100.0, 0.01, 10.0);
    Deployment long_guide = short_guide;
    long_guide.d_x = 30.0;

    const double bench_gap =
        find_power_for_outage(long_guide, kGammaThr, 1e-5, Strategy::conventional_feed) -
        find_power_for_outage(short_guide, kGammaThr, 1e-5, Strategy::conventional_feed);
    const double pinch_gap =
        find_power_for_outage(long_guide, kGammaThr, 1e-5, Strategy::pinch_at_user) -
        find_power_for_outage(short_guide, kGammaThr, 1e-5, Strategy::pinch_at_user);

    const bool pass = bench_gap >= 7.0 && bench_gap <= 9.0 && pinch_gap <= 1.0;
    return {pass, fmt("conventional gap %.3f dB (needs 8 +/- 1), pinched gap %.3f dB "
                      "(needs <= 1)",
                      bench_gap, pinch_gap)};
}

Outcome element_count_ordering() {
    // claim under test: one repositionable element beats a doubled
    // conventional array, and two beat five, at every transmit SNR in range
    constexpr std::uint64_t kSamples = 1'000'000;
    constexpr std::uint64_t kSeed = 42;  // common draws across all curves
    const struct {
        int pinch_n, bench_n;
    } pairs[] = {{1, 2}, {2, 5}};

    std::string violations;
    int checked = 0;
    for (int g = 90; g <= 110; ++g) {
        for (const auto& pair : pairs) {
            Deployment pinched = setup(double(g), 0.01, 10.0);
            pinched.n_antennas = pair.pinch_n;
            Deployment bench = pinched;
            bench.n_antennas = pair.bench_n;

            const McEstimate p = simulate_outage(pinched, kGammaThr,
                                                 Strategy::pinch_at_user, kSamples,
                                                 kSeed);
            const McEstimate b = simulate_outage(bench, kGammaThr,
                                                 Strategy::conventional_feed, kSamples,
                                                 kSeed);
            ++checked;
            const double excess = p.value - b.value;
            const double sigma =
                std::sqrt(p.std_error * p.std_error + b.std_error * b.std_error);
            if (excess > 4.0 * sigma) {
                violations += fmt(" [N=%g vs %g at ", double(pair.pinch_n),
                                  double(pair.bench_n));
                violations += fmt("%g dB: %.4f > %.4f]", double(g), p.value, b.value);
            }
        }
    }
    if (violations.empty())
        return {true, fmt("ordering holds at all %g points (4-sigma screen)",
                          double(checked))};
    // the pinched element cannot get closer than the guide height to anyone,
    // while the corner feed stands amid the nearest users; at low transmit
    // SNR that geometry decides the comparison, so the claimed ordering fails
    return {false, "ordering violated (beyond 4 sigma):" + violations};
}

Outcome placement_against_grid_search() {
    std::mt19937 gen(99);
    std::uniform_real_distribution<double> alpha_of(0.0, 0.5);
    std::uniform_real_distribution<double> x_of(0.0, 30.0);
    std::uniform_real_distribution<double> y_of(-5.0, 5.0);

    constexpr int kScenarios = 1000;
    constexpr int kGridPoints = 100000;
    double worst_shortfall = 0.0, worst_residual = 0.0, worst_bound = 0.0;
    int bound_checked = 0;

    for (int trial = 0; trial < kScenarios; ++trial) {
        Deployment dep;
        dep.d_x = 30.0;
        dep.alpha = trial % 100 == 0 ? 0.0 : alpha_of(gen);
        const UserPosition user{x_of(gen), y_of(gen)};
        const PlacementSolution sol = optimal_position(dep, user);

        double best = 0.0;
        for (int i = 0; i <= kGridPoints; ++i) {
            const double x = dep.d_x * i / double(kGridPoints);
            best = std::max(best, snr_objective(dep, user, x));
        }
        worst_shortfall = std::max(worst_shortfall, best - sol.objective);

        const double s = user.y_m * user.y_m + dep.h * dep.h;
        if (sol.branch == PlacementBranch::interior_root && dep.alpha > 0.0) {
            const double dx = sol.x_star - user.x_m;
            worst_residual = std::max(
                worst_residual, std::abs(dep.alpha * (dx * dx + s) + 2.0 * dx));
        }
        // displacement bound: the stationary solution never moves the element
        // farther from the user column than (1 - sqrt(1 - a^2 s)) / a
        if (dep.alpha > 0.0 && sol.discriminant > 1e-12 &&
            sol.branch != PlacementBranch::feed_point) {
            const double limit =
                (1.0 - std::sqrt(1.0 - dep.alpha * dep.alpha * s)) / dep.alpha;
            worst_bound = std::max(worst_bound,
                                   std::abs(sol.x_star - user.x_m) - limit);
            ++bound_checked;
        }
    }
    const bool pass =
        worst_shortfall <= 1e-9 && worst_residual <= 1e-9 && worst_bound <= 1e-12;
    return {pass, fmt("grid shortfall %.3g (tol 1e-9); stationarity residual %.3g "
                      "(tol 1e-9); displacement-bound excess %.3g",
                      worst_shortfall, worst_residual, worst_bound) +
                      fmt(" over %g bounded scenarios", double(bound_checked))};
}

Outcome special_function_oracles() {
    double worst_integral = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double x = -50.0 + i * (50.99 / 19.0);
        worst_integral = std::max(worst_integral,
                                  std::abs(dilog(x) - testref::dilog(x)));
    }
    if (worst_integral > 1e-10)
        return {false, fmt("defining-integral delta %.3g > 1e-10", worst_integral)};

    const double at_minus_one =
        std::abs(dilog(-1.0) + std::numbers::pi * std::numbers::pi / 12.0);
    const double at_zero = std::abs(dilog(0.0));
    if (at_minus_one > 1e-14 || at_zero > 1e-14)
        return {false, fmt("special values off by %.3g / %.3g", at_minus_one, at_zero)};

    std::mt19937 gen(123);
    std::uniform_real_distribution<double> re(-40.0, 0.99);
    std::uniform_real_distribution<double> im(0.01, 40.0);
    double worst_conj = 0.0;
    for (int i = 0; i < 50; ++i) {
        const std::complex<double> z{re(gen), im(gen)};
        worst_conj = std::max(worst_conj,
                              std::abs(im_dilog(z) + im_dilog(std::conj(z))));
    }
    if (worst_conj > 1e-12)
        return {false, fmt("conjugation asymmetry %.3g > 1e-12", worst_conj)};
    return {true, fmt("integral delta %.3g; special values %.3g; conjugation "
                      "asymmetry %.3g",
                      worst_integral, std::max(at_minus_one, at_zero), worst_conj)};
}

std::string run_cli(const std::string& args, int& exit_code) {
    const std::string cmd =
        std::string(PINCHPERF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

Outcome sweep_determinism() {
    const std::string cmd =
        "sweep --gamma-t-db 90:115:1 --samples 50000 --seed 41 "
        "--strategy pinch-at-user-x --strategy conventional-feed-point";
    int rc1 = 0, rc2 = 0, rc3 = 0;
    const std::string a = run_cli(cmd + " --threads 1", rc1);
    const std::string b = run_cli(cmd + " --threads 1", rc2);
    const std::string c = run_cli(cmd + " --threads 4", rc3);
    if (rc1 != 0 || rc2 != 0 || rc3 != 0)
        return {false, fmt("CLI exit codes %g/%g/%g", rc1, rc2, rc3)};
    if (a.empty() || a != b)
        return {false, "repeated invocations differ"};
    if (a != c) return {false, "output depends on the worker count"};
    return {true, fmt("%g identical bytes across reruns and thread counts",
                      double(a.size()))};
}

} // namespace

int main() {
    std::printf("acceptance gate, reference deployment: 28 GHz, sigma2 -90 dBm, "
                "gamma_thr 100\n");

    criterion(1, "closed-form outage matches quadrature on the grid", 30.0,
              closed_form_outage_vs_quadrature);
    criterion(2, "closed-form outage sits inside Monte Carlo error bars", 120.0,
              closed_form_outage_vs_monte_carlo);
    criterion(3, "closed-form rate matches nested quadrature", 60.0,
              closed_form_rate_vs_quadrature);
    criterion(4, "lossless limit and branch continuity", 0.0,
              lossless_limit_and_branch_continuity);
    criterion(5, "guide-length power penalty: conventional ~8 dB, pinched <= 1 dB",
              120.0, power_gap_between_guide_lengths);
    criterion(6, "fewer repositionable elements beat larger fixed arrays", 0.0,
              element_count_ordering);
    criterion(7, "placement solver is optimal, stationary and bounded", 60.0,
              placement_against_grid_search);
    criterion(8, "special functions match independent oracles", 0.0,
              special_function_oracles);
    criterion(9, "sweep output is byte-identical across runs and threads", 0.0,
              sweep_determinism);

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
