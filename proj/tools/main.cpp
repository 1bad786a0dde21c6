#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pinchperf/config.hpp"
#include "pinchperf/errors.hpp"
#include "pinchperf/oracles.hpp"
#include "pinchperf/placement.hpp"
#include "pinchperf/sweep.hpp"
#include "pinchperf/validate.hpp"

namespace {

using namespace pinchperf;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitToleranceViolation = 3;
constexpr int kExitNoConvergence = 4;

double parse_number(const std::string& name, const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size())
        throw std::invalid_argument(name + ": bad number '" + text + "'");
    return v;
}

// An axis-capable flag holds either a pinned scalar or a START:STOP:STEP range.
struct AxisArg {
    bool is_range = false;
    double scalar = 0.0;
    SweepRange range{};
};

AxisArg parse_axis_arg(const std::string& name, const std::string& text) {
    std::vector<std::string> parts{""};
    for (char c : text) {
        if (c == ':')
            parts.emplace_back();
        else
            parts.back() += c;
    }
    AxisArg arg;
    if (parts.size() == 1) {
        arg.scalar = parse_number(name, parts[0]);
        return arg;
    }
    if (parts.size() != 3)
        throw std::invalid_argument(name + ": expected SCALAR or START:STOP:STEP, got '" +
                                    text + "'");
    arg.is_range = true;
    arg.range.start = parse_number(name, parts[0]);
    arg.range.stop = parse_number(name, parts[1]);
    arg.range.step = parse_number(name, parts[2]);
    return arg;
}

Strategy strategy_from_name(const std::string& name) {
    for (Strategy s : {Strategy::pinch_at_user, Strategy::pinch_optimal,
                       Strategy::conventional_feed})
        if (name == to_string(s)) return s;
    throw std::invalid_argument("unknown strategy '" + name + "'");
}

Metric metric_from_name(const std::string& name) {
    if (name == "outage") return Metric::outage;
    if (name == "rate") return Metric::rate;
    throw std::invalid_argument("unknown metric '" + name + "'");
}

// Raw flag values for one subcommand.  Presence is tracked through the CLI11
// option pointers so only flags the user actually typed override the config.
struct CommonFlags {
    std::string gamma_t_db, alpha, dx;
    double dy = 0.0, h = 0.0, gamma_thr = 0.0;
    int n_antennas = 0, threads = 0;
    std::uint64_t samples = 0, seed = 0;
    std::string config;

    CLI::Option* o_gamma = nullptr;
    CLI::Option* o_alpha = nullptr;
    CLI::Option* o_dx = nullptr;
    CLI::Option* o_dy = nullptr;
    CLI::Option* o_h = nullptr;
    CLI::Option* o_n = nullptr;
    CLI::Option* o_gthr = nullptr;
    CLI::Option* o_threads = nullptr;
    CLI::Option* o_samples = nullptr;
    CLI::Option* o_seed = nullptr;
    CLI::Option* o_config = nullptr;

    void attach(CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help");  // frees --h for the height flag
        o_gamma = cmd->add_option("--gamma-t-db", gamma_t_db,
                                  "transmit SNR p_t/sigma2 [dB], scalar or START:STOP:STEP");
        o_alpha = cmd->add_option("--alpha", alpha,
                                  "waveguide attenuation [1/m], scalar or START:STOP:STEP");
        o_dx = cmd->add_option("--dx", dx,
                               "service area length [m], scalar or START:STOP:STEP");
        o_dy = cmd->add_option("--dy", dy, "service area width [m]");
        o_h = cmd->add_option("--h", h, "waveguide height [m]");
        o_n = cmd->add_option("--n-antennas", n_antennas, "pinching elements");
        o_gthr = cmd->add_option("--gamma-thr", gamma_thr, "outage SNR threshold (linear)");
        o_threads = cmd->add_option("--threads", threads,
                                    "worker threads (0 = hardware concurrency)");
        o_samples = cmd->add_option("--samples", samples,
                                    "Monte Carlo samples per cell (0 disables MC columns)");
        o_seed = cmd->add_option("--seed", seed, "Monte Carlo seed");
        o_config = cmd->add_option("--config", config, "key=value config file")
                       ->check(CLI::ExistingFile);
    }
};

// defaults < config file < flags; ranges become the sweep axis
void apply_common(const CommonFlags& f, SweepSpec& spec, bool allow_ranges) {
    std::string config_path = f.config;
    if (config_path.empty()) {
        if (const char* env = std::getenv("PINCHPERF_CONFIG"); env && *env)
            config_path = env;
    }
    if (!config_path.empty()) apply_config(spec, load_config_file(config_path));

    if (f.o_dy->count()) spec.deployment.d_y = f.dy;
    if (f.o_h->count()) spec.deployment.h = f.h;
    if (f.o_n->count()) spec.deployment.n_antennas = f.n_antennas;
    if (f.o_gthr->count()) spec.gamma_thr = f.gamma_thr;
    if (f.o_threads->count()) spec.n_threads = f.threads;
    if (f.o_samples->count()) spec.n_samples = f.samples;
    if (f.o_seed->count()) spec.seed = f.seed;

    int ranges = 0;
    const auto take = [&](CLI::Option* opt, const std::string& text,
                          const char* name, Axis axis, double Deployment::*field) {
        if (!opt->count()) return;
        const AxisArg arg = parse_axis_arg(name, text);
        if (arg.is_range) {
            if (!allow_ranges)
                throw std::invalid_argument(std::string(name) +
                                            ": ranges only apply to 'sweep'");
            ++ranges;
            spec.axis = axis;
            spec.range = arg.range;
        } else if (field) {
            spec.deployment.*field = arg.scalar;
        } else {
            spec.deployment.p_t = p_t_for_gamma_t_db(arg.scalar, spec.deployment.sigma2);
        }
    };
    take(f.o_gamma, f.gamma_t_db, "--gamma-t-db", Axis::gamma_t_db, nullptr);
    take(f.o_alpha, f.alpha, "--alpha", Axis::alpha, &Deployment::alpha);
    take(f.o_dx, f.dx, "--dx", Axis::d_x, &Deployment::d_x);

    if (ranges > 1)
        throw std::invalid_argument(
            "only one of --gamma-t-db/--alpha/--dx may carry a range");
    if (allow_ranges && ranges == 0) {
        // default sweep walks gamma_t; a pinned scalar there is contradictory
        if (f.o_gamma->count() && !parse_axis_arg("--gamma-t-db", f.gamma_t_db).is_range)
            throw std::invalid_argument(
                "--gamma-t-db is the default sweep axis; pass START:STOP:STEP "
                "or sweep --alpha/--dx instead");
        spec.axis = Axis::gamma_t_db;
        spec.range = SweepRange{};
    }
}

int run_sweep_cmd(const CommonFlags& flags, const std::vector<std::string>& strategy_names,
                  const std::vector<std::string>& metric_names, const std::string& format,
                  const std::string& out_path) {
    SweepSpec spec;
    apply_common(flags, spec, true);
    if (!strategy_names.empty()) {
        spec.strategies.clear();
        for (const auto& n : strategy_names)
            spec.strategies.push_back(strategy_from_name(n));
    }
    if (!metric_names.empty()) {
        spec.metrics.clear();
        for (const auto& n : metric_names) spec.metrics.push_back(metric_from_name(n));
    }
    if (format != "csv" && format != "json")
        throw std::invalid_argument("--format must be csv or json");

    const SweepResult result = run_sweep(spec);
    const std::string text = format == "csv" ? to_csv(result) : to_json_string(result);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
        out << text;
    }
    return kExitOk;
}

int run_validate_cmd(const CommonFlags& flags, const ValidationTolerances& tol) {
    SweepSpec spec;
    apply_common(flags, spec, false);
    const ValidationReport report = run_validate(spec.deployment, spec.gamma_thr, tol);
    std::cout << report.to_text();
    return report.passed() ? kExitOk : kExitToleranceViolation;
}

int run_placement_cmd(const CommonFlags& flags, double user_x, double user_y) {
    SweepSpec spec;
    apply_common(flags, spec, false);
    const Deployment& dep = spec.deployment;
    const UserPosition user = user_at(dep, user_x, user_y);
    const PlacementSolution sol = optimal_position(dep, user);
    std::printf("user: (%g, %g)\n", user.x_m, user.y_m);
    std::printf("x_star: %.17g\n", sol.x_star);
    std::printf("branch: %s\n", to_string(sol.branch));
    std::printf("discriminant: %.17g\n", sol.discriminant);
    std::printf("snr_at_x_star: %.17g\n", sol.objective * derive_constants(dep, 1.0).a_const);
    std::printf("gain_over_x_m: %.17g\n", placement_gain(dep, user));
    return kExitOk;
}

int run_power_gap_cmd(const CommonFlags& flags, double target,
                      const std::string& strategy_name, double dx_alt) {
    SweepSpec spec;
    apply_common(flags, spec, false);
    const Strategy strategy = strategy_from_name(strategy_name);

    const double need = find_power_for_outage(spec.deployment, spec.gamma_thr,
                                              target, strategy);
    std::printf("strategy: %s\n", to_string(strategy));
    std::printf("target_outage: %.17g\n", target);
    std::printf("gamma_t_db[d_x=%g]: %.6f\n", spec.deployment.d_x, need);
    if (dx_alt > 0.0) {
        Deployment alt = spec.deployment;
        alt.d_x = dx_alt;
        const double need_alt =
            find_power_for_outage(alt, spec.gamma_thr, target, strategy);
        std::printf("gamma_t_db[d_x=%g]: %.6f\n", dx_alt, need_alt);
        std::printf("gap_db: %.6f\n", need_alt - need);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pinching-antenna system performance sweeps"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "emit outage/rate curves over one swept parameter");
    CommonFlags sweep_flags;
    sweep_flags.attach(sweep);
    std::vector<std::string> strategy_names;
    std::vector<std::string> metric_names;
    std::string format = "csv";
    std::string out_path;
    sweep->add_option("--strategy", strategy_names,
                      "pinch-at-user-x | pinch-optimal | conventional-feed-point "
                      "(repeatable)");
    sweep->add_option("--metric", metric_names, "outage | rate (repeatable)");
    sweep->add_option("--format", format, "csv | json");
    sweep->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* validate = app.add_subcommand(
        "validate", "closed form vs quadrature consistency grids");
    CommonFlags validate_flags;
    validate_flags.attach(validate);
    ValidationTolerances tol;
    validate->add_option("--tol-outage", tol.outage_abs, "outage tolerance (absolute)");
    validate->add_option("--tol-rate", tol.rate_rel, "rate tolerance (relative)");
    validate->add_option("--tol-lossless", tol.lossless_abs,
                         "vanishing-loss limit tolerance (absolute)");

    CLI::App* placement = app.add_subcommand(
        "placement", "optimal pinching position for one user");
    CommonFlags placement_flags;
    placement_flags.attach(placement);
    double user_x = 0.0, user_y = 0.0;
    placement->add_option("--user-x", user_x, "user x [m]")->required();
    placement->add_option("--user-y", user_y, "user y [m]")->required();

    CLI::App* power_gap = app.add_subcommand(
        "power-gap", "transmit SNR needed to hit an outage target");
    CommonFlags power_flags;
    power_flags.attach(power_gap);
    double target = 1e-5;
    std::string power_strategy = to_string(Strategy::pinch_at_user);
    double dx_alt = 0.0;
    power_gap->add_option("--target", target, "outage probability target");
    power_gap->add_option("--strategy", power_strategy,
                          "pinch-at-user-x | pinch-optimal | conventional-feed-point");
    power_gap->add_option("--dx-alt", dx_alt,
                          "second area length to compare against (prints the gap)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (app.got_subcommand(sweep))
            return run_sweep_cmd(sweep_flags, strategy_names, metric_names, format,
                                 out_path);
        if (app.got_subcommand(validate)) return run_validate_cmd(validate_flags, tol);
        if (app.got_subcommand(placement))
            return run_placement_cmd(placement_flags, user_x, user_y);
        if (app.got_subcommand(power_gap))
            return run_power_gap_cmd(power_flags, target, power_strategy, dx_alt);
    } catch (const BracketError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
