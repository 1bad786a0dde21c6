#include "pinchperf/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace pinchperf {

const char* to_string(Axis a) {
    switch (a) {
        case Axis::gamma_t_db: return "gamma_t_db";
        case Axis::alpha: return "alpha";
        case Axis::d_x: return "d_x";
    }
    return "?";
}

const char* to_string(Metric m) {
    switch (m) {
        case Metric::outage: return "outage";
        case Metric::rate: return "rate";
    }
    return "?";
}

void SweepSpec::validate() const {
    deployment.validate();
    if (!(range.step > 0.0))
        throw std::invalid_argument("sweep: range step must be positive");
    if (!(range.start <= range.stop))
        throw std::invalid_argument("sweep: range start must not exceed stop");
    if (axis == Axis::alpha && range.start < 0.0)
        throw std::invalid_argument("sweep: alpha must be non-negative");
    if (axis == Axis::d_x && !(range.start > 0.0))
        throw std::invalid_argument("sweep: d_x must be positive");
    if (strategies.empty())
        throw std::invalid_argument("sweep: at least one strategy required");
    if (metrics.empty())
        throw std::invalid_argument("sweep: at least one metric required");
    if (!(gamma_thr > 0.0))
        throw std::invalid_argument("sweep: gamma_thr must be positive");
}

std::string ColumnSpec::name() const {
    std::string n = to_string(strategy);
    n += '.';
    n += to_string(metric);
    n += '.';
    n += to_string(method);
    if (is_std_error) n += ".stderr";
    return n;
}

namespace {

std::vector<double> axis_values(const SweepRange& r) {
    std::vector<double> out;
    // half-step slack so stop lands inclusively despite rounding
    const long n = std::lround(std::floor((r.stop - r.start) / r.step + 0.5));
    for (long i = 0; i <= n; ++i) {
        const double v = r.start + static_cast<double>(i) * r.step;
        if (v > r.stop + 0.5 * r.step) break;
        out.push_back(v);
    }
    return out;
}

Deployment at_axis_value(const SweepSpec& spec, double v) {
    Deployment dep = spec.deployment;
    switch (spec.axis) {
        case Axis::gamma_t_db:
            dep.p_t = p_t_for_gamma_t_db(v, dep.sigma2);
            break;
        case Axis::alpha:
            dep.alpha = v;
            break;
        case Axis::d_x:
            dep.d_x = v;
            break;
    }
    return dep;
}

// A deterministic column takes the closed form only when one exists for
// every row; otherwise the whole column is quadrature so values along a
// curve stay method-consistent.
Method column_method(const SweepSpec& spec, Strategy strategy, Metric metric,
                     const std::vector<double>& values) {
    if (strategy != Strategy::pinch_at_user) return Method::quadrature;
    if (metric == Metric::outage) return Method::closed_form;
    const auto row_alpha = [&](double v) {
        return spec.axis == Axis::alpha ? v : spec.deployment.alpha;
    };
    for (double v : values)
        if (!(row_alpha(v) > 0.0)) return Method::quadrature;
    return Method::closed_form;
}

double deterministic_cell(const Deployment& dep, double gamma_thr,
                          Strategy strategy, Metric metric, Method method) {
    if (method == Method::closed_form) {
        if (metric == Metric::outage)
            return dep.alpha > 0.0 ? outage_lossy(dep, gamma_thr).probability
                                   : outage_lossless(dep, gamma_thr).probability;
        return avg_rate_lossy(dep).rate;
    }
    if (strategy == Strategy::pinch_at_user) {
        if (metric == Metric::outage)
            return outage_quadrature(dep, gamma_thr).probability;
        return rate_quadrature(dep).rate;
    }
    return metric == Metric::outage ? outage_for_strategy(dep, gamma_thr, strategy)
                                    : rate_for_strategy(dep, strategy);
}

} // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    const std::vector<double> values = axis_values(spec.range);

    SweepResult result;
    result.axis = spec.axis;
    for (Strategy s : spec.strategies) {
        for (Metric m : spec.metrics) {
            result.columns.push_back(
                {s, m, column_method(spec, s, m, values), false});
            if (spec.n_samples > 0) {
                result.columns.push_back({s, m, Method::monte_carlo, false});
                result.columns.push_back({s, m, Method::monte_carlo, true});
            }
        }
    }

    result.rows.reserve(values.size());
    for (double v : values) {
        const Deployment dep = at_axis_value(spec, v);
        ResultRow row{v, {}};
        row.values.reserve(result.columns.size());
        for (const ColumnSpec& col : result.columns) {
            if (col.is_std_error) continue;  // filled next to its twin
            if (col.method == Method::monte_carlo) {
                // one seed for the whole sweep: curves share user draws
                const McEstimate est =
                    col.metric == Metric::outage
                        ? simulate_outage(dep, spec.gamma_thr, col.strategy,
                                          spec.n_samples, spec.seed, spec.n_threads)
                        : simulate_rate(dep, col.strategy, spec.n_samples,
                                        spec.seed, spec.n_threads);
                row.values.push_back(est.value);
                row.values.push_back(est.std_error);
            } else {
                row.values.push_back(deterministic_cell(
                    dep, spec.gamma_thr, col.strategy, col.metric, col.method));
            }
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

namespace {

std::string format_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string to_csv(const SweepResult& result) {
    std::string out = to_string(result.axis);
    for (const ColumnSpec& col : result.columns) {
        out += ',';
        out += col.name();
    }
    out += '\n';
    for (const ResultRow& row : result.rows) {
        out += format_g17(row.axis_value);
        for (double v : row.values) {
            out += ',';
            out += format_g17(v);
        }
        out += '\n';
    }
    return out;
}

std::string to_json_string(const SweepResult& result) {
    nlohmann::json doc;
    doc["axis"] = to_string(result.axis);
    auto& columns = doc["columns"] = nlohmann::json::array();
    for (const ColumnSpec& col : result.columns) columns.push_back(col.name());
    auto& rows = doc["rows"] = nlohmann::json::array();
    for (const ResultRow& row : result.rows) {
        nlohmann::json r;
        r[to_string(result.axis)] = row.axis_value;
        for (std::size_t i = 0; i < result.columns.size(); ++i)
            r[result.columns[i].name()] = row.values[i];
        rows.push_back(std::move(r));
    }
    return doc.dump(2) + "\n";
}

} // namespace pinchperf
