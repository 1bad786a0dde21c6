#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pinchperf/model.hpp"
#include "pinchperf/oracles.hpp"

namespace pinchperf {

enum class Axis { gamma_t_db, alpha, d_x };
enum class Metric { outage, rate };

const char* to_string(Axis a);
const char* to_string(Metric m);

struct SweepRange {
    double start = 90.0;
    double stop = 115.0;
    double step = 1.0;
};

// One parameter sweep: vary `axis` over `range`, evaluate every requested
// (strategy, metric) pair per point.  Deterministic columns are closed form
// where one exists for every row, quadrature otherwise; Monte Carlo columns
// (plus standard errors) are added when n_samples > 0, reusing the same seed
// across rows and strategies so curves share draws.
struct SweepSpec {
    Axis axis = Axis::gamma_t_db;
    SweepRange range{};
    std::vector<Strategy> strategies{Strategy::pinch_at_user};
    std::vector<Metric> metrics{Metric::outage};
    std::uint64_t n_samples = 1'000'000;  // 0 disables Monte Carlo columns
    std::uint64_t seed = 1;
    int n_threads = 0;
    Deployment deployment{};
    double gamma_thr = 100.0;

    void validate() const;  // throws std::invalid_argument
};

struct ColumnSpec {
    Strategy strategy;
    Metric metric;
    Method method;
    bool is_std_error = false;
    std::string name() const;  // "<strategy>.<metric>.<method>[.stderr]"
};

struct ResultRow {
    double axis_value;
    std::vector<double> values;  // one per column, no gaps
};

struct SweepResult {
    Axis axis;
    std::vector<ColumnSpec> columns;
    std::vector<ResultRow> rows;  // ascending axis order
};

SweepResult run_sweep(const SweepSpec& spec);

// CSV with a header row, 17 significant digits, LF line endings.
std::string to_csv(const SweepResult& result);

// JSON document mirroring the rows: {"axis": ..., "columns": [...], "rows": [...]}.
std::string to_json_string(const SweepResult& result);

} // namespace pinchperf
