#include "pinchperf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace pinchperf {

namespace {

// 15-point Kronrod abscissae on [-1, 1] (positive half) with the embedded
// 7-point Gauss rule at the even indices.
constexpr double kXgk[8] = {
    0.9914553711208126392068546975263285, 0.9491079123427585245261896840478513,
    0.8648644233597690727897127886409262, 0.7415311855993944398638647732807884,
    0.5860872354676911302941448382587296, 0.4058451513773971669066064120769615,
    0.2077849550078984676006894037732449, 0.0,
};
constexpr double kWgk[8] = {
    0.0229353220105292249637320080589695, 0.0630920926299785532907006631892042,
    0.1047900103222501838398763225415180, 0.1406532597155259187451895905102379,
    0.1690047266392679028265834265985503, 0.1903505780647854099132564024210137,
    0.2044329400752988924141619992346491, 0.2094821410847278280129991748917143,
};
constexpr double kWg[4] = {
    0.1294849661688696932706114326790820, 0.2797053914892766679014677714237796,
    0.3818300505051189449503697754889751, 0.4179591836734693877551020408163265,
};

struct Segment {
    double a, b;
    double integral;
    double error;
    int depth;
};

struct WorseError {
    bool operator()(const Segment& lhs, const Segment& rhs) const {
        return lhs.error < rhs.error;
    }
};

Segment evaluate(const std::function<double(double)>& f, double a, double b, int depth) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    double fv[15];
    fv[7] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));

    const double dhalf = std::abs(half);
    double err = std::abs((resk - resg) * half);
    resasc *= dhalf;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    if (resabs * dhalf > std::numeric_limits<double>::min() / eps50)
        err = std::max(eps50 * resabs * dhalf, err);

    return {a, b, resk * half, err, depth};
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opts, std::span<const double> interior_breakpoints) {
    if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
    if (a == b) return 0.0;

    std::vector<double> knots{a};
    for (double p : interior_breakpoints)
        if (p > a && p < b) knots.push_back(p);
    knots.push_back(b);
    std::sort(knots.begin(), knots.end());

    std::priority_queue<Segment, std::vector<Segment>, WorseError> heap;
    double total = 0.0;
    double err_total = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        if (knots[i] == knots[i + 1]) continue;
        Segment s = evaluate(f, knots[i], knots[i + 1], 0);
        total += s.integral;
        err_total += s.error;
        heap.push(s);
    }

    const auto tolerance = [&] {
        return std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
    };

    std::size_t splits = 0;
    constexpr std::size_t kMaxSplits = 200000;
    while (err_total > tolerance() && !heap.empty()) {
        const Segment worst = heap.top();
        if (worst.depth >= opts.max_levels)
            throw ConvergenceError(
                "integrate: tolerance unmet after bisection level cap");
        if (++splits > kMaxSplits)
            throw ConvergenceError("integrate: subdivision budget exhausted");
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = evaluate(f, worst.a, mid, worst.depth + 1);
        Segment right = evaluate(f, mid, worst.b, worst.depth + 1);
        total += left.integral + right.integral - worst.integral;
        err_total += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    return total;
}

} // namespace pinchperf
