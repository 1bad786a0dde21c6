#include "pinchperf/validate.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "pinchperf/oracles.hpp"

namespace pinchperf {

namespace {

constexpr double kGammaLo = 90.0;
constexpr double kGammaHi = 115.0;
constexpr int kGammaPoints = 20;
constexpr double kAlphas[] = {0.001, 0.01, 0.05, 0.1};
constexpr double kLengths[] = {10.0, 30.0};
constexpr double kRateGammas[] = {80.0, 90.0, 100.0, 110.0};
constexpr double kRateAlphas[] = {0.01, 0.05, 0.1};

Deployment configure(const Deployment& base, double gamma_t_db, double alpha,
                     double d_x) {
    Deployment dep = base;
    dep.alpha = alpha;
    dep.d_x = d_x;
    dep.p_t = p_t_for_gamma_t_db(gamma_t_db, dep.sigma2);
    return dep;
}

} // namespace

ValidationReport run_validate(const Deployment& base, double gamma_thr,
                              const ValidationTolerances& tol) {
    base.validate();
    ValidationReport report;
    report.tolerances = tol;

    const auto record = [&](const char* check, double gamma_t_db, double alpha,
                            double d_x, OutageBranch branch, double delta,
                            double tolerance) {
        if (delta > tolerance)
            report.violations.push_back(
                {check, gamma_t_db, alpha, d_x, branch, delta, tolerance});
    };

    // closed-form outage against the defining integral
    for (int i = 0; i < kGammaPoints; ++i) {
        const double g =
            kGammaLo + (kGammaHi - kGammaLo) * i / (kGammaPoints - 1.0);
        for (double alpha : kAlphas) {
            for (double d_x : kLengths) {
                const Deployment dep = configure(base, g, alpha, d_x);
                const OutageResult cf = outage_lossy(dep, gamma_thr);
                const OutageResult quad = outage_quadrature(dep, gamma_thr);
                const double delta = std::abs(cf.probability - quad.probability);
                auto& worst =
                    report.outage_by_branch[static_cast<int>(cf.branch)];
                if (!worst.seen || delta > worst.delta)
                    worst = {delta, g, alpha, d_x, true};
                report.outage_worst = std::max(report.outage_worst, delta);
                record("outage", g, alpha, d_x, cf.branch, delta, tol.outage_abs);
            }
        }
    }

    // closed-form rate against nested quadrature
    for (double g : kRateGammas) {
        for (double alpha : kRateAlphas) {
            for (double d_x : kLengths) {
                const Deployment dep = configure(base, g, alpha, d_x);
                const RateResult cf = avg_rate_lossy(dep);
                const RateResult quad = rate_quadrature(dep);
                const double rel =
                    std::abs(cf.rate - quad.rate) / std::max(1e-300, quad.rate);
                report.rate_worst_rel = std::max(report.rate_worst_rel, rel);
                // branch column carries the outage regime as location context
                record("rate", g, alpha, d_x,
                       detail::outage_lossy_raw(dep, gamma_thr).branch, rel,
                       tol.rate_rel);
            }
        }
    }

    // vanishing-loss limit must land on the lossless expression
    for (int i = 0; i < kGammaPoints; ++i) {
        const double g =
            kGammaLo + (kGammaHi - kGammaLo) * i / (kGammaPoints - 1.0);
        for (double d_x : kLengths) {
            const Deployment limit = configure(base, g, 1e-8, d_x);
            Deployment lossless = limit;
            lossless.alpha = 0.0;
            const OutageResult near = outage_lossy(limit, gamma_thr);
            const OutageResult at = outage_lossless(lossless, gamma_thr);
            const double delta = std::abs(near.probability - at.probability);
            report.lossless_worst = std::max(report.lossless_worst, delta);
            record("lossless-limit", g, 1e-8, d_x, at.branch, delta,
                   tol.lossless_abs);
        }
    }

    return report;
}

namespace {

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

} // namespace

std::string ValidationReport::to_text() const {
    std::ostringstream out;
    out << "validation " << (passed() ? "PASSED" : "FAILED") << "\n";
    out << "  outage closed form vs quadrature (tol " << short_num(tolerances.outage_abs)
        << " abs): worst " << short_num(outage_worst) << "\n";
    for (std::size_t b = 0; b < outage_by_branch.size(); ++b) {
        const Worst& w = outage_by_branch[b];
        out << "    " << to_string(static_cast<OutageBranch>(b)) << ": ";
        if (!w.seen) {
            out << "not exercised\n";
            continue;
        }
        out << "worst " << short_num(w.delta) << " at gamma_t=" << w.gamma_t_db
            << " dB, alpha=" << w.alpha << ", d_x=" << w.d_x << "\n";
    }
    out << "  rate closed form vs quadrature (tol " << short_num(tolerances.rate_rel)
        << " rel): worst " << short_num(rate_worst_rel) << "\n";
    out << "  lossless limit (tol " << short_num(tolerances.lossless_abs)
        << " abs): worst " << short_num(lossless_worst) << "\n";
    for (const ValidationIssue& v : violations) {
        out << "  VIOLATION " << v.check << " at gamma_t=" << v.gamma_t_db
            << " dB, alpha=" << v.alpha << ", d_x=" << v.d_x << " ["
            << to_string(v.branch) << "]: delta " << short_num(v.delta)
            << " > tol " << short_num(v.tolerance) << "\n";
    }
    return out.str();
}

} // namespace pinchperf
