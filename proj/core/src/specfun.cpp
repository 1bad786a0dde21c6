#include "pinchperf/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pinchperf {

namespace {

constexpr double kPi2over6 = std::numbers::pi * std::numbers::pi / 6.0;

// sum_{k>=1} x^k / k^2, |x| <= 1/2
double dilog_series(double x) {
    double sum = 0.0;
    double power = 1.0;
    for (int k = 1; k <= 80; ++k) {
        power *= x;
        const double term = power / (static_cast<double>(k) * k);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// B_{2k} / (2k+1)! for the log-argument series of the complex dilogarithm.
constexpr double kBernoulli[] = {
    2.7777777777777778e-02,  -2.7777777777777778e-04,  4.7241118669690098e-06,
    -9.1857730746619636e-08,  1.8978869988970999e-09,  -4.0647616451442255e-11,
    8.9216910204564526e-13,  -1.9939295860721076e-14,  4.5189800296199182e-16,
    -1.0356517612181247e-17,  2.3952186210261867e-19,  -5.5817858743250093e-21,
    1.3091507554183213e-22,  -3.0874198024267403e-24,  7.3159756527022034e-26,
    -1.7408456572340007e-27,  4.1576356446138997e-29,  -9.9621484882846221e-31,
};

// Li2(z) = u - u^2/4 + sum_k c_k u^{2k+1},  u = -ln(1-z), |u| < 2 pi.
// Valid on the reduced region |z| <= 1, Re z <= 1/2 reached below.
std::complex<double> dilog_log_series(std::complex<double> z) {
    const std::complex<double> u = -std::log(1.0 - z);
    const std::complex<double> u2 = u * u;
    std::complex<double> sum = u - u2 * 0.25;
    std::complex<double> power = u;
    for (double c : kBernoulli) {
        power *= u2;
        const std::complex<double> term = c * power;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

std::complex<double> dilog_complex(std::complex<double> z) {
    if (z == 0.0) return 0.0;
    std::complex<double> shift = 0.0;
    double sign = 1.0;
    if (std::abs(z) > 1.0) {
        // inversion: Li2(z) = -Li2(1/z) - pi^2/6 - ln^2(-z)/2
        const std::complex<double> l = std::log(-z);
        shift = -kPi2over6 - 0.5 * l * l;
        sign = -1.0;
        z = 1.0 / z;
    }
    if (z.real() > 0.5) {
        // reflection: Li2(z) = pi^2/6 - ln(z) ln(1-z) - Li2(1-z)
        shift += sign * (kPi2over6 - std::log(z) * std::log(1.0 - z));
        sign = -sign;
        z = 1.0 - z;
    }
    return shift + sign * dilog_log_series(z);
}

} // namespace

double dilog(double x) {
    if (x > 1.0) throw std::domain_error("dilog: argument above 1");
    if (x == 1.0) return kPi2over6;
    if (x == 0.0) return 0.0;
    if (x < -1.0) {
        // inversion onto (-1, 0)
        const double l = std::log(-x);
        return -dilog(1.0 / x) - kPi2over6 - 0.5 * l * l;
    }
    if (x > 0.5) {
        // reflection onto (0, 1/2)
        return kPi2over6 - std::log(x) * std::log1p(-x) - dilog(1.0 - x);
    }
    if (x < -0.5) {
        // Landen onto (1/3, 1/2)
        const double l = std::log1p(-x);
        return -dilog(x / (x - 1.0)) - 0.5 * l * l;
    }
    return dilog_series(x);
}

double im_dilog(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() >= 1.0)
        throw std::domain_error("im_dilog: argument on the cut [1, inf)");
    return dilog_complex(z).imag();
}

double z_kernel(double x, double y, double d_y) {
    if (!(d_y > 0.0)) throw std::domain_error("z_kernel: d_y must be positive");
    if (x < y) throw std::domain_error("z_kernel: requires x >= y");
    if (x == y) return 0.0;  // continuous limit
    const double atan_gap = std::atan(2.0 * x / d_y) - std::atan(2.0 * y / d_y);
    const std::complex<double> arg =
        (y - x) / std::complex<double>(y, -0.5 * d_y);
    return 2.0 * std::log(x - y) * atan_gap + 2.0 * im_dilog(arg);
}

} // namespace pinchperf
