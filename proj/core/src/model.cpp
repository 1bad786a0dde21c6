#include "pinchperf/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pinchperf {

namespace {
constexpr double kSpeedOfLight = 299792458.0;  // m/s

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("deployment: ") + what);
}
} // namespace

double Deployment::wavelength() const { return kSpeedOfLight / f_c; }

double Deployment::guided_wavelength() const { return wavelength() / n_eff; }

double Deployment::eta() const {
    const double lambda = wavelength();
    // path gain at 1 m: lambda^2 / (16 pi^2)
    return lambda * lambda / (16.0 * std::numbers::pi * std::numbers::pi);
}

void Deployment::validate() const {
    require(d_x > 0.0, "d_x must be positive");
    require(d_y > 0.0, "d_y must be positive");
    require(h > 0.0, "h must be positive");
    require(alpha >= 0.0, "alpha must be non-negative");
    require(f_c > 0.0, "f_c must be positive");
    require(n_eff > 1.0, "n_eff must exceed 1");
    require(p_t > 0.0, "p_t must be positive");
    require(sigma2 > 0.0, "sigma2 must be positive");
    require(n_antennas >= 1, "n_antennas must be at least 1");
}

UserPosition user_at(const Deployment& dep, double x_m, double y_m) {
    if (!(x_m >= 0.0 && x_m <= dep.d_x))
        throw std::invalid_argument("user x_m outside [0, d_x]");
    if (!(y_m >= -dep.d_y / 2.0 && y_m <= dep.d_y / 2.0))
        throw std::invalid_argument("user y_m outside [-d_y/2, d_y/2]");
    return {x_m, y_m};
}

DerivedConstants derive_constants(const Deployment& dep, double gamma_thr) {
    if (!(gamma_thr > 0.0))
        throw std::invalid_argument("gamma_thr must be positive");
    const double a = dep.eta() * dep.n_antennas * dep.p_t / dep.sigma2;
    return {a / gamma_thr, a, gamma_thr};
}

double received_snr(const Deployment& dep, double x_p, const UserPosition& user) {
    const double dx = user.x_m - x_p;
    const double dist2 = dx * dx + user.y_m * user.y_m + dep.h * dep.h;
    return dep.eta() * dep.n_antennas * dep.p_t * std::exp(-dep.alpha * x_p)
           / (dep.sigma2 * dist2);
}

double benchmark_snr(const Deployment& dep, const UserPosition& user) {
    // reference distance 1 m keeps the near-field SNR finite
    const double dist2 = std::max(1.0, user.x_m * user.x_m + user.y_m * user.y_m);
    return dep.eta() * dep.n_antennas * dep.p_t / (dep.sigma2 * dist2);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double v) { return 10.0 * std::log10(v); }

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

double p_t_for_gamma_t_db(double gamma_t_db, double sigma2) {
    return db_to_linear(gamma_t_db) * sigma2;
}

double gamma_t_db_of(const Deployment& dep) {
    return linear_to_db(dep.p_t / dep.sigma2);
}

} // namespace pinchperf
