#pragma once

#include <cstdint>

namespace pinchperf {

// Deployment geometry and radio parameters for one pinched-waveguide cell.
// The waveguide runs along the x axis at height h over a rectangular service
// area [0, d_x] x [-d_y/2, d_y/2] on the ground plane.  Defaults reproduce the
// reference indoor setup used throughout the test suite.
struct Deployment {
    double d_x = 10.0;      // service area length along the waveguide [m]
    double d_y = 10.0;      // service area width [m]
    double h = 3.0;         // waveguide height [m]
    double alpha = 0.01;    // in-guide amplitude attenuation [1/m], 0 = lossless
    double f_c = 28e9;      // carrier frequency [Hz]
    double n_eff = 1.4;     // effective refractive index of the guide
    double p_t = 1e-2;      // transmit power [W]
    double sigma2 = 1e-12;  // noise power [W]
    int n_antennas = 1;     // pinching elements (N-fold array gain approximation)

    double wavelength() const;         // free-space lambda
    double guided_wavelength() const;  // lambda / n_eff
    // eta = lambda^2 / (16 * pi^2), the free-space path-gain constant at 1 m.
    double eta() const;

    void validate() const;  // throws std::invalid_argument
};

// Ground-plane user location. x_m in [0, d_x], y_m in [-d_y/2, d_y/2].
struct UserPosition {
    double x_m = 0.0;
    double y_m = 0.0;
};

// Bounds-checked constructor for externally supplied coordinates.
UserPosition user_at(const Deployment& dep, double x_m, double y_m);

// Scale factors of the SNR model, both in m^2:
//   a_const = eta * N * P_t / sigma2          (SNR x distance^2 at zero loss)
//   c_const = a_const / gamma_thr             (coverage radius^2 at the feed)
struct DerivedConstants {
    double c_const;
    double a_const;
    double gamma_thr;
};

DerivedConstants derive_constants(const Deployment& dep, double gamma_thr);

// Received SNR for a pinching element at (x_p, 0, h) serving the user:
//   eta * N * P_t * exp(-alpha * x_p) / (sigma2 * ((x_m-x_p)^2 + y_m^2 + h^2))
double received_snr(const Deployment& dep, double x_p, const UserPosition& user);

// Conventional reference system: antenna fixed at the region corner (0,0,0)
// with the same N-fold gain; propagation distance clamped to 1 m near the mast.
double benchmark_snr(const Deployment& dep, const UserPosition& user);

// dB plumbing. Transmit SNR gamma_t = p_t / sigma2 is quoted in dB throughout.
double db_to_linear(double db);
double linear_to_db(double v);
double dbm_to_watts(double dbm);
double watts_to_dbm(double w);
double p_t_for_gamma_t_db(double gamma_t_db, double sigma2);
double gamma_t_db_of(const Deployment& dep);

} // namespace pinchperf
