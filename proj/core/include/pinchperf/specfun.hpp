#pragma once

#include <complex>

namespace pinchperf {

// Real dilogarithm Li2(x) = -int_0^x ln(1-u)/u du, defined for x <= 1.
// Power series inside |x| <= 1/2, standard reflection/inversion/Landen
// transformations outside. Throws std::domain_error for x > 1.
double dilog(double x);

// Imaginary part of the principal-branch complex dilogarithm.
// Throws std::domain_error when z lies on the cut [1, inf) of the real axis.
// Exactly 0 for real z < 1.
double im_dilog(std::complex<double> z);

// Antiderivative kernel arising in the average-rate closed form:
//   z(x, y) = 2 ln(x-y) [atan(2x/d_y) - atan(2y/d_y)]
//             + 2 Im{ Li2( (y-x) / (y - i d_y/2) ) }
// Requires x >= y and d_y > 0; x == y returns the limit value 0.
double z_kernel(double x, double y, double d_y);

} // namespace pinchperf
