#pragma once

#include <complex>
#include <span>

namespace gratsweep {
using cplx = std::complex<double>;
}

namespace gratsweep::specfun {

using gratsweep::cplx;

/// Hankel function of the first kind H_n^(1)(x) = J_n(x) + i Y_n(x),
/// n in {0, 1}, x > 0.
cplx hankel1(int n, double x);

/// Exponential integral E_j(x) = int_1^inf exp(-x t)/t^j dt, j >= 1, x > 0.
double expint(int j, double x);

/// Ladder E_jlo(x) .. E_jhi(x) by the upward recurrence
/// E_{j+1}(x) = (exp(-x) - x E_j(x))/j, with closed forms below j = 1.
/// out must hold jhi - jlo + 1 values; jlo >= -1.
void expint_ladder(int jlo, int jhi, double x, std::span<double> out);

/// Complementary error function of a complex argument. Evaluated through the
/// Faddeeva function w(z) so that exp(-z^2) only ever multiplies an O(1)
/// factor; accurate to ~1e-13 relative wherever the result is representable.
cplx erfc_complex(cplx z);

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for Im z >= 0.
cplx faddeeva_w_upper(cplx z);

} // namespace gratsweep::specfun
