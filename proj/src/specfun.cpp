#include "gratsweep/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <cmath>
#include <stdexcept>

namespace gratsweep::specfun {

namespace {

constexpr double inv_sqrt_pi = 0.56418958354775628695;

// Laplace continued fraction for w(z), evaluated by modified Lentz. Reliable
// outside the ellipse (x/6.3)^2 + (y/4.4)^2 >= 1 (upper half plane).
cplx faddeeva_cf(cplx z)
{
    constexpr double tiny = 1e-60;
    cplx f(tiny), C(tiny), D(0.0);
    for (int j = 1; j <= 200; ++j) {
        const cplx a = (j == 1) ? cplx(1.0) : cplx(-0.5 * (j - 1));
        D = z + a * D;
        if (D == cplx(0.0)) D = tiny;
        C = z + a / C;
        if (C == cplx(0.0)) C = tiny;
        D = 1.0 / D;
        const cplx delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return cplx(0.0, inv_sqrt_pi) * f;
}

// Residue-corrected midpoint/trapezoidal rule for
//   w(z) = (i/pi) int exp(-t^2)/(z-t) dt,  0 <= Im z < pi/h.
// Of the two interleaved grids, the one whose singular set is farther from
// Re z is used, so the pole of the correction term never meets the grid sum.
cplx faddeeva_midpoint(cplx z)
{
    constexpr double h = 0.35;
    constexpr double tmax = 7.5;
    const double x = z.real();

    const double cell = x / h - std::floor(x / h);
    const bool half_grid = std::abs(cell - 0.5) >= std::min(cell, 1.0 - cell);
    const double off = half_grid ? 0.5 * h : 0.0;

    const int n0 = static_cast<int>(std::ceil((-tmax - off) / h));
    const int n1 = static_cast<int>(std::floor((tmax - off) / h));
    cplx sum(0.0);
    for (int n = n0; n <= n1; ++n) {
        const double t = off + n * h;
        sum += std::exp(-t * t) / (z - t);
    }
    cplx w = cplx(0.0, h / M_PI) * sum;

    const cplx expo = cplx(0.0, -2.0 * M_PI / h) * z;
    if (expo.real() < 700.0) {
        const cplx den = half_grid ? 1.0 + std::exp(expo) : 1.0 - std::exp(expo);
        w += 2.0 * std::exp(-z * z) / den;
    }
    return w;
}

} // namespace

cplx faddeeva_w_upper(cplx z)
{
    const double xr = z.real() / 6.3, yr = z.imag() / 4.4;
    if (xr * xr + yr * yr >= 1.0) return faddeeva_cf(z);
    return faddeeva_midpoint(z);
}

cplx erfc_complex(cplx z)
{
    if (z.imag() == 0.0) return cplx(std::erfc(z.real()), 0.0);
    if (z.real() < 0.0) return 2.0 - erfc_complex(-z);
    const cplx w = faddeeva_w_upper(cplx(-z.imag(), z.real())); // w(iz)
    // -z^2 with the difference of squares kept in factored form
    const cplx mz2((z.imag() - z.real()) * (z.imag() + z.real()),
                   -2.0 * z.real() * z.imag());
    return std::exp(mz2) * w;
}

cplx hankel1(int n, double x)
{
    if (n != 0 && n != 1) throw std::domain_error("hankel1: order must be 0 or 1");
    if (!(x > 0.0)) throw std::domain_error("hankel1: argument must be positive");
    return cplx(boost::math::cyl_bessel_j(n, x), boost::math::cyl_neumann(n, x));
}

double expint(int j, double x)
{
    if (j < 1) throw std::domain_error("expint: order must be >= 1");
    if (!(x > 0.0)) throw std::domain_error("expint: argument must be positive");
    return boost::math::expint(static_cast<unsigned>(j), x);
}

void expint_ladder(int jlo, int jhi, double x, std::span<double> out)
{
    if (jlo < -1 || jhi < jlo) throw std::domain_error("expint_ladder: bad order range");
    if (!(x > 0.0)) throw std::domain_error("expint_ladder: argument must be positive");
    if (out.size() != static_cast<size_t>(jhi - jlo + 1))
        throw std::invalid_argument("expint_ladder: output span size mismatch");

    const double ex = std::exp(-x);
    auto slot = [&](int j) -> double& { return out[static_cast<size_t>(j - jlo)]; };
    if (jlo <= -1) slot(-1) = ex * (1.0 + 1.0 / x) / x;
    if (jlo <= 0 && jhi >= 0) slot(0) = ex / x;
    if (jhi >= 1) {
        double e = boost::math::expint(1u, x);
        if (jlo <= 1) slot(1) = e;
        for (int j = 1; j < jhi; ++j) {
            e = (ex - x * e) / j;
            if (j + 1 >= jlo) slot(j + 1) = e;
        }
    }
}

} // namespace gratsweep::specfun
