#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <random>

#include "gratsweep/specfun.hpp"

using namespace gratsweep;
using specfun::erfc_complex;
using specfun::expint;
using specfun::hankel1;

namespace {

constexpr double euler_gamma = 0.57721566490153286061;

// Ascending-series oracle for J0, Y0 at small argument, independent of the
// production implementation.
std::pair<double, double> bessel0_series(double x)
{
    const double q = 0.25 * x * x;
    double j0 = 1.0, term = 1.0, ysum = 0.0, h = 0.0;
    for (int m = 1; m <= 40; ++m) {
        term *= -q / (m * m);
        j0 += term;
        h += 1.0 / m;
        ysum += -term * h; // (-1)^{m+1} h_m q^m/(m!)^2
    }
    const double y0 = (2.0 / M_PI) * ((std::log(0.5 * x) + euler_gamma) * j0 + ysum);
    return {j0, y0};
}

} // namespace

TEST_CASE("hankel1 at x = 1 against the series oracle")
{
    auto [j0, y0] = bessel0_series(1.0);
    const cplx h = hankel1(0, 1.0);
    CHECK(std::abs(h.real() - j0) < 1e-13);
    CHECK(std::abs(h.imag() - y0) < 1e-13);
    // frozen digits for the record
    CHECK(h.real() == doctest::Approx(0.7651976865579666).epsilon(1e-13));
    CHECK(h.imag() == doctest::Approx(0.08825696421567697).epsilon(1e-11));
}

TEST_CASE("hankel1 small-x logarithmic behaviour")
{
    for (double x : {1e-6, 1e-10}) {
        const double im = hankel1(0, x).imag();
        const double lead = (2.0 / M_PI) * std::log(0.5 * x);
        CHECK(std::abs(im / lead - 1.0) < 0.1);
    }
    // approach is monotone
    const double r1 = hankel1(0, 1e-6).imag() / ((2.0 / M_PI) * std::log(0.5e-6));
    const double r2 = hankel1(0, 1e-10).imag() / ((2.0 / M_PI) * std::log(0.5e-10));
    CHECK(std::abs(r2 - 1.0) < std::abs(r1 - 1.0));
}

TEST_CASE("bessel wronskian across the working range")
{
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        const double x = std::exp(std::log(1e-3) + u(rng) * std::log(500.0 / 1e-3));
        const cplx h0 = hankel1(0, x), h1 = hankel1(1, x);
        const double w = h1.real() * h0.imag() - h0.real() * h1.imag(); // J1 Y0 - J0 Y1
        CHECK(std::abs(w - 2.0 / (M_PI * x)) < 1e-12 * (2.0 / (M_PI * x)));
    }
}

TEST_CASE("hankel1 satisfies the Bessel equation (finite differences)")
{
    for (int n : {0, 1}) {
        for (double x : {0.7, 3.0, 11.0}) {
            const double h = 1e-3 * x;
            auto f = [&](double t) { return hankel1(n, t); };
            auto residual = [&](double hh) {
                const cplx fm = f(x - hh), f0 = f(x), fp = f(x + hh);
                const cplx d1 = (fp - fm) / (2.0 * hh);
                const cplx d2 = (fp - 2.0 * f0 + fm) / (hh * hh);
                return x * x * d2 + x * d1 + (x * x - double(n) * double(n)) * f0;
            };
            // two-level Richardson on the h^2 error
            const cplx r = (4.0 * residual(0.5 * h) - residual(h)) / 3.0;
            CHECK(std::abs(r) < 1e-8 * std::abs(f(x)) * x * x);
        }
    }
}

TEST_CASE("hankel1 domain errors")
{
    CHECK_THROWS_AS(hankel1(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(hankel1(0, -1.0), std::domain_error);
    CHECK_THROWS_AS(hankel1(2, 1.0), std::domain_error);
}

TEST_CASE("expint against the defining integral")
{
    boost::math::quadrature::exp_sinh<double> integrator;
    for (auto [j, x] : {std::pair{1, 1.0}, {2, 0.5}, {4, 2.3}, {7, 0.1}}) {
        const double oracle =
            integrator.integrate([&](double t) { return std::exp(-x * (t + 1.0)) / std::pow(t + 1.0, j); });
        CHECK(std::abs(expint(j, x) - oracle) < 1e-12 * oracle);
    }
    CHECK(expint(1, 1.0) == doctest::Approx(0.21938393439552027).epsilon(1e-12));
}

TEST_CASE("expint limits and recurrence")
{
    for (int j : {2, 3, 6}) CHECK(std::abs(expint(j, 1e-12) - 1.0 / (j - 1)) < 1e-9);

    std::mt19937 rng(43);
    std::uniform_real_distribution<double> ux(0.05, 20.0);
    std::uniform_int_distribution<int> uj(1, 8);
    for (int rep = 0; rep < 40; ++rep) {
        const double x = ux(rng);
        const int j = uj(rng);
        const double r = j * expint(j + 1, x) - std::exp(-x) + x * expint(j, x);
        CHECK(std::abs(r) < 1e-14);
    }
}

TEST_CASE("expint monotonicity")
{
    CHECK(expint(3, 0.5) > expint(3, 0.8));
    CHECK(expint(4, 0.5) < expint(3, 0.5));
    CHECK(expint(2, 2.0) > 0.0);
}

TEST_CASE("expint ladder agrees with direct evaluation")
{
    for (double x : {0.03, 0.7, 2.5}) {
        std::vector<double> out(22);
        specfun::expint_ladder(-1, 20, x, out);
        CHECK(std::abs(out[0] - std::exp(-x) * (1.0 + 1.0 / x) / x) < 1e-13 * out[0]);
        CHECK(std::abs(out[1] - std::exp(-x) / x) < 1e-13 * out[1]);
        for (int j = 1; j <= 20; ++j)
            CHECK(std::abs(out[size_t(j + 1)] - expint(j, x)) < 1e-10 * expint(j, x));
    }
}

TEST_CASE("erfc of complex argument: anchor values")
{
    CHECK(erfc_complex(cplx(0.0)) == cplx(1.0));

    boost::math::quadrature::exp_sinh<double> integrator;
    const double oracle =
        (2.0 / std::sqrt(M_PI)) * integrator.integrate([](double t) { return std::exp(-(t + 1.0) * (t + 1.0)); });
    CHECK(std::abs(erfc_complex(cplx(1.0)).real() - oracle) < 1e-12 * oracle);
    CHECK(erfc_complex(cplx(1.0)).real() == doctest::Approx(0.15729920705028513).epsilon(1e-12));
}

TEST_CASE("erfc reflection and conjugation symmetries")
{
    std::mt19937 rng(47);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (int rep = 0; rep < 50; ++rep) {
        const cplx z(u(rng), u(rng));
        const cplx a = erfc_complex(z), b = erfc_complex(-z);
        CHECK(std::abs(a + b - 2.0) < 1e-13 * std::max(1.0, std::max(std::abs(a), std::abs(b))));
        const cplx c = erfc_complex(std::conj(z));
        CHECK(std::abs(std::conj(c) - a) < 5e-15 * std::abs(a));
    }
}

TEST_CASE("erfc against a quadrature oracle over the working region")
{
    // erfc(z) = (2/sqrt(pi)) int_z^inf exp(-s^2) ds. The path runs straight
    // from z to a real anchor point and onward along the real axis, so the
    // integrand magnitude decays monotonically and the quadrature never
    // fights cancellation.
    using boost::math::quadrature::gauss_kronrod;
    std::function<cplx(cplx)> oracle = [&](cplx z) -> cplx {
        if (z.real() < 0.0) return 2.0 - oracle(-z); // exact reflection identity
        const double r0 = std::max(z.real(), std::abs(z)) + 2.0;
        const cplx leg = cplx(r0) - z;
        auto seg = [&](double t) { cplx s = z + t * leg; return std::exp(-s * s) * leg; };
        auto re = [&](double t) { return seg(t).real(); };
        auto im = [&](double t) { return seg(t).imag(); };
        auto tail = [&](double t) { return std::exp(-t * t); };
        // composite panels keep the local quadrature scale-matched even when
        // the integrand spans many orders of magnitude along the leg
        double ir = 0.0, ii = 0.0;
        const int panels = 64;
        for (int p = 0; p < panels; ++p) {
            const double a = double(p) / panels, b = double(p + 1) / panels;
            ir += gauss_kronrod<double, 15>::integrate(re, a, b, 10, 1e-15);
            ii += gauss_kronrod<double, 15>::integrate(im, a, b, 10, 1e-15);
        }
        const double it = gauss_kronrod<double, 15>::integrate(tail, r0, r0 + 30.0, 14, 1e-15);
        return (2.0 / std::sqrt(M_PI)) * cplx(ir + it, ii);
    };

    // x values include exact nodes of both sampling grids (multiples of 0.35)
    for (double x : {-7.0, -4.0, -3.5, -1.5, -0.3, 0.0, 0.4, 1.8, 3.5, 3.675, 5.0, 6.4, 8.0}) {
        for (double y : {-8.0, -4.5, -1.0, -0.577, -0.1, 0.0, 0.2, 2.0, 4.6, 7.5}) {
            const cplx z(x, y);
            const cplx wv = erfc_complex(z);
            const cplx ov = oracle(z);
            CHECK(std::abs(wv - ov) < 5e-12 * std::max(std::abs(ov), 1e-280));
        }
    }
}

TEST_CASE("erfc stays finite in the scaled regime")
{
    // arguments of the form produced by the spectral Ewald series: the
    // intermediate exp(-z^2) factor must not overflow prematurely
    const cplx z(0.3, -12.0);
    const cplx v = erfc_complex(z);
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));
    CHECK(std::abs(v) > 1e20); // genuinely large, ~exp(144)
}
