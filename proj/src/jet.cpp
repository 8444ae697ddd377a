#include "gratsweep/jet.hpp"

#include <cmath>
#include <stdexcept>

#include "gratsweep/specfun.hpp"

namespace gratsweep {

namespace {

void check_match(const Jet& a, const Jet& b)
{
    if (a.order() != b.order() || a.centre() != b.centre())
        throw std::invalid_argument("jet arithmetic requires equal centre and order");
}

constexpr double two_over_sqrt_pi = 1.1283791670955125739;

} // namespace

Jet::Jet(cplx centre, int order) : centre_(centre)
{
    if (order < 0 || order > max_order)
        throw std::invalid_argument("jet order out of range");
    c_.assign(static_cast<size_t>(order) + 1, cplx(0.0));
}

Jet Jet::constant(cplx value, cplx centre, int order)
{
    Jet j(centre, order);
    j.c_[0] = value;
    return j;
}

Jet Jet::variable(cplx centre, int order)
{
    Jet j(centre, order);
    j.c_[0] = centre;
    if (order >= 1) j.c_[1] = 1.0;
    return j;
}

Jet Jet::from_coeffs(cplx centre, std::vector<cplx> coeffs)
{
    if (coeffs.empty() || coeffs.size() > static_cast<size_t>(max_order) + 1)
        throw std::invalid_argument("jet coefficient count out of range");
    Jet j;
    j.centre_ = centre;
    j.c_ = std::move(coeffs);
    return j;
}

cplx Jet::derivative(int i) const
{
    double f = 1.0;
    for (int p = 2; p <= i; ++p) f *= p;
    return c_[static_cast<size_t>(i)] * f;
}

double Jet::max_abs() const
{
    double m = 0.0;
    for (const cplx& z : c_) m = std::max(m, std::abs(z));
    return m;
}

Jet& Jet::operator+=(const Jet& rhs)
{
    check_match(*this, rhs);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

Jet& Jet::operator-=(const Jet& rhs)
{
    check_match(*this, rhs);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

Jet& Jet::operator*=(cplx s)
{
    for (cplx& z : c_) z *= s;
    return *this;
}

Jet operator*(const Jet& a, const Jet& b)
{
    check_match(a, b);
    const int n = a.order();
    Jet out(a.centre(), n);
    for (int k = 0; k <= n; ++k) {
        cplx s(0.0);
        for (int j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
        out.c_[k] = s;
    }
    return out;
}

void mul_add(Jet& out, const Jet& a, const Jet& b)
{
    check_match(a, b);
    check_match(out, a);
    const int n = a.order();
    for (int k = 0; k <= n; ++k) {
        cplx s(0.0);
        for (int j = 0; j <= k; ++j) s += a[j] * b[k - j];
        out[k] += s;
    }
}

Jet operator/(const Jet& a, const Jet& b)
{
    check_match(a, b);
    if (b.value() == cplx(0.0))
        throw std::domain_error("jet division by series with zero value part");
    const int n = a.order();
    Jet out(a.centre(), n);
    const cplx inv_b0 = 1.0 / b.c_[0];
    for (int k = 0; k <= n; ++k) {
        cplx s = a.c_[k];
        for (int j = 0; j < k; ++j) s -= out.c_[j] * b.c_[k - j];
        out.c_[k] = s * inv_b0;
    }
    return out;
}

Jet operator/(cplx s, const Jet& b)
{
    Jet num = Jet::constant(s, b.centre(), b.order());
    return num / b;
}

Jet exp(const Jet& a)
{
    const int n = a.order();
    Jet out(a.centre(), n);
    out[0] = std::exp(a.value());
    for (int k = 1; k <= n; ++k) {
        cplx s(0.0);
        for (int j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * out[k - j];
        out[k] = s / static_cast<double>(k);
    }
    return out;
}

Jet log(const Jet& a)
{
    if (a.value() == cplx(0.0))
        throw std::domain_error("log lift at zero value part");
    const int n = a.order();
    Jet out(a.centre(), n);
    out[0] = std::log(a.value());
    const cplx inv_a0 = 1.0 / a.value();
    // out' = a'/a, coefficient-wise forward substitution.
    for (int k = 1; k <= n; ++k) {
        cplx s = static_cast<double>(k) * a[k];
        for (int j = 1; j < k; ++j) s -= static_cast<double>(j) * out[j] * a[k - j];
        out[k] = s * inv_a0 / static_cast<double>(k);
    }
    return out;
}

Jet sqrt(const Jet& a)
{
    if (a.value() == cplx(0.0))
        throw std::domain_error("sqrt lift at branch point (zero value part)");
    const int n = a.order();
    Jet out(a.centre(), n);
    out[0] = std::sqrt(a.value());
    const cplx inv_2s0 = 1.0 / (2.0 * out[0]);
    for (int k = 1; k <= n; ++k) {
        cplx s = a[k];
        for (int j = 1; j < k; ++j) s -= out[j] * out[k - j];
        out[k] = s * inv_2s0;
    }
    return out;
}

Jet sin(const Jet& a)
{
    const int n = a.order();
    Jet s(a.centre(), n), c(a.centre(), n);
    s[0] = std::sin(a.value());
    c[0] = std::cos(a.value());
    for (int k = 1; k <= n; ++k) {
        cplx ds(0.0), dc(0.0);
        for (int j = 1; j <= k; ++j) {
            ds += static_cast<double>(j) * a[j] * c[k - j];
            dc += static_cast<double>(j) * a[j] * s[k - j];
        }
        s[k] = ds / static_cast<double>(k);
        c[k] = -dc / static_cast<double>(k);
    }
    return s;
}

Jet cos(const Jet& a)
{
    const int n = a.order();
    Jet s(a.centre(), n), c(a.centre(), n);
    s[0] = std::sin(a.value());
    c[0] = std::cos(a.value());
    for (int k = 1; k <= n; ++k) {
        cplx ds(0.0), dc(0.0);
        for (int j = 1; j <= k; ++j) {
            ds += static_cast<double>(j) * a[j] * c[k - j];
            dc += static_cast<double>(j) * a[j] * s[k - j];
        }
        s[k] = ds / static_cast<double>(k);
        c[k] = -dc / static_cast<double>(k);
    }
    return c;
}

Jet pow(const Jet& a, double p)
{
    if (a.value() == cplx(0.0))
        throw std::domain_error("pow lift at zero value part");
    const int n = a.order();
    Jet out(a.centre(), n);
    out[0] = std::pow(a.value(), p);
    const cplx inv_a0 = 1.0 / a.value();
    // From a*w' = p*a'*w: k*a0*w_k = sum_j (j(p+1)-k) a_j w_{k-j}.
    for (int k = 1; k <= n; ++k) {
        cplx s(0.0);
        for (int j = 1; j <= k; ++j)
            s += (static_cast<double>(j) * (p + 1.0) - static_cast<double>(k)) * a[j] * out[k - j];
        out[k] = s * inv_a0 / static_cast<double>(k);
    }
    return out;
}

Jet erfc(const Jet& a, Jet* gauss_out)
{
    const int n = a.order();
    Jet g = exp(-(a * a)); // exp(-a^2), needed by every derivative order
    Jet out(a.centre(), n);
    out[0] = specfun::erfc_complex(a.value());
    if (n >= 1) {
        // out' = -(2/sqrt(pi)) * g * a'
        Jet u = g * [&] {
            Jet da(a.centre(), n);
            for (int k = 0; k < n; ++k) da[k] = static_cast<double>(k + 1) * a[k + 1];
            return da;
        }();
        for (int k = 1; k <= n; ++k)
            out[k] = -two_over_sqrt_pi * u[k - 1] / static_cast<double>(k);
    }
    if (gauss_out) *gauss_out = std::move(g);
    return out;
}

Jet conj_jet(const Jet& a)
{
    Jet out = a;
    for (int k = 0; k <= a.order(); ++k) out[k] = std::conj(out[k]);
    return out;
}

Jet compose(std::span<const cplx> fc, const Jet& a)
{
    const int n = a.order();
    // Horner on the perturbation series (a - a0).
    Jet da = a;
    da[0] = 0.0;
    Jet out = Jet::constant(fc.empty() ? cplx(0.0) : fc.back(), a.centre(), n);
    for (int i = static_cast<int>(fc.size()) - 2; i >= 0; --i) {
        out = out * da;
        out += fc[static_cast<size_t>(i)];
    }
    return out;
}

} // namespace gratsweep
