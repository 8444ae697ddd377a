#pragma once

#include <complex>
#include <span>
#include <vector>

namespace gratsweep {

using cplx = std::complex<double>;

/// Truncated Taylor series of a complex-valued function about a fixed centre.
/// Coefficients are stored scaled, c[i] = f^(i)(centre)/i!, so that arithmetic
/// is plain power-series arithmetic and factorials never appear explicitly.
/// Jets are immutable values; all operations are pure.
class Jet {
public:
    // Orders above this are never needed: the band average requires derivatives
    // up to 2(M+N) and the Pade degrees are capped at M, N <= 10.
    static constexpr int max_order = 40;

    Jet() = default;
    Jet(cplx centre, int order);

    static Jet constant(cplx value, cplx centre, int order);
    /// The identity function w -> w expanded at `centre`: [centre, 1, 0, ...].
    static Jet variable(cplx centre, int order);
    static Jet from_coeffs(cplx centre, std::vector<cplx> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    cplx centre() const { return centre_; }
    cplx value() const { return c_[0]; }
    cplx operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    cplx& operator[](int i) { return c_[static_cast<size_t>(i)]; }
    std::span<const cplx> coeffs() const { return c_; }

    /// Unscaled derivative f^(i)(centre) = i! * c[i].
    cplx derivative(int i) const;

    /// Largest coefficient magnitude; the norm used by truncation tests.
    double max_abs() const;

    Jet& operator+=(const Jet& rhs);
    Jet& operator-=(const Jet& rhs);
    Jet& operator*=(cplx s);
    Jet& operator+=(cplx s) { c_[0] += s; return *this; }
    Jet& operator-=(cplx s) { c_[0] -= s; return *this; }

    friend Jet operator+(Jet a, const Jet& b) { a += b; return a; }
    friend Jet operator-(Jet a, const Jet& b) { a -= b; return a; }
    friend Jet operator*(Jet a, cplx s) { a *= s; return a; }
    friend Jet operator*(cplx s, Jet a) { a *= s; return a; }
    friend Jet operator+(Jet a, cplx s) { a += s; return a; }
    friend Jet operator+(cplx s, Jet a) { a += s; return a; }
    friend Jet operator-(Jet a, cplx s) { a -= s; return a; }
    friend Jet operator-(const Jet& a) { Jet r = a; r *= cplx(-1.0); return r; }
    friend Jet operator-(cplx s, const Jet& a) { Jet r = -a; r += s; return r; }
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);
    friend Jet operator/(cplx s, const Jet& b);
    friend Jet operator/(Jet a, cplx s) { a *= 1.0 / s; return a; }

private:
    cplx centre_{};
    std::vector<cplx> c_;
};

/// Truncated Cauchy product accumulated into `out` (out += a*b). `out` must
/// share centre/order with the operands.
void mul_add(Jet& out, const Jet& a, const Jet& b);

// Univariate lifts via the standard power-series recurrences.
Jet exp(const Jet& a);
Jet log(const Jet& a);    // a.value() != 0
Jet sqrt(const Jet& a);   // a.value() != 0 (branch point otherwise)
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet pow(const Jet& a, double p);
/// Complementary error function of a jet. `gauss_out`, when non-null,
/// receives exp(-a^2) which the recurrence computes anyway.
Jet erfc(const Jet& a, Jet* gauss_out = nullptr);

/// Coefficient-wise conjugate. Equals conj(f)(w) as a function of w only when
/// the sweep variable is real, which is the case everywhere in this library.
Jet conj_jet(const Jet& a);

/// Generic composition (f o a) from the scaled derivatives of f at a.value(),
/// fc[i] = f^(i)(a0)/i!. Used where no dedicated recurrence exists.
Jet compose(std::span<const cplx> fc, const Jet& a);

} // namespace gratsweep
