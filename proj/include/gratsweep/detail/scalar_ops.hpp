#pragma once

// Shims that let the Green-function and BEM kernels be written once and
// instantiated both with plain complex scalars (single-frequency solves) and
// with jets (frequency-derivative solves).

#include <cmath>
#include <complex>

#include "gratsweep/jet.hpp"
#include "gratsweep/specfun.hpp"

namespace gratsweep::detail {

inline cplx make_like(const cplx&, cplx v) { return v; }
inline Jet make_like(const Jet& proto, cplx v)
{
    return Jet::constant(v, proto.centre(), proto.order());
}

inline double max_abs(const cplx& z) { return std::abs(z); }
inline double max_abs(const Jet& j) { return j.max_abs(); }

inline cplx value_of(const cplx& z) { return z; }
inline cplx value_of(const Jet& j) { return j.value(); }

inline cplx exp_s(const cplx& z) { return std::exp(z); }
inline Jet exp_s(const Jet& a) { return exp(a); }

inline cplx sqrt_s(const cplx& z) { return std::sqrt(z); }
inline Jet sqrt_s(const Jet& a) { return sqrt(a); }

inline cplx log_s(const cplx& z) { return std::log(z); }
inline Jet log_s(const Jet& a) { return log(a); }

inline cplx erfc_s(const cplx& z, cplx* gauss)
{
    if (gauss) *gauss = std::exp(-z * z);
    return specfun::erfc_complex(z);
}
inline Jet erfc_s(const Jet& a, Jet* gauss) { return erfc(a, gauss); }

inline int order_of(const cplx&) { return 0; }
inline int order_of(const Jet& j) { return j.order(); }

inline cplx coeff(const cplx& z, int) { return z; }
inline cplx coeff(const Jet& j, int i) { return j[i]; }

} // namespace gratsweep::detail
