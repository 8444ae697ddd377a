#include "gratsweep/lattice.hpp"

#include <cmath>

namespace gratsweep {

double splitting_parameter(double k, const LatticeParams& params, SplittingMode mode,
                           const EwaldConfig& cfg)
{
    if (!(k > 0.0)) throw std::invalid_argument("splitting_parameter: k must be positive");
    const double e_opt = std::sqrt(M_PI) / params.L;
    if (mode == SplittingMode::optimal || k < 2.0 * M_PI / params.L) return e_opt;

    // k tilde of the fundamental order, at the value part
    const double xi0 = k * std::cos(params.theta);
    const double kt0sq = k * k - xi0 * xi0;
    const double kt0 = kt0sq > 0.0 ? std::sqrt(kt0sq) : 0.0;

    double kfact = 1.0;
    for (int j = 2; j <= cfg.K_terms; ++j) kfact *= j;
    const double e_hf = k / (2.0 * std::pow(cfg.eps_breakdown * kfact, 1.0 / (2.0 * cfg.K_terms)));
    return std::max(e_opt, std::max(kt0 / (2.0 * cfg.H_cap), e_hf));
}

SpectralIndexSet spectral_index_set(const Jet& omega, const LatticeParams& params, int extra)
{
    if (!(omega.value().real() > 0.0))
        throw std::invalid_argument("spectral_index_set: omega value part must be positive");

    const int n = omega.order();
    const Jet k = omega * cplx(1.0 / params.c);
    const double k0 = k.value().real();
    const double cth = std::cos(params.theta);

    SpectralIndexSet s;
    s.beta = k * cplx(params.L * cth);
    const double beta0 = s.beta.value().real();
    s.m_min = -static_cast<int>(std::floor((k0 * params.L + beta0) / (2.0 * M_PI)));
    s.m_max = static_cast<int>(std::floor((k0 * params.L - beta0) / (2.0 * M_PI)));
    s.m_lo = s.m_min - extra;
    s.m_hi = s.m_max + extra;

    const Jet ksq = k * k;
    s.xi.reserve(static_cast<size_t>(s.m_hi - s.m_lo + 1));
    s.ktilde.reserve(s.xi.capacity());
    for (int m = s.m_lo; m <= s.m_hi; ++m) {
        Jet xi = k * cplx(cth) + cplx(2.0 * M_PI * m / params.L);
        Jet rad = ksq - xi * xi;
        const double r0 = rad.value().real();
        if (std::abs(r0) < 1e-16 * k0 * k0)
            throw wood_anomaly_error("spectral_index_set: Wood anomaly at order m=" + std::to_string(m));
        Jet kt = (r0 >= 0.0) ? sqrt(rad) : cplx(0.0, 1.0) * sqrt(-rad);
        s.xi.push_back(std::move(xi));
        s.ktilde.push_back(std::move(kt));
    }

    // Guard the first evanescent orders outside the tabulated window as well:
    // an anomaly just beyond m_hi would still poison the spectral series.
    for (int m : {s.m_lo - 1, s.m_hi + 1}) {
        const double xi0 = k0 * cth + 2.0 * M_PI * m / params.L;
        if (std::abs(k0 * k0 - xi0 * xi0) < 1e-16 * k0 * k0)
            throw wood_anomaly_error("spectral_index_set: Wood anomaly at order m=" + std::to_string(m));
    }
    return s;
}

} // namespace gratsweep
