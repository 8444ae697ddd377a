#pragma once

#include <stdexcept>
#include <vector>

#include "gratsweep/jet.hpp"

namespace gratsweep {

/// Geometry/medium constants of the singly-periodic problem.
struct LatticeParams {
    double L = 1.0;      // period along x1
    double c = 1.0;      // phase velocity
    double theta = 0.0;  // incident angle, radians, 0 < theta <= pi/2

    void validate() const
    {
        if (!(L > 0.0) || !(c > 0.0))
            throw std::invalid_argument("lattice: L and c must be positive");
        if (!(theta > 0.0) || theta > M_PI / 2.0 + 1e-12)
            throw std::invalid_argument("lattice: theta must lie in (0, pi/2]");
    }
};

enum class SplittingMode { optimal, adaptive };

/// Ewald evaluation controls. H_cap and K_terms parameterize the adaptive
/// splitting rule; trunc_rel_tol is the series truncation threshold relative
/// to the partial sum.
struct EwaldConfig {
    SplittingMode mode = SplittingMode::adaptive;
    double trunc_rel_tol = 1e-7;
    double H_cap = 9.0;
    int K_terms = 13;
    double eps_breakdown = 1e-16;

    void validate() const
    {
        if (!(trunc_rel_tol > 0.0) || trunc_rel_tol >= 1.0)
            throw std::invalid_argument("ewald: trunc_rel_tol must lie in (0,1)");
        if (!(H_cap > 0.0) || K_terms < 1 || !(eps_breakdown > 0.0))
            throw std::invalid_argument("ewald: bad adaptive-splitting parameters");
    }
};

/// Splitting parameter E for the Ewald sums at wavenumber k. `optimal` is
/// sqrt(pi)/L; `adaptive` switches to the overflow-safe choice above the
/// first cutoff k = 2*pi/L.
double splitting_parameter(double k, const LatticeParams& params, SplittingMode mode,
                           const EwaldConfig& cfg);

struct wood_anomaly_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Per-mode spectral data: xi_m = (beta + 2 pi m)/L and the vertical
/// wavenumber ktilde_m, as jets in omega. Propagating orders are
/// m_min..m_max; the arrays extend beyond that range on request (evanescent
/// orders are needed by the Ewald spectral series).
struct SpectralIndexSet {
    Jet beta;
    int m_min = 0, m_max = 0;    // propagating range at the value part
    int m_lo = 0, m_hi = 0;      // range actually tabulated
    std::vector<Jet> xi;         // index m - m_lo
    std::vector<Jet> ktilde;

    const Jet& xi_at(int m) const { return xi[static_cast<size_t>(m - m_lo)]; }
    const Jet& ktilde_at(int m) const { return ktilde[static_cast<size_t>(m - m_lo)]; }
    bool propagating(int m) const { return m >= m_min && m <= m_max; }
};

/// Build the spectral index set for a frequency jet. Throws
/// wood_anomaly_error when some |ktilde_m| at the value part falls below
/// 1e-8 * k (the spectral series diverges there). `extra` evanescent orders
/// are tabulated on each side beyond the propagating range.
SpectralIndexSet spectral_index_set(const Jet& omega, const LatticeParams& params,
                                    int extra = 0);

} // namespace gratsweep
