#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gratsweep/jet.hpp"
#include "gratsweep/lattice.hpp"

namespace gratsweep {

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DerivLevel { value = 0, gradient = 1, hessian = 2 };

/// Green function and spatial derivatives with respect to w = x - y
/// (the quasi-periodic Green function depends on the two points only
/// through their difference).
template <class T>
struct GreenEval {
    T g, g1, g2;        // value, d/dw1, d/dw2
    T h11, h12, h22;    // second derivatives
};

/// Term-count bookkeeping for the convergence studies.
struct GreensDiagnostics {
    int n_pairs = 0;  // spatial pairs summed (index 0 counts as the first)
    int m_pairs = 0;  // spectral pairs summed
    int j_terms = 0;  // longest inner j-series
    // Last pair index at which a given derivative order still contributed
    // above the truncation threshold.
    std::vector<int> gp1_last_significant;
    std::vector<int> gp2_last_significant;
};

namespace detail {
template <class T>
struct ModeData {
    T xi, ktilde, inv_kt, erfc_shift; // erfc_shift = -i*ktilde/(2E)
    T pref_ewald;                     // (i/4L)/ktilde
    T pref_spectral;                  // (i/2L)/ktilde
};

template <class T>
struct FreqState {
    T k, beta, eib, eib_inv; // eib = exp(i*beta)
    T k2E2;                  // (k/(2E))^2
    double k0 = 0.0;
    int m_lo = 0, m_hi = 0;
    std::vector<ModeData<T>> modes;
    const ModeData<T>& mode(int m) const { return modes[static_cast<size_t>(m - m_lo)]; }
    bool has(int m) const { return m >= m_lo && m <= m_hi; }
};
} // namespace detail

/// Evaluator of the quasi-periodic Green function G_p at one expansion
/// frequency. The splitting parameter E is frozen at construction from the
/// centre wavenumber, so it carries no omega-dependence inside the jets.
/// All evaluations are const and safe to run concurrently.
class PeriodicGreen {
public:
    /// `E_override` > 0 bypasses the splitting rule (used by the
    /// E-invariance checks); 0 selects it from cfg.mode at omega0.
    PeriodicGreen(const LatticeParams& params, const EwaldConfig& cfg, double omega0,
                  int order, double E_override = 0.0);

    double splitting() const { return E_; }
    double omega0() const { return omega0_; }
    int order() const { return order_; }
    const LatticeParams& lattice() const { return lat_; }
    const SpectralIndexSet& modes() const { return index_set_; }
    /// Distance |w2| beyond which the plain spectral representation is used.
    double spectral_cutoff() const { return spectral_cutoff_; }

    // The two Ewald series and their sum, as jets in omega.
    Jet gp1(double w1, double w2, GreensDiagnostics* diag = nullptr) const;
    Jet gp2(double w1, double w2, GreensDiagnostics* diag = nullptr) const;
    Jet periodic(double w1, double w2) const;

    // Production evaluation with spatial derivatives. `allow_spectral` lets
    // the evaluator switch to the Rayleigh series for well-separated |w2|.
    GreenEval<Jet> eval_jet(double w1, double w2, DerivLevel lvl,
                            bool allow_spectral = true) const;
    GreenEval<cplx> eval_value(double w1, double w2, DerivLevel lvl,
                               bool allow_spectral = true) const;

private:
    template <class T>
    GreenEval<T> eval_impl(const detail::FreqState<T>& fs, double w1, double w2,
                           DerivLevel lvl, bool allow_spectral,
                           GreensDiagnostics* diag) const;
    template <class T>
    void accumulate_gp1(const detail::FreqState<T>& fs, double w1, double w2,
                        DerivLevel lvl, GreenEval<T>& out, GreensDiagnostics* diag) const;
    template <class T>
    void accumulate_gp2(const detail::FreqState<T>& fs, double w1, double w2,
                        DerivLevel lvl, GreenEval<T>& out, GreensDiagnostics* diag) const;
    template <class T>
    void accumulate_spectral(const detail::FreqState<T>& fs, double w1, double w2,
                             DerivLevel lvl, GreenEval<T>& out) const;

    LatticeParams lat_;
    EwaldConfig cfg_;
    double omega0_;
    int order_;
    double E_;
    double spectral_cutoff_;
    SpectralIndexSet index_set_;
    detail::FreqState<Jet> fs_jet_;
    detail::FreqState<cplx> fs_val_;
};

/// Burton-Miller kernel W_p = dG/dn_y + alpha d2G/(dn_x dn_y) from an
/// evaluation in w = x - y coordinates (dG/dn_y = -n_y . grad_w G and
/// d2G/dn_x dn_y = -n_x^T H_w n_y).
template <class T>
T burton_miller_kernel(const GreenEval<T>& e, const std::array<double, 2>& nx,
                       const std::array<double, 2>& ny, const T& alpha)
{
    T dny = e.g1 * cplx(-ny[0]) + e.g2 * cplx(-ny[1]);
    T hyp = e.h11 * cplx(-nx[0] * ny[0]) + e.h12 * cplx(-(nx[0] * ny[1] + nx[1] * ny[0]))
            + e.h22 * cplx(-nx[1] * ny[1]);
    return dny + alpha * hyp;
}

} // namespace gratsweep
