#include "gratsweep/greens.hpp"

#include <algorithm>
#include <cmath>

#include "gratsweep/detail/scalar_ops.hpp"
#include "gratsweep/specfun.hpp"

namespace gratsweep {

using detail::FreqState;
using detail::make_like;
using detail::max_abs;
using detail::ModeData;

namespace {

constexpr double inv_4pi = 0.25 * M_1_PI;
constexpr double two_over_sqrt_pi = 1.1283791670955125739;
constexpr int pair_cap = 10000;

template <class T>
FreqState<T> build_freq_state(const T& omega, const LatticeParams& lat, double E,
                              int m_cap)
{
    FreqState<T> fs;
    fs.k = omega * cplx(1.0 / lat.c);
    fs.k0 = detail::value_of(fs.k).real();
    fs.beta = fs.k * cplx(lat.L * std::cos(lat.theta));
    fs.eib = detail::exp_s(fs.beta * cplx(0.0, 1.0));
    fs.eib_inv = detail::exp_s(fs.beta * cplx(0.0, -1.0));
    fs.k2E2 = fs.k * fs.k * cplx(1.0 / (4.0 * E * E));
    fs.m_lo = -m_cap;
    fs.m_hi = m_cap;

    const T ksq = fs.k * fs.k;
    fs.modes.reserve(static_cast<size_t>(2 * m_cap + 1));
    for (int m = fs.m_lo; m <= fs.m_hi; ++m) {
        ModeData<T> md;
        md.xi = fs.k * cplx(std::cos(lat.theta)) + make_like(fs.k, 2.0 * M_PI * m / lat.L);
        T rad = ksq - md.xi * md.xi;
        const double r0 = detail::value_of(rad).real();
        if (std::abs(r0) < 1e-16 * fs.k0 * fs.k0)
            throw wood_anomaly_error("periodic green: Wood anomaly at order m="
                                     + std::to_string(m));
        md.ktilde = (r0 >= 0.0) ? detail::sqrt_s(rad)
                                : detail::sqrt_s(rad * cplx(-1.0)) * cplx(0.0, 1.0);
        md.inv_kt = cplx(1.0) / md.ktilde;
        md.erfc_shift = md.ktilde * cplx(0.0, -0.5 / E);
        md.pref_ewald = md.inv_kt * cplx(0.0, 0.25 / lat.L);
        md.pref_spectral = md.inv_kt * cplx(0.0, 0.5 / lat.L);
        fs.modes.push_back(std::move(md));
    }
    return fs;
}

} // namespace

PeriodicGreen::PeriodicGreen(const LatticeParams& params, const EwaldConfig& cfg,
                             double omega0, int order, double E_override)
    : lat_(params), cfg_(cfg), omega0_(omega0), order_(order)
{
    params.validate();
    cfg.validate();
    if (!(omega0 > 0.0)) throw std::invalid_argument("periodic green: omega0 must be positive");

    const double k0 = omega0 / params.c;
    E_ = E_override > 0.0 ? E_override : splitting_parameter(k0, params, cfg.mode, cfg);
    spectral_cutoff_ = 0.32 * params.L;

    // Spectral table extent: far enough that both the Ewald spectral series
    // (Gaussian tail ~exp(-(kappa/2E)^2 + (E d)^2)) and the plain Rayleigh
    // series at the cutoff distance (tail ~exp(-kappa d)) are below the
    // truncation threshold with margin.
    const double target = std::max(-std::log(cfg.trunc_rel_tol), 36.8) + 12.0;
    const double kap_ewald =
        2.0 * E_ * std::sqrt(target + E_ * E_ * spectral_cutoff_ * spectral_cutoff_);
    const double kap_spectral = target / spectral_cutoff_;
    const double kap = std::max(kap_ewald, kap_spectral);
    const int m_cap = static_cast<int>(std::ceil(params.L * (k0 + kap) / (2.0 * M_PI))) + 4;

    const Jet omega_jet = Jet::variable(omega0, order);
    index_set_ = spectral_index_set(omega_jet, params, 0);
    fs_jet_ = build_freq_state<Jet>(omega_jet, params, E_, m_cap);
    fs_val_ = build_freq_state<cplx>(cplx(omega0), params, E_, m_cap);
}

template <class T>
void PeriodicGreen::accumulate_gp1(const FreqState<T>& fs, double w1, double w2,
                                   DerivLevel lvl, GreenEval<T>& out,
                                   GreensDiagnostics* diag) const
{
    const double tol = cfg_.trunc_rel_tol;
    const double E = E_, E2 = E * E, E4 = E2 * E2;
    const int n_star = static_cast<int>(std::lround(w1 / lat_.L));

    const double qn = max_abs(fs.k2E2);
    std::vector<double> ladder;

    // e^{i n beta} at the recentred origin; stepped by e^{+-i beta} per pair.
    T e_up = detail::exp_s(fs.beta * cplx(0.0, static_cast<double>(n_star)));
    T e_dn = e_up;

    T pair_g = make_like(fs.k, 0.0);
    double acc_norm = 0.0;

    for (int p = 0; p < pair_cap; ++p) {
        double pair_mag = 0.0;
        if (diag) pair_g *= cplx(0.0);

        for (int side = 0; side < (p == 0 ? 1 : 2); ++side) {
            const int n = (side == 0) ? n_star + p : n_star - p;
            const T& phase = (side == 0) ? e_up : e_dn;

            const double r1 = w1 - n * lat_.L, r2 = w2;
            const double rho2 = r1 * r1 + r2 * r2;
            const double u = E2 * rho2;
            if (u < 1e-280)
                throw std::domain_error("gp1: evaluation at a lattice point");
            if (u > 745.0) continue; // entire term underflows

            // Scalar preview of the inner series length (the true test below
            // normally stops earlier).
            const double growth = qn * (1.0 + detail::order_of(out.g));
            int j_est = 1;
            for (double t = 1.0; t > 1e-18 && j_est < 400; ++j_est) t *= growth / j_est;
            int jcap = std::min(j_est + 4, 400);
            ladder.resize(static_cast<size_t>(jcap) + 3);
            specfun::expint_ladder(-1, jcap + 1, u, ladder);
            const auto Ej = [&](int j) { return ladder[static_cast<size_t>(j + 1)]; };

            T S0 = make_like(fs.k, 0.0), S1 = S0, S2 = S0;
            double S0n = 0.0, S1n = 0.0, S2n = 0.0;
            T qj = make_like(fs.k, 1.0);
            for (int j = 0;; ++j) {
                if (j > jcap) {
                    if (jcap >= 400)
                        throw convergence_error("gp1: inner j-series did not converge");
                    jcap = std::min(2 * jcap, 400);
                    ladder.resize(static_cast<size_t>(jcap) + 3);
                    specfun::expint_ladder(-1, jcap + 1, u, ladder);
                }
                const double qmag = max_abs(qj);
                S0 += qj * cplx(Ej(j + 1));
                S0n += qmag * Ej(j + 1);
                if (lvl >= DerivLevel::gradient) {
                    S1 += qj * cplx(Ej(j));
                    S1n += qmag * Ej(j);
                }
                if (lvl >= DerivLevel::hessian) {
                    S2 += qj * cplx(Ej(j - 1));
                    S2n += qmag * Ej(j - 1);
                }
                const double tmag = qmag * (lvl >= DerivLevel::hessian ? Ej(j - 1)
                                            : lvl >= DerivLevel::gradient ? Ej(j)
                                                                          : Ej(j + 1));
                const double smag = lvl >= DerivLevel::hessian ? S2n
                                    : lvl >= DerivLevel::gradient ? S1n
                                                                  : S0n;
                if (j >= 1 && tmag <= 0.1 * tol * smag) break;
                qj = qj * fs.k2E2;
                qj *= cplx(1.0 / (j + 1));
                if (diag) diag->j_terms = std::max(diag->j_terms, j + 1);
            }

            T ph = phase * cplx(inv_4pi);
            const double phn = max_abs(ph);
            {
                T contrib = ph * S0;
                if (diag) pair_g += contrib;
                out.g += contrib;
            }
            pair_mag = std::max(pair_mag, phn * S0n);
            if (lvl >= DerivLevel::gradient) {
                T gsc = ph * S1;
                out.g1 += gsc * cplx(-2.0 * E2 * r1);
                out.g2 += gsc * cplx(-2.0 * E2 * r2);
                pair_mag = std::max(pair_mag, phn * S1n * 2.0 * E2 * (std::abs(r1) + std::abs(r2)));
            }
            if (lvl >= DerivLevel::hessian) {
                T gsc = ph * S1;
                T t2 = ph * S2;
                out.h11 += t2 * cplx(4.0 * E4 * r1 * r1) + gsc * cplx(-2.0 * E2);
                out.h12 += t2 * cplx(4.0 * E4 * r1 * r2);
                out.h22 += t2 * cplx(4.0 * E4 * r2 * r2) + gsc * cplx(-2.0 * E2);
                pair_mag = std::max(pair_mag, phn * (S2n * 4.0 * E4 * rho2 + S1n * 2.0 * E2));
            }
        }

        e_up = e_up * fs.eib;
        e_dn = e_dn * fs.eib_inv;

        acc_norm = std::max({acc_norm, max_abs(out.g), max_abs(out.g1), max_abs(out.g2),
                             max_abs(out.h11), max_abs(out.h12), max_abs(out.h22)});
        if (diag) {
            diag->n_pairs = p + 1;
            for (int i = 0; i <= detail::order_of(out.g); ++i) {
                const double gi = std::abs(detail::coeff(out.g, i));
                if (std::abs(detail::coeff(pair_g, i)) > tol * gi)
                    diag->gp1_last_significant[static_cast<size_t>(i)] = p;
            }
        }
        if (p >= 1 && pair_mag <= tol * acc_norm + 1e-300) return;
    }
    throw convergence_error("gp1: spatial series did not converge");
}

template <class T>
void PeriodicGreen::accumulate_gp2(const FreqState<T>& fs, double w1, double w2,
                                   DerivLevel lvl, GreenEval<T>& out,
                                   GreensDiagnostics* diag) const
{
    const double tol = cfg_.trunc_rel_tol;
    const double E = E_;
    const double d = w2;

    T pair_g = make_like(fs.k, 0.0);
    double acc_norm = 0.0;

    for (int p = 0; p < pair_cap; ++p) {
        double pair_mag = 0.0;
        if (diag) pair_g *= cplx(0.0);

        for (int side = 0; side < (p == 0 ? 1 : 2); ++side) {
            const int m = (side == 0) ? p : -p;
            if (!fs.has(m))
                throw convergence_error("gp2: spectral mode table exhausted; "
                                        "|w2| too large for the Ewald path");
            const ModeData<T>& md = fs.mode(m);

            T ikd = md.ktilde * cplx(0.0, d);
            T P = detail::exp_s(ikd);
            T Pm = detail::exp_s(ikd * cplx(-1.0));
            T z1 = md.erfc_shift - cplx(E * d);
            T z2 = md.erfc_shift + cplx(E * d);
            const bool need_g = lvl >= DerivLevel::gradient;
            T G1 = make_like(fs.k, 0.0), G2 = G1;
            T F1 = detail::erfc_s(z1, need_g ? &G1 : nullptr);
            T F2 = detail::erfc_s(z2, need_g ? &G2 : nullptr);

            T PF1 = P * F1, PF2 = Pm * F2;
            T bracket = PF1 + PF2;
            T A = detail::exp_s(md.xi * cplx(0.0, w1));
            T base = md.pref_ewald * A;
            T term = base * bracket;
            if (diag) pair_g += term;
            out.g += term;
            pair_mag = std::max(pair_mag, max_abs(term));

            if (lvl >= DerivLevel::gradient) {
                T ix = md.xi * cplx(0.0, 1.0);
                T g1t = term * ix;
                out.g1 += g1t;

                T PG1 = P * G1, PG2 = Pm * G2;
                T dbr = (PF1 - PF2) * (md.ktilde * cplx(0.0, 1.0))
                        + (PG1 - PG2) * cplx(2.0 * E / std::sqrt(M_PI));
                T g2t = base * dbr;
                out.g2 += g2t;
                pair_mag = std::max({pair_mag, max_abs(g1t), max_abs(g2t)});

                if (lvl >= DerivLevel::hessian) {
                    out.h11 += g1t * ix;
                    out.h12 += g2t * ix;
                    T ikt2 = md.ktilde * cplx(0.0, 2.0);
                    T d2br = bracket * (md.ktilde * md.ktilde) * cplx(-1.0)
                             + (PG1 * (ikt2 + z1 * cplx(2.0 * E))
                                + PG2 * (ikt2 + z2 * cplx(2.0 * E)))
                                   * cplx(2.0 * E / std::sqrt(M_PI));
                    out.h22 += base * d2br;
                }
            }
        }

        acc_norm = std::max({acc_norm, max_abs(out.g), max_abs(out.g1), max_abs(out.g2),
                             max_abs(out.h11), max_abs(out.h12), max_abs(out.h22)});
        if (diag) {
            diag->m_pairs = p + 1;
            for (int i = 0; i <= detail::order_of(out.g); ++i) {
                const double gi = std::abs(detail::coeff(out.g, i));
                if (std::abs(detail::coeff(pair_g, i)) > tol * gi)
                    diag->gp2_last_significant[static_cast<size_t>(i)] = p;
            }
        }
        if (p >= 1 && pair_mag <= tol * acc_norm + 1e-300) return;
    }
    throw convergence_error("gp2: spectral series did not converge");
}

template <class T>
void PeriodicGreen::accumulate_spectral(const FreqState<T>& fs, double w1, double w2,
                                        DerivLevel lvl, GreenEval<T>& out) const
{
    const double tol = cfg_.trunc_rel_tol;
    const double ad = std::abs(w2);
    const double s = (w2 >= 0.0) ? 1.0 : -1.0;

    double acc_norm = 0.0;
    for (int p = 0; p < pair_cap; ++p) {
        double pair_mag = 0.0;
        for (int side = 0; side < (p == 0 ? 1 : 2); ++side) {
            const int m = (side == 0) ? p : -p;
            if (!fs.has(m))
                throw convergence_error("spectral green: mode table exhausted");
            const ModeData<T>& md = fs.mode(m);

            T expo = md.xi * cplx(0.0, w1) + md.ktilde * cplx(0.0, ad);
            T term = md.pref_spectral * detail::exp_s(expo);
            out.g += term;
            pair_mag = std::max(pair_mag, max_abs(term));
            if (lvl >= DerivLevel::gradient) {
                T ix = md.xi * cplx(0.0, 1.0);
                T ikt = md.ktilde * cplx(0.0, s);
                T g1t = term * ix;
                T g2t = term * ikt;
                out.g1 += g1t;
                out.g2 += g2t;
                if (lvl >= DerivLevel::hessian) {
                    out.h11 += g1t * ix;
                    out.h12 += g2t * ix;
                    out.h22 += g2t * ikt;
                }
            }
        }
        acc_norm = std::max({acc_norm, max_abs(out.g), max_abs(out.g1), max_abs(out.g2),
                             max_abs(out.h11), max_abs(out.h12), max_abs(out.h22)});
        if (p >= 1 && pair_mag <= tol * acc_norm + 1e-300) return;
    }
    throw convergence_error("spectral green: series did not converge");
}

template <class T>
GreenEval<T> PeriodicGreen::eval_impl(const FreqState<T>& fs, double w1, double w2,
                                      DerivLevel lvl, bool allow_spectral,
                                      GreensDiagnostics* diag) const
{
    GreenEval<T> out{make_like(fs.k, 0.0), make_like(fs.k, 0.0), make_like(fs.k, 0.0),
                     make_like(fs.k, 0.0), make_like(fs.k, 0.0), make_like(fs.k, 0.0)};
    if (diag) {
        diag->gp1_last_significant.assign(static_cast<size_t>(order_) + 1, 0);
        diag->gp2_last_significant.assign(static_cast<size_t>(order_) + 1, 0);
    }
    if (allow_spectral && std::abs(w2) >= spectral_cutoff_) {
        accumulate_spectral(fs, w1, w2, lvl, out);
    } else {
        accumulate_gp1(fs, w1, w2, lvl, out, diag);
        accumulate_gp2(fs, w1, w2, lvl, out, diag);
    }
    return out;
}

Jet PeriodicGreen::gp1(double w1, double w2, GreensDiagnostics* diag) const
{
    GreenEval<Jet> out{make_like(fs_jet_.k, 0.0), make_like(fs_jet_.k, 0.0),
                       make_like(fs_jet_.k, 0.0), make_like(fs_jet_.k, 0.0),
                       make_like(fs_jet_.k, 0.0), make_like(fs_jet_.k, 0.0)};
    if (diag) {
        diag->gp1_last_significant.assign(static_cast<size_t>(order_) + 1, 0);
        diag->gp2_last_significant.assign(static_cast<size_t>(order_) + 1, 0);
    }
    accumulate_gp1(fs_jet_, w1, w2, DerivLevel::value, out, diag);
    return out.g;
}

Jet PeriodicGreen::gp2(double w1, double w2, GreensDiagnostics* diag) const
{
    GreenEval<Jet> out{make_like(fs_jet_.k, 0.0), make_like(fs_jet_.k, 0.0),
                       make_like(fs_jet_.k, 0.0), make_like(fs_jet_.k, 0.0),
                       make_like(fs_jet_.k, 0.0), make_like(fs_jet_.k, 0.0)};
    if (diag) {
        diag->gp1_last_significant.assign(static_cast<size_t>(order_) + 1, 0);
        diag->gp2_last_significant.assign(static_cast<size_t>(order_) + 1, 0);
    }
    accumulate_gp2(fs_jet_, w1, w2, DerivLevel::value, out, diag);
    return out.g;
}

Jet PeriodicGreen::periodic(double w1, double w2) const
{
    return gp1(w1, w2) + gp2(w1, w2);
}

GreenEval<Jet> PeriodicGreen::eval_jet(double w1, double w2, DerivLevel lvl,
                                       bool allow_spectral) const
{
    return eval_impl(fs_jet_, w1, w2, lvl, allow_spectral, nullptr);
}

GreenEval<cplx> PeriodicGreen::eval_value(double w1, double w2, DerivLevel lvl,
                                          bool allow_spectral) const
{
    return eval_impl(fs_val_, w1, w2, lvl, allow_spectral, nullptr);
}

} // namespace gratsweep
