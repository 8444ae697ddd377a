#pragma once

#include <utility>

#include "gratsweep/geometry.hpp"
#include "gratsweep/greens.hpp"

namespace gratsweep {

struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Boundary traces of the sound pressure and their scaled omega-derivatives
/// at one expansion frequency.
struct SolveResult {
    double omega0 = 0.0;
    int order = 0;
    std::vector<Jet> traces; // one jet per element
    Jet alpha;               // coupling constant -i/k as a jet
};

/// Plane-wave incidence u_in = exp(i k d.x), d = (cos theta, sin theta).
/// Returns (u_in, q_in); q_in is zero when `normal` is null.
std::pair<Jet, Jet> incident_jets(Vec2 x, const std::array<double, 2>* normal,
                                  const Jet& omega, const LatticeParams& params);

/// Collocation matrices of the combined boundary integral operator,
/// 1/2 I + [double layer] + alpha [hypersingular], as scaled derivative
/// blocks: blocks[i](a,b) = (1/i!) d^i/domega^i of entry (a,b), column-major.
struct Assembly {
    int n = 0;
    int order = 0;
    std::vector<std::vector<cplx>> blocks;
};

Assembly assemble(const BoundaryMesh& mesh, const PeriodicGreen& green,
                  const LatticeParams& params);

/// Sequential direct solve: one LU factorization of the value block, then one
/// substitution per derivative order with the lower orders feeding the
/// right-hand side.
SolveResult solve_derivatives(const BoundaryMesh& mesh, double omega0, int order,
                              const LatticeParams& params, const EwaldConfig& cfg);

/// Field value at a point off the boundary from the integral representation
/// u = u_in - int dG/dn_y u. Sets `near_boundary` when x is within one
/// element length of a collocation point (quadrature accuracy degrades).
cplx interior_field(Vec2 x, const SolveResult& result, const BoundaryMesh& mesh,
                    const LatticeParams& params, const EwaldConfig& cfg,
                    bool* near_boundary = nullptr);

} // namespace gratsweep
