#include "gratsweep/geometry.hpp"

#include <cmath>
#include <string>

namespace gratsweep {

BoundaryMesh build_mesh(std::span<const ScattererSpec> specs, const LatticeParams& params)
{
    params.validate();
    BoundaryMesh mesh;
    for (size_t s = 0; s < specs.size(); ++s) {
        const auto& sp = specs[s];
        if (sp.elements < 8)
            throw geometry_error("mesh: at least 8 elements per scatterer required");
        if (!(sp.radius > 0.0))
            throw geometry_error("mesh: scatterer radius must be positive");
        if (!(sp.centre.x - sp.radius > 0.0) || !(sp.centre.x + sp.radius < params.L))
            throw geometry_error("mesh: scatterer crosses the unit-cell strip boundary");
        for (size_t t = 0; t < s; ++t) {
            for (int img = -1; img <= 1; ++img) {
                const Vec2 shifted{specs[t].centre.x + img * params.L, specs[t].centre.y};
                if ((sp.centre - shifted).norm() <= sp.radius + specs[t].radius)
                    throw geometry_error("mesh: scatterers " + std::to_string(t) + " and "
                                         + std::to_string(s) + " overlap");
            }
        }
    }

    for (size_t s = 0; s < specs.size(); ++s) {
        const auto& sp = specs[s];
        const int n = sp.elements;
        for (int i = 0; i < n; ++i) {
            const double pa = 2.0 * M_PI * i / n;
            const double pb = 2.0 * M_PI * (i + 1) / n;
            Element e;
            e.a = sp.centre + Vec2{sp.radius * std::cos(pa), sp.radius * std::sin(pa)};
            e.b = sp.centre + Vec2{sp.radius * std::cos(pb), sp.radius * std::sin(pb)};
            e.mid = (e.a + e.b) * 0.5;
            e.length = (e.b - e.a).norm();
            // chord midpoint-to-centre is perpendicular to the chord
            const Vec2 inward = sp.centre - e.mid;
            const double nn = inward.norm();
            e.normal = {inward.x / nn, inward.y / nn};
            e.scatterer = static_cast<int>(s);
            mesh.elements.push_back(e);
        }
    }
    mesh.scatterers.assign(specs.begin(), specs.end());
    return mesh;
}

} // namespace gratsweep
