#pragma once

#include <array>
#include <span>
#include <vector>

#include "gratsweep/lattice.hpp"

namespace gratsweep {

struct Vec2 {
    double x = 0.0, y = 0.0;
    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::sqrt(x * x + y * y); }
};

struct ScattererSpec {
    Vec2 centre;
    double radius = 0.0;
    int elements = 0;
};

/// One straight constant element. The midpoint is the collocation point; the
/// normal points from the fluid into the scatterer.
struct Element {
    Vec2 a, b;
    Vec2 mid;
    std::array<double, 2> normal{};
    double length = 0.0;
    int scatterer = -1;
};

struct BoundaryMesh {
    std::vector<Element> elements;
    std::vector<ScattererSpec> scatterers;
    size_t size() const { return elements.size(); }
    bool empty() const { return elements.empty(); }
};

struct geometry_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Equal-arc chord discretization of circular scatterers. Validates that
/// every circle lies strictly inside the strip 0 < x1 < L and that no two
/// circles (including their +-L images) overlap.
BoundaryMesh build_mesh(std::span<const ScattererSpec> specs, const LatticeParams& params);

} // namespace gratsweep
