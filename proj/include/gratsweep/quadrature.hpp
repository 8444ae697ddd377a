#pragma once

#include <vector>

namespace gratsweep {

struct QuadRule {
    std::vector<double> x; // nodes on (-1, 1)
    std::vector<double> w;
};

/// Gauss-Legendre rule with n points, computed once per n and cached.
const QuadRule& gauss_legendre(int n);

} // namespace gratsweep
