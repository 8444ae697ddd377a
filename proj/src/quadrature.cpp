#include "gratsweep/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gratsweep {

namespace {

QuadRule compute_gl(int n)
{
    QuadRule r;
    r.x.resize(static_cast<size_t>(n));
    r.w.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev-like initial guess
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.x[static_cast<size_t>(n - 1 - i)] = x;
        r.w[static_cast<size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

} // namespace

const QuadRule& gauss_legendre(int n)
{
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    static std::map<int, QuadRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
    return it->second;
}

} // namespace gratsweep
