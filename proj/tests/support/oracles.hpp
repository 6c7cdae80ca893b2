#pragma once

// Test-only oracles, independent of the library paths they check.

#include <cmath>
#include <functional>
#include <vector>

#include "horogame/halfplane.hpp"
#include "horogame/rational.hpp"

namespace horogame::testing {

// Hyperbolic arclength of the geodesic from z to w by numeric quadrature of
// ds = |dz|/y along the connecting circle (or vertical line).
inline double hyp_distance_by_integration(const HPoint& z, const HPoint& w, int steps = 200000) {
    if (std::abs(z.x - w.x) < 1e-15) {
        return std::abs(std::log(w.y / z.y));
    }
    double c = (z.x * z.x + z.y * z.y - w.x * w.x - w.y * w.y) / (2.0 * (z.x - w.x));
    double r = std::hypot(z.x - c, z.y);
    double th0 = std::atan2(z.y, z.x - c);
    double th1 = std::atan2(w.y, w.x - c);
    double lo = std::min(th0, th1), hi = std::max(th0, th1);
    double sum = 0;
    for (int i = 0; i < steps; ++i) {
        double th = lo + (hi - lo) * (i + 0.5) / steps;
        sum += 1.0 / std::sin(th);
    }
    return sum * (hi - lo) / steps;
}

// Tangency endpoints of the shadow of the disk tangent at p with diameter h:
// roots of (-2p -+ h) x^2 + 2(p^2 - 1) x + (2p -+ h) = 0, sign chosen per side.
inline std::vector<double> shadow_tangency_roots(double p, double h, int sign) {
    double a = -2 * p - sign * h;
    double b = 2 * (p * p - 1);
    double c = 2 * p - sign * h;
    std::vector<double> roots;
    if (std::abs(a) < 1e-300) {
        if (std::abs(b) > 0) roots.push_back(-c / b);
        return roots;
    }
    double disc = b * b - 4 * a * c;
    if (disc < 0) return roots;
    double sq = std::sqrt(disc);
    roots.push_back((-b + sq) / (2 * a));
    roots.push_back((-b - sq) / (2 * a));
    return roots;
}

// Cylinder-sum ("pressure") dimension of the bounded-digit set: the s with
// sum over depth-k cylinders of |I_w|^s equal to 1.
inline double pressure_dimension(int N, int depth) {
    std::vector<double> lengths;
    std::function<void(long long, long long, long long, long long, int)> rec =
        [&](long long pp, long long qp, long long p, long long q, int d) {
            if (d == depth) {
                double lo = static_cast<double>(p) / static_cast<double>(q);
                double hi = static_cast<double>(p + pp) / static_cast<double>(q + qp);
                lengths.push_back(std::abs(hi - lo));
                return;
            }
            for (int dig = 1; dig <= N; ++dig) rec(p, q, dig * p + pp, dig * q + qp, d + 1);
        };
    for (int dig = 1; dig <= N; ++dig) rec(0, 1, 1, dig, 1);
    double lo = 0, hi = 1;
    for (int it = 0; it < 60; ++it) {
        double mid = (lo + hi) / 2;
        double sum = 0;
        for (double L : lengths) sum += std::pow(L, mid);
        (sum > 1 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace horogame::testing
