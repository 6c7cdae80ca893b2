#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "horogame/rational.hpp"

namespace horogame {

inline constexpr double kHalfPlaneDelta = 0.881373587019543;  // log(1 + sqrt(2)), the
// thin-triangle constant of the model

// Upper half-plane model. The basepoint is o = i = (0,1) throughout; all
// shadows, Busemann normalizations, and visual quantities are relative to it.

struct HPoint {
    double x = 0.0;
    double y = 1.0;
};

struct HPointQ {
    Rat x = 0;
    Rat y = 1;

    HPoint approx() const { return HPoint{to_double(x), to_double(y)}; }
};

inline HPoint hp_basepoint() { return HPoint{0.0, 1.0}; }
inline HPointQ hpq_basepoint() { return HPointQ{0, 1}; }

// d(z,w) = 2 asinh(|z-w| / (2 sqrt(y_z y_w))); stable for both tiny and large
// separations.
inline double hyp_distance(const HPoint& z, const HPoint& w) {
    if (!(z.y > 0.0) || !(w.y > 0.0)) throw std::domain_error("hyp_distance: points must have y > 0");
    double dx = z.x - w.x, dy = z.y - w.y;
    double chord = std::hypot(dx, dy);
    return 2.0 * std::asinh(chord / (2.0 * std::sqrt(z.y * w.y)));
}

// cosh d(z,w) as an exact rational, for exact comparisons between rational points
inline Rat cosh_distance_exact(const HPointQ& z, const HPointQ& w) {
    Rat dx = z.x - w.x, dy = z.y - w.y;
    return 1 + (dx * dx + dy * dy) / (2 * z.y * w.y);
}

// Boundary point of the half-plane: a real number or infinity.
struct BoundaryPoint {
    bool infinite = false;
    Rat value = 0;

    static BoundaryPoint inf() { return BoundaryPoint{true, 0}; }
    static BoundaryPoint at(Rat v) { return BoundaryPoint{false, std::move(v)}; }
};

// Unit-speed geodesic ray from o = i to a boundary endpoint.
struct GeodesicRay {
    BoundaryPoint endpoint;
};

// Exact point at arclength -log(rho) along the ray from i to the rational
// boundary point x, for rational rho in (0,1]. Closed form:
//   gamma_x(-log rho) = ( x(1-rho^2), rho(1+x^2) ) / (1 + x^2 rho^2).
// This is the strategy's probe; keeping it rational keeps the whole game loop
// exact.
inline HPointQ ray_point_at_scale(const Rat& x, const Rat& rho) {
    if (!(rho > 0 && rho <= 1)) throw std::domain_error("ray_point_at_scale: rho must be in (0,1]");
    Rat den = 1 + x * x * rho * rho;
    return HPointQ{x * (1 - rho * rho) / den, rho * (1 + x * x) / den};
}

inline HPoint geodesic_point(const GeodesicRay& ray, double t) {
    if (t < 0) throw std::domain_error("geodesic_point: t must be >= 0");
    if (ray.endpoint.infinite) return HPoint{0.0, std::exp(t)};
    double x = to_double(ray.endpoint.value);
    double rho = std::exp(-t);
    double den = 1.0 + x * x * rho * rho;
    return HPoint{x * (1.0 - rho * rho) / den, rho * (1.0 + x * x) / den};
}

// Busemann function normalized so b(i) = 0. For the ray to infinity,
// b(z) = -log y; for a finite endpoint xi, b(z) = log(|z-xi|^2 / y) - log(1+xi^2).
inline double busemann(const GeodesicRay& ray, const HPoint& z) {
    if (!(z.y > 0.0)) throw std::domain_error("busemann: y must be > 0");
    if (ray.endpoint.infinite) return -std::log(z.y);
    double xi = to_double(ray.endpoint.value);
    double dx = z.x - xi;
    return std::log((dx * dx + z.y * z.y) / z.y) - std::log1p(xi * xi);
}

// Gromov product w.r.t. o = i. Interior points use the half-sum formula.
inline double gromov_product(const HPoint& a, const HPoint& b) {
    HPoint o = hp_basepoint();
    return 0.5 * (hyp_distance(a, o) + hyp_distance(b, o) - hyp_distance(a, b));
}

// Boundary Gromov product (radial-sequence limit, exact in the half-plane):
//   e^-(x|y) = |x-y| / sqrt((1+x^2)(1+y^2)).
inline double gromov_product_boundary(const Rat& x, const Rat& y) {
    if (x == y) return std::numeric_limits<double>::infinity();
    double xd = to_double(x), yd = to_double(y);
    return -std::log(std::abs(xd - yd)) + 0.5 * (std::log1p(xd * xd) + std::log1p(yd * yd));
}

inline double visual_metric_boundary(const Rat& x, const Rat& y) {
    return std::exp(-gromov_product_boundary(x, y));
}

// Half-plane horoball tangent at a finite rational base: the euclidean disk
//   (x - xi)^2 + y^2 <= h y,
// i.e. the disk of diameter h tangent at xi. Busemann level log(h/(1+xi^2)).
struct DiskHoroball {
    Rat base = 0;
    Rat diameter = 1;

    double level() const { return std::log(to_double(diameter)) - std::log1p(to_double(base) * to_double(base)); }

    bool contains(const HPointQ& z) const {
        Rat dx = z.x - base;
        return dx * dx + z.y * z.y <= diameter * z.y;
    }
    bool contains_interior(const HPointQ& z) const {
        Rat dx = z.x - base;
        return dx * dx + z.y * z.y < diameter * z.y;
    }
};

// Does the geodesic ray from i toward boundary point x meet the open disk
// horoball? Exact rational decision. The squared distance from a point of the
// geodesic arc to the disk center is a single-harmonic function of the arc
// angle, so the minimum over the ray is resolved by a sign analysis.
inline bool ray_meets_horoball(const Rat& x, const DiskHoroball& H) {
    const Rat& p = H.base;
    const Rat& h = H.diameter;
    if (x == p) return true;  // the ray converges into the tangency point
    if (x == 0) {
        // vertical segment {0} x (0,1]: closest approach at height min(h/2, 1)
        if (h <= 2) return p * p < (h * h) / 4;
        Rat dy = 1 - h / 2;
        return p * p + dy * dy < (h * h) / 4;
    }
    if (x < 0) return ray_meets_horoball(-x, DiskHoroball{-p, h});
    // geodesic circle through i and x: center (c,0), radius^2 = r2; r^2 - c^2 = 1
    Rat c = (x * x - 1) / (2 * x);
    Rat r2 = c * c + 1;
    // D(theta) = A + B cos th + E sin th, disk center (p, h/2);
    // B = 2 r (c - p), E = -r h; min direction at cos = -B/s, sin = -E/s
    Rat S = 4 * (c - p) * (c - p) + h * h;  // (s/r)^2 where s = sqrt(B^2+E^2)
    // arc runs th in (0, th_i], cos th_i = -c/r. The global minimizer lies on
    // the arc iff cos th_min >= cos th_i, i.e. 2 r^2 (p-c) >= -c * r * sqrt(S).
    Rat lhs = 2 * r2 * (p - c);
    auto ge_coef_sqrt = [](const Rat& a, const Rat& coef, const Rat& sq) {
        // a >= coef * sqrt(sq), sq >= 0
        if (coef == 0) return a >= 0;
        if (a >= 0 && coef < 0) return true;
        if (a < 0 && coef > 0) return false;
        if (a >= 0) return a * a >= coef * coef * sq;
        return a * a <= coef * coef * sq;
    };
    bool min_on_arc = ge_coef_sqrt(lhs, -c, r2 * S);
    if (min_on_arc) {
        // min over arc = A - r sqrt(S) < (h/2)^2, A = (c-p)^2 + r^2 + h^2/4
        Rat lhs2 = (c - p) * (c - p) + r2;  // A - h^2/4, always > 0
        return lhs2 * lhs2 < r2 * S;
    }
    // minimum at the basepoint i; boundary-side limit never qualifies
    Rat dy = 1 - h / 2;
    return p * p + dy * dy < (h * h) / 4;
}

struct ShadowInterval {
    Rat lo = 0;
    Rat hi = 0;
    Rat tol = 0;  // each endpoint located to within tol

    Rat radius_about(const Rat& xi) const {
        Rat a = rat_abs(hi - xi), b = rat_abs(xi - lo);
        return a > b ? a : b;
    }
};

// Shadow of a disk horoball from o = i: the interval of boundary endpoints
// whose rays meet the open horoball, located by bisection over the exact
// ray-meets predicate. Endpoint tolerance is reported, not hidden.
inline ShadowInterval shadow_interval(const DiskHoroball& H, int tol_bits = 40) {
    Rat tol = Rat(1, BigInt(1) << tol_bits);
    auto search = [&](int dir) {
        Rat step = H.diameter;
        while (ray_meets_horoball(H.base + dir * step, H)) {
            step *= 2;
            if (step > 8) throw std::domain_error("shadow_interval: shadow unbounded (o inside horoball?)");
        }
        Rat in = 0, out = step;  // offsets from base: meets at `in`, misses at `out`
        while (out - in > tol) {
            Rat mid = (in + out) / 2;
            if (ray_meets_horoball(H.base + dir * mid, H))
                in = mid;
            else
                out = mid;
        }
        return H.base + dir * ((in + out) / 2);
    };
    ShadowInterval sh;
    sh.lo = search(-1);
    sh.hi = search(+1);
    sh.tol = tol;
    return sh;
}

}  // namespace horogame
