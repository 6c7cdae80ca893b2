#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "horogame/halfplane.hpp"
#include "horogame/records.hpp"
#include "horogame/spaces.hpp"

namespace horogame {

// ---------------------------------------------------------------------------
// Tree horoballs. A horoball based at boundary word xi with Busemann level
// -e (e >= 0) consists of the interior points (w, t) with t - 2(w|xi) <= -e.
// Its shadow from the root is exactly the prefix cylinder B(xi, a^-e).
// ---------------------------------------------------------------------------

struct TreeInteriorPoint {
    std::string prefix;  // the point at depth prefix.size() along the ray to any
                         // word extending prefix
    int depth() const { return static_cast<int>(prefix.size()); }
};

struct TreeHoroball {
    std::string base;    // full-depth boundary word
    int shadow_exp = 0;  // Busemann level = -shadow_exp; shadow radius a^-shadow_exp

    int level() const { return -shadow_exp; }
};

inline int tree_overlap(const std::string& a, const std::string& b) {
    int n = static_cast<int>(std::min(a.size(), b.size()));
    int k = 0;
    while (k < n && a[k] == b[k]) ++k;
    return k;
}

inline int tree_busemann(const TreeHoroball& H, const TreeInteriorPoint& z) {
    return z.depth() - 2 * tree_overlap(z.prefix, H.base);
}

inline bool tree_horoball_contains(const TreeHoroball& H, const TreeInteriorPoint& z) {
    return tree_busemann(H, z) <= H.level();
}

// Shadow is exact: B(base, a^-shadow_exp).
inline TreeLevel tree_shadow_radius(const TreeHoroball& H) { return TreeLevel::of(H.shadow_exp); }

// Boundary word in the shadow iff some point of its ray lies in the horoball;
// the Busemann minimum along the ray to eta is -(eta|xi).
inline bool tree_shadow_contains(const TreeHoroball& H, const std::string& eta) {
    return tree_overlap(eta, H.base) >= H.shadow_exp;
}

inline TreeHoroball scale_tree_horoball(const TreeHoroball& H, int factor_exp) {
    if (factor_exp < 1) throw std::domain_error("scale_tree_horoball: factor must be a^-k, k >= 1");
    return TreeHoroball{H.base, H.shadow_exp + factor_exp};
}

inline TreeHoroball tree_horoball_from_boundary_ball(const std::string& xi, int radius_exp) {
    if (radius_exp < 0) throw std::domain_error("tree horoball: radius exponent must be >= 0");
    return TreeHoroball{xi, radius_exp};
}

inline bool tree_horoballs_disjoint(const TreeHoroball& A, const TreeHoroball& B) {
    return 2 * tree_overlap(A.base, B.base) < A.shadow_exp + B.shadow_exp;
}

// ---------------------------------------------------------------------------
// Half-plane horoballs: shadow-radius computation and rescaling. The shadow
// radius is the infimum R with Sh(H) inside B(base, R); it has no rational
// closed form, so it is located by bisection over the exact ray predicate and
// carries its tolerance.
// ---------------------------------------------------------------------------

struct ShadowInfo {
    ShadowInterval interval;
    Rat radius;
    Rat tol;
};

inline ShadowInfo horoball_shadow(const DiskHoroball& H, int tol_bits = 40) {
    ShadowInterval iv = shadow_interval(H, tol_bits);
    return ShadowInfo{iv, iv.radius_about(H.base), iv.tol};
}

// Smallest target first: is the shadow radius of diameter-h at base xi >= t?
// Equivalent to one of the rays at offset t still meeting the horoball.
inline bool shadow_radius_at_least(const Rat& xi, const Rat& h, const Rat& t) {
    DiskHoroball H{xi, h};
    return ray_meets_horoball(xi + t, H) || ray_meets_horoball(xi - t, H);
}

// sH: the horoball at the same base whose shadow radius is s * R(H).
inline DiskHoroball scale_horoball(const DiskHoroball& H, const Rat& s, int tol_bits = 40) {
    if (!(s > 0 && s < 1)) throw std::domain_error("scale_horoball: factor must be in (0,1)");
    Rat target = horoball_shadow(H, tol_bits).radius * s;
    Rat lo = 0, hi = H.diameter;  // shadow radius is monotone in the diameter
    Rat tol = H.diameter / (BigInt(1) << tol_bits);
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        if (shadow_radius_at_least(H.base, mid, target))
            hi = mid;
        else
            lo = mid;
    }
    return DiskHoroball{H.base, (lo + hi) / 2};
}

// Horoball assigned to a boundary ball B(xi, r): Busemann level log r, which
// in the half-plane is the tangent disk of euclidean diameter r (1 + xi^2).
inline DiskHoroball horoball_from_boundary_ball(const Rat& xi, const Rat& r) {
    if (!(r > 0)) throw std::domain_error("horoball_from_boundary_ball: r must be > 0");
    return DiskHoroball{xi, r * (1 + xi * xi)};
}

inline Record horoball_record(const DiskHoroball& H, const std::optional<ShadowInfo>& sh = std::nullopt) {
    Record rec("horoball");
    rec.set("base", rat_str(H.base)).set("diameter", rat_str(H.diameter)).set("level", H.level());
    if (sh) {
        rec.set("shadow_radius", to_double(sh->radius));
        rec.set("shadow_tol", to_double(sh->tol));
    }
    return rec;
}

inline Record horoball_record(const TreeHoroball& H) {
    Record rec("tree-horoball");
    rec.set("base", H.base).set("level", -H.shadow_exp).set("shadow_radius_exp", H.shadow_exp);
    return rec;
}

}  // namespace horogame
