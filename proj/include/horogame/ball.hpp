#pragma once

#include <string>

#include "horogame/spaces.hpp"

namespace horogame {

// Closed metric ball in a declared ambient space: the currency of both games.
template <class Space>
struct Ball {
    typename Space::Point center;
    typename Space::Scalar radius;
};

// (x2,r2) <= (x1,r1)  iff  r2 + d(x1,x2) <= r1. Stronger than set containment
// in general metric spaces, equivalent to it on the line.
template <class Space>
bool is_schmidt_nested(const Space& sp, const Ball<Space>& inner, const Ball<Space>& outer) {
    return sp.nested_le(inner.radius, sp.distance(outer.center, inner.center), outer.radius);
}

template <class Space>
bool ball_contains_point(const Space& sp, const Ball<Space>& b, const typename Space::Point& p) {
    return sp.scalar_le(sp.distance(b.center, p), b.radius);
}

// d(c1,c2) > r1 + r2: every point of one closed ball avoids the other.
template <class Space>
bool balls_separated(const Space& sp, const Ball<Space>& a, const Ball<Space>& b) {
    return sp.separated_gt(sp.distance(a.center, b.center), a.radius, b.radius);
}

// inner lies in outer minus the deletion, certified by the two distance
// inequalities (nesting and separation).
template <class Space>
bool ball_in_difference(const Space& sp, const Ball<Space>& inner, const Ball<Space>& outer,
                        const Ball<Space>& deletion) {
    return is_schmidt_nested(sp, inner, outer) && balls_separated(sp, inner, deletion);
}

template <class Space>
std::string ball_str(const Space& sp, const Ball<Space>& b) {
    return "B(" + sp.point_str(b.center) + "," + sp.scalar_str(b.radius) + ")";
}

}  // namespace horogame
