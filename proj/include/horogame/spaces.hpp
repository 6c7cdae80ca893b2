#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "horogame/halfplane.hpp"
#include "horogame/rational.hpp"

namespace horogame {

// ---------------------------------------------------------------------------
// Playfields on the rational line: the closed subset E on which game centers
// must lie. Candidate enumeration backs all existential searches, which keeps
// them decidable at the declared resolution.
// ---------------------------------------------------------------------------

struct LinePlayfield {
    std::string name = "window";
    std::function<bool(const Rat&)> contains_fn;
    // ascending candidates of E within [lo, hi]
    std::function<std::vector<Rat>(const Rat&, const Rat&)> candidates_fn;
    // canonical sample points of E at the construction depth
    std::function<std::vector<Rat>()> samples_fn;
};

// Two-branch Cantor set on [0,1]: pieces z -> nu*z and z -> 1-nu+nu*z,
// membership decided at a declared construction depth. Middle thirds is nu=1/3.
struct CantorOracle {
    Rat nu = Rat(1, 3);
    int depth = 10;

    bool contains(const Rat& x) const {
        if (x < 0 || x > 1) return false;
        Rat z = x;
        for (int k = 0; k < depth; ++k) {
            if (z <= nu) {
                z /= nu;
            } else if (z >= 1 - nu) {
                z = (z - (1 - nu)) / nu;
            } else {
                return false;
            }
        }
        return true;
    }

    // Left-to-right endpoints of all depth-`depth` cylinders. Both endpoints of
    // every cylinder belong to the set, so they are safe witness candidates.
    std::vector<Rat> endpoints() const {
        std::vector<Rat> pts;
        Rat len = rat_pow(nu, depth);
        std::vector<Rat> lefts{Rat(0)};
        for (int k = 0; k < depth; ++k) {
            std::vector<Rat> next;
            next.reserve(lefts.size() * 2);
            Rat scale = rat_pow(nu, k);
            for (const Rat& a : lefts) {
                next.push_back(a);
                next.push_back(a + scale * (1 - nu));
            }
            lefts = std::move(next);
        }
        pts.reserve(lefts.size() * 2);
        for (const Rat& a : lefts) {
            pts.push_back(a);
            pts.push_back(a + len);
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        return pts;
    }
};

inline LinePlayfield window_playfield(Rat lo, Rat hi) {
    LinePlayfield pf;
    pf.name = "window";
    pf.contains_fn = [lo, hi](const Rat& x) { return lo <= x && x <= hi; };
    pf.candidates_fn = [lo, hi](const Rat& a, const Rat& b) {
        Rat a2 = std::max(a, lo), b2 = std::min(b, hi);
        std::vector<Rat> out;
        if (a2 > b2) return out;
        const int kSteps = 64;
        Rat step = (b2 - a2) / kSteps;
        if (step == 0) {
            out.push_back(a2);
            return out;
        }
        for (int i = 0; i <= kSteps; ++i) out.push_back(a2 + step * i);
        return out;
    };
    pf.samples_fn = [lo, hi]() {
        std::vector<Rat> out;
        const int kDepth = 6;
        Rat w = hi - lo;
        for (int i = 0; i < (1 << kDepth); ++i)
            out.push_back(lo + w * Rat(2 * i + 1, 2 << kDepth));
        return out;
    };
    return pf;
}

inline LinePlayfield cantor_playfield(const CantorOracle& oracle) {
    auto shared = std::make_shared<CantorOracle>(oracle);
    auto pts = std::make_shared<std::vector<Rat>>(shared->endpoints());
    LinePlayfield pf;
    pf.name = "cantor";
    pf.contains_fn = [shared](const Rat& x) { return shared->contains(x); };
    pf.candidates_fn = [pts](const Rat& a, const Rat& b) {
        auto lo = std::lower_bound(pts->begin(), pts->end(), a);
        auto hi = std::upper_bound(pts->begin(), pts->end(), b);
        return std::vector<Rat>(lo, hi);
    };
    pf.samples_fn = [pts]() { return *pts; };
    return pf;
}

inline LinePlayfield point_playfield(Rat p) {
    LinePlayfield pf;
    pf.name = "point";
    pf.contains_fn = [p](const Rat& x) { return x == p; };
    pf.candidates_fn = [p](const Rat& a, const Rat& b) {
        std::vector<Rat> out;
        if (a <= p && p <= b) out.push_back(p);
        return out;
    };
    pf.samples_fn = [p]() { return std::vector<Rat>{p}; };
    return pf;
}

// ---------------------------------------------------------------------------
// LineSpace: the rational line with the euclidean metric, restricted to a
// window. Covers the real-window, cantor, and hyperbolic-boundary kinds; the
// latter carries the visual-metric constants of the bulk space behind it.
// ---------------------------------------------------------------------------

struct LineSpace {
    using Point = Rat;
    using Scalar = Rat;
    using Factor = Rat;

    Rat lo = 0, hi = 1;
    LinePlayfield field = window_playfield(0, 1);
    double delta = 0.0;       // hyperbolicity of the bulk space (0 = none declared)
    double visual_C = 2.0;
    double visual_a = 2.718281828459045;

    Scalar distance(const Point& p, const Point& q) const { return rat_abs(p - q); }
    bool in_field(const Point& p) const { return field.contains_fn(p); }
    bool in_window(const Point& p) const { return lo <= p && p <= hi; }

    Scalar scale(const Scalar& r, const Factor& f) const { return r * f; }
    static bool scalar_positive(const Scalar& s) { return s > 0; }
    static bool scalar_le(const Scalar& a, const Scalar& b) { return a <= b; }
    static bool scalar_lt(const Scalar& a, const Scalar& b) { return a < b; }
    // inner + dist <= outer  (the Schmidt nesting inequality)
    static bool nested_le(const Scalar& inner, const Scalar& dist, const Scalar& outer) {
        return inner + dist <= outer;
    }
    // dist > r1 + r2  (certified disjointness of closed balls)
    static bool separated_gt(const Scalar& dist, const Scalar& r1, const Scalar& r2) {
        return dist > r1 + r2;
    }
    static double scalar_value(const Scalar& s) { return to_double(s); }
    static std::string point_str(const Point& p) { return rat_str(p); }
    static std::string scalar_str(const Scalar& s) { return rat_str(s); }
    static std::optional<Point> parse_point(const std::string& s) { return parse_rat(s); }
    static std::optional<Scalar> parse_scalar(const std::string& s) { return parse_rat(s); }

    std::vector<Point> candidates(const Point& center, const Scalar& radius) const {
        return field.candidates_fn(center - radius, center + radius);
    }
    std::vector<Point> sample_points() const { return field.samples_fn(); }
};

inline LineSpace real_window_space(Rat lo, Rat hi) {
    LineSpace s;
    s.lo = lo;
    s.hi = hi;
    s.field = window_playfield(lo, hi);
    s.delta = 0.0;
    return s;
}

inline LineSpace boundary_window_space(Rat lo, Rat hi) {
    LineSpace s = real_window_space(lo, hi);
    s.delta = kHalfPlaneDelta;
    s.visual_C = 2.0;
    return s;
}

inline LineSpace cantor_space(Rat nu, int depth) {
    if (!(nu > 0 && nu <= Rat(1, 2))) throw std::domain_error("cantor contraction must be in (0,1/2]");
    LineSpace s;
    s.lo = 0;
    s.hi = 1;
    s.field = cantor_playfield(CantorOracle{nu, depth});
    return s;
}

// ---------------------------------------------------------------------------
// TreeBoundary: boundary of the rooted b-ary tree at a finite depth. Points
// are full-depth digit words; the visual metric is a^-(common prefix). All
// game arithmetic runs on integer exponents, which is exact for any base
// a >= 2 (the default base is e).
// ---------------------------------------------------------------------------

struct TreeLevel {
    int exp = 0;        // value a^-exp when !zero
    bool zero = false;  // exact zero (identical points)

    static TreeLevel of(int e) { return TreeLevel{e, false}; }
    static TreeLevel zero_level() { return TreeLevel{0, true}; }
};

struct TreeBase {
    // rational base, or the transcendental e (kept symbolic so that exponent
    // comparisons never hit a spurious equality)
    bool is_e = true;
    Rat value = 0;

    double as_double() const { return is_e ? 2.718281828459045235 : to_double(value); }
    bool is_two() const { return !is_e && value == 2; }
    bool at_least_two() const { return is_e || value >= 2; }
};

struct TreeBoundary {
    using Point = std::string;  // digits '0'.. ('0'+b-1), length == depth
    using Scalar = TreeLevel;
    using Factor = int;  // multiply by a^-f

    int branching = 2;
    int depth = 8;
    TreeBase base{};

    TreeBoundary() = default;
    TreeBoundary(int b, int d, TreeBase a = TreeBase{}) : branching(b), depth(d), base(a) {
        if (b < 2 || b > 9) throw std::domain_error("tree branching must be in [2,9]");
        if (!base.at_least_two())
            throw std::domain_error("tree visual base must be >= 2 for exact level arithmetic");
    }

    bool valid_word(const Point& w) const {
        if (static_cast<int>(w.size()) != depth) return false;
        for (char c : w)
            if (c < '0' || c >= '0' + branching) return false;
        return true;
    }

    int prefix_len(const Point& p, const Point& q) const {
        int n = static_cast<int>(std::min(p.size(), q.size()));
        int k = 0;
        while (k < n && p[k] == q[k]) ++k;
        return k;
    }

    Scalar distance(const Point& p, const Point& q) const {
        int k = prefix_len(p, q);
        if (k >= depth && p == q) return TreeLevel::zero_level();
        return TreeLevel::of(k);
    }

    bool in_field(const Point& p) const { return valid_word(p); }

    Scalar scale(const Scalar& r, Factor f) const {
        if (r.zero) return r;
        return TreeLevel::of(r.exp + f);
    }

    static bool scalar_positive(const Scalar& s) { return !s.zero; }
    // a^-a_.exp <= a^-b_.exp
    static bool scalar_le(const Scalar& a_, const Scalar& b_) {
        if (a_.zero) return true;
        if (b_.zero) return false;
        return a_.exp >= b_.exp;
    }
    static bool scalar_lt(const Scalar& a_, const Scalar& b_) {
        return scalar_le(a_, b_) && !(a_.zero == b_.zero && (a_.zero || a_.exp == b_.exp));
    }

    // sign of (a^-i + a^-j) - a^-k for a >= 2; exponent case analysis
    int sum_vs_single(const Scalar& x, const Scalar& y, const Scalar& s) const {
        if (x.zero && y.zero) return s.zero ? 0 : -1;
        if (s.zero) return 1;
        if (x.zero) return y.exp == s.exp ? 0 : (y.exp < s.exp ? 1 : -1);
        if (y.zero) return x.exp == s.exp ? 0 : (x.exp < s.exp ? 1 : -1);
        int m = std::min(x.exp, y.exp), M = std::max(x.exp, y.exp);
        if (s.exp >= m) return 1;       // sum > a^-m >= a^-s
        if (s.exp <= m - 2) return -1;  // a^-s >= a^2 a^-m > 2 a^-m >= sum
        // s.exp == m-1: sign of (1 + a^(m-M)) - a
        if (base.is_e) return -1;  // e > 2 >= 1 + a^(m-M), never equal
        Rat single = base.value;
        Rat sum = 1 + (m == M ? Rat(1) : rat_pow(base.value, -(M - m)));
        return sum == single ? 0 : (sum > single ? 1 : -1);
    }

    bool nested_le(const Scalar& inner, const Scalar& dist, const Scalar& outer) const {
        return sum_vs_single(inner, dist, outer) <= 0;
    }
    bool separated_gt(const Scalar& dist, const Scalar& r1, const Scalar& r2) const {
        if (dist.zero) return false;
        return sum_vs_single(r1, r2, dist) < 0;
    }

    double scalar_value(const Scalar& s) const {
        if (s.zero) return 0.0;
        return std::pow(base.as_double(), -static_cast<double>(s.exp));
    }
    static std::string point_str(const Point& p) { return p; }
    std::string scalar_str(const Scalar& s) const {
        if (s.zero) return "0";
        return "a^-" + std::to_string(s.exp);
    }
    std::optional<Point> parse_point(const std::string& s) const {
        return valid_word(s) ? std::optional<Point>(s) : std::nullopt;
    }

    std::vector<Point> all_words() const {
        std::vector<Point> out;
        Point w(static_cast<size_t>(depth), '0');
        while (true) {
            out.push_back(w);
            int i = depth - 1;
            while (i >= 0 && w[i] == '0' + branching - 1) w[i--] = '0';
            if (i < 0) break;
            ++w[i];
        }
        return out;
    }

    // all words in the closed ball B(center, a^-k): same prefix of length k
    std::vector<Point> candidates(const Point& center, const Scalar& radius) const {
        if (radius.zero) return {center};
        int k = std::min(radius.exp, depth);
        std::string prefix = center.substr(0, k);
        std::vector<Point> out;
        int tail = depth - k;
        std::string suffix(static_cast<size_t>(tail), '0');
        while (true) {
            out.push_back(prefix + suffix);
            int i = tail - 1;
            while (i >= 0 && suffix[i] == '0' + branching - 1) suffix[i--] = '0';
            if (i < 0) break;
            ++suffix[i];
        }
        return out;
    }
    std::vector<Point> sample_points() const { return all_words(); }
};

// ---------------------------------------------------------------------------
// ProductSpace: E x E with the max metric. Scalar arithmetic is inherited.
// ---------------------------------------------------------------------------

template <class S>
struct ProductSpace {
    using Point = std::pair<typename S::Point, typename S::Point>;
    using Scalar = typename S::Scalar;
    using Factor = typename S::Factor;

    S base;

    ProductSpace() = default;
    explicit ProductSpace(S b) : base(std::move(b)) {}

    Scalar distance(const Point& p, const Point& q) const {
        Scalar a = base.distance(p.first, q.first);
        Scalar b = base.distance(p.second, q.second);
        return base.scalar_le(a, b) ? b : a;
    }
    bool in_field(const Point& p) const { return base.in_field(p.first) && base.in_field(p.second); }
    Scalar scale(const Scalar& r, const Factor& f) const { return base.scale(r, f); }
    bool scalar_positive(const Scalar& s) const { return base.scalar_positive(s); }
    bool scalar_le(const Scalar& a, const Scalar& b) const { return base.scalar_le(a, b); }
    bool scalar_lt(const Scalar& a, const Scalar& b) const { return base.scalar_lt(a, b); }
    bool nested_le(const Scalar& i, const Scalar& d, const Scalar& o) const { return base.nested_le(i, d, o); }
    bool separated_gt(const Scalar& d, const Scalar& r1, const Scalar& r2) const {
        return base.separated_gt(d, r1, r2);
    }
    double scalar_value(const Scalar& s) const { return base.scalar_value(s); }
    std::string point_str(const Point& p) const {
        return "(" + base.point_str(p.first) + "," + base.point_str(p.second) + ")";
    }
    std::string scalar_str(const Scalar& s) const { return base.scalar_str(s); }
};

}  // namespace horogame
