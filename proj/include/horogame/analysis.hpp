#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "horogame/rational.hpp"
#include "horogame/records.hpp"
#include "horogame/spaces.hpp"

namespace horogame {

// ---------------------------------------------------------------------------
// Exact natural measure on the two-branch Cantor set (weights 1/2, 1/2).
// ---------------------------------------------------------------------------

class CantorMeasure {
  public:
    explicit CantorMeasure(Rat nu = Rat(1, 3), int max_depth = 200) : nu_(nu), max_depth_(max_depth) {}

    // mu([lo, hi]) as an exact rational
    Rat interval(const Rat& lo, const Rat& hi) const { return measure(lo, hi, 0); }
    Rat ball(const Rat& x, const Rat& rho) const { return interval(x - rho, x + rho); }

  private:
    Rat measure(const Rat& lo, const Rat& hi, int depth) const {
        if (hi <= 0 || lo >= 1 || lo > hi) return 0;
        if (lo <= 0 && hi >= 1) return 1;
        if (depth >= max_depth_) throw std::domain_error("CantorMeasure: recursion budget exhausted");
        // left child [0, nu], right child [1-nu, 1]; each carries mass 1/2
        Rat left = measure(lo / nu_, hi / nu_, depth + 1);
        Rat right = measure((lo - (1 - nu_)) / nu_, (hi - (1 - nu_)) / nu_, depth + 1);
        return (left + right) / 2;
    }

    Rat nu_;
    int max_depth_;
};

// ---------------------------------------------------------------------------
// Power-law check: mu(B(x,rho)) against rho^delta across samples and scales.
// Exponent sign follows the standard convention (positive delta); the report
// carries the flag for the sign discrepancy in the source statement.
// ---------------------------------------------------------------------------

struct PowerLawReport {
    double delta = 0;
    std::vector<double> scales;        // as doubles, for the table
    std::vector<double> per_scale_C;   // max(mu/rho^d, rho^d/mu) over samples
    double best_C = 1;                 // max over all scales
    double growth = 1;                 // per_scale_C back / front
    bool pass = false;
    std::string exponent_note = "power law implemented with exponent +delta";

    Record head_record() const {
        Record rec("power-law-report");
        rec.set("delta", delta)
            .set("scales", static_cast<long long>(scales.size()))
            .set("C", best_C)
            .set("growth", growth)
            .set("pass", pass)
            .set("note", exponent_note);
        return rec;
    }
};

using MeasureOracle = std::function<Rat(const Rat& x, const Rat& rho)>;

// pass iff the per-scale constant is stable (non-increasing spread, 5% slack)
// as the scales shrink; a wrong exponent shows geometric growth instead.
inline PowerLawReport power_law_check(const MeasureOracle& mu, double delta, const std::vector<Rat>& scales,
                                      const std::vector<Rat>& samples) {
    if (scales.empty() || samples.empty()) throw std::domain_error("power_law_check: empty scales or samples");
    PowerLawReport rep;
    rep.delta = delta;
    const double kStability = 1.05;
    bool stable = true;
    for (std::size_t k = 0; k < scales.size(); ++k) {
        double rho = to_double(scales[k]);
        double rho_d = std::pow(rho, delta);
        double worst = 0;
        for (const Rat& x : samples) {
            Rat m = mu(x, scales[k]);
            if (m == 0) throw std::domain_error("power_law_check: zero-measure ball at sample " + rat_str(x));
            double md = to_double(m);
            worst = std::max({worst, md / rho_d, rho_d / md});
        }
        rep.scales.push_back(rho);
        rep.per_scale_C.push_back(worst);
        rep.best_C = std::max(rep.best_C, worst);
        if (k > 0 && worst > rep.per_scale_C[k - 1] * kStability) stable = false;
    }
    rep.growth = rep.per_scale_C.back() / rep.per_scale_C.front();
    rep.pass = stable;
    return rep;
}

// ---------------------------------------------------------------------------
// Box-counting dimension over an interval-meets-set oracle on [0,1].
// ---------------------------------------------------------------------------

enum class Meets { yes, no, refused };

using IntervalOracle = std::function<Meets(const Rat& lo, const Rat& hi)>;

struct DimensionEstimate {
    std::string description;
    std::vector<Rat> scales;
    std::vector<long long> counts;
    double slope = 0;
    double half_width = 0;  // residual-based uncertainty of the fit

    Record record() const {
        Record rec("dimension-estimate");
        rec.set("set", description)
            .set("scales", static_cast<long long>(scales.size()))
            .set("slope", slope)
            .set("half_width", half_width);
        return rec;
    }
};

struct OlsFit {
    double slope = 0, intercept = 0, half_width = 0;
};

inline OlsFit ols_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    std::size_t n = xs.size();
    if (n < 2) throw std::domain_error("ols_fit: need at least two points");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    OlsFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss += r * r;
    }
    double dof = n > 2 ? static_cast<double>(n - 2) : 1.0;
    fit.half_width = 2.0 * std::sqrt(ss / dof / sxx);
    return fit;
}

// Counts grid cells of each scale meeting the set, then fits log N against
// log(1/rho) by least squares with the two coarsest scales dropped (transient
// boundary effects dominate there).
inline DimensionEstimate box_dimension(const IntervalOracle& meets, const std::vector<Rat>& scales,
                                       const std::string& description = "set") {
    if (scales.size() < 3) throw std::domain_error("box_dimension: need at least 3 scales");
    DimensionEstimate est;
    est.description = description;
    std::vector<Rat> sorted = scales;
    std::sort(sorted.begin(), sorted.end(), std::greater<Rat>());  // coarse -> fine
    for (const Rat& s : sorted) {
        if (!(s > 0 && s <= 1)) throw std::domain_error("box_dimension: scales must be in (0,1]");
        BigInt cells = rat_ceil(1 / s);
        long long count = 0;
        for (BigInt j = 0; j < cells; ++j) {
            Rat lo = Rat(j) * s;
            Rat hi = std::min(Rat(j + 1) * s, Rat(1));
            Meets m = meets(lo, hi);
            if (m == Meets::refused) throw std::domain_error("box_dimension: oracle refused at scale " + rat_str(s));
            if (m == Meets::yes) ++count;
        }
        est.scales.push_back(s);
        est.counts.push_back(count);
    }
    std::size_t drop = est.scales.size() >= 5 ? 2 : est.scales.size() - 3;
    std::vector<double> xs, ys;
    for (std::size_t i = drop; i < est.scales.size(); ++i) {
        xs.push_back(std::log(1.0 / to_double(est.scales[i])));
        ys.push_back(std::log(static_cast<double>(std::max(1LL, est.counts[i]))));
    }
    OlsFit fit = ols_fit(xs, ys);
    est.slope = fit.slope;
    est.half_width = fit.half_width;
    return est;
}

// ---------------------------------------------------------------------------
// Bounded-digit continued-fraction sets E_N = {x in (0,1): all partial
// quotients <= N}: exact cylinder tree with rational endpoints, driving an
// interval oracle and the dimension estimates.
// ---------------------------------------------------------------------------

struct CFCylinder {
    BigInt p_prev = 1, q_prev = 0, p = 0, q = 1;  // convergent state
    int depth = 0;

    // endpoints of the word's interval: p/q and (p + p_prev)/(q + q_prev)
    Rat lo() const {
        Rat a(p, q), b(p + p_prev, q + q_prev);
        return std::min(a, b);
    }
    Rat hi() const {
        Rat a(p, q), b(p + p_prev, q + q_prev);
        return std::max(a, b);
    }
    CFCylinder child(int digit) const {
        return CFCylinder{p, q, BigInt(digit) * p + p_prev, BigInt(digit) * q + q_prev, depth + 1};
    }
};

class BoundedDigitSet {
  public:
    BoundedDigitSet(int N, int depth_cap = 64) : N_(N), cap_(depth_cap) {
        if (N < 1) throw std::domain_error("BoundedDigitSet: N must be >= 1");
    }

    int digit_bound() const { return N_; }

    // Does [lo, hi] meet E_N? Descends the admissible cylinder tree: a cylinder
    // inside the cell certifies contact (every admissible word extends to a
    // point of E_N), a disjoint cylinder prunes. Refuses at the depth cap
    // rather than guess.
    Meets meets(const Rat& lo, const Rat& hi) const {
        if (hi < 0 || lo > 1) return Meets::no;
        bool refused = false;
        for (int d = 1; d <= N_; ++d) {
            Meets m = rec(root_child(d), lo, hi, refused);
            if (m == Meets::yes) return Meets::yes;
        }
        return refused ? Meets::refused : Meets::no;
    }

    IntervalOracle oracle() const {
        return [*this](const Rat& lo, const Rat& hi) { return meets(lo, hi); };
    }

    // all depth-k cylinder intervals, ordered by construction
    std::vector<std::pair<Rat, Rat>> cylinders(int k) const {
        std::vector<std::pair<Rat, Rat>> out;
        walk(CFCylinder{}, k, out);
        return out;
    }

  private:
    CFCylinder root_child(int digit) const { return CFCylinder{}.child(digit); }

    Meets rec(const CFCylinder& cyl, const Rat& lo, const Rat& hi, bool& refused) const {
        Rat clo = cyl.lo(), chi = cyl.hi();
        if (chi < lo || clo > hi) return Meets::no;
        if (clo >= lo && chi <= hi) return Meets::yes;
        if (cyl.depth >= cap_) {
            refused = true;
            return Meets::no;
        }
        for (int d = 1; d <= N_; ++d) {
            Meets m = rec(cyl.child(d), lo, hi, refused);
            if (m == Meets::yes) return Meets::yes;
        }
        return Meets::no;
    }

    void walk(const CFCylinder& cyl, int k, std::vector<std::pair<Rat, Rat>>& out) const {
        if (cyl.depth == k) {
            out.emplace_back(cyl.lo(), cyl.hi());
            return;
        }
        for (int d = 1; d <= N_; ++d) walk(cyl.child(d), k, out);
    }

    int N_;
    int cap_;
};

inline std::vector<Rat> dyadic_scales(int from_depth, int to_depth) {
    std::vector<Rat> s;
    for (int k = from_depth; k <= to_depth; ++k) s.push_back(Rat(1, BigInt(1) << k));
    return s;
}

inline std::vector<Rat> triadic_scales(int from_depth, int to_depth) {
    std::vector<Rat> s;
    for (int k = from_depth; k <= to_depth; ++k) s.push_back(rat_pow(Rat(1, 3), k));
    return s;
}

inline DimensionEstimate dimension_of_ba_digits(int N, int from_depth, int to_depth) {
    if (N < 2) throw std::domain_error("dimension_of_ba_digits: N must be >= 2");
    BoundedDigitSet set(N);
    return box_dimension(set.oracle(), dyadic_scales(from_depth, to_depth),
                         "cf-digits<=" + std::to_string(N));
}

// Interval oracle for the two-branch Cantor set (exact cylinder descent).
inline IntervalOracle cantor_interval_oracle(Rat nu = Rat(1, 3), int depth_cap = 64) {
    struct Rec {
        Rat nu;
        int cap;
        Meets query(const Rat& lo, const Rat& hi, const Rat& a, const Rat& len, int depth) const {
            Rat b = a + len;
            if (b < lo || a > hi) return Meets::no;
            // cylinder endpoints belong to the set, so edge contact is contact
            if (b == lo || a == hi) return Meets::yes;
            if (a >= lo && b <= hi) return Meets::yes;
            if (depth >= cap) return Meets::refused;
            Meets l = query(lo, hi, a, len * nu, depth + 1);
            if (l == Meets::yes) return l;
            Meets r = query(lo, hi, a + len * (1 - nu), len * nu, depth + 1);
            if (l == Meets::refused || r == Meets::refused) return Meets::refused;
            return r;
        }
    };
    Rec rec{nu, depth_cap};
    return [rec](const Rat& lo, const Rat& hi) { return rec.query(lo, hi, 0, 1, 0); };
}

}  // namespace horogame
