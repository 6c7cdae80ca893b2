#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "horogame/rational.hpp"
#include "horogame/records.hpp"

namespace horogame {

// ---------------------------------------------------------------------------
// Exact real inputs for the BA verifier: rationals, quadratic surds
// a + b sqrt(D), and precision-tracked intervals. Surd arithmetic stays exact
// under the affine and reciprocal steps of the continued-fraction algorithm.
// ---------------------------------------------------------------------------

struct Surd {
    Rat a = 0;
    Rat b = 0;
    BigInt D = 0;  // nonnegative, not a perfect square unless b == 0

    double value() const { return to_double(a) + to_double(b) * std::sqrt(static_cast<double>(D)); }

    // sign of a + b sqrt(D)
    int sign() const {
        if (b == 0) return a == 0 ? 0 : (a > 0 ? 1 : -1);
        if (a == 0) return b > 0 ? 1 : -1;
        if (a > 0 && b > 0) return 1;
        if (a < 0 && b < 0) return -1;
        Rat lhs = a * a, rhs = b * b * Rat(D);
        if (lhs == rhs) return 0;
        bool a_bigger = lhs > rhs;
        if (a > 0) return a_bigger ? 1 : -1;  // b < 0
        return a_bigger ? -1 : 1;             // a < 0, b > 0
    }

    Surd operator-(const Rat& r) const { return Surd{a - r, b, D}; }
    Surd operator+(const Rat& r) const { return Surd{a + r, b, D}; }
    Surd scale(const Rat& r) const { return Surd{a * r, b * r, D}; }
    Surd reciprocal() const {
        Rat den = a * a - b * b * Rat(D);
        if (den == 0) throw std::domain_error("surd reciprocal of zero");
        return Surd{a / den, -b / den, D};
    }

    BigInt floor() const {
        BigInt n = BigInt(std::floor(value()));
        // fix the double estimate exactly
        while ((*this - Rat(n)).sign() < 0) --n;
        while ((*this - Rat(n + 1)).sign() >= 0) ++n;
        return n;
    }
};

inline Surd golden_fractional() { return Surd{Rat(-1, 2), Rat(1, 2), 5}; }  // (sqrt 5 - 1)/2

struct IntervalReal {
    Rat lo = 0;
    Rat hi = 0;  // lo <= x <= hi

    static IntervalReal from_decimal(const std::string& s, int extra_ulp = 1) {
        Rat v = parse_rat_or_throw(s, "decimal");
        auto dot = s.find('.');
        long places = dot == std::string::npos ? 0 : static_cast<long>(s.size() - dot - 1);
        Rat ulp = rat_pow(Rat(1, 10), static_cast<int>(places)) * extra_ulp;
        return IntervalReal{v - ulp, v + ulp};
    }
};

// ---------------------------------------------------------------------------
// Continued fractions. For x in (0,1) the result lists partial quotients of
// x = 1/(a1 + 1/(a2 + ...)). Rational inputs terminate exactly; surds go on
// for as many digits as asked; intervals emit only digits certified by both
// endpoints and mark the truncation rather than guess.
// ---------------------------------------------------------------------------

struct CFResult {
    std::vector<BigInt> digits;
    bool terminated = false;  // exact rational ran out
    bool truncated = false;   // interval precision exhausted before n digits
};

inline CFResult continued_fraction(Rat x, int n) {
    if (!(x > 0 && x < 1)) throw std::domain_error("continued_fraction: x must be in (0,1)");
    CFResult res;
    for (int i = 0; i < n; ++i) {
        if (x == 0) {
            res.terminated = true;
            break;
        }
        Rat inv = 1 / x;
        BigInt d = rat_floor(inv);
        res.digits.push_back(d);
        x = inv - Rat(d);
    }
    return res;
}

inline CFResult continued_fraction(Surd x, int n) {
    if (x.sign() <= 0 || (x - Rat(1)).sign() >= 0)
        throw std::domain_error("continued_fraction: x must be in (0,1)");
    CFResult res;
    for (int i = 0; i < n; ++i) {
        if (x.sign() == 0) {
            res.terminated = true;
            break;
        }
        Surd inv = x.reciprocal();
        BigInt d = inv.floor();
        res.digits.push_back(d);
        x = inv - Rat(d);
    }
    return res;
}

inline CFResult continued_fraction(IntervalReal x, int n) {
    if (!(x.lo > 0 && x.hi < 1)) throw std::domain_error("continued_fraction: interval must be in (0,1)");
    CFResult res;
    for (int i = 0; i < n; ++i) {
        if (x.lo <= 0) {
            res.truncated = true;  // zero inside the interval: cannot certify more
            break;
        }
        Rat inv_lo = 1 / x.hi, inv_hi = 1 / x.lo;
        BigInt d_lo = rat_floor(inv_lo), d_hi = rat_floor(inv_hi);
        if (d_lo != d_hi) {
            res.truncated = true;
            break;
        }
        res.digits.push_back(d_lo);
        x = IntervalReal{inv_lo - Rat(d_lo), inv_hi - Rat(d_lo)};
        if (x.lo > x.hi) std::swap(x.lo, x.hi);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Ford-instance BA verification: does q^2 |x - p/q| > s hold for every reduced
// p/q with q <= qmax? Exact comparisons throughout; a violation is data, not
// an error.
// ---------------------------------------------------------------------------

struct BACounterexample {
    BigInt p, q;
    double margin;  // q^2 |x - p/q|
};

struct BAWitness {
    double s = 0;
    unsigned qmax = 0;
    double min_margin = 0;  // over the verified range
    BigInt worst_p = 0, worst_q = 1;
    bool verified = false;
};

namespace detail {

// exact margin comparison: sign of q^2 |x - p/q| - s, plus a double value
template <class Real>
struct MarginOps;

template <>
struct MarginOps<Rat> {
    static int compare(const Rat& x, const BigInt& p, const BigInt& q, const Rat& s, double* val) {
        Rat diff = rat_abs(x - Rat(p, q));
        Rat m = diff * q * q;
        if (val) *val = to_double(m);
        return m == s ? 0 : (m > s ? 1 : -1);
    }
    static BigInt floor_mul(const Rat& x, const BigInt& q) { return rat_floor(x * q); }
};

template <>
struct MarginOps<Surd> {
    static int compare(const Surd& x, const BigInt& p, const BigInt& q, const Rat& s, double* val) {
        Surd diff = x - Rat(p, q);
        if (diff.sign() < 0) diff = Surd{-diff.a, -diff.b, diff.D};
        Surd m = diff.scale(Rat(q * q));
        if (val) *val = m.value();
        return (m - s).sign();
    }
    static BigInt floor_mul(const Surd& x, const BigInt& q) { return x.scale(Rat(q)).floor(); }
};

template <>
struct MarginOps<IntervalReal> {
    // conservative: returns +1 only if certainly > s, -1 only if certainly < s,
    // 0 when the interval straddles s (treated as "cannot certify": violation)
    static int compare(const IntervalReal& x, const BigInt& p, const BigInt& q, const Rat& s, double* val) {
        Rat pq(p, q);
        Rat lo = x.lo - pq, hi = x.hi - pq;
        Rat alo, ahi;
        if (lo >= 0) {
            alo = lo;
            ahi = hi;
        } else if (hi <= 0) {
            alo = -hi;
            ahi = -lo;
        } else {
            alo = 0;
            ahi = std::max(Rat(-lo), hi);
        }
        Rat q2(q * q);
        if (val) *val = to_double((alo + ahi) / 2 * q2);
        if (alo * q2 > s) return 1;
        if (ahi * q2 < s) return -1;
        return 0;
    }
    static BigInt floor_mul(const IntervalReal& x, const BigInt& q) { return rat_floor(x.lo * q); }
};

}  // namespace detail

namespace detail {

// reduce to the fractional part; margins are invariant under integer shifts
inline BigInt split_integer_part(Rat& x) {
    BigInt n = rat_floor(x);
    x -= Rat(n);
    return n;
}
inline BigInt split_integer_part(Surd& x) {
    BigInt n = x.floor();
    x = x - Rat(n);
    return n;
}
inline BigInt split_integer_part(IntervalReal& x) {
    BigInt n = rat_floor(x.lo);
    x.lo -= Rat(n);
    x.hi -= Rat(n);
    return n;
}

// incremental digit stream: only as many partial quotients as the scan needs
template <class Real>
struct DigitStream;

template <>
struct DigitStream<Rat> {
    Rat rem;
    explicit DigitStream(const Rat& x) : rem(x) {}
    std::optional<BigInt> next() {
        if (rem == 0) return std::nullopt;
        Rat inv = 1 / rem;
        BigInt d = rat_floor(inv);
        rem = inv - Rat(d);
        return d;
    }
};

template <>
struct DigitStream<Surd> {
    Surd rem;
    explicit DigitStream(const Surd& x) : rem(x) {}
    std::optional<BigInt> next() {
        if (rem.sign() == 0) return std::nullopt;
        Surd inv = rem.reciprocal();
        BigInt d = inv.floor();
        rem = inv - Rat(d);
        return d;
    }
};

template <>
struct DigitStream<IntervalReal> {
    IntervalReal rem;
    bool exhausted = false;
    explicit DigitStream(const IntervalReal& x) : rem(x) {}
    std::optional<BigInt> next() {
        if (exhausted || rem.lo <= 0) {
            exhausted = true;
            return std::nullopt;
        }
        Rat inv_lo = 1 / rem.hi, inv_hi = 1 / rem.lo;
        BigInt d_lo = rat_floor(inv_lo), d_hi = rat_floor(inv_hi);
        if (d_lo != d_hi) {
            exhausted = true;
            return std::nullopt;
        }
        rem = IntervalReal{inv_lo - Rat(d_lo), inv_hi - Rat(d_lo)};
        return d_lo;
    }
    bool certain_end() const { return !exhausted; }
};

}  // namespace detail

// Brute-force scan over every q <= qmax: independent oracle for the
// semiconvergent scan below.
template <class Real>
std::optional<BACounterexample> verify_ba_bruteforce(const Real& x, const Rat& s, unsigned qmax,
                                                     BAWitness* witness = nullptr) {
    using Ops = detail::MarginOps<Real>;
    double best = -1;
    BigInt bp = 0, bq = 1;
    for (unsigned q = 1; q <= qmax; ++q) {
        BigInt Q(q);
        BigInt base = Ops::floor_mul(x, Q);
        for (BigInt p = base - 1; p <= base + 2; ++p) {
            if (big_gcd(p, Q) != 1) continue;
            double val = 0;
            int cmp = Ops::compare(x, p, Q, s, &val);
            if (cmp <= 0) return BACounterexample{p, Q, val};
            if (best < 0 || val < best) {
                best = val;
                bp = p;
                bq = Q;
            }
        }
    }
    if (witness) {
        witness->s = to_double(s);
        witness->qmax = qmax;
        witness->min_margin = best;
        witness->worst_p = bp;
        witness->worst_q = bq;
        witness->verified = true;
    }
    return std::nullopt;
}

// Fast path: only semiconvergents can realize the minimum of q^2 |x - p/q|
// over q <= qmax, so the scan is linear in the continued fraction rather than
// quadratic in qmax.
template <class Real>
std::optional<BACounterexample> verify_ba_ford(Real x, const Rat& s, unsigned qmax,
                                               BAWitness* witness = nullptr) {
    using Ops = detail::MarginOps<Real>;
    BigInt shift = detail::split_integer_part(x);
    auto shifted = [&](std::optional<BACounterexample> c) {
        if (c) c->p += shift * c->q;
        return c;
    };
    double best = -1;
    BigInt bp = 0, bq = 1;
    auto consider = [&](const BigInt& p, const BigInt& q) -> std::optional<BACounterexample> {
        if (q < 1 || q > BigInt(qmax)) return std::nullopt;
        if (big_gcd(p, q) != 1) return std::nullopt;
        double val = 0;
        int cmp = Ops::compare(x, p, q, s, &val);
        if (cmp <= 0) return BACounterexample{p, q, val};
        if (best < 0 || val < best) {
            best = val;
            bp = p;
            bq = q;
        }
        return std::nullopt;
    };
    if (auto c = consider(0, 1)) return shifted(c);  // covers integer x too
    if (auto c = consider(1, 1)) return shifted(c);
    bool is_integer = false;
    if constexpr (std::is_same_v<Real, Rat>) is_integer = (x == 0);
    if constexpr (std::is_same_v<Real, Surd>) is_integer = (x.sign() == 0);
    bool range_covered = is_integer;
    if (!is_integer) {
        detail::DigitStream<Real> digits(x);
        BigInt pk1 = 1, qk1 = 0, pk = 0, qk = 1;  // convergents of x in (0,1)
        while (qk <= BigInt(qmax)) {
            auto a = digits.next();
            if (!a) {
                // rational terminated (or interval precision ran out below)
                range_covered = true;
                if constexpr (std::is_same_v<Real, IntervalReal>) {
                    if (digits.exhausted && !(qk > BigInt(qmax)))
                        throw std::domain_error(
                            "verify_ba_ford: interval precision exhausted before qmax covered");
                }
                break;
            }
            // semiconvergents (pk1 + t pk) / (qk1 + t qk), t = 1..a
            for (BigInt t = 1; t <= *a; ++t) {
                BigInt p = pk1 + t * pk, q = qk1 + t * qk;
                if (q > BigInt(qmax)) break;
                if (auto c = consider(p, q)) return shifted(c);
            }
            BigInt p = pk1 + *a * pk, q = qk1 + *a * qk;
            pk1 = pk;
            qk1 = qk;
            pk = p;
            qk = q;
        }
        if (qk > BigInt(qmax)) range_covered = true;
    }
    if (!range_covered)
        throw std::domain_error("verify_ba_ford: digits exhausted before qmax covered");
    if (witness) {
        witness->s = to_double(s);
        witness->qmax = qmax;
        witness->min_margin = best;
        witness->worst_p = bp + shift * bq;
        witness->worst_q = bq;
        witness->verified = true;
    }
    return std::nullopt;
}

inline Record ba_witness_record(const BAWitness& w) {
    Record rec("ba-witness");
    rec.set("s", w.s)
        .set("qmax", static_cast<long long>(w.qmax))
        .set("min_margin", w.min_margin)
        .set("worst_p", w.worst_p.str())
        .set("worst_q", w.worst_q.str())
        .set("verified", w.verified);
    return rec;
}

}  // namespace horogame
