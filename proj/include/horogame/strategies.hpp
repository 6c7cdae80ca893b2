#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "horogame/game.hpp"
#include "horogame/perfectness.hpp"
#include "horogame/rng.hpp"

namespace horogame {

// ---------------------------------------------------------------------------
// Stock strategies on LineSpace.
// ---------------------------------------------------------------------------

// Alice or Bob: always reply concentric with the forced/minimal radius.
inline Strategy<LineSpace> concentric_alice() {
    Strategy<LineSpace> s;
    s.name = "concentric";
    s.move = [](const GameParams<LineSpace>& P, const Transcript<LineSpace>& T,
                int) -> std::optional<Ball<LineSpace>> {
        auto bob = T.last_bob_ball();
        if (!bob) return std::nullopt;
        Rat r = P.variant == Variant::schmidt ? P.space.scale(bob->radius, P.alpha)
                                              : P.space.scale(bob->radius, P.beta);
        return Ball<LineSpace>{bob->center, r};
    };
    return s;
}

namespace detail {

// Legal centers for Bob's next absolute-game ball of radius r' form the
// window slab [c - (rho - r'), c + (rho - r')] minus an open interval around
// the deletion. Enumerates the surviving segments exactly.
inline std::vector<std::pair<Rat, Rat>> legal_center_segments(const GameParams<LineSpace>& P,
                                                              const Ball<LineSpace>& prev,
                                                              const std::optional<Ball<LineSpace>>& del,
                                                              const Rat& r_new) {
    Rat slack = prev.radius - r_new;
    if (slack < 0) return {};
    Rat lo = std::max(prev.center - slack, P.space.lo);
    Rat hi = std::min(prev.center + slack, P.space.hi);
    if (lo > hi) return {};
    std::vector<std::pair<Rat, Rat>> segs;
    if (!del) {
        segs.emplace_back(lo, hi);
        return segs;
    }
    // avoidance is strict: centers with |c - y| <= r_new + r_del are illegal.
    // The cut is widened by a shave so the returned segments are closed-legal.
    Rat shave = prev.radius / (BigInt(1) << 30);
    Rat cut_lo = del->center - (r_new + del->radius) - shave;
    Rat cut_hi = del->center + (r_new + del->radius) + shave;
    if (cut_hi < lo || cut_lo > hi) {
        segs.emplace_back(lo, hi);
        return segs;
    }
    if (cut_lo > lo) segs.emplace_back(lo, cut_lo);
    if (cut_hi < hi) segs.emplace_back(cut_hi, hi);
    return segs;
}

inline std::optional<Rat> pick_in_segment(const std::pair<Rat, Rat>& seg, const Rat& frac) {
    if (seg.first > seg.second) return std::nullopt;
    return seg.first + (seg.second - seg.first) * frac;
}

// snap a point onto the dyadic grid without leaving the segment; falls back
// to the exact point when the segment is thinner than the grid pitch
inline Rat quantize_into(const Rat& pos, const std::pair<Rat, Rat>& seg, const Rat& scale_hint) {
    Rat q = quantize_down(pos, scale_hint, 14);
    if (q < seg.first) {
        int k = grid_exponent(scale_hint, 14);
        q += Rat(1) / rat_pow(Rat(2), k);
    }
    if (q < seg.first || q > seg.second) return pos;
    return q;
}

}  // namespace detail

// Seeded random Bob for the absolute game on a window playfield: each round
// shrinks the radius by a factor drawn from [beta, beta + spread] and picks a
// uniformly random legal center. Draws depend only on (seed, round), so a
// longer replay shares its prefix with a shorter one.
inline Strategy<LineSpace> random_bob(std::uint64_t seed, Ball<LineSpace> opening, Rat spread = Rat(1, 2)) {
    Strategy<LineSpace> s;
    s.name = "random";
    s.seed = seed;
    s.params_desc = "seed=" + std::to_string(seed);
    s.move = [seed, opening, spread](const GameParams<LineSpace>& P, const Transcript<LineSpace>& T,
                                     int round) -> std::optional<Ball<LineSpace>> {
        if (round == 1) return opening;
        auto prev = T.last_bob_ball();
        auto del = T.last_alice_ball();
        if (!prev) return std::nullopt;
        auto rng = round_rng(seed, round);
        // radius factor in [beta, min(beta + spread*(1-beta), 1)), then rounded
        // up onto the dyadic grid so precision grows linearly with the round
        Rat f = P.beta + (1 - P.beta) * spread * rng.unit_rat(12);
        Rat r_new = quantize_up(Rat(prev->radius * f), prev->radius, 12);
        if (r_new >= prev->radius) r_new = prev->radius * P.beta;
        auto segs = detail::legal_center_segments(P, *prev, del, r_new);
        if (segs.empty()) {
            // retreat to the minimal radius, which always leaves room on a window
            r_new = prev->radius * P.beta;
            segs = detail::legal_center_segments(P, *prev, del, r_new);
            if (segs.empty()) return std::nullopt;
        }
        // weight segments by length
        Rat total = 0;
        for (auto& sg : segs) total += sg.second - sg.first;
        Rat t = total * rng.unit_rat(20);
        for (auto& sg : segs) {
            Rat len = sg.second - sg.first;
            if (t <= len || &sg == &segs.back()) {
                Rat frac = len == 0 ? Rat(0) : Rat(t / len);
                if (frac > 1) frac = 1;
                auto c = detail::pick_in_segment(sg, frac);
                if (c) return Ball<LineSpace>{detail::quantize_into(*c, sg, prev->radius), r_new};
            }
            t -= len;
        }
        return std::nullopt;
    };
    return s;
}

// Scripted cusp-seeking Bob: dives toward a target boundary point as fast as
// the rules allow, shrinking by exactly beta.
inline Strategy<LineSpace> cusp_bob(Rat target, Ball<LineSpace> opening) {
    Strategy<LineSpace> s;
    s.name = "cusp";
    s.params_desc = "target=" + rat_str(target);
    s.move = [target, opening](const GameParams<LineSpace>& P, const Transcript<LineSpace>& T,
                               int round) -> std::optional<Ball<LineSpace>> {
        if (round == 1) return opening;
        auto prev = T.last_bob_ball();
        auto del = T.last_alice_ball();
        if (!prev) return std::nullopt;
        Rat r_new = prev->radius * P.beta;
        auto segs = detail::legal_center_segments(P, *prev, del, r_new);
        std::optional<Rat> best;
        Rat best_d = 0;
        for (auto& sg : segs) {
            Rat c = std::min(std::max(target, sg.first), sg.second);
            if (c != target) c = detail::quantize_into(c, sg, prev->radius);
            Rat d = rat_abs(c - target);
            if (!best || d < best_d) {
                best = c;
                best_d = d;
            }
        }
        if (!best) return std::nullopt;
        return Ball<LineSpace>{*best, r_new};
    };
    return s;
}

// Bob that drifts left greedily (used by referee examples and soundness tests).
inline Strategy<LineSpace> greedy_left_bob(Ball<LineSpace> opening) {
    Strategy<LineSpace> s;
    s.name = "greedy-left";
    s.move = [opening](const GameParams<LineSpace>& P, const Transcript<LineSpace>& T,
                       int round) -> std::optional<Ball<LineSpace>> {
        if (round == 1) return opening;
        auto prev = T.last_bob_ball();
        auto del = T.last_alice_ball();
        if (!prev) return std::nullopt;
        Rat r_new = prev->radius * P.beta;
        auto segs = detail::legal_center_segments(P, *prev, del, r_new);
        for (auto& sg : segs) {
            auto c = detail::pick_in_segment(sg, Rat(1, 64));
            if (c) return Ball<LineSpace>{*c, r_new};
        }
        return std::nullopt;
    };
    return s;
}

// Seeded random Schmidt players: centers drawn uniformly from the nested
// slab, radii forced by the schedule.
inline Strategy<LineSpace> random_schmidt_alice(std::uint64_t seed) {
    Strategy<LineSpace> s;
    s.name = "schmidt-random-alice";
    s.seed = seed;
    s.move = [seed](const GameParams<LineSpace>& P, const Transcript<LineSpace>& T,
                    int round) -> std::optional<Ball<LineSpace>> {
        auto bob = T.last_bob_ball();
        if (!bob) return std::nullopt;
        Rat r = P.space.scale(bob->radius, P.alpha);
        Rat slack = bob->radius - r;
        auto rng = round_rng(seed, round, 0xa11ce);
        Rat lo = std::max(Rat(bob->center - slack), P.space.lo);
        Rat hi = std::min(Rat(bob->center + slack), P.space.hi);
        if (lo > hi) return std::nullopt;
        return Ball<LineSpace>{lo + (hi - lo) * rng.unit_rat(16), r};
    };
    return s;
}

inline Strategy<LineSpace> random_schmidt_bob(std::uint64_t seed, Ball<LineSpace> opening) {
    Strategy<LineSpace> s;
    s.name = "schmidt-random-bob";
    s.seed = seed;
    s.move = [seed, opening](const GameParams<LineSpace>& P, const Transcript<LineSpace>& T,
                             int round) -> std::optional<Ball<LineSpace>> {
        if (round == 1) return opening;
        auto alice = T.last_alice_ball();
        if (!alice) return std::nullopt;
        Rat r = P.space.scale(alice->radius, P.beta);
        Rat slack = alice->radius - r;
        auto rng = round_rng(seed, round, 0xb0b);
        Rat lo = std::max(Rat(alice->center - slack), P.space.lo);
        Rat hi = std::min(Rat(alice->center + slack), P.space.hi);
        if (lo > hi) return std::nullopt;
        return Ball<LineSpace>{lo + (hi - lo) * rng.unit_rat(16), r};
    };
    return s;
}

// Seeded random absolute-game Alice: deletes a random ball with the full
// allowance, anywhere near the current play.
inline Strategy<LineSpace> random_absolute_alice(std::uint64_t seed) {
    Strategy<LineSpace> s;
    s.name = "absolute-random-alice";
    s.seed = seed;
    s.move = [seed](const GameParams<LineSpace>& P, const Transcript<LineSpace>& T,
                    int round) -> std::optional<Ball<LineSpace>> {
        auto bob = T.last_bob_ball();
        if (!bob) return std::nullopt;
        auto rng = round_rng(seed, round, 0xde1);
        Rat r = P.space.scale(bob->radius, P.beta);
        Rat span = bob->radius * 2;
        Rat c = bob->center - bob->radius + span * rng.unit_rat(16);
        return Ball<LineSpace>{c, r};
    };
    return s;
}

// Alice deleting concentrically with the full allowance; the canonical
// "trap" adversary for diffuseness-liveness tests.
inline Strategy<LineSpace> center_deleting_alice() {
    Strategy<LineSpace> s;
    s.name = "delete-center";
    s.move = [](const GameParams<LineSpace>& P, const Transcript<LineSpace>& T,
                int) -> std::optional<Ball<LineSpace>> {
        auto bob = T.last_bob_ball();
        if (!bob) return std::nullopt;
        return Ball<LineSpace>{bob->center, P.space.scale(bob->radius, P.beta)};
    };
    return s;
}

// ---------------------------------------------------------------------------
// Tree-boundary Bob. Legal replies are found by a structured candidate search:
// the target word, the previous center, and single-digit edits just below the
// current ball's depth, tried at the smallest legal radius first.
// ---------------------------------------------------------------------------

inline std::optional<Ball<TreeBoundary>> tree_legal_reply(const GameParams<TreeBoundary>& P,
                                                          const Transcript<TreeBoundary>& T,
                                                          const std::optional<std::string>& target) {
    auto prev = T.last_bob_ball();
    auto del = T.last_alice_ball();
    if (!prev || prev->radius.zero) return std::nullopt;
    const TreeBoundary& tb = P.space;
    int e = prev->radius.exp;
    std::vector<std::string> cands;
    if (target) cands.push_back(*target);
    cands.push_back(prev->center);
    for (int i = e + 1; i < std::min(e + 4, tb.depth); ++i)
        for (int d = 0; d < tb.branching; ++d) {
            std::string w = prev->center;
            w[static_cast<std::size_t>(i)] = static_cast<char>('0' + d);
            cands.push_back(std::move(w));
        }
    for (int re = e + P.beta; re >= e + 1; --re) {
        TreeLevel r = TreeLevel::of(re);
        for (const auto& c0 : cands) {
            if (!tb.in_field(c0)) continue;
            Ball<TreeBoundary> b{c0, r};
            if (!is_schmidt_nested(tb, b, *prev)) continue;
            if (del && !balls_separated(tb, b, *del)) continue;
            return b;
        }
    }
    return std::nullopt;
}

inline Strategy<TreeBoundary> tree_cusp_bob(std::string target, int opening_exp = 1) {
    Strategy<TreeBoundary> s;
    s.name = "tree-cusp";
    s.params_desc = "target=" + target;
    s.move = [target, opening_exp](const GameParams<TreeBoundary>& P, const Transcript<TreeBoundary>& T,
                                   int round) -> std::optional<Ball<TreeBoundary>> {
        if (round == 1) return Ball<TreeBoundary>{target, TreeLevel::of(opening_exp)};
        return tree_legal_reply(P, T, target);
    };
    return s;
}

inline Strategy<TreeBoundary> tree_concentric_alice() {
    Strategy<TreeBoundary> s;
    s.name = "tree-concentric";
    s.move = [](const GameParams<TreeBoundary>& P, const Transcript<TreeBoundary>& T,
                int) -> std::optional<Ball<TreeBoundary>> {
        auto b = T.last_bob_ball();
        if (!b) return std::nullopt;
        return Ball<TreeBoundary>{b->center, P.space.scale(b->radius, P.beta)};
    };
    return s;
}

// ---------------------------------------------------------------------------
// Adapters.
// ---------------------------------------------------------------------------

// Absolute-game Alice strategy -> Schmidt Alice strategy with alpha = beta.
// Consults the wrapped strategy for its deletion A = B(y, r), then answers the
// ball B(x', beta rho) inside B_i avoiding A, found by diffuse witness search.
inline Strategy<LineSpace> absolute_to_schmidt(Strategy<LineSpace> abs_alice, Rat beta) {
    Strategy<LineSpace> s;
    s.name = "abs-to-schmidt(" + abs_alice.name + ")";
    s.move = [abs_alice, beta](const GameParams<LineSpace>& P, const Transcript<LineSpace>& T,
                               int round) -> std::optional<Ball<LineSpace>> {
        auto bob = T.last_bob_ball();
        if (!bob) return std::nullopt;
        // present the wrapped strategy with the induced absolute-game view:
        // Bob balls carried over, deletions re-derived round by round
        GameParams<LineSpace> Q = P;
        Q.variant = Variant::absolute;
        Q.beta = beta;
        Transcript<LineSpace> view;
        view.params = Q;
        int r = 0;
        for (const auto& mv : T.moves) {
            if (mv.player != Player::bob || mv.verdict != Verdict::ok) continue;
            ++r;
            view.moves.push_back({r, Player::bob, mv.ball, Verdict::ok});
            if (mv.ball.center == bob->center && mv.ball.radius == bob->radius) break;
            auto del = abs_alice.move(Q, view, r);
            if (del) view.moves.push_back({r, Player::alice, *del, Verdict::ok});
        }
        auto deletion = abs_alice.move(Q, view, r);
        if (!deletion) return std::nullopt;
        auto w = diffuse_witness(P.space, bob->center, bob->radius, deletion->center, beta);
        if (!w) return std::nullopt;  // diffuseness counterexample; referee records forfeit
        return Ball<LineSpace>{w->x_prime, P.space.scale(bob->radius, beta)};
    };
    return s;
}

// Round-robin intersection dispatcher: round i consults strategy i mod k on
// the full transcript. Oversized deletions are clamped to the legal allowance.
inline Strategy<LineSpace> intersect_strategies(std::vector<Strategy<LineSpace>> parts) {
    if (parts.empty()) throw GameConfigError("intersect_strategies: need at least one strategy");
    Strategy<LineSpace> s;
    s.name = "intersect";
    for (const auto& p : parts) s.name += ":" + p.name;
    s.move = [parts](const GameParams<LineSpace>& P, const Transcript<LineSpace>& T,
                     int round) -> std::optional<Ball<LineSpace>> {
        const auto& chosen = parts[static_cast<std::size_t>(round - 1) % parts.size()];
        auto mv = chosen.move(P, T, round);
        if (!mv) return std::nullopt;
        auto bob = T.last_bob_ball();
        if (bob) {
            Rat cap = P.space.scale(bob->radius, P.beta);
            if (mv->radius > cap) mv->radius = cap;  // clamp and carry on
        }
        return mv;
    };
    return s;
}

using PairSpace = ProductSpace<LineSpace>;

// Product of two winning Schmidt strategies on E x E with the max metric:
// play the ball whose projections are the constituent replies.
inline Strategy<PairSpace> product_strategy(Strategy<LineSpace> sa, Strategy<LineSpace> sb) {
    Strategy<PairSpace> s;
    s.name = "product(" + sa.name + "," + sb.name + ")";
    s.move = [sa, sb](const GameParams<PairSpace>& P, const Transcript<PairSpace>& T,
                      int round) -> std::optional<Ball<PairSpace>> {
        GameParams<LineSpace> Q;
        Q.variant = P.variant;
        Q.alpha = P.alpha;
        Q.beta = P.beta;
        Q.rounds = P.rounds;
        Q.space = P.space.base;
        // project the transcript to each coordinate
        Transcript<LineSpace> TA, TB;
        TA.params = Q;
        TB.params = Q;
        for (const auto& mv : T.moves) {
            if (mv.verdict != Verdict::ok) continue;
            TA.moves.push_back({mv.round, mv.player, {mv.ball.center.first, mv.ball.radius}, Verdict::ok});
            TB.moves.push_back({mv.round, mv.player, {mv.ball.center.second, mv.ball.radius}, Verdict::ok});
        }
        auto ma = sa.move(Q, TA, round);
        auto mb = sb.move(Q, TB, round);
        if (!ma || !mb) return std::nullopt;
        Rat r = std::min(ma->radius, mb->radius);
        return Ball<PairSpace>{{ma->center, mb->center}, r};
    };
    return s;
}

// First move that kills the diagonal on E x E: with B1 = B((x,y),rho), returns
// A1 = B((x,z), beta rho) where z is a diffuse witness with B(z,beta rho)
// inside B(y,rho) and d(z,x) > 2 beta rho. Every (x',y') in A1 then satisfies
// d(x,y') >= d(x,z) - d(y',z) > beta rho >= d(x,x'), so x' != y'.
inline std::optional<Ball<PairSpace>> diagonal_avoiding_first_move(const PairSpace& sp,
                                                                   const Ball<PairSpace>& b1,
                                                                   const Rat& beta) {
    const LineSpace& E = sp.base;
    const Rat& x = b1.center.first;
    const Rat& y = b1.center.second;
    auto w = diffuse_witness(E, y, b1.radius, x, beta);
    if (!w) return std::nullopt;
    return Ball<PairSpace>{{x, w->x_prime}, b1.radius * beta};
}

}  // namespace horogame
