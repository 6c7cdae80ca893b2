#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "horogame/ball.hpp"
#include "horogame/records.hpp"
#include "horogame/spaces.hpp"

namespace horogame {

enum class Variant { schmidt, absolute };
enum class Player { bob, alice };

inline const char* to_string(Player p) { return p == Player::bob ? "bob" : "alice"; }
inline const char* to_string(Variant v) { return v == Variant::schmidt ? "schmidt" : "absolute"; }

enum class Verdict {
    ok,
    illegal_opening,
    illegal_radius,
    illegal_nesting,
    illegal_overlap,   // absolute: Bob's ball meets the deletion
    off_playfield,
    no_move,           // strategy offered no ball
};

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::ok: return "ok";
        case Verdict::illegal_opening: return "illegal_opening";
        case Verdict::illegal_radius: return "illegal_radius";
        case Verdict::illegal_nesting: return "illegal_nesting";
        case Verdict::illegal_overlap: return "illegal_overlap";
        case Verdict::off_playfield: return "off_playfield";
        case Verdict::no_move: return "no_move";
    }
    return "?";
}

struct GameConfigError : std::domain_error {
    using std::domain_error::domain_error;
};

template <class Space>
struct GameParams {
    Variant variant = Variant::absolute;
    typename Space::Factor alpha{};  // schmidt only
    typename Space::Factor beta{};
    int rounds = 10;  // number of Bob balls
    Space space;
};

// The stipulation beta < 1/3 keeps Bob with legal replies in the absolute game.
inline void validate_absolute_beta(const GameParams<LineSpace>& p) {
    if (!(p.beta > 0 && p.beta < Rat(1, 3)))
        throw GameConfigError("absolute game requires 0 < beta < 1/3, got " + rat_str(p.beta));
}
inline void validate_absolute_beta(const GameParams<TreeBoundary>& p) {
    // beta = a^-k: need a^k > 3; for a >= 2 that means k >= 2, and k = 1 only if a > 3
    if (p.beta < 1) throw GameConfigError("tree beta exponent must be >= 1");
    const TreeBase& a = p.space.base;
    bool ok = p.beta >= 2 || (!a.is_e && rat_pow(a.value, p.beta) > 3);
    if (!ok) throw GameConfigError("absolute game requires beta < 1/3: base^-" + std::to_string(p.beta) +
                                   " is too large");
}
template <class S>
void validate_absolute_beta(const GameParams<ProductSpace<S>>& p) {
    GameParams<S> q;
    q.variant = p.variant;
    q.alpha = p.alpha;
    q.beta = p.beta;
    q.rounds = p.rounds;
    q.space = p.space.base;
    validate_absolute_beta(q);
}

template <class Space>
struct Move {
    int round = 0;
    Player player = Player::bob;
    Ball<Space> ball;
    Verdict verdict = Verdict::ok;
};

template <class Space>
struct Transcript {
    GameParams<Space> params;
    std::vector<Move<Space>> moves;
    std::optional<Player> forfeited_by;
    Verdict forfeit_verdict = Verdict::ok;

    // surviving region: the last accepted Bob ball
    std::optional<Ball<Space>> last_bob_ball() const {
        for (auto it = moves.rbegin(); it != moves.rend(); ++it)
            if (it->player == Player::bob && it->verdict == Verdict::ok) return it->ball;
        return std::nullopt;
    }
    std::optional<Ball<Space>> last_alice_ball() const {
        for (auto it = moves.rbegin(); it != moves.rend(); ++it)
            if (it->player == Player::alice && it->verdict == Verdict::ok) return it->ball;
        return std::nullopt;
    }
    bool clean() const { return !forfeited_by.has_value(); }
};

// A strategy maps the transcript prefix to the next move; metadata makes runs
// reproducible. Randomized strategies must derive their draws from (seed,
// round) only.
template <class Space>
struct Strategy {
    std::string name = "unnamed";
    std::string params_desc;
    std::uint64_t seed = 0;
    std::function<std::optional<Ball<Space>>(const GameParams<Space>&, const Transcript<Space>&, int round)>
        move;
};

namespace detail {

template <class Space>
Verdict check_bob_move(const GameParams<Space>& P, const std::optional<Ball<Space>>& prev_bob,
                       const std::optional<Ball<Space>>& alice_ball, const Ball<Space>& ball) {
    const Space& sp = P.space;
    if (!sp.scalar_positive(ball.radius)) return Verdict::illegal_radius;
    if (!sp.in_field(ball.center)) return Verdict::off_playfield;
    if (!prev_bob) return Verdict::ok;  // opening: any center on E, any radius > 0
    if (P.variant == Variant::schmidt) {
        // radius forced: beta * alpha * rho_prev, nested in Alice's ball
        auto forced = sp.scale(alice_ball->radius, P.beta);
        bool radius_ok = sp.scalar_le(forced, ball.radius) && sp.scalar_le(ball.radius, forced);
        if (!radius_ok) return Verdict::illegal_radius;
        if (!is_schmidt_nested(sp, ball, *alice_ball)) return Verdict::illegal_nesting;
        return Verdict::ok;
    }
    // absolute: radius >= beta * rho_prev, inside prev Bob ball, avoiding the deletion
    auto min_r = sp.scale(prev_bob->radius, P.beta);
    if (!sp.scalar_le(min_r, ball.radius)) return Verdict::illegal_radius;
    if (!is_schmidt_nested(sp, ball, *prev_bob)) return Verdict::illegal_nesting;
    if (alice_ball && !balls_separated(sp, ball, *alice_ball)) return Verdict::illegal_overlap;
    return Verdict::ok;
}

template <class Space>
Verdict check_alice_move(const GameParams<Space>& P, const Ball<Space>& bob_ball, const Ball<Space>& ball) {
    const Space& sp = P.space;
    if (!sp.scalar_positive(ball.radius)) return Verdict::illegal_radius;
    if (P.variant == Variant::schmidt) {
        auto forced = sp.scale(bob_ball.radius, P.alpha);
        bool radius_ok = sp.scalar_le(forced, ball.radius) && sp.scalar_le(ball.radius, forced);
        if (!radius_ok) return Verdict::illegal_radius;
        if (!sp.in_field(ball.center)) return Verdict::off_playfield;
        if (!is_schmidt_nested(sp, ball, bob_ball)) return Verdict::illegal_nesting;
        return Verdict::ok;
    }
    // absolute: deletion anywhere, radius <= beta * rho
    auto max_r = sp.scale(bob_ball.radius, P.beta);
    if (!sp.scalar_le(ball.radius, max_r)) return Verdict::illegal_radius;
    return Verdict::ok;
}

}  // namespace detail

// Runs `rounds` Bob balls with Alice moves between them, validating every move.
// An illegal move (or a declined one) forfeits for the offending player and
// ends the game; the transcript records the verdict.
template <class Space>
Transcript<Space> referee(const GameParams<Space>& P, const Strategy<Space>& alice,
                          const Strategy<Space>& bob) {
    if (P.variant == Variant::absolute) validate_absolute_beta(P);
    if (P.rounds < 1) throw GameConfigError("rounds must be >= 1");
    Transcript<Space> T;
    T.params = P;
    std::optional<Ball<Space>> bob_ball, alice_ball;
    for (int round = 1; round <= P.rounds; ++round) {
        auto bmove = bob.move(P, T, round);
        if (!bmove) {
            T.forfeited_by = Player::bob;
            T.forfeit_verdict = Verdict::no_move;
            return T;
        }
        Verdict v = detail::check_bob_move(P, bob_ball, alice_ball, *bmove);
        if (v != Verdict::ok && !bob_ball) v = Verdict::illegal_opening;
        T.moves.push_back({round, Player::bob, *bmove, v});
        if (v != Verdict::ok) {
            T.forfeited_by = Player::bob;
            T.forfeit_verdict = v;
            return T;
        }
        bob_ball = *bmove;
        if (round == P.rounds) break;  // outcome is the last Bob ball
        auto amove = alice.move(P, T, round);
        if (!amove) {
            T.forfeited_by = Player::alice;
            T.forfeit_verdict = Verdict::no_move;
            return T;
        }
        v = detail::check_alice_move(P, *bob_ball, *amove);
        T.moves.push_back({round, Player::alice, *amove, v});
        if (v != Verdict::ok) {
            T.forfeited_by = Player::alice;
            T.forfeit_verdict = v;
            return T;
        }
        alice_ball = *amove;
    }
    return T;
}

// Independent audit: re-derives every legality condition of the variant from
// the recorded moves alone. Kept separate from the referee's inline checks on
// purpose; acceptance replays transcripts through this.
template <class Space>
bool audit_transcript(const Transcript<Space>& T, std::string* why = nullptr) {
    const GameParams<Space>& P = T.params;
    const Space& sp = P.space;
    std::optional<Ball<Space>> bob_ball, alice_ball;
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (const auto& mv : T.moves) {
        if (mv.verdict != Verdict::ok) {
            // a recorded illegal move must be the last move and match a forfeit
            if (&mv != &T.moves.back() || !T.forfeited_by || *T.forfeited_by != mv.player)
                return fail("illegal move not terminal");
            continue;
        }
        if (mv.player == Player::bob) {
            if (!sp.in_field(mv.ball.center)) return fail("bob center off playfield");
            if (bob_ball) {
                if (P.variant == Variant::schmidt) {
                    auto forced = sp.scale(alice_ball->radius, P.beta);
                    if (!(sp.scalar_le(forced, mv.ball.radius) && sp.scalar_le(mv.ball.radius, forced)))
                        return fail("bob radius schedule");
                    if (!is_schmidt_nested(sp, mv.ball, *alice_ball)) return fail("bob nesting");
                } else {
                    if (!sp.scalar_le(sp.scale(bob_ball->radius, P.beta), mv.ball.radius))
                        return fail("bob radius lower bound");
                    if (!is_schmidt_nested(sp, mv.ball, *bob_ball)) return fail("bob nesting");
                    if (alice_ball && !balls_separated(sp, mv.ball, *alice_ball))
                        return fail("bob ball meets deletion");
                }
            }
            bob_ball = mv.ball;
        } else {
            if (!bob_ball) return fail("alice before bob");
            if (P.variant == Variant::schmidt) {
                auto forced = sp.scale(bob_ball->radius, P.alpha);
                if (!(sp.scalar_le(forced, mv.ball.radius) && sp.scalar_le(mv.ball.radius, forced)))
                    return fail("alice radius schedule");
                if (!sp.in_field(mv.ball.center)) return fail("alice center off playfield");
                if (!is_schmidt_nested(sp, mv.ball, *bob_ball)) return fail("alice nesting");
            } else {
                if (!sp.scalar_le(mv.ball.radius, sp.scale(bob_ball->radius, P.beta)))
                    return fail("alice deletion too large");
            }
            alice_ball = mv.ball;
        }
    }
    return true;
}

// Outcome containment: the final center lies in every accepted Bob ball.
template <class Space>
bool outcome_in_all_bob_balls(const Transcript<Space>& T) {
    auto last = T.last_bob_ball();
    if (!last) return true;
    for (const auto& mv : T.moves)
        if (mv.player == Player::bob && mv.verdict == Verdict::ok &&
            !ball_contains_point(T.params.space, mv.ball, last->center))
            return false;
    return true;
}

template <class Space>
std::vector<Record> serialize(const Transcript<Space>& T) {
    const Space& sp = T.params.space;
    std::vector<Record> out;
    Record head("game");
    head.set("variant", std::string(to_string(T.params.variant))).set("rounds", T.params.rounds);
    out.push_back(head);
    for (const auto& mv : T.moves) {
        Record rec("move");
        rec.set("round", mv.round)
            .set("player", std::string(to_string(mv.player)))
            .set("center", sp.point_str(mv.ball.center))
            .set("radius", sp.scalar_str(mv.ball.radius))
            .set("verdict", std::string(to_string(mv.verdict)));
        out.push_back(rec);
    }
    Record tail("outcome");
    if (auto last = T.last_bob_ball()) {
        tail.set("center", sp.point_str(last->center)).set("radius", sp.scalar_str(last->radius));
    }
    if (T.forfeited_by)
        tail.set("forfeit", std::string(to_string(*T.forfeited_by)))
            .set("reason", std::string(to_string(T.forfeit_verdict)));
    out.push_back(tail);
    return out;
}

}  // namespace horogame
