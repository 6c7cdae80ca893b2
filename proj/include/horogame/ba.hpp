#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "horogame/cf.hpp"
#include "horogame/family.hpp"
#include "horogame/game.hpp"
#include "horogame/strategies.hpp"

namespace horogame {

// ---------------------------------------------------------------------------
// Constant chain of the horoball-avoidance strategy. delta > 0 uses the
// closed forms; trees (delta = 0) use the exact tree quantities instead,
// where every comparability in the chain is an equality.
// ---------------------------------------------------------------------------

struct StrategyConstants {
    double beta = 0;
    double delta = 0;
    double visual_C = 1;
    double visual_a = 2.718281828459045;
    double c = 0;        // rescaling constant
    double s_lower = 0;  // guaranteed badly-approximable constant for the outcome
    double rho1 = 0, R1 = 1;
    bool tree_mode = false;
    // The source text states both e^-delta and e^-4delta variants of the first
    // infimum term; we take the conservative minimum and flag it.
    std::string note = "conservative: min of e^-delta and e^-4delta first-term variants";
};

inline double strategy_constant(double beta, double delta, double C, double a) {
    if (!(beta > 0) || !(C >= 1) || !(a > 1)) throw std::domain_error("strategy_constant: bad parameters");
    if (delta == 0) return beta;  // tree mode: exact shadows, no slack factors
    return beta / (C * 4 * delta * a) * std::exp(-delta);
}

inline StrategyConstants make_strategy_constants(double beta, double delta, double C, double a, double rho1,
                                                 double R1) {
    StrategyConstants sc;
    sc.beta = beta;
    sc.delta = delta;
    sc.visual_C = C;
    sc.visual_a = a;
    sc.rho1 = rho1;
    sc.R1 = R1;
    sc.tree_mode = (delta == 0);
    sc.c = strategy_constant(beta, delta, C, a);
    if (sc.tree_mode) {
        sc.s_lower = std::min(beta * beta, beta * rho1 / R1);
        sc.note = "tree mode: exact shadow law, c = beta";
    } else {
        double t1 = sc.c / (2 * C) * std::exp(-4 * delta);
        double t2 = beta * rho1 / R1;
        double t3 = beta * beta / (C * 4 * delta * a) * std::exp(-delta);
        sc.s_lower = std::min({t1, t2, t3});
    }
    if (!(sc.s_lower > 0)) throw std::domain_error("strategy constants: s_lower must be positive");
    return sc;
}

// ---------------------------------------------------------------------------
// Half-plane instance: Alice's move on the window game against a disjoint
// Ford-type family. Probes gamma_{x_i}(-log rho_i) exactly and deletes the
// shadow-ball of the unique horoball hit, else a deletion disjoint from play.
// ---------------------------------------------------------------------------

inline Ball<LineSpace> far_corner_deletion(const GameParams<LineSpace>& P, const Ball<LineSpace>& bob) {
    // whichever window corner is farther from Bob's ball; vacuous whenever the
    // opening radius is at most a quarter window
    Rat mid = (P.space.lo + P.space.hi) / 2;
    Rat corner = bob.center <= mid ? P.space.hi : P.space.lo;
    return Ball<LineSpace>{corner, P.space.scale(bob.radius, P.beta)};
}

// Exact probe + locate + deletion. Requires visual base e (the probe closed
// form is rational exactly when t_i = -ln rho_i).
inline std::optional<Ball<LineSpace>> horoball_alice_move(const HoroballFamily& F,
                                                          const GameParams<LineSpace>& P,
                                                          const Transcript<LineSpace>& T) {
    auto bob = T.last_bob_ball();
    if (!bob) return std::nullopt;
    if (!(bob->radius <= 1)) throw GameConfigError("horoball strategy: opening radius must be <= 1");
    HPointQ z = ray_point_at_scale(bob->center, bob->radius);
    if (z.y >= 1 && bob->radius < 1)
        throw GameConfigError("horoball strategy: probe entered the infinity horoball; opening too large");
    if (auto idx = F.locate(z)) {
        const DiskHoroball& H = F.members()[*idx];
        return Ball<LineSpace>{H.base, P.space.scale(bob->radius, P.beta)};
    }
    return far_corner_deletion(P, *bob);
}

inline Strategy<LineSpace> horoball_alice(const HoroballFamily& F) {
    Strategy<LineSpace> s;
    s.name = "horoball-avoid";
    s.params_desc = F.origin().kind + ":" + F.origin().detail;
    s.move = [&F](const GameParams<LineSpace>& P, const Transcript<LineSpace>& T,
                  int) -> std::optional<Ball<LineSpace>> { return horoball_alice_move(F, P, T); };
    return s;
}

// owning variant for CLI / long-lived use
inline Strategy<LineSpace> horoball_alice_owned(HoroballFamily F) {
    auto fam = std::make_shared<HoroballFamily>(std::move(F));
    Strategy<LineSpace> s;
    s.name = "horoball-avoid";
    s.params_desc = fam->origin().kind + ":" + fam->origin().detail;
    s.move = [fam](const GameParams<LineSpace>& P, const Transcript<LineSpace>& T,
                   int) -> std::optional<Ball<LineSpace>> { return horoball_alice_move(*fam, P, T); };
    return s;
}

// Conservative lower bound for the outcome's badly-approximable constant,
// evaluated from the opening round of the transcript.
inline double ba_lower_bound(const Transcript<LineSpace>& T, const HoroballFamily& F, double delta,
                             double visual_C, double visual_a) {
    double rho1 = 0.25, R1 = 1.0;
    for (const auto& mv : T.moves)
        if (mv.player == Player::bob && mv.verdict == Verdict::ok) {
            rho1 = to_double(mv.ball.radius);
            break;
        }
    if (!F.empty()) R1 = to_double(F.max_diameter());
    double beta = to_double(T.params.beta);
    return make_strategy_constants(beta, delta, visual_C, visual_a, rho1, R1).s_lower;
}

// ---------------------------------------------------------------------------
// Experiment driver: referee a run of the absolute game with the horoball
// strategy, then verify the finite-round surrogate of the guarantee: for every
// family member with diameter >= the final radius, the outcome keeps euclidean
// distance > s * diameter from the base. All comparisons exact.
// ---------------------------------------------------------------------------

struct FamilyBAReport {
    double s = 0;
    Rat min_diameter_checked;  // members below this are outside the certified range
    std::size_t members_checked = 0;
    bool ok = true;
    std::optional<std::size_t> violating_member;
    double min_ratio = -1;  // min over checked members of dist / (s * diam)
    std::vector<std::pair<Rat, double>> margins;  // (base, dist/diam) when collected
};

inline FamilyBAReport verify_family_ba(const HoroballFamily& F, const Rat& outcome, double s,
                                       const Rat& rho_final, bool collect_margins = false) {
    FamilyBAReport rep;
    rep.s = s;
    rep.min_diameter_checked = rho_final;
    Rat s_rat = rat_from_double(s);
    double out_d = to_double(outcome);
    for (std::size_t i = 0; i < F.members().size(); ++i) {
        const DiskHoroball& H = F.members()[i];
        if (H.diameter < rho_final) continue;
        ++rep.members_checked;
        double dist_d = std::abs(out_d - to_double(H.base));
        double bound_d = s * to_double(H.diameter);
        double ratio = bound_d == 0 ? 0.0 : dist_d / bound_d;
        if (rep.min_ratio < 0 || ratio < rep.min_ratio) rep.min_ratio = ratio;
        if (collect_margins) rep.margins.emplace_back(H.base, dist_d / to_double(H.diameter));
        // conservative double screen; exact arithmetic settles anything close
        if (dist_d * (1 - 1e-9) > bound_d * (1 + 1e-9) && dist_d > 1e-300) continue;
        Rat dist = rat_abs(outcome - H.base);
        Rat bound = s_rat * H.diameter;
        if (!(dist > bound)) {
            rep.ok = false;
            rep.violating_member = i;
            return rep;
        }
    }
    return rep;
}

struct BAExperiment {
    Transcript<LineSpace> transcript;
    FamilyBAReport report;
    BAWitness ford_witness;  // only meaningful for ford families
    double s_lower = 0;
};

inline BAExperiment run_ba_experiment(const HoroballFamily& F, GameParams<LineSpace> P,
                                      const Strategy<LineSpace>& bob, double delta, double visual_C,
                                      double visual_a, std::optional<unsigned> ford_qmax = std::nullopt) {
    P.variant = Variant::absolute;
    auto alice = horoball_alice(F);
    BAExperiment ex;
    ex.transcript = referee(P, alice, bob);
    ex.s_lower = ba_lower_bound(ex.transcript, F, delta, visual_C, visual_a);
    auto last = ex.transcript.last_bob_ball();
    if (!last) throw GameConfigError("run_ba_experiment: no surviving ball");
    ex.report = verify_family_ba(F, last->center, ex.s_lower, last->radius);
    if (ford_qmax) {
        // cross-check through the continued-fraction scanner: q^2 |x - p/q| > s
        // for every q up to the certified range
        double rho_f = to_double(last->radius);
        unsigned q_cert = *ford_qmax;
        if (rho_f > 0) {
            double qlim = std::sqrt(1.0 / rho_f);
            if (qlim < static_cast<double>(q_cert)) q_cert = static_cast<unsigned>(qlim);
        }
        verify_ba_ford(last->center, rat_from_double(ex.s_lower), q_cert, &ex.ford_witness);
    }
    return ex;
}

// ---------------------------------------------------------------------------
// Tree instance. Radii are integer levels, the probe is the depth-t_i vertex
// of the ray to Bob's center, and every constant is exact.
// ---------------------------------------------------------------------------

inline std::optional<Ball<TreeBoundary>> tree_horoball_alice_move(const TreeHoroballFamily& F,
                                                                  const GameParams<TreeBoundary>& P,
                                                                  const Transcript<TreeBoundary>& T) {
    auto bob = T.last_bob_ball();
    if (!bob || bob->radius.zero) return std::nullopt;
    int t = bob->radius.exp;  // t_i = -log_a rho_i
    TreeInteriorPoint z{bob->center.substr(0, std::min<std::size_t>(t, bob->center.size()))};
    if (auto idx = F.locate(z)) {
        const TreeHoroball& H = F.members[*idx];
        return Ball<TreeBoundary>{H.base, P.space.scale(bob->radius, P.beta)};
    }
    // deletion disjoint from B_i: flip the leading digit
    std::string far = bob->center;
    far[0] = far[0] == '0' ? '1' : '0';
    return Ball<TreeBoundary>{far, P.space.scale(bob->radius, P.beta)};
}

inline Strategy<TreeBoundary> tree_horoball_alice(const TreeHoroballFamily& F) {
    Strategy<TreeBoundary> s;
    s.name = "tree-horoball-avoid";
    s.move = [&F](const GameParams<TreeBoundary>& P, const Transcript<TreeBoundary>& T,
                  int) -> std::optional<Ball<TreeBoundary>> { return tree_horoball_alice_move(F, P, T); };
    return s;
}

// Tree-exact badly-approximable exponent: s = min(beta^2, beta rho1 / Rmax)
// as a level increment, so the guarantee reads (x|xi_j) < s_exp + e_j.
inline int tree_ba_exponent(int beta_exp, int rho1_exp, int min_family_exp) {
    return std::max(2 * beta_exp, beta_exp + rho1_exp - min_family_exp);
}

struct TreeBAReport {
    int s_exp = 0;
    bool ok = true;
    std::optional<std::size_t> violating_member;
};

inline TreeBAReport verify_tree_ba(const TreeHoroballFamily& F, const TreeBoundary& sp,
                                   const std::string& outcome, int s_exp, int rho_final_exp) {
    TreeBAReport rep;
    rep.s_exp = s_exp;
    for (std::size_t i = 0; i < F.members.size(); ++i) {
        const TreeHoroball& H = F.members[i];
        if (H.shadow_exp > rho_final_exp) continue;  // finer than the certified range
        // require rho(outcome, base) > a^-(s_exp + e_j), i.e. overlap < s_exp + e_j
        int overlap = sp.prefix_len(outcome, H.base);
        if (outcome == H.base || overlap >= s_exp + H.shadow_exp) {
            rep.ok = false;
            rep.violating_member = i;
            return rep;
        }
    }
    return rep;
}

}  // namespace horogame
