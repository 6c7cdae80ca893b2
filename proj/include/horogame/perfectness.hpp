#pragma once

#include <optional>
#include <string>
#include <vector>

#include "horogame/ball.hpp"
#include "horogame/records.hpp"
#include "horogame/spaces.hpp"

namespace horogame {

// beta bound from a uniform perfectness constant: min{1-nu, nu^2/4}. Any beta
// strictly below it is a valid diffuseness parameter.
inline Rat diffuse_bound_from_perfectness(const Rat& nu) {
    if (!(nu > 0 && nu < 1)) throw std::domain_error("perfectness constant must be in (0,1)");
    Rat a = 1 - nu, b = nu * nu / 4;
    return a < b ? a : b;
}

template <class Space>
struct PerfectnessReport {
    Rat nu;
    std::vector<typename Space::Scalar> scales;
    struct Entry {
        typename Space::Point x;
        typename Space::Scalar R;
        std::optional<typename Space::Point> witness;  // nullopt = vacuous (E inside the ball)
        bool failed = false;
    };
    std::vector<Entry> entries;
    int failures = 0;
    bool passed() const { return failures == 0; }
};

// For each sampled x in E and R in scales, search the annulus
// B(x,R) - B(x,nu R) for a point of E. Vacuous when E does not escape B(x,R).
template <class Space>
PerfectnessReport<Space> check_uniform_perfectness(const Space& sp, const Rat& nu,
                                                   const std::vector<typename Space::Scalar>& scales,
                                                   const std::vector<typename Space::Point>& extra = {}) {
    if (scales.empty()) throw std::domain_error("check_uniform_perfectness: empty scale list");
    PerfectnessReport<Space> report;
    report.nu = nu;
    report.scales = scales;
    auto base_samples = sp.sample_points();
    auto samples = base_samples;
    samples.insert(samples.end(), extra.begin(), extra.end());
    for (const auto& x : samples) {
        if (!sp.in_field(x)) continue;
        for (const auto& R : scales) {
            typename PerfectnessReport<Space>::Entry e{x, R, std::nullopt, false};
            // escape check: sample enumerations are ordered, so the extremes
            // realize the maximal distance from x
            bool escapes =
                !base_samples.empty() &&
                (!sp.scalar_le(sp.distance(x, base_samples.front()), R) ||
                 !sp.scalar_le(sp.distance(x, base_samples.back()), R));
            if (escapes) {
                auto nuR = scale_by_rat(sp, R, nu);
                bool found = false;
                for (const auto& cand : sp.candidates(x, R)) {
                    auto d = sp.distance(x, cand);
                    if (sp.scalar_le(d, R) && !sp.scalar_le(d, nuR)) {
                        e.witness = cand;
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    e.failed = true;
                    ++report.failures;
                }
            }
            report.entries.push_back(std::move(e));
        }
    }
    return report;
}

// Scalar * rational factor. Line spaces multiply directly; tree levels only
// support power-of-base factors, so nu there must be a^-k (checked).
inline Rat scale_by_rat(const LineSpace&, const Rat& s, const Rat& f) { return s * f; }
template <class S>
typename ProductSpace<S>::Scalar scale_by_rat(const ProductSpace<S>& sp, const typename S::Scalar& s,
                                              const Rat& f) {
    return scale_by_rat(sp.base, s, f);
}
inline TreeLevel scale_by_rat(const TreeBoundary& sp, const TreeLevel& s, const Rat& f) {
    if (s.zero) return s;
    if (sp.base.is_e) throw std::domain_error("tree scale_by_rat: base e level needs a^-k factor");
    Rat v = f;
    int k = 0;
    while (v < 1) {
        v *= sp.base.value;
        ++k;
    }
    if (v != 1) throw std::domain_error("tree scale_by_rat: factor must be a power of the base");
    return TreeLevel::of(s.exp + k);
}

template <class Space>
struct DiffuseWitness {
    typename Space::Point x_prime;
    typename Space::Scalar dist_to_x;
    typename Space::Scalar dist_to_y;
};

// Search E for x' with B(x', beta rho) inside B(x, rho) and d(x', y) > 2 beta rho:
// the two inequalities that certify B(x',beta rho) in B(x,rho) - B(y,beta rho).
// Candidates are enumerated at the space's resolution; ties break toward the
// smallest coordinate for reproducibility.
template <class Space>
std::optional<DiffuseWitness<Space>> diffuse_witness(const Space& sp, const typename Space::Point& x,
                                                     const typename Space::Scalar& rho,
                                                     const typename Space::Point& y, const Rat& beta) {
    auto beta_rho = scale_by_rat(sp, rho, beta);
    auto two_beta_rho = scale_by_rat(sp, rho, 2 * beta);
    // cheap first case: the obstacle is already far, x itself works
    {
        auto dxy = sp.distance(x, y);
        if (!sp.scalar_le(dxy, two_beta_rho))
            return DiffuseWitness<Space>{x, sp.distance(x, x), dxy};
    }
    for (const auto& cand : sp.candidates(x, rho)) {
        if (!sp.in_field(cand)) continue;
        auto dx = sp.distance(x, cand);
        if (!sp.nested_le(beta_rho, dx, rho)) continue;
        auto dy = sp.distance(cand, y);
        if (sp.scalar_le(dy, two_beta_rho)) continue;
        return DiffuseWitness<Space>{cand, dx, dy};
    }
    return std::nullopt;
}

template <class Space>
struct DiffusenessCertificate {
    Rat beta0;
    struct Triple {
        typename Space::Point x;
        typename Space::Scalar rho;
        typename Space::Point y;
        std::optional<typename Space::Point> witness;
    };
    std::vector<Triple> triples;
    int failures = 0;
    bool passed() const { return failures == 0; }
};

template <class Space>
std::vector<Record> serialize(const PerfectnessReport<Space>& r, const Space& sp) {
    std::vector<Record> out;
    Record head("perfectness-report");
    head.set("nu", rat_str(r.nu)).set("entries", static_cast<long long>(r.entries.size()))
        .set("failures", r.failures).set("pass", r.passed());
    out.push_back(head);
    for (const auto& e : r.entries) {
        Record rec("perfectness-pair");
        rec.set("x", sp.point_str(e.x)).set("R", sp.scalar_str(e.R));
        if (e.witness)
            rec.set("witness", sp.point_str(*e.witness));
        else
            rec.set(e.failed ? "status" : "vacuous", e.failed ? "FAIL" : "true");
        out.push_back(rec);
    }
    return out;
}

template <class Space>
std::vector<Record> serialize(const DiffusenessCertificate<Space>& c, const Space& sp) {
    std::vector<Record> out;
    Record head("diffuseness-certificate");
    head.set("beta0", rat_str(c.beta0)).set("triples", static_cast<long long>(c.triples.size()))
        .set("failures", c.failures).set("pass", c.passed());
    out.push_back(head);
    for (const auto& t : c.triples) {
        Record rec("diffuseness-triple");
        rec.set("x", sp.point_str(t.x)).set("rho", sp.scalar_str(t.rho)).set("y", sp.point_str(t.y));
        if (t.witness)
            rec.set("witness", sp.point_str(*t.witness));
        else
            rec.set("status", "FAIL");
        out.push_back(rec);
    }
    return out;
}

}  // namespace horogame
