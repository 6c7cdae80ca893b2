#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "horogame/horoball.hpp"
#include "horogame/records.hpp"

namespace horogame {

struct DisjointnessViolation {
    std::size_t i = 0, j = 0;
};

// Disjoint family of half-plane horoballs over a boundary window, sorted by
// base. Tangencies are allowed: the strategy only needs interior-membership
// uniqueness. The location index buckets members by dyadic diameter band so a
// probe at height y only consults bands with diameter above y.
class HoroballFamily {
  public:
    struct Origin {
        std::string kind = "user";  // ford | user-file | rescaled | manual
        std::string detail;
    };

    HoroballFamily() = default;
    HoroballFamily(std::vector<DiskHoroball> members, Origin origin, bool include_infinity = false)
        : entries_(std::move(members)), origin_(std::move(origin)), has_infinity_(include_infinity) {
        std::sort(entries_.begin(), entries_.end(),
                  [](const DiskHoroball& a, const DiskHoroball& b) { return a.base < b.base; });
        build_index();
    }

    const std::vector<DiskHoroball>& members() const { return entries_; }
    const Origin& origin() const { return origin_; }
    bool has_infinity_horoball() const { return has_infinity_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    Rat max_diameter() const {
        Rat m = 0;
        for (const auto& H : entries_) m = std::max(m, H.diameter);
        return m;
    }

    // exact pairwise check: disks tangent at p, p' with diameters h, h' have
    // disjoint interiors iff (p - p')^2 >= h h'
    std::vector<DisjointnessViolation> check_disjoint() const {
        std::vector<DisjointnessViolation> bad;
        Rat hmax = max_diameter();
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            for (std::size_t j = i + 1; j < entries_.size(); ++j) {
                Rat gap = entries_[j].base - entries_[i].base;
                if (gap * gap >= entries_[i].diameter * hmax) break;  // sorted: no later overlap with i
                if (gap * gap < entries_[i].diameter * entries_[j].diameter)
                    bad.push_back({i, j});
            }
        }
        return bad;
    }

    bool basepoint_excluded() const {
        // o = i lies in the interior of disk (xi, h) iff xi^2 + 1 < h
        for (const auto& H : entries_)
            if (H.base * H.base + 1 < H.diameter) return false;
        return true;
    }

    // unique member whose interior contains z, if any
    std::optional<std::size_t> locate(const HPointQ& z) const {
        if (!(z.y > 0)) return std::nullopt;
        for (const auto& [band, idxs] : bands_) {
            // band holds diameters in [2^band, 2^band+1); interior needs h > y
            if (!band_reaches(band, z.y)) continue;
            // |z.x - base| < h/2 < 2^band for an interior hit
            Rat half = rat_pow(Rat(2), band);
            auto lo = std::lower_bound(idxs.begin(), idxs.end(), z.x - half,
                                       [this](std::size_t idx, const Rat& v) { return entries_[idx].base < v; });
            for (auto it = lo; it != idxs.end(); ++it) {
                const DiskHoroball& H = entries_[*it];
                if (H.base > z.x + half) break;
                if (H.contains_interior(z)) return *it;
            }
        }
        return std::nullopt;
    }

    std::optional<std::size_t> locate_bruteforce(const HPointQ& z) const {
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i].contains_interior(z)) return i;
        return std::nullopt;
    }

    HoroballFamily rescaled(const Rat& s, int tol_bits = 40) const {
        if (!(s > 0 && s < 1)) throw std::domain_error("rescale_family: factor must be in (0,1)");
        std::vector<DiskHoroball> out;
        out.reserve(entries_.size());
        for (const auto& H : entries_) out.push_back(scale_horoball(H, s, tol_bits));
        Origin o{"rescaled", origin_.kind + ":" + origin_.detail + " s=" + rat_str(s)};
        HoroballFamily fam(std::move(out), o, has_infinity_);
        if (!fam.basepoint_excluded()) throw std::domain_error("rescale_family: basepoint still inside a member");
        return fam;
    }

  private:
    void build_index() {
        bands_.clear();
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            int band = diam_band(entries_[i].diameter);
            bands_[band].push_back(i);
        }
        // entries_ sorted by base, so each band list is too
    }
    static int diam_band(const Rat& h) {
        // largest k with 2^k <= h
        int k = 0;
        Rat v = h;
        if (v >= 1) {
            while (v >= 2) {
                v /= 2;
                ++k;
            }
        } else {
            while (v < 1) {
                v *= 2;
                --k;
            }
        }
        return k;
    }
    static bool band_reaches(int band, const Rat& y) {
        // some diameter in [2^band, 2^band+1) exceeds y iff y < 2^(band+1)
        return y < rat_pow(Rat(2), band + 1);
    }

    std::vector<DiskHoroball> entries_;
    Origin origin_{};
    bool has_infinity_ = false;
    std::map<int, std::vector<std::size_t>, std::greater<int>> bands_;
};

// Ford family for the window [0,1]: one horoball per reduced p/q, tangent at
// p/q with euclidean diameter 1/q^2, enumerated in Farey order. The horoball
// at infinity {y >= 1} is tracked by flag; it never lies over the window.
inline HoroballFamily generate_ford(unsigned qmax) {
    if (qmax == 0) throw std::domain_error("generate_ford: qmax must be >= 1");
    std::vector<DiskHoroball> members;
    // Farey sequence next-term recurrence from 0/1, 1/qmax
    long long a = 0, b = 1, c = 1, d = static_cast<long long>(qmax);
    members.push_back(DiskHoroball{Rat(0), Rat(1)});
    while (c <= static_cast<long long>(qmax) && !(a == 1 && b == 1)) {
        long long k = (static_cast<long long>(qmax) + b) / d;
        long long a2 = k * c - a, b2 = k * d - b;
        a = c;
        b = d;
        c = a2;
        d = b2;
        members.push_back(DiskHoroball{Rat(a, b), Rat(1, b * b)});
        if (a == 1 && b == 1) break;
    }
    return HoroballFamily(std::move(members), {"ford", "qmax=" + std::to_string(qmax)}, true);
}

// Family file: one `horoball base=p/q diameter=r/s` record per line; `#`
// comments allowed. Disjointness is certified before the family is usable.
inline HoroballFamily load_family(std::istream& in, const std::string& source = "stream") {
    std::vector<DiskHoroball> members;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto rec = Record::parse_line(line);
        if (!rec || rec->type != "horoball")
            throw std::invalid_argument(source + ":" + std::to_string(lineno) + ": expected horoball record");
        auto base = parse_rat(rec->get_or_throw("base"));
        auto diam = parse_rat(rec->get_or_throw("diameter"));
        if (!base || !diam || !(*diam > 0))
            throw std::invalid_argument(source + ":" + std::to_string(lineno) + ": bad rational field");
        members.push_back(DiskHoroball{*base, *diam});
    }
    HoroballFamily fam(std::move(members), {"user-file", source});
    auto bad = fam.check_disjoint();
    if (!bad.empty()) {
        std::ostringstream os;
        os << source << ": family not disjoint (" << bad.size() << " violations; first pair bases "
           << rat_str(fam.members()[bad[0].i].base) << ", " << rat_str(fam.members()[bad[0].j].base) << ")";
        throw std::invalid_argument(os.str());
    }
    return fam;
}

inline HoroballFamily load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open family file: " + path);
    return load_family(in, path);
}

inline void save_family(const HoroballFamily& fam, std::ostream& out) {
    for (const auto& H : fam.members()) out << horoball_record(H);
}

// Group metadata behind a horoball family: parabolic representatives, the
// critical exponent, and the measured comparability between shadow radii and
// the euclidean diameter law. The comparability constant is basepoint-relative
// and has no a-priori closed form, so it is measured over the family.
struct GroupDescriptor {
    std::string name;
    std::vector<Rat> parabolic_reps;
    bool parabolic_at_infinity = false;
    double critical_exponent = 0;  // > 0 for non-elementary groups
    double comparability_lo = 0;   // bounds on (shadow radius)/(euclidean diameter)
    double comparability_hi = 0;

    bool valid() const { return critical_exponent > 0; }
};

inline GroupDescriptor psl2z_descriptor(const HoroballFamily& ford, long long probe_qmax = 20,
                                        int tol_bits = 30) {
    GroupDescriptor g;
    g.name = "PSL(2,Z)";
    g.parabolic_reps = {Rat(0)};  // one cusp class: the rationals together with infinity
    g.parabolic_at_infinity = true;
    g.critical_exponent = 1.0;    // lattice acting on the hyperbolic plane
    double lo = 1e300, hi = 0;
    for (const auto& H : ford.members()) {
        if (denominator(H.base) > BigInt(probe_qmax)) continue;
        auto sh = horoball_shadow(H, tol_bits);
        Rat wlo = std::max(sh.interval.lo, Rat(0));
        Rat whi = std::min(sh.interval.hi, Rat(1));
        Rat R = std::max(rat_abs(whi - H.base), rat_abs(H.base - wlo));
        double ratio = to_double(R / H.diameter);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    g.comparability_lo = lo;
    g.comparability_hi = hi;
    return g;
}

inline Record group_record(const GroupDescriptor& g) {
    Record rec("group");
    std::string reps;
    for (const auto& p : g.parabolic_reps) reps += (reps.empty() ? "" : ",") + rat_str(p);
    if (g.parabolic_at_infinity) reps += reps.empty() ? "inf" : ",inf";
    rec.set("name", g.name)
        .set("parabolics", reps)
        .set("critical_exponent", g.critical_exponent)
        .set("comparability_lo", g.comparability_lo)
        .set("comparability_hi", g.comparability_hi);
    return rec;
}

// Disjoint tree-horoball family.
struct TreeHoroballFamily {
    std::vector<TreeHoroball> members;

    std::vector<DisjointnessViolation> check_disjoint() const {
        std::vector<DisjointnessViolation> bad;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!tree_horoballs_disjoint(members[i], members[j])) bad.push_back({i, j});
        return bad;
    }

    std::optional<std::size_t> locate(const TreeInteriorPoint& z) const {
        for (std::size_t i = 0; i < members.size(); ++i)
            if (tree_horoball_contains(members[i], z)) return i;
        return std::nullopt;
    }

    int min_shadow_exp() const {
        int m = std::numeric_limits<int>::max();
        for (const auto& H : members) m = std::min(m, H.shadow_exp);
        return members.empty() ? 0 : m;
    }
};

}  // namespace horogame
