#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "horogame/horoball.hpp"
#include "horogame/rng.hpp"
#include "support/oracles.hpp"

using namespace horogame;
namespace oracle = horogame::testing;

TEST_CASE("disk membership is the busemann sublevel set") {
    SplitMix64 rng(41);
    for (int it = 0; it < 1000; ++it) {
        Rat base(static_cast<long long>(rng.below(200)) - 100, 100);
        Rat diam(static_cast<long long>(rng.below(100)) + 1, 100);
        DiskHoroball H{base, diam};
        Rat zx(static_cast<long long>(rng.below(400)) - 200, 100);
        Rat zy(static_cast<long long>(rng.below(200)) + 1, 100);
        HPointQ z{zx, zy};
        GeodesicRay ray{BoundaryPoint::at(base)};
        double b = busemann(ray, z.approx());
        bool inside = H.contains(z);
        if (std::abs(b - H.level()) > 1e-9) CHECK(inside == (b < H.level()));
    }
}

TEST_CASE("tree shadow equals the prefix ball exactly") {
    for (int branching : {2, 3}) {
        TreeBoundary tb(branching, 8);
        auto words = tb.all_words();
        for (int level_exp : {0, 1, 3, 5}) {
            TreeHoroball H{words[words.size() / 3], level_exp};
            for (const auto& w : words) {
                bool in_shadow = tree_shadow_contains(H, w);
                bool in_ball = tb.scalar_le(tb.distance(w, H.base), TreeLevel::of(H.shadow_exp));
                CHECK(in_shadow == in_ball);
            }
        }
    }
}

TEST_CASE("tree shadow from first principles: ray dips iff prefix ball") {
    TreeBoundary tb(2, 8);
    auto words = tb.all_words();
    TreeHoroball H{words[5], 3};
    for (const auto& w : words) {
        // min over depths of the busemann function along the ray to w
        bool meets = false;
        for (int t = 0; t <= tb.depth; ++t)
            if (tree_horoball_contains(H, TreeInteriorPoint{w.substr(0, t)})) meets = true;
        CHECK(meets == tree_shadow_contains(H, w));
    }
}

TEST_CASE("half-plane shadow endpoints match the tangency quadratic") {
    for (auto [p, q] : {std::pair{1, 2}, {1, 3}, {2, 5}}) {
        DiskHoroball H{Rat(p, q), Rat(1, static_cast<long long>(q) * q)};
        auto sh = horoball_shadow(H, 40);
        double pd = static_cast<double>(p) / q, hd = 1.0 / (static_cast<double>(q) * q);
        // the right endpoint solves the sign- quadratic, the left the sign+ one
        bool left_found = false, right_found = false;
        for (double r : oracle::shadow_tangency_roots(pd, hd, +1))
            if (std::abs(r - to_double(sh.interval.lo)) < 1e-6) left_found = true;
        for (double r : oracle::shadow_tangency_roots(pd, hd, -1))
            if (std::abs(r - to_double(sh.interval.hi)) < 1e-6) right_found = true;
        CHECK(left_found);
        CHECK(right_found);
    }
}

TEST_CASE("shadow of the diameter-1 circle at 0 is symmetric") {
    auto sh = horoball_shadow(DiskHoroball{Rat(0), Rat(1)});
    CHECK(to_double(sh.interval.lo) == Catch::Approx(-1.0).margin(1e-9));
    CHECK(to_double(sh.interval.hi) == Catch::Approx(1.0).margin(1e-9));
    CHECK(to_double(sh.radius) == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("shadow radius shrinks monotonically with the horoball") {
    Rat prev_radius = 10;
    for (Rat diam : {Rat(1, 2), Rat(1, 4), Rat(1, 8), Rat(1, 16)}) {
        auto sh = horoball_shadow(DiskHoroball{Rat(1, 3), diam});
        CHECK(sh.radius < prev_radius);
        prev_radius = sh.radius;
    }
}

TEST_CASE("scale_horoball") {
    SECTION("domain") {
        CHECK_THROWS_AS(scale_horoball(DiskHoroball{Rat(0), Rat(1, 2)}, Rat(1)), std::domain_error);
        CHECK_THROWS_AS(scale_tree_horoball(TreeHoroball{"0000", 2}, 0), std::domain_error);
    }
    SECTION("tree: exact level shift") {
        TreeHoroball H{"01010101", 2};
        TreeHoroball sH = scale_tree_horoball(H, 3);  // factor a^-3
        CHECK(sH.shadow_exp == 5);
        // boundary-to-boundary distance along the ray equals the level shift
        CHECK(sH.shadow_exp - H.shadow_exp == 3);
        // double rescale composes additively
        auto s2 = scale_tree_horoball(scale_tree_horoball(H, 1), 2);
        CHECK(s2.shadow_exp == scale_tree_horoball(H, 3).shadow_exp);
    }
    SECTION("half-plane: shadow radius multiplies by s within tolerance") {
        DiskHoroball H{Rat(1, 2), Rat(1, 4)};
        Rat R = horoball_shadow(H).radius;
        DiskHoroball sH = scale_horoball(H, Rat(1, 2));
        Rat R2 = horoball_shadow(sH).radius;
        CHECK(to_double(R2) == Catch::Approx(to_double(R) / 2).epsilon(1e-6));
        CHECK(sH.diameter < H.diameter);  // sH inside H
        CHECK(sH.base == H.base);
    }
}

TEST_CASE("horoball from a boundary ball") {
    SECTION("tree") {
        auto H = tree_horoball_from_boundary_ball("00110011", 3);
        CHECK(H.level() == -3);
        TreeBoundary tb(2, 8);
        for (const auto& w : tb.all_words())
            CHECK(tree_shadow_contains(H, w) == (tb.prefix_len(w, H.base) >= 3));
        CHECK(tree_horoball_from_boundary_ball("0", 0).level() == 0);
    }
    SECTION("half-plane: shadow of the assigned horoball stays comparable") {
        // composing with the shadow recovers a ball of comparable radius;
        // C e^{4 delta} with C = 2 is a generous cap
        double cap = 2.0 * std::exp(4 * kHalfPlaneDelta);
        for (auto [xi, r] : {std::pair{Rat(1, 2), Rat(1, 10)}, {Rat(1, 5), Rat(1, 50)}}) {
            DiskHoroball H = horoball_from_boundary_ball(xi, r);
            CHECK(H.diameter == r * (1 + xi * xi));
            auto sh = horoball_shadow(H);
            CHECK(to_double(sh.radius) < cap * to_double(r));
        }
    }
}

TEST_CASE("horoballs are quasiconvex within the default delta") {
    // points of the connecting geodesic stay within delta of the horoball,
    // measured by the busemann excess
    DiskHoroball H{Rat(0), Rat(1, 2)};
    GeodesicRay ray{BoundaryPoint::at(Rat(0))};
    SplitMix64 rng(53);
    auto sample_inside = [&]() {
        while (true) {
            Rat x(static_cast<long long>(rng.below(200)) - 100, 400);
            Rat y(static_cast<long long>(rng.below(190)) + 5, 400);
            if (H.contains(HPointQ{x, y})) return HPoint{to_double(x), to_double(y)};
        }
    };
    for (int it = 0; it < 100; ++it) {
        HPoint a = sample_inside(), b = sample_inside();
        for (int k = 0; k <= 16; ++k) {
            double f = k / 16.0;
            HPoint p;
            if (std::abs(a.x - b.x) < 1e-12) {
                p = HPoint{a.x, a.y * std::pow(b.y / a.y, f)};
            } else {
                double c = (a.x * a.x + a.y * a.y - b.x * b.x - b.y * b.y) / (2 * (a.x - b.x));
                double r = std::hypot(a.x - c, a.y);
                double t0 = std::atan2(a.y, a.x - c), t1 = std::atan2(b.y, b.x - c);
                double th = t0 + (t1 - t0) * f;
                p = HPoint{c + r * std::cos(th), r * std::sin(th)};
            }
            CHECK(busemann(ray, p) <= H.level() + kHalfPlaneDelta + 1e-9);
        }
    }
}

TEST_CASE("tree horoball disjointness criterion") {
    TreeHoroball A{"00000000", 2}, B{"00110000", 2}, C{"01000000", 2};
    CHECK_FALSE(tree_horoballs_disjoint(A, B));  // overlap 2 >= (2+2)/2
    CHECK(tree_horoballs_disjoint(A, C));        // overlap 1 < 2
    // exhaustively confirm against shared interior points
    TreeBoundary tb(2, 8);
    auto words = tb.all_words();
    auto share_point = [&](const TreeHoroball& X, const TreeHoroball& Y) {
        for (const auto& w : words)
            for (int t = 0; t <= 8; ++t) {
                TreeInteriorPoint z{w.substr(0, t)};
                if (tree_horoball_contains(X, z) && tree_horoball_contains(Y, z)) return true;
            }
        return false;
    };
    CHECK(share_point(A, B));
    CHECK_FALSE(share_point(A, C));
}
