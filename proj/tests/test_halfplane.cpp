#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "horogame/halfplane.hpp"
#include "horogame/rng.hpp"
#include "support/oracles.hpp"

using namespace horogame;
namespace oracle = horogame::testing;

TEST_CASE("hyperbolic distance closed form") {
    HPoint i = hp_basepoint();
    CHECK(hyp_distance(i, i) == 0.0);
    CHECK(hyp_distance(i, {0, 2}) == Catch::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(hyp_distance(i, {1, 1}) == Catch::Approx(std::acosh(1.5)).epsilon(1e-12));
}

TEST_CASE("distance agrees with arclength integration") {
    CHECK(hyp_distance({0, 1}, {0, 2}) ==
          Catch::Approx(oracle::hyp_distance_by_integration({0, 1}, {0, 2})).epsilon(1e-7));
    CHECK(hyp_distance({0, 1}, {1, 1}) ==
          Catch::Approx(oracle::hyp_distance_by_integration({0, 1}, {1, 1})).epsilon(1e-7));
    CHECK(hyp_distance({-0.3, 0.2}, {0.7, 1.4}) ==
          Catch::Approx(oracle::hyp_distance_by_integration({-0.3, 0.2}, {0.7, 1.4})).epsilon(1e-7));
}

TEST_CASE("geodesic points") {
    GeodesicRay up{BoundaryPoint::inf()};
    auto p = geodesic_point(up, 1.0);
    CHECK(p.x == 0.0);
    CHECK(p.y == Catch::Approx(std::exp(1.0)));

    GeodesicRay to_zero{BoundaryPoint::at(Rat(0))};
    auto q = geodesic_point(to_zero, std::log(2.0));
    CHECK(q.y == Catch::Approx(0.5).epsilon(1e-12));  // height 1/2 toward 0
    CHECK(hyp_distance(hp_basepoint(), q) == Catch::Approx(std::log(2.0)).epsilon(1e-9));

    // convergence to the endpoint
    GeodesicRay to_x{BoundaryPoint::at(Rat(3, 4))};
    double prev = 1;
    for (double t : {2.0, 5.0, 10.0, 20.0}) {
        auto z = geodesic_point(to_x, t);
        double eu = std::hypot(z.x - 0.75, z.y);
        CHECK(eu < prev);
        prev = eu;
    }
    CHECK(prev < 1e-8);
}

TEST_CASE("rays are unit speed") {
    SplitMix64 rng(11);
    for (int it = 0; it < 50; ++it) {
        Rat x(static_cast<long long>(rng.below(2001)) - 1000, 500);
        GeodesicRay ray{BoundaryPoint::at(x)};
        double s = static_cast<double>(rng.below(1000)) / 50.0;
        double t = s + static_cast<double>(rng.below(1000)) / 50.0;
        if (t > 20) t = 20;
        if (s > t) std::swap(s, t);
        auto zs = geodesic_point(ray, s);
        auto zt = geodesic_point(ray, t);
        CHECK(hyp_distance(zs, zt) == Catch::Approx(t - s).margin(1e-9));
    }
}

TEST_CASE("exact probe matches the ray parametrization") {
    // gamma_x(-ln rho) as exact rationals
    HPointQ z = ray_point_at_scale(Rat(1, 2), Rat(1, 8));
    CHECK(z.x == Rat(126, 257));
    CHECK(z.y == Rat(40, 257));
    CHECK(cosh_distance_exact(hpq_basepoint(), z) == Rat(65, 16));  // cosh(ln 8)
    for (auto [x, rho] : {std::pair{Rat(2, 3), Rat(1, 16)}, {Rat(0), Rat(1, 3)}, {Rat(1), Rat(1, 5)}}) {
        HPointQ w = ray_point_at_scale(x, rho);
        GeodesicRay ray{BoundaryPoint::at(x)};
        auto approx = geodesic_point(ray, -std::log(to_double(rho)));
        CHECK(to_double(w.x) == Catch::Approx(approx.x).margin(1e-12));
        CHECK(to_double(w.y) == Catch::Approx(approx.y).margin(1e-12));
    }
    CHECK_THROWS_AS(ray_point_at_scale(Rat(1, 2), Rat(2)), std::domain_error);
}

TEST_CASE("busemann closed forms") {
    GeodesicRay up{BoundaryPoint::inf()};
    CHECK(busemann(up, hp_basepoint()) == 0.0);
    CHECK(busemann(up, {0, 2}) == Catch::Approx(-std::log(2.0)));
    CHECK(busemann(up, {1, 1}) == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("busemann is the limit of d(gamma(t), z) - t") {
    SplitMix64 rng(5);
    for (int it = 0; it < 30; ++it) {
        Rat xi(static_cast<long long>(rng.below(400)) - 200, 100);
        GeodesicRay ray{BoundaryPoint::at(xi)};
        HPoint z{static_cast<double>(rng.below(400)) / 100.0 - 2.0,
                 0.05 + static_cast<double>(rng.below(300)) / 100.0};
        double T = 30;
        double limit = hyp_distance(geodesic_point(ray, T), z) - T;
        CHECK(busemann(ray, z) == Catch::Approx(limit).margin(1e-9));
    }
}

TEST_CASE("busemann consistency along the ray") {
    for (Rat x : {Rat(0), Rat(1, 2), Rat(-3, 4)}) {
        GeodesicRay ray{BoundaryPoint::at(x)};
        for (double t : {0.5, 2.0, 7.5, 15.0})
            CHECK(busemann(ray, geodesic_point(ray, t)) == Catch::Approx(-t).margin(1e-9));
    }
}

TEST_CASE("gromov product") {
    HPoint a{0, 2};
    CHECK(gromov_product(a, a) == Catch::Approx(hyp_distance(a, hp_basepoint())));
    HPoint b{1, 1};
    double expected = 0.5 * (std::log(2.0) + std::acosh(1.5) - hyp_distance(a, b));
    CHECK(gromov_product(a, b) == Catch::Approx(expected));
}

TEST_CASE("boundary gromov product matches radial limits") {
    SplitMix64 rng(17);
    for (int it = 0; it < 20; ++it) {
        Rat x(static_cast<long long>(rng.below(200)), 200);
        Rat y(static_cast<long long>(rng.below(200)) + 201, 200);
        GeodesicRay rx{BoundaryPoint::at(x)}, ry{BoundaryPoint::at(y)};
        double T = 25;
        double radial = gromov_product(geodesic_point(rx, T), geodesic_point(ry, T));
        CHECK(gromov_product_boundary(x, y) == Catch::Approx(radial).margin(1e-7));
    }
}

TEST_CASE("euclidean window metric is a visual metric with C = 2") {
    SplitMix64 rng(23);
    for (int it = 0; it < 500; ++it) {
        Rat x(static_cast<long long>(rng.below(1000)), 1000);
        Rat y(static_cast<long long>(rng.below(1000)), 1000);
        if (x == y) continue;
        double e = std::exp(-gromov_product_boundary(x, y));
        double d = std::abs(to_double(x) - to_double(y));
        CHECK(d > e / 2.0 * 0.999999);
        CHECK(d < e * 2.0 * 1.000001);
    }
}

TEST_CASE("thin triangles validate the default delta") {
    // delta = log(1+sqrt 2) for this model; random triangles stay within it
    SplitMix64 rng(31);
    auto rnd_pt = [&]() {
        return HPoint{static_cast<double>(rng.below(600)) / 100.0 - 3.0,
                      0.05 + static_cast<double>(rng.below(400)) / 100.0};
    };
    auto geo_sample = [](const HPoint& a, const HPoint& b, double f) {
        // point at fraction f of the arc between a and b
        if (std::abs(a.x - b.x) < 1e-12) return HPoint{a.x, a.y * std::pow(b.y / a.y, f)};
        double c = (a.x * a.x + a.y * a.y - b.x * b.x - b.y * b.y) / (2 * (a.x - b.x));
        double r = std::hypot(a.x - c, a.y);
        double t0 = std::atan2(a.y, a.x - c), t1 = std::atan2(b.y, b.x - c);
        double th = t0 + (t1 - t0) * f;
        return HPoint{c + r * std::cos(th), r * std::sin(th)};
    };
    auto dist_to_side = [&](const HPoint& p, const HPoint& a, const HPoint& b) {
        double best = 1e9;
        for (int k = 0; k <= 64; ++k) best = std::min(best, hyp_distance(p, geo_sample(a, b, k / 64.0)));
        return best;
    };
    double worst = 0;
    for (int it = 0; it < 60; ++it) {
        HPoint a = rnd_pt(), b = rnd_pt(), c = rnd_pt();
        for (int k = 0; k <= 32; ++k) {
            HPoint p = geo_sample(b, c, k / 32.0);
            double d = std::min(dist_to_side(p, a, b), dist_to_side(p, a, c));
            worst = std::max(worst, d);
        }
    }
    CHECK(worst < kHalfPlaneDelta + 1e-6);
}
