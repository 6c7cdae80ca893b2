#include <catch2/catch_amalgamated.hpp>

#include "horogame/perfectness.hpp"

using namespace horogame;

TEST_CASE("diffuse bound formula") {
    CHECK(diffuse_bound_from_perfectness(Rat(1, 2)) == Rat(1, 16));
    CHECK(diffuse_bound_from_perfectness(Rat(1, 3)) == Rat(1, 36));
    // near 1 the 1-nu term wins and the bound collapses
    CHECK(diffuse_bound_from_perfectness(Rat(99, 100)) == Rat(1, 100));
    CHECK_THROWS_AS(diffuse_bound_from_perfectness(Rat(1)), std::domain_error);
    CHECK_THROWS_AS(diffuse_bound_from_perfectness(Rat(0)), std::domain_error);
}

TEST_CASE("diffuse witness on the unit window") {
    auto sp = real_window_space(0, 1);
    SECTION("obstacle on top of the center") {
        auto w = diffuse_witness(sp, Rat(1, 2), Rat(1, 10), Rat(1, 2), Rat(1, 10));
        REQUIRE(w.has_value());
        // both certifying inequalities
        CHECK(w->dist_to_x + Rat(1, 100) <= Rat(1, 10));
        CHECK(w->dist_to_y > Rat(2, 100));
    }
    SECTION("obstacle far away: x itself works") {
        auto w = diffuse_witness(sp, Rat(1, 2), Rat(1, 10), Rat(5), Rat(1, 10));
        REQUIRE(w.has_value());
        CHECK(w->x_prime == Rat(1, 2));
    }
    SECTION("deterministic") {
        auto w1 = diffuse_witness(sp, Rat(1, 2), Rat(1, 10), Rat(1, 2), Rat(1, 10));
        auto w2 = diffuse_witness(sp, Rat(1, 2), Rat(1, 10), Rat(1, 2), Rat(1, 10));
        REQUIRE(w1.has_value());
        REQUIRE(w2.has_value());
        CHECK(w1->x_prime == w2->x_prime);
    }
}

TEST_CASE("diffuse witness on the middle-thirds cantor set") {
    auto sp = cantor_space(Rat(1, 3), 6);
    auto w = diffuse_witness(sp, Rat(0), Rat(1, 3), Rat(0), Rat(1, 36));
    REQUIRE(w.has_value());
    CHECK(sp.in_field(w->x_prime));
    // the witness clears the obstacle at y = 0 by more than 2 beta rho
    CHECK(w->dist_to_y > Rat(2) * Rat(1, 36) * Rat(1, 3));
    CHECK(w->dist_to_x + Rat(1, 36) * Rat(1, 3) <= Rat(1, 3));
}

TEST_CASE("uniform perfectness of the cantor set at dyadic scales") {
    auto sp = cantor_space(Rat(1, 3), 10);
    std::vector<Rat> scales;
    for (int k = 2; k <= 12; ++k) scales.push_back(Rat(1, 1 << k));  // dyadic, down past 3^-8
    auto rep = check_uniform_perfectness(sp, Rat(1, 4), scales);
    CHECK(rep.passed());
    // every non-vacuous entry carries an explicit witness
    for (const auto& e : rep.entries)
        if (!e.failed && e.witness) {
            Rat d = rat_abs(e.x - *e.witness);
            CHECK(d <= e.R);
            CHECK(d > e.R / 4);
        }
}

TEST_CASE("single point set passes vacuously") {
    LineSpace sp = real_window_space(0, 1);
    sp.field = point_playfield(Rat(1, 2));
    auto rep = check_uniform_perfectness(sp, Rat(9, 10), {Rat(1, 4)});
    CHECK(rep.passed());
    for (const auto& e : rep.entries) CHECK_FALSE(e.witness.has_value());
}

TEST_CASE("window annulus witness") {
    auto sp = real_window_space(0, 1);
    auto rep = check_uniform_perfectness(sp, Rat(9, 10), {Rat(1, 2)}, {Rat(0)});
    CHECK(rep.passed());  // e.g. 1/2 sits in B(0,1/2) - B(0,0.45)
}

TEST_CASE("empty scale list is a domain error") {
    auto sp = cantor_space(Rat(1, 3), 4);
    CHECK_THROWS_AS(check_uniform_perfectness(sp, Rat(1, 3), {}), std::domain_error);
}

TEST_CASE("perfectness at tested scales feeds the diffuse bound") {
    // finite-resolution version of the bound: any certified nu admits
    // witnesses for every beta below min(1-nu, nu^2/4) at the same scales
    auto sp = cantor_space(Rat(1, 3), 8);
    Rat nu(1, 3);
    std::vector<Rat> scales = {Rat(1, 9), Rat(1, 27), Rat(1, 81)};
    REQUIRE(check_uniform_perfectness(sp, nu, scales).passed());
    Rat bound = diffuse_bound_from_perfectness(nu);
    for (const Rat& beta : {Rat(bound / 4), Rat(bound / 2), Rat(bound * 9 / 10)}) {
        for (const Rat& rho : scales) {
            for (const auto& x : sp.sample_points()) {
                for (const Rat& y : {x, Rat(x + beta * rho), Rat(x - 2 * beta * rho)}) {
                    auto w = diffuse_witness(sp, x, rho, y, beta);
                    CHECK(w.has_value());
                }
            }
        }
    }
}

TEST_CASE("reports serialize one record per pair") {
    auto sp = cantor_space(Rat(1, 3), 4);
    auto rep = check_uniform_perfectness(sp, Rat(1, 4), {Rat(1, 9)});
    auto recs = serialize(rep, sp);
    REQUIRE(recs.size() == rep.entries.size() + 1);
    CHECK(recs[0].type == "perfectness-report");
    CHECK(recs[0].get("pass") == "true");
    auto parsed = Record::parse_line(recs[1].to_line());
    REQUIRE(parsed.has_value());
    CHECK(parsed->get("x").has_value());
}
