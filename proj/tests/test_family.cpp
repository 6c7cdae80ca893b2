#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "horogame/family.hpp"
#include "horogame/rng.hpp"

using namespace horogame;

TEST_CASE("ford family for small qmax") {
    auto F = generate_ford(2);
    REQUIRE(F.size() == 3);
    CHECK(F.members()[0].base == Rat(0));
    CHECK(F.members()[0].diameter == Rat(1));
    CHECK(F.members()[1].base == Rat(1, 2));
    CHECK(F.members()[1].diameter == Rat(1, 4));
    CHECK(F.members()[2].base == Rat(1));
    CHECK(F.members()[2].diameter == Rat(1));
    CHECK(F.has_infinity_horoball());
    CHECK(generate_ford(5).size() == 11);  // 1 + sum of phi(q), q <= 5, over [0,1]
    CHECK_THROWS_AS(generate_ford(0), std::domain_error);
}

TEST_CASE("ford tangency iff unimodular pair") {
    auto F = generate_ford(8);
    for (std::size_t i = 0; i < F.size(); ++i)
        for (std::size_t j = i + 1; j < F.size(); ++j) {
            const auto& A = F.members()[i];
            const auto& B = F.members()[j];
            Rat gap = B.base - A.base;
            BigInt det = numerator(A.base) * denominator(B.base) - numerator(B.base) * denominator(A.base);
            bool tangent = gap * gap == A.diameter * B.diameter;
            CHECK(tangent == (det == 1 || det == -1));
        }
}

TEST_CASE("ford families are disjoint up to qmax 100") {
    auto F = generate_ford(100);
    CHECK(F.size() == 3045);
    CHECK(F.check_disjoint().empty());
    CHECK(F.basepoint_excluded());
}

TEST_CASE("overlapping family is reported") {
    HoroballFamily F({DiskHoroball{Rat(0), Rat(1)}, DiskHoroball{Rat(1, 10), Rat(1)}}, {"manual", ""});
    auto bad = F.check_disjoint();
    REQUIRE(bad.size() == 1);
}

TEST_CASE("rescaled families stay disjoint") {
    auto F = generate_ford(10).rescaled(Rat(1, 2), 24);
    CHECK(F.check_disjoint().empty());
    CHECK(F.basepoint_excluded());
    // double rescale composes on shadow radii (within tolerance)
    auto F1 = generate_ford(3);
    auto once = F1.rescaled(Rat(1, 2), 24).rescaled(Rat(1, 2), 24);
    auto direct = F1.rescaled(Rat(1, 4), 24);
    for (std::size_t i = 0; i < once.size(); ++i) {
        double a = to_double(horoball_shadow(once.members()[i], 24).radius);
        double b = to_double(horoball_shadow(direct.members()[i], 24).radius);
        CHECK(a == Catch::Approx(b).epsilon(1e-4));
    }
}

TEST_CASE("locate finds the unique containing member") {
    auto F = generate_ford(20);
    auto at = F.locate(HPointQ{Rat(1, 2), Rat(1, 8)});
    REQUIRE(at.has_value());
    CHECK(F.members()[*at].base == Rat(1, 2));
    CHECK_FALSE(F.locate(HPointQ{Rat(1, 2), Rat(3)}).has_value());  // above every window circle
    // tangency point of the circles at 0 and 1/2 is in neither interior
    // (tangency point of Ford circles at p/q, p'/q' is rational; use 0 and 1)
    CHECK_FALSE(F.locate(HPointQ{Rat(1, 2), Rat(1, 2)}).has_value());
}

TEST_CASE("locate agrees with brute force") {
    auto F = generate_ford(30);
    SplitMix64 rng(61);
    for (int it = 0; it < 10000; ++it) {
        Rat x(static_cast<long long>(rng.below(1201)) - 100, 1000);
        Rat y(static_cast<long long>(rng.below(1000)) + 1, 1000);
        HPointQ z{x, y};
        CHECK(F.locate(z) == F.locate_bruteforce(z));
    }
}

TEST_CASE("ford shadow radius is comparable to 1/q^2") {
    auto F = generate_ford(50);
    double lo = 1e9, hi = 0;
    for (const auto& H : F.members()) {
        auto sh = horoball_shadow(H, 30);
        // clip to the window before measuring, as the strategy does
        Rat wlo = std::max(sh.interval.lo, Rat(0));
        Rat whi = std::min(sh.interval.hi, Rat(1));
        Rat R = std::max(rat_abs(whi - H.base), rat_abs(H.base - wlo));
        double ratio = to_double(R / H.diameter);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    CHECK(lo > 0.2);
    CHECK(hi < 1.2);  // uniformly bounded factor across q <= 50
}

TEST_CASE("group descriptor measures the comparability constant") {
    auto F = generate_ford(20);
    auto g = psl2z_descriptor(F, 20);
    CHECK(g.valid());
    CHECK(g.critical_exponent == 1.0);
    // the shadow radius stays within a uniform factor of the 1/q^2 diameter
    CHECK(g.comparability_lo > 0.2);
    CHECK(g.comparability_hi < 1.2);
    CHECK(g.comparability_lo <= g.comparability_hi);
    auto rec = group_record(g);
    CHECK(rec.get("name") == "PSL(2,Z)");
    CHECK(rec.get("parabolics") == "0,inf");
}

TEST_CASE("family file round trip") {
    auto F = generate_ford(2);
    std::ostringstream os;
    save_family(F, os);
    std::istringstream is(os.str());
    auto G = load_family(is, "roundtrip");
    REQUIRE(G.size() == F.size());
    for (std::size_t i = 0; i < F.size(); ++i) {
        CHECK(G.members()[i].base == F.members()[i].base);
        CHECK(G.members()[i].diameter == F.members()[i].diameter);
    }
}

TEST_CASE("family file errors") {
    SECTION("empty file gives the empty family") {
        std::istringstream is("# nothing here\n\n");
        auto F = load_family(is, "empty");
        CHECK(F.empty());
    }
    SECTION("malformed record names the line") {
        std::istringstream is("horoball base=0 diameter=1\nnot-a-record\n");
        try {
            load_family(is, "bad");
            FAIL("expected parse error");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("bad:2") != std::string::npos);
        }
    }
    SECTION("overlapping family rejected") {
        std::istringstream is("horoball base=0 diameter=1\nhoroball base=1/10 diameter=1\n");
        CHECK_THROWS_AS(load_family(is, "overlap"), std::invalid_argument);
    }
    SECTION("bad rational field") {
        std::istringstream is("horoball base=zebra diameter=1\n");
        CHECK_THROWS_AS(load_family(is, "zebra"), std::invalid_argument);
    }
}
