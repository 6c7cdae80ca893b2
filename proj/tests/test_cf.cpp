#include <catch2/catch_amalgamated.hpp>

#include "horogame/cf.hpp"

using namespace horogame;

TEST_CASE("continued fraction of the golden fractional part is all ones") {
    auto cf = continued_fraction(golden_fractional(), 25);
    REQUIRE(cf.digits.size() == 25);
    for (const auto& d : cf.digits) CHECK(d == 1);
}

TEST_CASE("rational continued fractions terminate") {
    auto cf = continued_fraction(Rat(16, 113), 20);
    CHECK(cf.terminated);
    REQUIRE(cf.digits.size() >= 2);
    CHECK(cf.digits[0] == 7);
    CHECK(cf.digits[1] == 16);  // 113 = 7*16 + 1
    // reconstruct
    Rat v = 0;
    for (auto it = cf.digits.rbegin(); it != cf.digits.rend(); ++it) v = 1 / (Rat(*it) + v);
    CHECK(v == Rat(16, 113));
}

TEST_CASE("interval continued fractions certify digits or refuse") {
    // pi - 3 to 30 decimal places
    auto x = IntervalReal::from_decimal("0.141592653589793238462643383280");
    auto cf = continued_fraction(x, 8);
    REQUIRE(cf.digits.size() >= 4);
    CHECK(cf.digits[0] == 7);
    CHECK(cf.digits[1] == 15);
    CHECK(cf.digits[2] == 1);
    CHECK(cf.digits[3] == 292);
    // poor precision refuses instead of guessing
    auto coarse = IntervalReal{Rat(141, 1000), Rat(142, 1000)};
    auto cf2 = continued_fraction(coarse, 8);
    CHECK(cf2.truncated);
    CHECK(cf2.digits.size() < 8);
    for (std::size_t i = 0; i < cf2.digits.size(); ++i) CHECK(cf2.digits[i] == cf.digits[i]);
}

TEST_CASE("golden ratio margins: brute force and semiconvergent scan agree") {
    Surd phi = golden_fractional();
    BAWitness w1, w2;
    auto ce1 = verify_ba_bruteforce(phi, Rat(38, 100), 1000, &w1);
    auto ce2 = verify_ba_ford(phi, Rat(38, 100), 1000, &w2);
    CHECK_FALSE(ce1.has_value());
    CHECK_FALSE(ce2.has_value());
    // the infimum is 2 - golden ratio = 0.381966..., attained at p/q = 1/1
    CHECK(w1.min_margin == Catch::Approx(0.3819660113).epsilon(1e-9));
    CHECK(w2.min_margin == Catch::Approx(w1.min_margin).epsilon(1e-12));
    CHECK(w2.worst_q == 1);
    // raising s past the infimum flips the verdict at q = 1
    auto ce3 = verify_ba_ford(phi, Rat(2, 5), 1000);
    REQUIRE(ce3.has_value());
    CHECK(ce3->q == 1);
}

TEST_CASE("rationals are not badly approximable") {
    auto ce = verify_ba_ford(Rat(355, 113), Rat(1, 1000000), 200);
    REQUIRE(ce.has_value());
    CHECK(Rat(ce->p, ce->q) == Rat(355, 113));
    CHECK(ce->margin == 0.0);
}

TEST_CASE("pi - 3 margins at q = 113") {
    auto x = IntervalReal::from_decimal("0.14159265358979323846264338327950288419716939937510");
    // min over q <= 500 is about 0.0034063 at 16/113
    auto pass = verify_ba_ford(x, Rat(1, 1000000), 500);
    CHECK_FALSE(pass.has_value());
    auto fail = verify_ba_ford(x, Rat(4, 1000), 500);
    REQUIRE(fail.has_value());
    CHECK(fail->q == 113);
    CHECK(fail->margin == Catch::Approx(0.0034063).epsilon(1e-3));
    BAWitness w;
    verify_ba_ford(x, Rat(3, 1000), 500, &w);
    CHECK(w.min_margin == Catch::Approx(0.0034063).epsilon(1e-4));
    CHECK(w.worst_q == 113);
}

TEST_CASE("scan handles x outside the unit interval by shifting") {
    BAWitness w;
    auto ce = verify_ba_ford(Rat(7, 2), Rat(1, 100), 1);  // 3.5: nearest integers at distance 1/2
    CHECK_FALSE(ce.has_value());
    auto ce2 = verify_ba_ford(Rat(7, 2), Rat(1, 100), 2);  // q=2 hits exactly
    REQUIRE(ce2.has_value());
    CHECK(Rat(ce2->p, ce2->q) == Rat(7, 2));
}

TEST_CASE("brute force and scan agree on random rationals") {
    for (unsigned long long seed = 1; seed <= 40; ++seed) {
        Rat x(static_cast<long long>((seed * 2654435761ULL) % 100000), 100001);
        BAWitness w1, w2;
        auto c1 = verify_ba_bruteforce(x, Rat(1, 100000), 150, &w1);
        auto c2 = verify_ba_ford(x, Rat(1, 100000), 150, &w2);
        CHECK(c1.has_value() == c2.has_value());
        if (!c1 && !c2) CHECK(w1.min_margin == Catch::Approx(w2.min_margin).epsilon(1e-12));
    }
}

TEST_CASE("surd arithmetic sanity") {
    Surd phi = golden_fractional();
    CHECK(phi.sign() == 1);
    CHECK((phi - Rat(1)).sign() == -1);
    CHECK(phi.floor() == 0);
    // 1/phi = phi + 1
    Surd inv = phi.reciprocal();
    CHECK((inv - Rat(1)).sign() == 1);
    CHECK(inv.floor() == 1);
    CHECK(inv.value() == Catch::Approx(phi.value() + 1).epsilon(1e-12));
}
