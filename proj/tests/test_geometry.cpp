#include <algorithm>
#include <random>

#include "doctest.h"
#include "madhava/error.hpp"
#include "madhava/geometry.hpp"
#include "madhava/pi_series.hpp"

using namespace madhava;

namespace {

FixedDec dec(const char* s) { return FixedDec::parse(s); }

QuadSides quad(const char* a, const char* b, const char* c, const char* d) { return {dec(a), dec(b), dec(c), dec(d)}; }

FixedDec ulps(unsigned n, unsigned scale) { return FixedDec(Sign::Plus, BigNat(n), scale); }

FixedDec gap(const FixedDec& a, const FixedDec& b) {
    const unsigned s = std::max(a.scale(), b.scale());
    return (a.rescaled(s) - b.rescaled(s)).abs();
}

} // namespace

TEST_CASE("known quadrilaterals") {
    // unit square: R = 1/sqrt(2)
    CHECK(circumradius(quad("1", "1", "1", "1"), 12).to_string() == "0.707106781186");
    // 3x4 rectangle: diagonal 5
    CHECK(circumradius(quad("3", "4", "3", "4"), 10).to_string() == "2.5000000000");
    CHECK(circumradius(quad("3.0", "4.00", "3", "4"), 4).to_string() == "2.5000");
}

TEST_CASE("symmetry under rotation and reversal is exact") {
    const QuadSides q = quad("2.5", "3.1", "4.2", "3.7");
    const FixedDec r = circumradius(q, 20);
    CHECK(identical(circumradius({q.b, q.c, q.d, q.a}, 20), r));
    CHECK(identical(circumradius({q.c, q.d, q.a, q.b}, 20), r));
    CHECK(identical(circumradius({q.d, q.a, q.b, q.c}, 20), r));
    CHECK(identical(circumradius({q.d, q.c, q.b, q.a}, 20), r));
    CHECK(identical(circumradius({q.a, q.d, q.c, q.b}, 20), r));
}

TEST_CASE("scale covariance") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        std::array<FixedDec, 4> s;
        for (auto& v : s) {
            v = FixedDec(Sign::Plus, BigNat(1000 + rng() % 9000), 3); // 1.000 .. 9.999
        }
        std::sort(s.begin(), s.end());
        if (fd_mul_int(s[3], 2) >= s[0] + s[1] + s[2] + s[3]) continue;
        const QuadSides q{s[0], s[2], s[1], s[3]};
        const FixedDec r = circumradius(q, 20);

        const QuadSides doubled{fd_mul_int(q.a, 2), fd_mul_int(q.b, 2), fd_mul_int(q.c, 2), fd_mul_int(q.d, 2)};
        CHECK(gap(circumradius(doubled, 20), fd_mul_int(r, 2)) <= ulps(10, 20));

        // divide by 3 exactly by going to scale 30 first
        const auto third = [](const FixedDec& v) { return fd_div_int(v.rescaled(30), 3); };
        const QuadSides thirds{third(q.a), third(q.b), third(q.c), third(q.d)};
        CHECK(gap(circumradius(thirds, 20), fd_div_int(r, 3)) <= ulps(10, 20));
    }
}

TEST_CASE("oracle chords on a circle") {
    const FixedDec pi = pi_at(30);
    const FixedDec half_pi = fd_div_int(pi, 2);
    const std::array<FixedDec, 4> square = {FixedDec::from_int(0, 30), half_pi, pi, pi + half_pi};
    const FixedDec root2 = fd_isqrt(dec("2"), 20);
    const QuadSides unit = circumradius_oracle(square, dec("1"), 20);
    for (const FixedDec* side : {&unit.a, &unit.b, &unit.c, &unit.d}) {
        CHECK(gap(*side, root2) <= ulps(5, 20));
    }
    const QuadSides two = circumradius_oracle(square, dec("2"), 20);
    CHECK(gap(two.c, fd_mul_int(root2, 2)) <= ulps(5, 20));
}

TEST_CASE("round trip through the oracle") {
    const unsigned s = 16;
    const FixedDec two_pi = fd_mul_int(pi_at(s + 4), 2);
    std::mt19937_64 rng(4096);
    int used = 0;
    for (int i = 0; used < 100; ++i) {
        REQUIRE(i < 1000);
        std::array<FixedDec, 4> angles;
        for (auto& a : angles) {
            a = fd_mul(two_pi, FixedDec(Sign::Plus, BigNat(rng() % 1'000'000'000ull), 9)).rescaled(s);
        }
        std::sort(angles.begin(), angles.end());
        // keep every arc at least 0.2 rad so no side collapses
        bool ok = true;
        for (std::size_t k = 1; k < 4; ++k) ok = ok && angles[k] - angles[k - 1] > dec("0.2").rescaled(s);
        ok = ok && two_pi.rescaled(s) - (angles[3] - angles[0]) > dec("0.2").rescaled(s);
        if (!ok) continue;
        ++used;
        const FixedDec radius(Sign::Plus, BigNat(500 + rng() % 9500), 3);
        const QuadSides q = circumradius_oracle(angles, radius, s);
        CHECK(gap(circumradius(q, s), radius) <= dec("0.000000000001"));
    }

    const std::array<FixedDec, 4> example = {dec("0.3"), dec("1.4"), dec("3.0"), dec("4.9")};
    const QuadSides q = circumradius_oracle(example, dec("1.75"), 12);
    CHECK(gap(circumradius(q, 12), dec("1.75")) <= dec("0.00000001"));
}

TEST_CASE("degenerate input") {
    CHECK_THROWS_AS(circumradius(quad("0", "1", "1", "1"), 10), DomainError);
    CHECK_THROWS_AS(circumradius(quad("-1", "1", "1", "1"), 10), DomainError);
    CHECK_THROWS_AS(circumradius(quad("3", "1", "1", "1"), 10), DomainError);
    CHECK_THROWS_AS(circumradius(quad("5", "1", "2", "2"), 10), DomainError);

    const std::array<FixedDec, 4> coincident = {dec("0.5"), dec("0.5"), dec("2"), dec("4")};
    CHECK_THROWS_AS(circumradius_oracle(coincident, dec("1"), 10), DomainError);
    const std::array<FixedDec, 4> outside = {dec("0.5"), dec("1"), dec("2"), dec("7")};
    CHECK_THROWS_AS(circumradius_oracle(outside, dec("1"), 10), DomainError);
}
