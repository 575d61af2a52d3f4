#include <random>
#include <string>

#include "doctest.h"
#include "madhava/error.hpp"
#include "madhava/fixed_dec.hpp"

using madhava::BigNat;
using madhava::FixedDec;
using madhava::Sign;

namespace {

FixedDec dec(const char* s) { return FixedDec::parse(s); }

} // namespace

TEST_CASE("fd_from_ratio truncates") {
    CHECK(madhava::fd_from_ratio(BigNat(1), BigNat(3), Sign::Plus, 5).to_string() == "0.33333");
    CHECK(madhava::fd_from_ratio(BigNat(2), BigNat(3), Sign::Plus, 5).to_string() == "0.66666");
    CHECK(madhava::fd_from_ratio(BigNat(1), BigNat(1), Sign::Plus, 10).to_string() == "1.0000000000");
    CHECK(madhava::fd_from_ratio(BigNat(2'827'433'388'233ull), BigNat(900'000'000'000ull), Sign::Plus, 14)
              .to_string() == "3.14159265359222");
    CHECK(madhava::fd_from_ratio(BigNat(2), BigNat(3), Sign::Minus, 3).to_string() == "-0.666");
    CHECK_THROWS_AS(madhava::fd_from_ratio(BigNat(1), BigNat(), Sign::Plus, 3), madhava::DivisionByZero);
}

TEST_CASE("add, sub, mul") {
    CHECK((dec("0.50000") + dec("0.25000")).to_string() == "0.75000");
    CHECK((dec("0.33333") * dec("3.00000")).to_string() == "0.99999");
    CHECK((dec("-1.5") * dec("2.25")).to_string() == "-3.37"); // -3.375 truncated toward zero
    CHECK((dec("1.25") - dec("2.50")).to_string() == "-1.25");

    const FixedDec x = dec("-12.3456");
    const FixedDec zero = x - x;
    CHECK(zero.is_zero());
    CHECK(zero.sign() == Sign::Plus);
    CHECK(zero.scale() == 4);
    CHECK(zero.to_string() == "0.0000");

    CHECK_THROWS_AS(dec("1.0") + dec("1.00"), madhava::ScaleMismatch);
    CHECK_THROWS_AS(dec("1.0") - dec("1.00"), madhava::ScaleMismatch);
    // mul keeps the larger input scale
    CHECK((dec("1.5") * dec("0.333")).to_string() == "0.499");
}

TEST_CASE("fd_isqrt") {
    CHECK(madhava::fd_isqrt(dec("0"), 4).to_string() == "0.0000");
    CHECK(madhava::fd_isqrt(dec("4"), 6).to_string() == "2.000000");
    CHECK(madhava::fd_isqrt(dec("12"), 12).to_string() == "3.464101615137");
    CHECK(madhava::fd_isqrt(dec("0.5"), 12).to_string() == "0.707106781186");
    // radicand with more digits than 2*scale
    CHECK(madhava::fd_isqrt(dec("2.0000000000000000001"), 3).to_string() == "1.414");
    CHECK_THROWS_AS(madhava::fd_isqrt(dec("-1"), 4), madhava::DomainError);
}

TEST_CASE("string forms") {
    const FixedDec pi = dec("3.1415926535");
    CHECK(pi.sign() == Sign::Plus);
    CHECK(pi.mantissa() == BigNat(31415926535ull));
    CHECK(pi.scale() == 10);
    CHECK(pi.to_string() == "3.1415926535");

    const FixedDec half = dec("-0.5");
    CHECK(half.sign() == Sign::Minus);
    CHECK(half.mantissa() == BigNat(5));
    CHECK(half.scale() == 1);

    const FixedDec c = dec("2827433388233");
    CHECK(c.scale() == 0);
    CHECK(c.mantissa() == BigNat(2'827'433'388'233ull));

    CHECK(dec("+0.000").to_string() == "0.000");
    CHECK(dec("-0.000").sign() == Sign::Plus);
    CHECK(dec("0.0012").to_string() == "0.0012");

    for (const char* bad : {"", "-", "1.", ".5", "1.2.3", "1e5", "abc", " 1", "--1"}) {
        CHECK_THROWS_AS(dec(bad), madhava::ParseError);
    }
}

TEST_CASE("rescaling and rounding") {
    CHECK(dec("1.23456").rescaled(3).to_string() == "1.234");
    CHECK(dec("-1.23456").rescaled(3).to_string() == "-1.234");
    CHECK(dec("1.2").rescaled(4).to_string() == "1.2000");
    CHECK(dec("1.23450").rounded(3).to_string() == "1.235");
    CHECK(dec("-1.23449").rounded(3).to_string() == "-1.234");
    CHECK(dec("0.99999999999").rounded(10).to_string() == "1.0000000000");
}

TEST_CASE("comparison is by value across scales") {
    CHECK(dec("0.5") == dec("0.500"));
    CHECK_FALSE(identical(dec("0.5"), dec("0.500")));
    CHECK(dec("-2") < dec("-1.999"));
    CHECK(dec("0.001") > dec("-5"));
    CHECK(dec("3.14") < dec("3.1416"));
}

TEST_CASE("properties over random values") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> digit(0, 9);
    std::uniform_int_distribution<int> len(1, 40);
    std::uniform_int_distribution<unsigned> scale_dist(0, 30);
    auto random_digits = [&](int n) {
        std::string s;
        for (int i = 0; i < n; ++i) s += static_cast<char>('0' + digit(rng));
        return s;
    };

    for (int i = 0; i < 1000; ++i) {
        // string round trip of canonical values
        const unsigned scale = scale_dist(rng);
        const FixedDec v(rng() % 2 ? Sign::Minus : Sign::Plus, BigNat::from_string(random_digits(len(rng))), scale);
        CHECK(identical(FixedDec::parse(v.to_string()), v));

        // 0 <= n/d - from_ratio(n, d, s) < 10^-s
        const BigNat n = BigNat::from_string(random_digits(len(rng)));
        BigNat d = BigNat::from_string(random_digits(len(rng) / 2 + 1));
        if (d.is_zero()) d = BigNat(7);
        const FixedDec q = FixedDec::from_ratio(n, d, Sign::Plus, scale);
        const BigNat lhs = q.mantissa() * d;           // q * 10^s * d
        const BigNat rhs = n.mul_pow10(scale);         // n * 10^s
        CHECK(lhs <= rhs);
        CHECK(rhs < lhs + d);

        // isqrt bracket: r^2 <= a < (r + ulp)^2
        const FixedDec a(Sign::Plus, BigNat::from_string(random_digits(len(rng))), scale);
        const unsigned rs = scale_dist(rng);
        const FixedDec r = madhava::fd_isqrt(a, rs);
        const FixedDec r_up = r + r.ulp();
        CHECK(r.mantissa() * r.mantissa() * BigNat::pow10(a.scale()) <= a.mantissa() * BigNat::pow10(2 * rs));
        CHECK(r_up.mantissa() * r_up.mantissa() * BigNat::pow10(a.scale()) > a.mantissa() * BigNat::pow10(2 * rs));
    }
}
