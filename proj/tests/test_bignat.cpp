#include <random>
#include <string>

#include "doctest.h"
#include "madhava/bignat.hpp"
#include "madhava/error.hpp"

using madhava::BigNat;

namespace {

BigNat big(const char* s) { return BigNat::from_string(s); }

// Random value with 1..max_digits decimal digits.
BigNat random_nat(std::mt19937_64& rng, int max_digits) {
    std::uniform_int_distribution<int> len(1, max_digits);
    std::uniform_int_distribution<int> digit(0, 9);
    std::string s;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
        s += static_cast<char>('0' + digit(rng));
    }
    return BigNat::from_string(s);
}

std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

} // namespace

TEST_CASE("nat_add") {
    CHECK(madhava::nat_add(BigNat(), BigNat()).is_zero());
    CHECK(madhava::nat_add(BigNat(999'999'999'999ull), BigNat(1)) == BigNat(1'000'000'000'000ull));
    CHECK(madhava::nat_add(BigNat(2'827'433'388'231ull), BigNat(2)).to_string() == "2827433388233");
}

TEST_CASE("nat_mul") {
    CHECK(madhava::nat_mul(BigNat(), BigNat(12345)).is_zero());
    CHECK(madhava::nat_mul(BigNat(1'000'000), BigNat(1'000'000)) == BigNat::pow10(12));
    CHECK(madhava::nat_mul(BigNat(3141592653589793ull), BigNat(9)).to_string() == "28274333882308137");
}

TEST_CASE("nat_divrem") {
    auto [q, r] = madhava::nat_divrem(BigNat(7), BigNat(3));
    CHECK(q == BigNat(2));
    CHECK(r == BigNat(1));

    const BigNat a = big("123456789012345678901234567890");
    auto [qa, ra] = madhava::nat_divrem(a, BigNat(1));
    CHECK(qa == a);
    CHECK(ra.is_zero());

    // 2827433388233 * 10^13 / (9 * 10^11), long division done exactly.
    auto [qm, rm] = madhava::nat_divrem(BigNat(2'827'433'388'233ull).mul_pow10(13), BigNat(900'000'000'000ull));
    CHECK(qm.to_string() == "31415926535922");
    CHECK(rm.to_string() == "200000000000");

    CHECK_THROWS_AS(madhava::nat_divrem(a, BigNat()), madhava::DivisionByZero);
}

TEST_CASE("canonical zero and string form") {
    CHECK(BigNat().to_string() == "0");
    CHECK(BigNat::from_string("0000").is_zero());
    CHECK(BigNat::from_string("000123").to_string() == "123");
    CHECK(BigNat::from_string("1000000000").limbs().size() == 2);
    CHECK((BigNat(5) - BigNat(5)).limbs().empty());
    CHECK_THROWS_AS(BigNat::from_string("12a"), madhava::ParseError);
    CHECK_THROWS_AS(BigNat::from_string(""), madhava::ParseError);
    CHECK_THROWS_AS(BigNat(3) - BigNat(4), madhava::DomainError);
}

TEST_CASE("decimal shifts") {
    CHECK(BigNat(7).mul_pow10(20).to_string() == "700000000000000000000");
    CHECK(big("123456789123456789").div_pow10(10) == BigNat(12345678));
    CHECK(BigNat(99).div_pow10(40).is_zero());
    CHECK(BigNat::pow10(0) == BigNat(1));
    CHECK(BigNat(12345).digit_count() == 5);
    CHECK(BigNat().digit_count() == 1);
}

TEST_CASE("isqrt is the floor root") {
    CHECK(BigNat().isqrt().is_zero());
    CHECK(BigNat(1).isqrt() == BigNat(1));
    CHECK(BigNat(15).isqrt() == BigNat(3));
    CHECK(BigNat(16).isqrt() == BigNat(4));
    CHECK(BigNat(12).mul_pow10(24).isqrt().to_string() == "3464101615137");

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const BigNat n = random_nat(rng, 80);
        const BigNat r = n.isqrt();
        CHECK(r * r <= n);
        const BigNat r1 = r + BigNat(1);
        CHECK(r1 * r1 > n);
    }
}

TEST_CASE("small-operand agreement with 128-bit arithmetic") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t x = rng();
        const std::uint64_t y = rng() >> (rng() % 60);
        const auto wx = static_cast<unsigned __int128>(x);
        const auto wy = static_cast<unsigned __int128>(y);
        CHECK((BigNat(x) * BigNat(y)).to_string() == u128_to_string(wx * wy));
        CHECK((BigNat(x) + BigNat(y)).to_string() == u128_to_string(wx + wy));
        if (y != 0) {
            auto [q, r] = madhava::nat_divrem(BigNat(x), BigNat(y));
            CHECK(q == BigNat(x / y));
            CHECK(r == BigNat(x % y));
        }
        CHECK(BigNat::from_u128(wx * wy).to_u128() == wx * wy);
    }
}

TEST_CASE("ring axioms on random operands up to 64 digits") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const BigNat a = random_nat(rng, 64);
        const BigNat b = random_nat(rng, 64);
        const BigNat c = random_nat(rng, 64);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) {
            auto [q, r] = madhava::nat_divrem(a, b);
            CHECK(r < b);
            CHECK(q * b + r == a);
        }
        CHECK(BigNat::from_string(a.to_string()) == a);
    }
}

TEST_CASE("long division exercises the quotient-correction step") {
    // Divisors with a top limb just under the base force qhat overestimates.
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const BigNat b = big("999999999999999999") * random_nat(rng, 20) + BigNat(1);
        const BigNat a = b * random_nat(rng, 40) + random_nat(rng, 10);
        auto [q, r] = madhava::nat_divrem(a, b);
        CHECK(r < b);
        CHECK(q * b + r == a);
    }
}
