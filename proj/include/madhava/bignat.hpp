#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace madhava {

/// Arbitrary-size non-negative integer.
///
/// Limbs are base 10^9, little-endian. Zero is the empty limb vector and no
/// other value has a zero top limb. Decimal scaling by 10^k is therefore a
/// limb shift plus one short multiplication, which is what FixedDec leans on.
class BigNat {
public:
    using Limb = std::uint32_t;
    static constexpr Limb kBase = 1'000'000'000u;
    static constexpr unsigned kLimbDigits = 9;

    BigNat() = default;
    BigNat(std::uint64_t value); // NOLINT(google-explicit-constructor)

    static BigNat from_u128(unsigned __int128 value);
    /// Parses a plain run of decimal digits (leading zeros allowed).
    static BigNat from_string(std::string_view digits);
    static BigNat pow10(unsigned exponent);

    std::string to_string() const;
    std::optional<std::uint64_t> to_u64() const;
    std::optional<unsigned __int128> to_u128() const;

    bool is_zero() const noexcept { return limbs_.empty(); }
    bool is_odd() const noexcept { return !limbs_.empty() && (limbs_.front() & 1u) != 0; }
    std::span<const Limb> limbs() const noexcept { return limbs_; }
    /// Number of decimal digits; zero has one digit.
    std::size_t digit_count() const;

    friend bool operator==(const BigNat&, const BigNat&) = default;
    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b);

    friend BigNat operator+(const BigNat& a, const BigNat& b);
    /// Throws DomainError when b > a.
    friend BigNat operator-(const BigNat& a, const BigNat& b);
    friend BigNat operator*(const BigNat& a, const BigNat& b);
    friend BigNat operator/(const BigNat& a, const BigNat& b);
    friend BigNat operator%(const BigNat& a, const BigNat& b);

    BigNat& operator+=(const BigNat& b) { return *this = *this + b; }
    BigNat& operator-=(const BigNat& b) { return *this = *this - b; }
    BigNat& operator*=(const BigNat& b) { return *this = *this * b; }

    BigNat mul_small(Limb m) const;
    /// Quotient and remainder by a single machine word. Throws DivisionByZero.
    std::pair<BigNat, std::uint64_t> divrem_small(std::uint64_t d) const;

    BigNat mul_pow10(unsigned k) const;
    /// floor(*this / 10^k)
    BigNat div_pow10(unsigned k) const;

    /// floor(sqrt(*this)), Newton iteration.
    BigNat isqrt() const;

private:
    explicit BigNat(std::vector<Limb> limbs) : limbs_(std::move(limbs)) { trim(); }
    void trim();

    friend std::pair<BigNat, BigNat> nat_divrem(const BigNat& a, const BigNat& b);

    std::vector<Limb> limbs_;
};

BigNat nat_add(const BigNat& a, const BigNat& b);
BigNat nat_mul(const BigNat& a, const BigNat& b);
/// Exact a = q*b + r with r < b. Throws DivisionByZero when b == 0.
std::pair<BigNat, BigNat> nat_divrem(const BigNat& a, const BigNat& b);

} // namespace madhava
