#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "madhava/bignat.hpp"

namespace madhava {

enum class Sign { Plus, Minus };

constexpr Sign flip(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr Sign sign_product(Sign a, Sign b) noexcept { return a == b ? Sign::Plus : Sign::Minus; }

/// Signed scaled decimal: value = sign * mantissa * 10^-scale.
///
/// Every narrowing step (division, multiplication, rescaling down) truncates
/// toward zero. Zero always carries Sign::Plus. The scale only changes where
/// an operation says so.
class FixedDec {
public:
    FixedDec() = default;
    FixedDec(Sign sign, BigNat mantissa, unsigned scale);

    static FixedDec from_int(std::int64_t value, unsigned scale = 0);
    /// sign * floor(num * 10^scale / den) * 10^-scale. Throws DivisionByZero.
    static FixedDec from_ratio(const BigNat& num, const BigNat& den, Sign sign, unsigned scale);
    /// Accepts [+-]?digits[.digits]? ; the scale is the count of fractional digits.
    static FixedDec parse(std::string_view text);

    Sign sign() const noexcept { return sign_; }
    const BigNat& mantissa() const noexcept { return mantissa_; }
    unsigned scale() const noexcept { return scale_; }
    bool is_zero() const noexcept { return mantissa_.is_zero(); }
    bool is_negative() const noexcept { return sign_ == Sign::Minus; }

    /// Always prints exactly scale() fractional digits.
    std::string to_string() const;

    FixedDec operator-() const { return {flip(sign_), mantissa_, scale_}; }
    FixedDec abs() const { return {Sign::Plus, mantissa_, scale_}; }

    /// Same value at another scale; widening is exact, narrowing truncates toward zero.
    FixedDec rescaled(unsigned scale) const;
    /// Narrowing with round-half-away-from-zero instead of truncation.
    FixedDec rounded(unsigned scale) const;
    /// One unit in the last place at this scale.
    FixedDec ulp() const { return {Sign::Plus, BigNat(1), scale_}; }

    /// Value equality, independent of scale.
    friend bool operator==(const FixedDec& a, const FixedDec& b) { return compare(a, b) == 0; }
    friend std::strong_ordering operator<=>(const FixedDec& a, const FixedDec& b) { return compare(a, b); }
    friend std::strong_ordering compare(const FixedDec& a, const FixedDec& b);

    /// Representation equality: sign, mantissa and scale all match.
    friend bool identical(const FixedDec& a, const FixedDec& b) {
        return a.sign_ == b.sign_ && a.scale_ == b.scale_ && a.mantissa_ == b.mantissa_;
    }

private:
    Sign sign_ = Sign::Plus;
    BigNat mantissa_;
    unsigned scale_ = 0;
};

/// Exact; throws ScaleMismatch unless both scales agree.
FixedDec fd_add(const FixedDec& a, const FixedDec& b);
FixedDec fd_sub(const FixedDec& a, const FixedDec& b);
/// Exact product truncated back to max(a.scale, b.scale).
FixedDec fd_mul(const FixedDec& a, const FixedDec& b);
/// a / b truncated at the given scale. Throws DivisionByZero.
FixedDec fd_div(const FixedDec& a, const FixedDec& b, unsigned scale);
/// Largest r at `scale` with r*r <= a. Throws DomainError for a < 0.
FixedDec fd_isqrt(const FixedDec& a, unsigned scale);

inline FixedDec fd_from_ratio(const BigNat& num, const BigNat& den, Sign sign, unsigned scale) {
    return FixedDec::from_ratio(num, den, sign, scale);
}
inline std::string fd_to_string(const FixedDec& a) { return a.to_string(); }
inline FixedDec fd_from_string(std::string_view s) { return FixedDec::parse(s); }

inline FixedDec operator+(const FixedDec& a, const FixedDec& b) { return fd_add(a, b); }
inline FixedDec operator-(const FixedDec& a, const FixedDec& b) { return fd_sub(a, b); }
inline FixedDec operator*(const FixedDec& a, const FixedDec& b) { return fd_mul(a, b); }

/// a * m for a small signed integer, exact at a's scale.
FixedDec fd_mul_int(const FixedDec& a, std::int64_t m);
/// a / d truncated toward zero at a's scale.
FixedDec fd_div_int(const FixedDec& a, std::uint64_t d);

} // namespace madhava
