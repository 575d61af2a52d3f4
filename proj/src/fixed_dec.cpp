#include "madhava/fixed_dec.hpp"

#include <algorithm>
#include <cctype>

#include "madhava/error.hpp"

namespace madhava {

FixedDec::FixedDec(Sign sign, BigNat mantissa, unsigned scale)
    : sign_(sign), mantissa_(std::move(mantissa)), scale_(scale) {
    if (mantissa_.is_zero()) {
        sign_ = Sign::Plus;
    }
}

FixedDec FixedDec::from_int(std::int64_t value, unsigned scale) {
    // Magnitude via unsigned negation so INT64_MIN is representable.
    std::uint64_t magnitude = value < 0 ? 0 - static_cast<std::uint64_t>(value) : static_cast<std::uint64_t>(value);
    return {value < 0 ? Sign::Minus : Sign::Plus, BigNat(magnitude).mul_pow10(scale), scale};
}

FixedDec FixedDec::from_ratio(const BigNat& num, const BigNat& den, Sign sign, unsigned scale) {
    if (den.is_zero()) {
        throw DivisionByZero();
    }
    return {sign, num.mul_pow10(scale) / den, scale};
}

FixedDec FixedDec::parse(std::string_view text) {
    std::string_view body = text;
    Sign sign = Sign::Plus;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        sign = body.front() == '-' ? Sign::Minus : Sign::Plus;
        body.remove_prefix(1);
    }
    std::string_view int_part = body;
    std::string_view frac_part;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
        int_part = body.substr(0, dot);
        frac_part = body.substr(dot + 1);
        if (frac_part.empty()) {
            throw ParseError("missing fractional digits in '" + std::string(text) + "'");
        }
    }
    if (int_part.empty()) {
        throw ParseError("missing integer digits in '" + std::string(text) + "'");
    }
    try {
        std::string digits(int_part);
        digits += frac_part;
        return {sign, BigNat::from_string(digits), static_cast<unsigned>(frac_part.size())};
    } catch (const ParseError&) {
        throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
}

std::string FixedDec::to_string() const {
    std::string digits = mantissa_.to_string();
    if (digits.size() <= scale_) {
        digits.insert(0, scale_ + 1 - digits.size(), '0');
    }
    std::string out;
    if (sign_ == Sign::Minus) {
        out += '-';
    }
    const std::size_t int_len = digits.size() - scale_;
    out.append(digits, 0, int_len);
    if (scale_ > 0) {
        out += '.';
        out.append(digits, int_len, std::string::npos);
    }
    return out;
}

FixedDec FixedDec::rescaled(unsigned scale) const {
    if (scale >= scale_) {
        return {sign_, mantissa_.mul_pow10(scale - scale_), scale};
    }
    return {sign_, mantissa_.div_pow10(scale_ - scale), scale};
}

FixedDec FixedDec::rounded(unsigned scale) const {
    if (scale >= scale_) {
        return rescaled(scale);
    }
    const unsigned drop = scale_ - scale;
    // Add half a unit of the target scale to the magnitude, then truncate.
    BigNat half = BigNat(5).mul_pow10(drop - 1);
    return {sign_, (mantissa_ + half).div_pow10(drop), scale};
}

std::strong_ordering compare(const FixedDec& a, const FixedDec& b) {
    if (a.sign_ != b.sign_) {
        return a.sign_ == Sign::Minus ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const unsigned common = std::max(a.scale_, b.scale_);
    auto mag = a.mantissa_.mul_pow10(common - a.scale_) <=> b.mantissa_.mul_pow10(common - b.scale_);
    if (a.sign_ == Sign::Minus) {
        return 0 <=> mag;
    }
    return mag;
}

namespace {

// Signed sum of magnitudes at a shared scale.
FixedDec signed_sum(Sign sa, const BigNat& ma, Sign sb, const BigNat& mb, unsigned scale) {
    if (sa == sb) {
        return {sa, ma + mb, scale};
    }
    if (ma >= mb) {
        return {sa, ma - mb, scale};
    }
    return {sb, mb - ma, scale};
}

} // namespace

FixedDec fd_add(const FixedDec& a, const FixedDec& b) {
    if (a.scale() != b.scale()) {
        throw ScaleMismatch(a.scale(), b.scale());
    }
    return signed_sum(a.sign(), a.mantissa(), b.sign(), b.mantissa(), a.scale());
}

FixedDec fd_sub(const FixedDec& a, const FixedDec& b) {
    if (a.scale() != b.scale()) {
        throw ScaleMismatch(a.scale(), b.scale());
    }
    return signed_sum(a.sign(), a.mantissa(), flip(b.sign()), b.mantissa(), a.scale());
}

FixedDec fd_mul(const FixedDec& a, const FixedDec& b) {
    const unsigned out_scale = std::max(a.scale(), b.scale());
    const unsigned drop = a.scale() + b.scale() - out_scale;
    return {sign_product(a.sign(), b.sign()), (a.mantissa() * b.mantissa()).div_pow10(drop), out_scale};
}

FixedDec fd_div(const FixedDec& a, const FixedDec& b, unsigned scale) {
    if (b.is_zero()) {
        throw DivisionByZero();
    }
    // a/b = (ma * 10^sb) / (mb * 10^sa)
    BigNat num = a.mantissa().mul_pow10(b.scale());
    BigNat den = b.mantissa().mul_pow10(a.scale());
    return FixedDec::from_ratio(num, den, sign_product(a.sign(), b.sign()), scale);
}

FixedDec fd_isqrt(const FixedDec& a, unsigned scale) {
    if (a.is_negative()) {
        throw DomainError("square root of negative value " + a.to_string());
    }
    // floor(sqrt(floor(x))) == floor(sqrt(x)), so truncating the radicand first is exact.
    const unsigned want = 2 * scale;
    BigNat radicand = want >= a.scale() ? a.mantissa().mul_pow10(want - a.scale())
                                        : a.mantissa().div_pow10(a.scale() - want);
    return {Sign::Plus, radicand.isqrt(), scale};
}

FixedDec fd_mul_int(const FixedDec& a, std::int64_t m) {
    std::uint64_t magnitude = m < 0 ? 0 - static_cast<std::uint64_t>(m) : static_cast<std::uint64_t>(m);
    Sign s = m < 0 ? flip(a.sign()) : a.sign();
    return {s, a.mantissa() * BigNat(magnitude), a.scale()};
}

FixedDec fd_div_int(const FixedDec& a, std::uint64_t d) {
    return {a.sign(), a.mantissa().divrem_small(d).first, a.scale()};
}

} // namespace madhava
