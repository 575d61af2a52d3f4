#include "madhava/bignat.hpp"

#include <algorithm>
#include <cctype>

#include "madhava/error.hpp"

namespace madhava {

namespace {

using Limb = BigNat::Limb;
constexpr std::uint64_t kBase = BigNat::kBase;

constexpr Limb kPow10[] = {1u, 10u, 100u, 1'000u, 10'000u, 100'000u, 1'000'000u, 10'000'000u, 100'000'000u};

} // namespace

BigNat::BigNat(std::uint64_t value) {
    while (value != 0) {
        limbs_.push_back(static_cast<Limb>(value % kBase));
        value /= kBase;
    }
}

BigNat BigNat::from_u128(unsigned __int128 value) {
    std::vector<Limb> limbs;
    while (value != 0) {
        limbs.push_back(static_cast<Limb>(value % kBase));
        value /= kBase;
    }
    return BigNat(std::move(limbs));
}

BigNat BigNat::from_string(std::string_view digits) {
    if (digits.empty()) {
        throw ParseError("empty digit string");
    }
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("not a digit string: '" + std::string(digits) + "'");
        }
    }
    std::vector<Limb> limbs;
    limbs.reserve(digits.size() / kLimbDigits + 1);
    std::size_t end = digits.size();
    while (end > 0) {
        std::size_t begin = end >= kLimbDigits ? end - kLimbDigits : 0;
        Limb limb = 0;
        for (std::size_t i = begin; i < end; ++i) {
            limb = limb * 10 + static_cast<Limb>(digits[i] - '0');
        }
        limbs.push_back(limb);
        end = begin;
    }
    return BigNat(std::move(limbs));
}

BigNat BigNat::pow10(unsigned exponent) {
    return BigNat(1).mul_pow10(exponent);
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) {
        limbs_.pop_back();
    }
}

std::string BigNat::to_string() const {
    if (limbs_.empty()) {
        return "0";
    }
    std::string out = std::to_string(limbs_.back());
    for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
        std::string chunk = std::to_string(*it);
        out.append(kLimbDigits - chunk.size(), '0');
        out += chunk;
    }
    return out;
}

std::optional<std::uint64_t> BigNat::to_u64() const {
    auto wide = to_u128();
    if (!wide || *wide > static_cast<unsigned __int128>(UINT64_MAX)) {
        return std::nullopt;
    }
    return static_cast<std::uint64_t>(*wide);
}

std::optional<unsigned __int128> BigNat::to_u128() const {
    // Four limbs (< 10^36) always fit; a fifth may overflow.
    if (limbs_.size() > 5) {
        return std::nullopt;
    }
    unsigned __int128 value = 0;
    constexpr unsigned __int128 kLimit = ~static_cast<unsigned __int128>(0);
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
        if (value > (kLimit - *it) / kBase) {
            return std::nullopt;
        }
        value = value * kBase + *it;
    }
    return value;
}

std::size_t BigNat::digit_count() const {
    if (limbs_.empty()) {
        return 1;
    }
    std::size_t digits = (limbs_.size() - 1) * kLimbDigits;
    for (Limb top = limbs_.back(); top != 0; top /= 10) {
        ++digits;
    }
    return digits;
}

std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    if (a.limbs_.size() != b.limbs_.size()) {
        return a.limbs_.size() <=> b.limbs_.size();
    }
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) {
            return a.limbs_[i] <=> b.limbs_[i];
        }
    }
    return std::strong_ordering::equal;
}

BigNat operator+(const BigNat& a, const BigNat& b) {
    const auto& longer = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
    const auto& shorter = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
    std::vector<Limb> out;
    out.reserve(longer.size() + 1);
    Limb carry = 0;
    for (std::size_t i = 0; i < longer.size(); ++i) {
        Limb sum = longer[i] + carry + (i < shorter.size() ? shorter[i] : 0u);
        carry = sum >= kBase ? 1u : 0u;
        out.push_back(carry != 0 ? sum - static_cast<Limb>(kBase) : sum);
    }
    if (carry != 0) {
        out.push_back(carry);
    }
    return BigNat(std::move(out));
}

BigNat operator-(const BigNat& a, const BigNat& b) {
    if (a < b) {
        throw DomainError("natural subtraction underflow");
    }
    std::vector<Limb> out(a.limbs_);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(out[i]) - borrow -
                            (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
        borrow = diff < 0 ? 1 : 0;
        out[i] = static_cast<Limb>(diff < 0 ? diff + static_cast<std::int64_t>(kBase) : diff);
        if (borrow == 0 && i >= b.limbs_.size()) {
            break;
        }
    }
    return BigNat(std::move(out));
}

BigNat operator*(const BigNat& a, const BigNat& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<std::uint64_t> acc(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = acc[i + j] + static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            acc[i + j] = cur % kBase;
            carry = cur / kBase;
        }
        for (std::size_t k = i + b.limbs_.size(); carry != 0; ++k) {
            std::uint64_t cur = acc[k] + carry;
            acc[k] = cur % kBase;
            carry = cur / kBase;
        }
    }
    std::vector<Limb> out(acc.begin(), acc.end());
    return BigNat(std::move(out));
}

BigNat operator/(const BigNat& a, const BigNat& b) {
    return nat_divrem(a, b).first;
}

BigNat operator%(const BigNat& a, const BigNat& b) {
    return nat_divrem(a, b).second;
}

BigNat BigNat::mul_small(Limb m) const {
    if (m == 0 || is_zero()) {
        return {};
    }
    std::vector<Limb> out;
    out.reserve(limbs_.size() + 1);
    std::uint64_t carry = 0;
    for (Limb limb : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
        out.push_back(static_cast<Limb>(cur % kBase));
        carry = cur / kBase;
    }
    while (carry != 0) {
        out.push_back(static_cast<Limb>(carry % kBase));
        carry /= kBase;
    }
    return BigNat(std::move(out));
}

std::pair<BigNat, std::uint64_t> BigNat::divrem_small(std::uint64_t d) const {
    if (d == 0) {
        throw DivisionByZero();
    }
    std::vector<Limb> quot(limbs_.size(), 0);
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        unsigned __int128 cur = rem * kBase + limbs_[i];
        quot[i] = static_cast<Limb>(cur / d);
        rem = cur % d;
    }
    return {BigNat(std::move(quot)), static_cast<std::uint64_t>(rem)};
}

BigNat BigNat::mul_pow10(unsigned k) const {
    if (is_zero()) {
        return {};
    }
    std::vector<Limb> shifted(k / kLimbDigits, 0);
    shifted.insert(shifted.end(), limbs_.begin(), limbs_.end());
    return BigNat(std::move(shifted)).mul_small(kPow10[k % kLimbDigits]);
}

BigNat BigNat::div_pow10(unsigned k) const {
    std::size_t drop = k / kLimbDigits;
    if (drop >= limbs_.size()) {
        return {};
    }
    BigNat shifted(std::vector<Limb>(limbs_.begin() + static_cast<std::ptrdiff_t>(drop), limbs_.end()));
    return shifted.divrem_small(kPow10[k % kLimbDigits]).first;
}

BigNat BigNat::isqrt() const {
    if (is_zero()) {
        return {};
    }
    // 10^ceil(d/2) is above the root, so the Newton sequence decreases monotonically.
    BigNat x = pow10(static_cast<unsigned>((digit_count() + 1) / 2));
    while (true) {
        BigNat y = (x + *this / x).divrem_small(2).first;
        if (y >= x) {
            return x;
        }
        x = std::move(y);
    }
}

BigNat nat_add(const BigNat& a, const BigNat& b) {
    return a + b;
}

BigNat nat_mul(const BigNat& a, const BigNat& b) {
    return a * b;
}

// Knuth, TAOCP vol. 2, 4.3.1 Algorithm D, in base 10^9.
std::pair<BigNat, BigNat> nat_divrem(const BigNat& a, const BigNat& b) {
    if (b.is_zero()) {
        throw DivisionByZero();
    }
    if (a < b) {
        return {BigNat(), a};
    }
    if (b.limbs_.size() == 1) {
        auto [q, r] = a.divrem_small(b.limbs_[0]);
        return {std::move(q), BigNat(r)};
    }

    const auto norm = static_cast<Limb>(kBase / (static_cast<std::uint64_t>(b.limbs_.back()) + 1));
    std::vector<Limb> u = a.mul_small(norm).limbs_;
    const std::vector<Limb> v = b.mul_small(norm).limbs_;
    u.resize(a.limbs_.size() + 1, 0);

    const std::size_t n = v.size();
    const std::size_t m = u.size() - n - 1;
    std::vector<Limb> q(m + 1, 0);

    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = static_cast<std::uint64_t>(u[j + n]) * kBase + u[j + n - 1];
        std::uint64_t qhat = num / v[n - 1];
        std::uint64_t rhat = num % v[n - 1];
        while (qhat >= kBase || qhat * v[n - 2] > rhat * kBase + u[j + n - 2]) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= kBase) {
                break;
            }
        }

        std::uint64_t carry = 0;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v[i] + carry;
            carry = p / kBase;
            std::int64_t t = static_cast<std::int64_t>(u[i + j]) - static_cast<std::int64_t>(p % kBase) - borrow;
            borrow = t < 0 ? 1 : 0;
            u[i + j] = static_cast<Limb>(t < 0 ? t + static_cast<std::int64_t>(kBase) : t);
        }
        std::int64_t top = static_cast<std::int64_t>(u[j + n]) - static_cast<std::int64_t>(carry) - borrow;

        if (top < 0) {
            --qhat;
            std::uint64_t add_carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + add_carry;
                u[i + j] = static_cast<Limb>(s % kBase);
                add_carry = s / kBase;
            }
            top += static_cast<std::int64_t>(add_carry);
        }
        u[j + n] = static_cast<Limb>(top);
        q[j] = static_cast<Limb>(qhat);
    }

    u.resize(n);
    BigNat rem = BigNat(std::move(u)).divrem_small(norm).first;
    return {BigNat(std::move(q)), std::move(rem)};
}

} // namespace madhava
