#include "madhava/pi_series.hpp"

#include <functional>
#include <string>

#include "madhava/error.hpp"

namespace madhava {

namespace {

using u128 = unsigned __int128;

/// Accumulates sign * floor(num * 10^scale / den) term by term.
///
/// Terms whose scaled numerator fits in 128 bits take a native division;
/// everything else goes through BigNat. Both paths produce the same
/// truncated integer, so the sum is bit-identical either way.
class TermSum {
public:
    explicit TermSum(unsigned scale) : scale_(scale), unit_(BigNat::pow10(scale)), unit128_(unit_.to_u128()) {}

    void add(Sign sign, std::uint64_t num, u128 den) {
        if (unit128_ && (num == 0 || *unit128_ <= kMax / num)) {
            const u128 scaled = *unit128_ * num;
            const u128 q = (scaled >> 64) == 0 && (den >> 64) == 0
                               ? static_cast<std::uint64_t>(scaled) / static_cast<std::uint64_t>(den)
                               : scaled / den;
            u128& acc = sign == Sign::Plus ? pos_ : neg_;
            acc += q;
            if (acc > kFlushAt) {
                flush();
            }
            return;
        }
        add(sign, BigNat(num), BigNat::from_u128(den));
    }

    void add(Sign sign, const BigNat& num, const BigNat& den) {
        BigNat q = num.mul_pow10(scale_) / den;
        (sign == Sign::Plus ? pos_big_ : neg_big_) += q;
    }

    FixedDec total() {
        flush();
        if (pos_big_ >= neg_big_) {
            return {Sign::Plus, pos_big_ - neg_big_, scale_};
        }
        return {Sign::Minus, neg_big_ - pos_big_, scale_};
    }

private:
    static constexpr u128 kMax = ~static_cast<u128>(0);
    static constexpr u128 kFlushAt = kMax >> 2;

    void flush() {
        pos_big_ += BigNat::from_u128(pos_);
        neg_big_ += BigNat::from_u128(neg_);
        pos_ = 0;
        neg_ = 0;
    }

    unsigned scale_;
    BigNat unit_;
    std::optional<u128> unit128_;
    u128 pos_ = 0;
    u128 neg_ = 0;
    BigNat pos_big_;
    BigNat neg_big_;
};

constexpr Sign alternating(std::uint64_t k) { return k % 2 == 1 ? Sign::Plus : Sign::Minus; } // k is 1-based

/// m^p as a 128-bit value, or nullopt on overflow.
std::optional<u128> checked_pow(u128 m, unsigned p) {
    u128 r = 1;
    for (unsigned i = 0; i < p; ++i) {
        if (m != 0 && r > (~static_cast<u128>(0)) / m) {
            return std::nullopt;
        }
        r *= m;
    }
    return r;
}

BigNat big_pow(const BigNat& m, unsigned p) {
    BigNat r(1);
    for (unsigned i = 0; i < p; ++i) {
        r *= m;
    }
    return r;
}

// Denominator of the k-th term (1-based) of AUX_A, AUX_B, AUX_C, AUX_D.
// Returned as u128 when it fits, BigNat otherwise.
struct AuxDen {
    std::optional<u128> small;
    BigNat big;
};

AuxDen aux_den(SeriesId id, std::uint64_t k) {
    const auto m = [&]() -> std::uint64_t {
        switch (id) {
        case SeriesId::AuxA: return 2 * k + 1;
        case SeriesId::AuxB: return 4 * k - 2;
        case SeriesId::AuxC: return 2 * k - 1;
        default: return 2 * k;
        }
    }();
    const BigNat mb(m);
    switch (id) {
    case SeriesId::AuxA: // m^3 - m
        if (auto c = checked_pow(m, 3)) return {*c - m, {}};
        return {std::nullopt, big_pow(mb, 3) - mb};
    case SeriesId::AuxC: // m^5 + 4m
        if (auto c = checked_pow(m, 5); c && *c < ~static_cast<u128>(0) - 4 * static_cast<u128>(m)) {
            return {*c + 4 * static_cast<u128>(m), {}};
        }
        return {std::nullopt, big_pow(mb, 5) + mb.mul_small(4)};
    default: // m^2 - 1
        return {static_cast<u128>(m) * m - 1, {}};
    }
}

void add_term(TermSum& sum, Sign sign, std::uint64_t num, const AuxDen& den) {
    if (den.small) {
        sum.add(sign, num, *den.small);
    } else {
        sum.add(sign, BigNat(num), den.big);
    }
}

// Exponential then binary search for the smallest n in [1, cap] with pred(n).
// pred must be monotone (false...false true...true).
std::uint64_t smallest_satisfying(const std::function<bool(std::uint64_t)>& pred, std::uint64_t cap,
                                  std::string_view what) {
    std::uint64_t lo = 0; // pred(lo) false (or lo == 0)
    std::uint64_t hi = 1;
    while (!pred(hi)) {
        lo = hi;
        if (hi >= cap) {
            throw InfeasibleError(std::string(what) + ": requested digits need more than " + std::to_string(cap) +
                                  " terms");
        }
        hi = std::min(cap, hi * 2);
    }
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (pred(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

// sqrt(12) = 3.46410161... < 17321/5000.
const BigNat kSqrt12UpperNum(17321);
const BigNat kSqrt12UpperDen(5000);

// Rational a-priori bound num/den on |S_n - pi|.
std::pair<BigNat, BigNat> bound_ratio(SeriesId id, std::uint64_t n) {
    const BigNat nb(n);
    switch (id) {
    case SeriesId::Leibniz: return {BigNat(4), nb.mul_small(2) + BigNat(1)};
    case SeriesId::AuxA: {
        BigNat m = nb.mul_small(2) + BigNat(3);
        return {BigNat(4), m * m * m - m};
    }
    case SeriesId::AuxB: return {BigNat(2), nb.mul_small(4) - BigNat(3)};
    case SeriesId::AuxC: {
        BigNat m = nb.mul_small(2) + BigNat(1);
        return {BigNat(16), big_pow(m, 5) + m.mul_small(4)};
    }
    case SeriesId::AuxD: {
        BigNat m = nb.mul_small(2) + BigNat(2);
        return {BigNat(4), m * m - BigNat(1)};
    }
    case SeriesId::Sqrt12: {
        BigNat pow3(1);
        for (std::uint64_t i = 0; i < n; ++i) {
            pow3 = pow3.mul_small(3);
        }
        return {kSqrt12UpperNum, kSqrt12UpperDen * (nb.mul_small(2) + BigNat(1)) * pow3};
    }
    }
    throw DomainError("unknown series");
}

void require_terms(std::uint64_t n) {
    if (n == 0) {
        throw DomainError("series needs at least one term");
    }
}

} // namespace

std::string_view to_string(SeriesId id) {
    switch (id) {
    case SeriesId::Leibniz: return "leibniz";
    case SeriesId::AuxA: return "aux-a";
    case SeriesId::AuxB: return "aux-b";
    case SeriesId::AuxC: return "aux-c";
    case SeriesId::AuxD: return "aux-d";
    case SeriesId::Sqrt12: return "sqrt12";
    }
    return "?";
}

std::string_view to_string(Correction c) {
    switch (c) {
    case Correction::None: return "none";
    case Correction::F1: return "f1";
    case Correction::F2: return "f2";
    case Correction::F3: return "f3";
    }
    return "?";
}

SeriesId parse_series_id(std::string_view name) {
    for (auto id : {SeriesId::Leibniz, SeriesId::AuxA, SeriesId::AuxB, SeriesId::AuxC, SeriesId::AuxD,
                    SeriesId::Sqrt12}) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw ParseError("unknown series '" + std::string(name) + "'");
}

Correction parse_correction(std::string_view name) {
    for (auto c : {Correction::None, Correction::F1, Correction::F2, Correction::F3}) {
        if (to_string(c) == name) {
            return c;
        }
    }
    throw ParseError("unknown correction '" + std::string(name) + "'");
}

void SeriesSpec::validate() const {
    require_terms(terms);
    if (correction != Correction::None && series != SeriesId::Leibniz) {
        throw DomainError("corrections apply only to the leibniz series");
    }
}

FixedDec leibniz_partial(std::uint64_t n, unsigned scale) {
    require_terms(n);
    TermSum sum(scale);
    for (std::uint64_t k = 1; k <= n; ++k) {
        sum.add(alternating(k), 1, 2 * static_cast<u128>(k) - 1);
    }
    return fd_mul_int(sum.total(), 4);
}

FixedDec correction_term(std::uint64_t n, Correction variant, unsigned scale) {
    require_terms(n);
    const BigNat nb(n);
    const BigNat n2 = nb * nb;
    switch (variant) {
    case Correction::None: return FixedDec::from_int(0, scale);
    case Correction::F1: return FixedDec::from_ratio(BigNat(1), nb.mul_small(4), Sign::Plus, scale);
    case Correction::F2: return FixedDec::from_ratio(nb, n2.mul_small(4) + BigNat(1), Sign::Plus, scale);
    case Correction::F3:
        return FixedDec::from_ratio(n2 + BigNat(1), nb * (n2.mul_small(4) + BigNat(5)), Sign::Plus, scale);
    }
    throw DomainError("unknown correction");
}

FixedDec leibniz_corrected(std::uint64_t n, Correction variant, unsigned scale) {
    require_terms(n);
    TermSum sum(scale);
    for (std::uint64_t k = 1; k <= n; ++k) {
        sum.add(alternating(k), 1, 2 * static_cast<u128>(k) - 1);
    }
    FixedDec f = correction_term(n, variant, scale);
    FixedDec quarter = n % 2 == 0 ? sum.total() + f : sum.total() - f;
    return fd_mul_int(quarter, 4);
}

FixedDec aux_series(SeriesId id, std::uint64_t n, unsigned scale) {
    require_terms(n);
    TermSum sum(scale);
    switch (id) {
    case SeriesId::AuxA:
        sum.add(Sign::Plus, 3, 4);
        for (std::uint64_t k = 1; k <= n; ++k) {
            add_term(sum, alternating(k), 1, aux_den(id, k));
        }
        return fd_mul_int(sum.total(), 4);
    case SeriesId::AuxB:
        for (std::uint64_t k = 1; k <= n; ++k) {
            add_term(sum, Sign::Plus, 1, aux_den(id, k));
        }
        return fd_mul_int(sum.total(), 8);
    case SeriesId::AuxC:
        for (std::uint64_t k = 1; k <= n; ++k) {
            add_term(sum, alternating(k), 4, aux_den(id, k));
        }
        return fd_mul_int(sum.total(), 4);
    case SeriesId::AuxD:
        sum.add(Sign::Plus, 1, 2);
        for (std::uint64_t k = 1; k <= n; ++k) {
            add_term(sum, alternating(k), 1, aux_den(id, k));
        }
        return fd_mul_int(sum.total(), 4);
    default: throw DomainError("aux_series takes AUX_A..AUX_D, got " + std::string(to_string(id)));
    }
}

FixedDec arctan_series(const FixedDec& x, std::uint64_t n, unsigned scale) {
    require_terms(n);
    if (x.abs() > FixedDec::from_int(1)) {
        throw DomainError("arctan series diverges for |x| > 1 (x = " + x.to_string() + ")");
    }
    const FixedDec xs = x.rescaled(scale);
    const FixedDec x2 = fd_mul(xs, xs);
    FixedDec power = xs;
    FixedDec sum = fd_div_int(power, 1);
    for (std::uint64_t k = 1; k < n; ++k) {
        power = fd_mul(power, x2);
        FixedDec term = fd_div_int(power, 2 * k + 1);
        sum = k % 2 == 1 ? sum - term : sum + term;
    }
    return sum;
}

FixedDec pi_sqrt12(std::uint64_t n, unsigned scale) {
    require_terms(n);
    TermSum sum(scale);
    BigNat pow3(1);
    for (std::uint64_t k = 0; k < n; ++k) {
        sum.add(k % 2 == 0 ? Sign::Plus : Sign::Minus, BigNat(1), pow3 * BigNat(2 * k + 1));
        pow3 = pow3.mul_small(3);
    }
    return fd_mul(fd_isqrt(FixedDec::from_int(12), scale), sum.total());
}

FixedDec madhava_pi_value(unsigned scale) {
    return FixedDec::from_ratio(BigNat(2'827'433'388'233ull), BigNat(900'000'000'000ull), Sign::Plus, scale);
}

CircumferenceReport circumference_check(unsigned scale) {
    if (scale < 20) {
        throw DomainError("circumference_check needs scale >= 20");
    }
    CircumferenceReport report;
    report.diameter = BigNat(900'000'000'000ull);
    report.madhava = BigNat(2'827'433'388'233ull);
    report.sqrt12_terms = terms_for_digits(SeriesId::Sqrt12, scale);
    report.pi_used = pi_sqrt12(report.sqrt12_terms, scale + kGuardDigits).rescaled(scale);
    const FixedDec circumference = fd_mul(report.pi_used, FixedDec(Sign::Plus, report.diameter, 0));
    report.computed = circumference.rounded(0).mantissa();
    const auto attributed = static_cast<std::int64_t>(*report.madhava.to_u64());
    const auto computed = static_cast<std::int64_t>(report.computed.to_u64().value_or(0));
    report.delta = attributed - computed;
    return report;
}

std::uint64_t terms_for_digits(SeriesId id, unsigned digits, std::uint64_t cap) {
    if (digits < 1) {
        throw DomainError("terms_for_digits needs digits >= 1");
    }
    const BigNat unit = BigNat::pow10(digits);
    auto pred = [&](std::uint64_t n) {
        auto [num, den] = bound_ratio(id, n);
        return num * unit < den;
    };
    if (id == SeriesId::Leibniz) {
        // 4/(2n+1) < 10^-d  <=>  n >= 2*10^d ; decide against the cap without building the number.
        if (digits > 18 || 2 * *unit.to_u64() > cap) {
            throw InfeasibleError("leibniz without correction needs 2*10^" + std::to_string(digits) +
                                  " terms, above the cap of " + std::to_string(cap));
        }
    }
    return smallest_satisfying(pred, cap, to_string(id));
}

std::optional<FixedDec> error_bound(SeriesId id, Correction correction, std::uint64_t n, unsigned scale) {
    require_terms(n);
    if (correction != Correction::None) {
        return std::nullopt;
    }
    auto [num, den] = bound_ratio(id, n);
    FixedDec bound = FixedDec::from_ratio(num, den, Sign::Plus, scale);
    return bound + bound.ulp();
}

FixedDec series_value(SeriesId id, Correction correction, std::uint64_t n, unsigned scale) {
    switch (id) {
    case SeriesId::Leibniz:
        return correction == Correction::None ? leibniz_partial(n, scale) : leibniz_corrected(n, correction, scale);
    case SeriesId::Sqrt12: return pi_sqrt12(n, scale);
    default: return aux_series(id, n, scale);
    }
}

PiResult evaluate(const SeriesSpec& spec) {
    spec.validate();
    const unsigned working = spec.digits + kGuardDigits;
    PiResult result;
    result.value = series_value(spec.series, spec.correction, spec.terms, working).rescaled(spec.digits);
    result.terms_used = spec.terms;
    result.error_bound = error_bound(spec.series, spec.correction, spec.terms, spec.digits);
    return result;
}

const FixedDec& reference_pi() {
    static const FixedDec pi = [] {
        FixedDec literal = FixedDec::parse("3.141592653589793238462643383279");
        // sqrt(12)/(141 * 3^70) < 10^-35, so 40 working digits pin the first 30.
        FixedDec check = pi_sqrt12(70, 40);
        FixedDec gap = (check - literal.rescaled(40)).abs();
        if (gap >= FixedDec::parse("0.000000000000000000000000000001")) {
            throw Error("reference pi literal disagrees with the sqrt(12) series: " + check.to_string());
        }
        return literal;
    }();
    return pi;
}

FixedDec pi_at(unsigned scale) {
    const FixedDec& ref = reference_pi();
    if (scale <= ref.scale()) {
        return ref.rescaled(scale);
    }
    const std::uint64_t n = terms_for_digits(SeriesId::Sqrt12, scale + 2);
    return pi_sqrt12(n, scale + kGuardDigits).rescaled(scale);
}

} // namespace madhava
