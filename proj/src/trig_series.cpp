#include "madhava/trig_series.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "madhava/error.hpp"
#include "madhava/pi_series.hpp"

namespace madhava {

namespace {

// |v| <= limit, allowing `slack` units in the last place of v's scale.
bool within(const FixedDec& v, const FixedDec& limit, unsigned slack) {
    const unsigned s = std::max(v.scale(), limit.scale());
    return v.abs().rescaled(s) <= limit.rescaled(s) + fd_mul_int(FixedDec(Sign::Plus, BigNat(1), s), slack);
}

FixedDec pi_near(unsigned scale) {
    return pi_at(scale + 2);
}

FixedDec half_pi_near(unsigned scale) {
    return fd_div_int(pi_at(scale + 2), 2);
}

void require_reduced(const Angle& theta) {
    if (!within(theta.radians, pi_near(theta.radians.scale()), 1)) {
        throw DomainError("angle " + theta.radians.to_string() + " rad is outside [-pi, pi]; reduce it first");
    }
}

void require_quadrant(const FixedDec& v, const char* what) {
    if (!within(v, half_pi_near(v.scale()), 10)) {
        throw DomainError(std::string(what) + " = " + v.to_string() + " rad is outside [-pi/2, pi/2]");
    }
}

BigNat factorial(unsigned n) {
    BigNat r(1);
    for (unsigned i = 2; i <= n; ++i) {
        r = r.mul_small(i);
    }
    return r;
}

FixedDec evaluate_series(CoeffPurpose purpose, const Angle& theta, unsigned terms, unsigned scale) {
    if (terms == 0) {
        throw DomainError("series needs at least one term");
    }
    require_reduced(theta);
    // Truncation in the coefficients and in theta^2 is magnified by up to |theta|^(2 terms + 2).
    BigNat reach(1);
    const BigNat whole = theta.radians.abs().rescaled(0).mantissa() + BigNat(1);
    for (unsigned i = 0; i < 2 * terms + 2; ++i) {
        reach *= whole;
    }
    const unsigned working = scale + kTrigGuardDigits + reach.digit_count() - 1;
    auto table = CoeffTable::cached(purpose, terms, working);
    return nested_eval(*table, theta, working).rescaled(scale);
}

} // namespace

Angle Angle::from_degrees(const FixedDec& degrees, unsigned scale) {
    const unsigned working = std::max(scale, degrees.scale()) + kGuardDigits;
    FixedDec product = fd_mul(degrees.rescaled(working), pi_at(working));
    return Angle{fd_div_int(product, 180).rescaled(scale)};
}

Angle Angle::from_degrees_ratio(std::int64_t num, std::uint64_t den, unsigned scale) {
    if (den == 0) {
        throw DivisionByZero();
    }
    const unsigned working = scale + kGuardDigits;
    FixedDec product = fd_mul_int(pi_at(working), num);
    return Angle{fd_div_int(product, den * 180).rescaled(scale)};
}

CoeffTable CoeffTable::build(CoeffPurpose purpose, unsigned count, unsigned scale) {
    if (count == 0) {
        throw DomainError("coefficient table needs at least one coefficient");
    }
    std::vector<FixedDec> coefficients;
    coefficients.reserve(count);
    BigNat running(1); // SinSq: prod_{i=2..k+1} i(2i-1)
    for (unsigned k = 0; k < count; ++k) {
        const Sign sign = k % 2 == 0 ? Sign::Plus : Sign::Minus;
        switch (purpose) {
        case CoeffPurpose::Sin:
            coefficients.push_back(FixedDec::from_ratio(BigNat(1), factorial(2 * k + 1), sign, scale));
            break;
        case CoeffPurpose::Cos:
            coefficients.push_back(FixedDec::from_ratio(BigNat(1), factorial(2 * k), sign, scale));
            break;
        case CoeffPurpose::SinSq: {
            // 1/D_(k+1) with D_j = prod (i^2 - i/2) = prod i(2i-1) / 2^(j-1)
            if (k > 0) {
                const unsigned i = k + 1;
                running = running * BigNat(static_cast<std::uint64_t>(i) * (2 * i - 1));
            }
            BigNat two_pow = BigNat(1);
            for (unsigned j = 0; j < k; ++j) {
                two_pow = two_pow.mul_small(2);
            }
            coefficients.push_back(FixedDec::from_ratio(two_pow, running, sign, scale));
            break;
        }
        }
    }
    return CoeffTable(purpose, std::move(coefficients), scale);
}

std::shared_ptr<const CoeffTable> CoeffTable::cached(CoeffPurpose purpose, unsigned count, unsigned scale) {
    static std::mutex mutex;
    static std::map<std::tuple<CoeffPurpose, unsigned, unsigned>, std::shared_ptr<const CoeffTable>> tables;
    const auto key = std::make_tuple(purpose, count, scale);
    std::lock_guard lock(mutex);
    auto it = tables.find(key);
    if (it == tables.end()) {
        it = tables.emplace(key, std::make_shared<const CoeffTable>(build(purpose, count, scale))).first;
    }
    return it->second;
}

FixedDec nested_eval(const CoeffTable& table, const Angle& theta, unsigned scale) {
    const auto& c = table.coefficients();
    if (c.empty()) {
        throw DomainError("empty coefficient table");
    }
    const FixedDec t = theta.radians.rescaled(scale);
    const FixedDec x = fd_mul(t, t);
    FixedDec acc = c.back().rescaled(scale);
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        acc = fd_mul(acc, x) + c[k].rescaled(scale);
    }
    switch (table.purpose()) {
    case CoeffPurpose::Sin: return fd_mul(acc, t);
    case CoeffPurpose::SinSq: return fd_mul(acc, x);
    case CoeffPurpose::Cos: break;
    }
    return acc;
}

unsigned series_terms(CoeffPurpose purpose, const FixedDec& theta, unsigned digits) {
    // Upper bound (M+1)/10^s for |theta|; SinSq behaves like (2 theta)^m / (2 m!).
    const unsigned s = theta.scale();
    BigNat base = theta.mantissa() + BigNat(1);
    BigNat extra(1);
    if (purpose == CoeffPurpose::SinSq) {
        base = base.mul_small(2);
        extra = BigNat(2);
    }
    const BigNat unit = BigNat::pow10(digits);
    for (unsigned n = 1; n < 1000; ++n) {
        const unsigned m = purpose == CoeffPurpose::Sin ? 2 * n + 1 : purpose == CoeffPurpose::Cos ? 2 * n : 2 * n + 2;
        BigNat power(1);
        for (unsigned i = 0; i < m; ++i) {
            power *= base;
        }
        if (power * unit < extra * factorial(m) * BigNat::pow10(s * m)) {
            return n;
        }
    }
    throw InfeasibleError("no term count below 1000 reaches 10^-" + std::to_string(digits));
}

FixedDec sin_series(const Angle& theta, unsigned terms, unsigned scale) {
    return evaluate_series(CoeffPurpose::Sin, theta, terms, scale);
}

FixedDec cos_series(const Angle& theta, unsigned terms, unsigned scale) {
    return evaluate_series(CoeffPurpose::Cos, theta, terms, scale);
}

FixedDec sin_sq_series(const Angle& theta, unsigned terms, unsigned scale) {
    return evaluate_series(CoeffPurpose::SinSq, theta, terms, scale);
}

FixedDec sine(const Angle& theta, unsigned scale) {
    return sin_series(theta, series_terms(CoeffPurpose::Sin, theta.radians.abs(), scale + kTrigGuardDigits), scale);
}

FixedDec cosine(const Angle& theta, unsigned scale) {
    return cos_series(theta, series_terms(CoeffPurpose::Cos, theta.radians.abs(), scale + kTrigGuardDigits), scale);
}

Angle reduce_angle(const Angle& theta, unsigned scale) {
    const unsigned working = std::max(scale, theta.radians.scale()) + kGuardDigits;
    const FixedDec pi = pi_at(working);
    const FixedDec two_pi = fd_mul_int(pi, 2);
    FixedDec t = theta.radians.rescaled(working);
    const FixedDec turns = fd_div(t, two_pi, 0);
    t = t - fd_mul(two_pi, turns.rescaled(working));
    if (t > pi) {
        t = t - two_pi;
    } else if (t < -pi) {
        t = t + two_pi;
    }
    return Angle{t.rescaled(scale)};
}

std::string SineTable::degrees_label(unsigned k) {
    // k * 3.75 = k * 375 / 100
    const unsigned hundredths = k * 375;
    std::string frac = std::to_string(hundredths % 100);
    if (frac.size() < 2) {
        frac.insert(0, 2 - frac.size(), '0');
    }
    return std::to_string(hundredths / 100) + "." + frac;
}

unsigned sine_table_terms_8_digits() {
    static const unsigned terms = series_terms(CoeffPurpose::Sin, half_pi_near(12).rescaled(12), 9);
    return terms;
}

SineTable build_sine_table(unsigned scale) {
    if (scale < 10) {
        throw DomainError("sine table scale must be at least 10");
    }
    SineTable table;
    table.scale = scale;
    table.terms = std::max(sine_table_terms_8_digits(),
                           series_terms(CoeffPurpose::Sin, half_pi_near(scale + 2).rescaled(scale + 2), scale + 2));
    const unsigned working = scale + kTrigGuardDigits;
    for (unsigned k = 1; k <= SineTable::kEntries; ++k) {
        const Angle theta = Angle::from_degrees_ratio(15 * static_cast<std::int64_t>(k), 4, working);
        table.values[k - 1] = sin_series(theta, table.terms, working).rounded(scale);
    }
    return table;
}

namespace {

void require_shift_args(const Angle& u, const FixedDec& h) {
    require_quadrant(u.radians, "u");
    if (h.abs() > FixedDec::parse("0.5")) {
        throw DomainError("shift h = " + h.to_string() + " exceeds 0.5");
    }
}

} // namespace

FixedDec taylor_shift_sin(const Angle& u, const FixedDec& h, unsigned scale) {
    require_shift_args(u, h);
    const unsigned working = scale + kTrigGuardDigits;
    const FixedDec s = sine(u, working);
    const FixedDec c = cosine(u, working);
    const FixedDec hw = h.rescaled(working);
    return (s + fd_mul(hw, c) - fd_div_int(fd_mul(fd_mul(hw, hw), s), 2)).rescaled(scale);
}

FixedDec taylor_shift_cos(const Angle& u, const FixedDec& h, unsigned scale) {
    require_shift_args(u, h);
    const unsigned working = scale + kTrigGuardDigits;
    const FixedDec s = sine(u, working);
    const FixedDec c = cosine(u, working);
    const FixedDec hw = h.rescaled(working);
    return (c - fd_mul(hw, s) - fd_div_int(fd_mul(fd_mul(hw, hw), c), 2)).rescaled(scale);
}

FixedDec angle_add(const Angle& x, const Angle& y, AngleRule rule, unsigned scale) {
    const unsigned common = std::max(x.radians.scale(), y.radians.scale());
    const FixedDec xr = x.radians.rescaled(common);
    const FixedDec yr = y.radians.rescaled(common);
    require_quadrant(xr, "x");
    require_quadrant(yr, "y");
    require_quadrant(xr + yr, "x + y");
    require_quadrant(xr - yr, "x - y");

    const unsigned working = scale + kTrigGuardDigits;
    const FixedDec sx = sine(x, working);
    const FixedDec cx = cosine(x, working);
    const FixedDec sy = sine(y, working);
    const FixedDec cy = cosine(y, working);
    FixedDec rhs;
    switch (rule) {
    case AngleRule::SinSum: rhs = fd_mul(sx, cy) + fd_mul(cx, sy); break;
    case AngleRule::SinDiff: rhs = fd_mul(sx, cy) - fd_mul(cx, sy); break;
    case AngleRule::CosSum: rhs = fd_mul(cx, cy) - fd_mul(sx, sy); break;
    case AngleRule::CosDiff: rhs = fd_mul(cx, cy) + fd_mul(sx, sy); break;
    }
    return rhs.rescaled(scale);
}

} // namespace madhava
