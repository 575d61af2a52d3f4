#include "madhava/geometry.hpp"

#include <algorithm>
#include <string>

#include "madhava/error.hpp"
#include "madhava/pi_series.hpp"
#include "madhava/trig_series.hpp"

namespace madhava {

FixedDec circumradius(const QuadSides& q, unsigned scale) {
    const unsigned s0 = std::max({q.a.scale(), q.b.scale(), q.c.scale(), q.d.scale()});
    for (const FixedDec* side : {&q.a, &q.b, &q.c, &q.d}) {
        if (side->is_negative() || side->is_zero()) {
            throw DomainError("side lengths must be positive, got " + side->to_string());
        }
    }
    // Integer mantissas at the common scale s0.
    const BigNat a = q.a.rescaled(s0).mantissa();
    const BigNat b = q.b.rescaled(s0).mantissa();
    const BigNat c = q.c.rescaled(s0).mantissa();
    const BigNat d = q.d.rescaled(s0).mantissa();

    const BigNat total = a + b + c + d;
    // Each bracket is total - 2*side; require it to exceed 10^-scale.
    const FixedDec min_bracket(Sign::Plus, BigNat(1), scale);
    BigNat brackets(1);
    for (const BigNat* side : {&a, &b, &c, &d}) {
        const BigNat twice = side->mul_small(2);
        if (twice >= total) {
            throw DomainError("not a cyclic-quadrilateral side set: one side is not shorter than the other three");
        }
        const BigNat bracket = total - twice;
        if (FixedDec(Sign::Plus, bracket, s0) < min_bracket) {
            throw DomainError("not a cyclic-quadrilateral side set: degenerate bracket below 10^-" +
                              std::to_string(scale));
        }
        brackets *= bracket;
    }

    // numerator carries scale 6*s0, brackets 4*s0: R^2 = num / (brackets * 10^(2*s0)).
    const BigNat numerator = (a * b + c * d) * (a * c + b * d) * (a * d + b * c);
    const BigNat radicand = numerator.mul_pow10(2 * scale) / brackets.mul_pow10(2 * s0);
    return {Sign::Plus, radicand.isqrt(), scale};
}

QuadSides circumradius_oracle(const std::array<FixedDec, 4>& angles, const FixedDec& radius, unsigned scale) {
    const unsigned working = scale + kTrigGuardDigits;
    const FixedDec two_pi = fd_mul_int(pi_at(working), 2);
    std::array<FixedDec, 4> a;
    for (std::size_t i = 0; i < 4; ++i) {
        a[i] = angles[i].rescaled(working);
        if (a[i].is_negative() || a[i] >= two_pi) {
            throw DomainError("angle " + angles[i].to_string() + " outside [0, 2pi)");
        }
        if (i > 0 && a[i] <= a[i - 1]) {
            throw DomainError("angles must be strictly increasing (coincident or out of order at index " +
                              std::to_string(i) + ")");
        }
    }
    const std::array<FixedDec, 4> gaps = {a[1] - a[0], a[2] - a[1], a[3] - a[2], two_pi - (a[3] - a[0])};
    if (gaps[3].is_negative() || gaps[3].is_zero()) {
        throw DomainError("angles must span less than 2pi");
    }
    const FixedDec diameter = fd_mul_int(radius.rescaled(working), 2);
    std::array<FixedDec, 4> sides;
    for (std::size_t i = 0; i < 4; ++i) {
        const Angle half = Angle::from_radians(fd_div_int(gaps[i], 2));
        sides[i] = fd_mul(diameter, sine(half, working)).rescaled(scale);
    }
    return {sides[0], sides[1], sides[2], sides[3]};
}

} // namespace madhava
