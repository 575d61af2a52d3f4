#pragma once

#include <array>

#include "madhava/fixed_dec.hpp"

namespace madhava {

/// Side lengths of a cyclic quadrilateral, in cyclic order.
struct QuadSides {
    FixedDec a;
    FixedDec b;
    FixedDec c;
    FixedDec d;
};

/// R = sqrt( (ab+cd)(ac+bd)(ad+bc) / ((b+c+d-a)(a+c+d-b)(a+b+d-c)(a+b+c-d)) )
///
/// The radicand is formed exactly from the side mantissas, so the result is the
/// floor of the true R at `scale`. Throws DomainError for a non-positive side or
/// a bracket that is not above 10^-scale.
FixedDec circumradius(const QuadSides& q, unsigned scale);

/// Chord lengths 2R sin(gap/2) for four points on a circle of radius R at the
/// given strictly increasing angles in [0, 2pi). The fourth gap wraps around.
QuadSides circumradius_oracle(const std::array<FixedDec, 4>& angles, const FixedDec& radius, unsigned scale);

} // namespace madhava
