#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "madhava/fixed_dec.hpp"

namespace madhava {

/// Digits carried beyond the requested scale inside the series evaluators.
inline constexpr unsigned kTrigGuardDigits = 6;

struct Angle {
    FixedDec radians;

    static Angle from_radians(FixedDec radians) { return Angle{std::move(radians)}; }
    /// degrees * pi / 180, with pi taken kGuardDigits beyond `scale`, truncated at `scale`.
    static Angle from_degrees(const FixedDec& degrees, unsigned scale);
    /// Exact rational degrees num/den (e.g. 15k/4 for the 3.75 degree grid).
    static Angle from_degrees_ratio(std::int64_t num, std::uint64_t den, unsigned scale);
};

enum class CoeffPurpose { Sin, Cos, SinSq };

/// Signed coefficients of a truncated power series in x = theta^2.
///
///   Sin:   c_k = (-1)^k / (2k+1)!         sin = theta * sum c_k x^k
///   Cos:   c_k = (-1)^k / (2k)!           cos = sum c_k x^k
///   SinSq: c_k = (-1)^k / D_(k+1),        sin^2 = x * sum c_k x^k
///          D_j = prod_{i=2..j} (i^2 - i/2)
///
/// Built from exact BigNat products and truncated once at `scale`.
class CoeffTable {
public:
    static CoeffTable build(CoeffPurpose purpose, unsigned count, unsigned scale);
    /// Shared, immutable instance for (purpose, count, scale); built on first use.
    static std::shared_ptr<const CoeffTable> cached(CoeffPurpose purpose, unsigned count, unsigned scale);

    CoeffPurpose purpose() const noexcept { return purpose_; }
    unsigned scale() const noexcept { return scale_; }
    std::size_t size() const noexcept { return coefficients_.size(); }
    const std::vector<FixedDec>& coefficients() const noexcept { return coefficients_; }

private:
    CoeffTable(CoeffPurpose purpose, std::vector<FixedDec> coefficients, unsigned scale)
        : purpose_(purpose), coefficients_(std::move(coefficients)), scale_(scale) {}

    CoeffPurpose purpose_;
    std::vector<FixedDec> coefficients_;
    unsigned scale_;
};

/// Innermost-first evaluation (((c_N x + c_{N-1}) x + ...) x + c_0) at x = theta^2,
/// one multiplication and one addition per coefficient, all truncated at `scale`.
/// Sin tables multiply by theta at the end, SinSq tables by theta^2.
FixedDec nested_eval(const CoeffTable& table, const Angle& theta, unsigned scale);

/// Smallest term count whose first omitted term is below 10^-digits for |theta|.
unsigned series_terms(CoeffPurpose purpose, const FixedDec& theta, unsigned digits);

/// Power series with an explicit term count. |theta| must not exceed pi.
FixedDec sin_series(const Angle& theta, unsigned terms, unsigned scale);
FixedDec cos_series(const Angle& theta, unsigned terms, unsigned scale);
FixedDec sin_sq_series(const Angle& theta, unsigned terms, unsigned scale);

/// Same series with the term count picked from the remainder bound at `scale`.
FixedDec sine(const Angle& theta, unsigned scale);
FixedDec cosine(const Angle& theta, unsigned scale);

/// Subtracts multiples of 2*pi so the result lies in [-pi, pi].
Angle reduce_angle(const Angle& theta, unsigned scale);

struct SineTable {
    static constexpr unsigned kEntries = 24;
    unsigned scale = 0;
    unsigned terms = 0;
    /// values[k-1] = sin(k * 3.75 degrees)
    std::array<FixedDec, kEntries> values;

    /// "3.75", "7.50", ... "90.00"
    static std::string degrees_label(unsigned k);
};

/// Term count for 8-decimal accuracy over the quadrant: (pi/2)^(2n+1)/(2n+1)! < 10^-9.
unsigned sine_table_terms_8_digits();

/// sin(k * 3.75 deg), k = 1..24, rounded to `scale` (>= 10) from a guarded evaluation.
SineTable build_sine_table(unsigned scale);

/// Second-order shifts sin(u) + h cos(u) - h^2/2 sin(u) and
/// cos(u) - h sin(u) + h^2/2 cos(u). These are approximations of sin(u+h) and
/// cos(u+h) with an O(h^3) remainder, not exact values.
FixedDec taylor_shift_sin(const Angle& u, const FixedDec& h, unsigned scale);
FixedDec taylor_shift_cos(const Angle& u, const FixedDec& h, unsigned scale);

enum class AngleRule { SinSum, SinDiff, CosSum, CosDiff };

/// Right-hand side of the addition/subtraction rules built from series values.
FixedDec angle_add(const Angle& x, const Angle& y, AngleRule rule, unsigned scale);

} // namespace madhava
