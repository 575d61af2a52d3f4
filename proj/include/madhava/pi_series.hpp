#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "madhava/bignat.hpp"
#include "madhava/fixed_dec.hpp"

namespace madhava {

enum class SeriesId { Leibniz, AuxA, AuxB, AuxC, AuxD, Sqrt12 };
enum class Correction { None, F1, F2, F3 };

std::string_view to_string(SeriesId id);
std::string_view to_string(Correction c);
/// "leibniz", "aux-a" ... "sqrt12"; throws ParseError otherwise.
SeriesId parse_series_id(std::string_view name);
/// "none", "f1", "f2", "f3"; throws ParseError otherwise.
Correction parse_correction(std::string_view name);

/// Extra decimal digits carried internally by evaluate(); the reported value
/// is truncated back to the requested digits.
inline constexpr unsigned kGuardDigits = 10;
/// Default refusal threshold for terms_for_digits().
inline constexpr std::uint64_t kDefaultTermCap = 100'000'000;

struct SeriesSpec {
    SeriesId series = SeriesId::Leibniz;
    std::uint64_t terms = 1;
    Correction correction = Correction::None;
    /// Requested output digits; work happens at digits + kGuardDigits.
    unsigned digits = 20;

    /// Throws DomainError for terms == 0 or a correction on a non-Leibniz series.
    void validate() const;
};

struct PiResult {
    FixedDec value;
    std::uint64_t terms_used = 0;
    /// A-priori bound on |value - pi| (rounded up); absent for corrected Leibniz sums.
    std::optional<FixedDec> error_bound;
};

/// 4 * sum_{k=1..n} (-1)^(k-1) / (2k-1), each reciprocal truncated at `scale`.
FixedDec leibniz_partial(std::uint64_t n, unsigned scale);

/// F1 = 1/(4n), F2 = n/(4n^2+1), F3 = (n^2+1)/(n(4n^2+5)), truncated at `scale`.
/// Correction::None yields zero.
FixedDec correction_term(std::uint64_t n, Correction variant, unsigned scale);

/// 4 * (n-term Leibniz sum + (-1)^n F(n)).
FixedDec leibniz_corrected(std::uint64_t n, Correction variant, unsigned scale);

/// The four auxiliary series, normalised to pi (x4 for A/C/D, x8 for B).
/// n counts summed terms; the leading 3/4 (A) and 1/2 (D) are always included.
FixedDec aux_series(SeriesId id, std::uint64_t n, unsigned scale);

/// n-term partial sum x - x^3/3 + x^5/5 - ...; throws DomainError for |x| > 1.
FixedDec arctan_series(const FixedDec& x, std::uint64_t n, unsigned scale);

/// sqrt(12) * (1 - 1/(3*3) + 1/(5*3^2) - ...) with n terms.
FixedDec pi_sqrt12(std::uint64_t n, unsigned scale);

/// 2827433388233 / (9 * 10^11), truncated at `scale`.
FixedDec madhava_pi_value(unsigned scale);

struct CircumferenceReport {
    BigNat diameter;
    BigNat madhava;  // attributed value
    BigNat computed; // nearest integer to pi * diameter
    std::int64_t delta = 0;
    std::uint64_t sqrt12_terms = 0;
    FixedDec pi_used;
};

/// Circumference of a circle of diameter 9*10^11 against the attributed value.
/// Throws DomainError for scale < 20.
CircumferenceReport circumference_check(unsigned scale = 30);

/// Smallest n whose a-priori error bound on the pi approximation is below
/// 10^-digits. Throws InfeasibleError when that n exceeds `cap`.
std::uint64_t terms_for_digits(SeriesId id, unsigned digits, std::uint64_t cap = kDefaultTermCap);

/// A-priori bound on |series(n) - pi| rounded up at `scale`.
std::optional<FixedDec> error_bound(SeriesId id, Correction correction, std::uint64_t n, unsigned scale);

/// Dispatches one SeriesSpec at digits + kGuardDigits and truncates to digits.
PiResult evaluate(const SeriesSpec& spec);

/// The raw series value at an explicit working scale (no guard, no truncation).
FixedDec series_value(SeriesId id, Correction correction, std::uint64_t n, unsigned scale);

/// 30-decimal reference pi. Checked against pi_sqrt12(70) the first time it is
/// requested; throws Error if the literal and the series disagree.
const FixedDec& reference_pi();

/// pi truncated at an arbitrary scale: the reference literal up to 30 digits,
/// the sqrt(12) series beyond.
FixedDec pi_at(unsigned scale);

} // namespace madhava
