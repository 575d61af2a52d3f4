#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "madhava/fixed_dec.hpp"

namespace madhava {

namespace chrono_constants {

/// Julian date of the Kali epoch: midnight beginning 18 February 3102 BCE
/// (proleptic Julian, astronomical year -3101). Standard value, e.g.
/// Sewell & Dikshit, "The Indian Calendar" (1896).
inline constexpr std::string_view kKaliEpochJd = "588465.5";

/// Mean anomalistic month in days (perigee to perigee), as tabulated in the
/// Explanatory Supplement to the Astronomical Almanac.
inline constexpr std::string_view kAnomalisticMonthDays = "27.554550";

/// Kali-day offset and cycle count used by the lunar tables.
inline constexpr std::uint64_t kVenvarohaKaliDays = 1'502'008;
inline constexpr std::uint64_t kVenvarohaAnomalisticCycles = 5180;

/// Tolerance for the epoch date, absorbing midnight/sunrise and meridian conventions.
inline constexpr std::int64_t kEpochToleranceDays = 2;

} // namespace chrono_constants

struct KaliInstant {
    /// Days since the Kali epoch, fractional allowed, never negative.
    FixedDec kali_day;
};

/// Proleptic Julian calendar date with astronomical year numbering (1 BCE = 0).
struct CalendarDate {
    std::int64_t year = 0;
    int month = 1;
    int day = 1;

    friend auto operator<=>(const CalendarDate&, const CalendarDate&) = default;

    /// "YYYY-MM-DD"; negative years carry a leading '-'.
    std::string to_string() const;
    bool is_valid() const;
};

/// JD = KALI_EPOCH_JD + kali_day. Throws DomainError for a negative kali day.
FixedDec kali_to_julian_day(const KaliInstant& k);

/// Julian-calendar date of the civil day containing noon of `jd`, i.e. the day
/// with Julian day number floor(jd + 0.5). Throws DomainError for jd <= 0.
CalendarDate jd_to_date(const FixedDec& jd);

/// Julian day number (the noon of the date). Throws DomainError for invalid dates.
std::int64_t date_to_jdn(const CalendarDate& date);

/// Julian date of the midnight that starts `date` (JDN - 0.5).
FixedDec date_to_jd(const CalendarDate& date);

struct EpochReport {
    FixedDec kali_day;
    FixedDec jd;
    CalendarDate date;
    CalendarDate expected{1402, 3, 10};
    std::int64_t offset_days = 0; // date - expected
    bool matches_expected = false;
};

/// Kali day 1,502,008 plus 5180 anomalistic months, converted to a Julian date
/// and compared with 10 March 1402 within the +-2 day tolerance.
EpochReport venvaroha_epoch_check();

} // namespace madhava
