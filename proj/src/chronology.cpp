#include "madhava/chronology.hpp"

#include <algorithm>
#include <cstdio>

#include "madhava/error.hpp"

namespace madhava {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
    return a - floor_div(a, b) * b;
}

int days_in_month(std::int64_t year, int month) {
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && floor_mod(year, 4) == 0) {
        return 29;
    }
    return kDays[month - 1];
}

} // namespace

std::string CalendarDate::to_string() const {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%04lld-%02d-%02d", year < 0 ? "-" : "",
                  static_cast<long long>(year < 0 ? -year : year), month, day);
    return buf;
}

bool CalendarDate::is_valid() const {
    return month >= 1 && month <= 12 && day >= 1 && day <= days_in_month(year, month);
}

FixedDec kali_to_julian_day(const KaliInstant& k) {
    if (k.kali_day.is_negative()) {
        throw DomainError("kali day must be non-negative");
    }
    const FixedDec epoch = FixedDec::parse(chrono_constants::kKaliEpochJd);
    const unsigned s = std::max(epoch.scale(), k.kali_day.scale());
    return epoch.rescaled(s) + k.kali_day.rescaled(s);
}

CalendarDate jd_to_date(const FixedDec& jd) {
    if (jd.is_negative() || jd.is_zero()) {
        throw DomainError("julian date must be positive, got " + jd.to_string());
    }
    const unsigned s = std::max(jd.scale(), 1u);
    const FixedDec shifted = jd.rescaled(s) + FixedDec::parse("0.5").rescaled(s);
    const auto jdn_opt = shifted.rescaled(0).mantissa().to_u64();
    if (!jdn_opt || *jdn_opt > static_cast<std::uint64_t>(INT64_MAX / 8)) {
        throw DomainError("julian date out of range: " + jd.to_string());
    }
    const auto jdn = static_cast<std::int64_t>(*jdn_opt);

    // Richards' integer algorithm for the Julian calendar.
    const std::int64_t f = jdn + 1401;
    const std::int64_t e = 4 * f + 3;
    const std::int64_t g = floor_mod(e, 1461) / 4;
    const std::int64_t h = 5 * g + 2;
    CalendarDate date;
    date.day = static_cast<int>(floor_mod(h, 153) / 5 + 1);
    date.month = static_cast<int>(floor_mod(h / 153 + 2, 12) + 1);
    date.year = floor_div(e, 1461) - 4716 + (12 + 2 - date.month) / 12;
    return date;
}

std::int64_t date_to_jdn(const CalendarDate& date) {
    if (!date.is_valid()) {
        throw DomainError("invalid Julian calendar date " + date.to_string());
    }
    const std::int64_t a = (14 - date.month) / 12;
    const std::int64_t y = date.year + 4800 - a;
    const std::int64_t m = date.month + 12 * a - 3;
    return date.day + floor_div(153 * m + 2, 5) + 365 * y + floor_div(y, 4) - 32083;
}

FixedDec date_to_jd(const CalendarDate& date) {
    return FixedDec::from_int(date_to_jdn(date), 1) - FixedDec::parse("0.5");
}

EpochReport venvaroha_epoch_check() {
    using namespace chrono_constants;
    EpochReport report;
    const FixedDec cycles = fd_mul_int(FixedDec::parse(kAnomalisticMonthDays),
                                       static_cast<std::int64_t>(kVenvarohaAnomalisticCycles));
    report.kali_day = FixedDec::from_int(static_cast<std::int64_t>(kVenvarohaKaliDays), cycles.scale()) + cycles;
    report.jd = kali_to_julian_day(KaliInstant{report.kali_day});
    report.date = jd_to_date(report.jd);
    report.offset_days = date_to_jdn(report.date) - date_to_jdn(report.expected);
    report.matches_expected = report.offset_days >= -kEpochToleranceDays && report.offset_days <= kEpochToleranceDays;
    return report;
}

} // namespace madhava
