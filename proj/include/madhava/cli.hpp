#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "madhava/pi_series.hpp"

namespace madhava::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr unsigned kDefaultScale = 20;

struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    std::string tolerance;
    bool pass = false;
};

struct VerifyReport {
    std::vector<Check> checks;

    bool pass() const;
    /// {"checks":[{name,expected,computed,tolerance,pass}...],"pass":bool}
    std::string to_json() const;
    std::string to_text() const;
};

/// Runs the reproducible numeric checks: the 13-digit pi fraction, the
/// circumference discrepancy, the epoch date, the 24-entry sine table and the
/// correction-term hierarchy.
VerifyReport build_verify_report();

struct ConvergenceRow {
    SeriesId series;
    Correction correction;
    std::uint64_t n;
    std::string value;
    std::string abs_error;
};

/// One row per (series, applicable correction, n = 1..n_max); series in the
/// given order, corrections in the given order, n ascending. Corrections other
/// than none only apply to leibniz. Throws DomainError for n_max < 1.
std::vector<ConvergenceRow> convergence_rows(const std::vector<SeriesId>& series,
                                             const std::vector<Correction>& corrections, std::uint64_t n_max,
                                             unsigned digits);

/// Header `series,correction,n,value,abs_error` and one line per row.
std::string to_csv(const std::vector<ConvergenceRow>& rows);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace madhava::cli
