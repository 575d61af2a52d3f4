#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "madhava/chronology.hpp"
#include "madhava/cli.hpp"
#include "madhava/error.hpp"
#include "madhava/trig_series.hpp"

namespace madhava::cli {

namespace {

constexpr std::uint64_t kAttributedCircumference = 2'827'433'388'233ull;
constexpr std::uint64_t kTrueCircumference = 2'827'433'388'231ull;

// Term-by-term sine, t_j = t_{j-1} * theta^2 / ((2j)(2j+1)); deliberately not
// the nested coefficient-table path the sine table uses.
FixedDec sine_term_by_term(const FixedDec& theta, unsigned terms, unsigned scale) {
    const FixedDec t = theta.rescaled(scale);
    const FixedDec x = fd_mul(t, t);
    FixedDec term = t;
    FixedDec sum = t;
    for (unsigned j = 1; j < terms; ++j) {
        term = fd_div_int(fd_mul(term, x), static_cast<std::uint64_t>(2 * j) * (2 * j + 1));
        sum = j % 2 == 1 ? sum - term : sum + term;
    }
    return sum;
}

Check fraction_check() {
    Check c{"madhava_pi_10_decimals", "3.1415926535", madhava_pi_value(10).to_string(), "exact", false};
    // 10 correct decimals and a wrong 11th.
    const std::string eleven = madhava_pi_value(11).to_string();
    const std::string ref = reference_pi().rescaled(11).to_string();
    c.pass = c.computed == c.expected && eleven.back() != ref.back();
    return c;
}

std::vector<Check> circumference_checks() {
    const CircumferenceReport r = circumference_check();
    Check value{"circumference_value", std::to_string(kTrueCircumference), r.computed.to_string(), "exact", false};
    value.pass = r.computed == BigNat(kTrueCircumference) && r.madhava == BigNat(kAttributedCircumference);
    Check delta{"circumference_delta", "2", std::to_string(r.delta), "exact", r.delta == 2};
    return {value, delta};
}

Check epoch_check() {
    const EpochReport r = venvaroha_epoch_check();
    return {"venvaroha_epoch", r.expected.to_string(), r.date.to_string(),
            "+-" + std::to_string(chrono_constants::kEpochToleranceDays) + " days", r.matches_expected};
}

Check sine_table_check() {
    const SineTable table = build_sine_table(10);
    const FixedDec tolerance = FixedDec::parse("0.00000001");
    FixedDec worst = FixedDec::from_int(0, 20);
    for (unsigned k = 1; k <= SineTable::kEntries; ++k) {
        const Angle theta = Angle::from_degrees_ratio(15 * static_cast<std::int64_t>(k), 4, 30);
        const FixedDec oracle = sine_term_by_term(theta.radians, 15, 20);
        const FixedDec gap = (table.values[k - 1].rescaled(20) - oracle).abs();
        worst = std::max(worst, gap);
    }
    return {"sine_table_8_digits", "max |table - reference| <= 1e-8", worst.to_string(), "1e-8",
            worst <= tolerance};
}

Check hierarchy_check() {
    constexpr unsigned kScale = 40;
    const FixedDec pi = reference_pi().rescaled(kScale);
    unsigned ordered = 0;
    for (std::uint64_t n = 2; n <= 50; ++n) {
        const FixedDec e0 = (leibniz_partial(n, kScale) - pi).abs();
        const FixedDec e1 = (leibniz_corrected(n, Correction::F1, kScale) - pi).abs();
        const FixedDec e2 = (leibniz_corrected(n, Correction::F2, kScale) - pi).abs();
        const FixedDec e3 = (leibniz_corrected(n, Correction::F3, kScale) - pi).abs();
        if (e3 < e2 && e2 < e1 && e1 < e0) {
            ++ordered;
        }
    }
    return {"correction_hierarchy", "49/49", std::to_string(ordered) + "/49", "strict", ordered == 49};
}

} // namespace

bool VerifyReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : checks) {
        doc["checks"].push_back({{"name", c.name},
                                 {"expected", c.expected},
                                 {"computed", c.computed},
                                 {"tolerance", c.tolerance},
                                 {"pass", c.pass}});
    }
    doc["pass"] = pass();
    return doc.dump(2) + "\n";
}

std::string VerifyReport::to_text() const {
    std::ostringstream out;
    for (const Check& c : checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name << "  expected=" << c.expected << "  computed=" << c.computed
            << "  tolerance=" << c.tolerance << "\n";
    }
    out << (pass() ? "all checks passed" : "verification FAILED") << "\n";
    return out.str();
}

VerifyReport build_verify_report() {
    VerifyReport report;
    report.checks.push_back(fraction_check());
    for (Check& c : circumference_checks()) {
        report.checks.push_back(std::move(c));
    }
    report.checks.push_back(epoch_check());
    report.checks.push_back(sine_table_check());
    report.checks.push_back(hierarchy_check());
    return report;
}

std::vector<ConvergenceRow> convergence_rows(const std::vector<SeriesId>& series,
                                             const std::vector<Correction>& corrections, std::uint64_t n_max,
                                             unsigned digits) {
    if (n_max < 1) {
        throw DomainError("--n-max must be at least 1");
    }
    const FixedDec pi = pi_at(digits);
    std::vector<ConvergenceRow> rows;
    for (SeriesId id : series) {
        for (Correction corr : corrections) {
            if (corr != Correction::None && id != SeriesId::Leibniz) {
                continue;
            }
            for (std::uint64_t n = 1; n <= n_max; ++n) {
                const PiResult r = evaluate(SeriesSpec{id, n, corr, digits});
                rows.push_back({id, corr, n, r.value.to_string(), (r.value - pi).abs().to_string()});
            }
        }
    }
    return rows;
}

std::string to_csv(const std::vector<ConvergenceRow>& rows) {
    std::string out = "series,correction,n,value,abs_error\n";
    for (const ConvergenceRow& row : rows) {
        out += std::string(to_string(row.series)) + "," + std::string(to_string(row.correction)) + "," +
               std::to_string(row.n) + "," + row.value + "," + row.abs_error + "\n";
    }
    return out;
}

} // namespace madhava::cli
