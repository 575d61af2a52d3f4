#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "madhava/chronology.hpp"
#include "madhava/cli.hpp"
#include "madhava/error.hpp"
#include "madhava/geometry.hpp"
#include "madhava/trig_series.hpp"

namespace madhava::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Emitter {
    std::ostream& out;
    bool json = false;

    /// Text mode prints "key: value" lines, except a lone "value" which prints bare.
    void emit(const Json& doc) const {
        if (json) {
            out << doc.dump(2) << "\n";
            return;
        }
        for (const auto& [key, value] : doc.items()) {
            if (key == "value") {
                out << value.get<std::string>() << "\n";
            } else if (value.is_string()) {
                out << key << ": " << value.get<std::string>() << "\n";
            } else if (!value.is_null()) {
                out << key << ": " << value.dump() << "\n";
            }
        }
    }
};

void add_format(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

void add_scale(CLI::App* cmd, unsigned& scale) {
    cmd->add_option("--scale", scale, "Decimal digits after the point")->capture_default_str();
}

Angle angle_from(const std::string& degrees, const std::string& radians, unsigned scale) {
    if (!radians.empty()) {
        return Angle::from_radians(FixedDec::parse(radians).rescaled(scale + kTrigGuardDigits));
    }
    return Angle::from_degrees(FixedDec::parse(degrees), scale + kTrigGuardDigits);
}

AngleRule parse_rule(const std::string& name) {
    if (name == "sin-sum") return AngleRule::SinSum;
    if (name == "sin-diff") return AngleRule::SinDiff;
    if (name == "cos-sum") return AngleRule::CosSum;
    return AngleRule::CosDiff;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"High-precision series for pi, sine and cosine, with reproduction checks", "madhava"};
    app.require_subcommand(1);

    // pi
    std::string series_name;
    std::uint64_t terms = 0;
    std::string correction_name = "none";
    unsigned digits = kDefaultScale;
    std::string pi_format = "text";
    auto* pi_cmd = app.add_subcommand("pi", "Evaluate one series for pi");
    pi_cmd->add_option("--series", series_name, "Series")
        ->required()
        ->check(CLI::IsMember({"leibniz", "aux-a", "aux-b", "aux-c", "aux-d", "sqrt12"}));
    pi_cmd->add_option("--terms", terms, "Number of summed terms")->required()->check(CLI::PositiveNumber);
    pi_cmd->add_option("--correction", correction_name, "End correction (leibniz only)")
        ->check(CLI::IsMember({"none", "f1", "f2", "f3"}))
        ->capture_default_str();
    pi_cmd->add_option("--digits", digits, "Reported decimal digits")->capture_default_str();
    add_format(pi_cmd, pi_format);

    // verify
    std::string verify_format = "text";
    auto* verify_cmd = app.add_subcommand("verify", "Run the reproduction checks");
    add_format(verify_cmd, verify_format);

    // converge
    std::vector<std::string> converge_series;
    std::uint64_t n_max = 0;
    std::string corrections_arg = "none";
    unsigned converge_digits = kDefaultScale;
    auto* converge_cmd = app.add_subcommand("converge", "CSV convergence sweep");
    converge_cmd->add_option("--series", converge_series, "Comma-separated series list")
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember({"leibniz", "aux-a", "aux-b", "aux-c", "aux-d", "sqrt12"}));
    converge_cmd->add_option("--n-max", n_max, "Largest term count")->required();
    converge_cmd->add_option("--corrections", corrections_arg, "all, or comma-separated none,f1,f2,f3")
        ->capture_default_str();
    converge_cmd->add_option("--digits", converge_digits, "Reported decimal digits")->capture_default_str();

    // trig
    auto* trig_cmd = app.add_subcommand("trig", "Sine and cosine series");
    trig_cmd->require_subcommand(1);
    unsigned trig_scale = kDefaultScale;
    std::string trig_format = "text";

    std::string eval_fn = "sin";
    std::string eval_degrees;
    std::string eval_radians;
    unsigned eval_terms = 0;
    auto* eval_cmd = trig_cmd->add_subcommand("eval", "Evaluate sin, cos or sin^2 by series");
    eval_cmd->add_option("--fn", eval_fn, "Function")
        ->check(CLI::IsMember({"sin", "cos", "sin2"}))
        ->capture_default_str();
    auto* deg_opt = eval_cmd->add_option("--degrees", eval_degrees, "Angle in degrees");
    auto* rad_opt = eval_cmd->add_option("--radians", eval_radians, "Angle in radians");
    deg_opt->excludes(rad_opt);
    eval_cmd->add_option("--terms", eval_terms, "Series terms (default: from the remainder bound)");
    add_scale(eval_cmd, trig_scale);
    add_format(eval_cmd, trig_format);

    auto* table_cmd = trig_cmd->add_subcommand("table", "24-entry sine table at 3.75 degree steps");
    unsigned table_scale = 10;
    table_cmd->add_option("--scale", table_scale, "Decimal digits (>= 10)")->capture_default_str();
    add_format(table_cmd, trig_format);

    std::string shift_fn = "sin";
    std::string shift_u;
    std::string shift_h;
    auto* shift_cmd = trig_cmd->add_subcommand("shift", "Second-order shift sin/cos(u + h)");
    shift_cmd->add_option("--fn", shift_fn, "Function")
        ->check(CLI::IsMember({"sin", "cos"}))
        ->capture_default_str();
    shift_cmd->add_option("--u-degrees", shift_u, "Base angle u in degrees")->required();
    shift_cmd->add_option("--h-radians", shift_h, "Shift h in radians, |h| <= 0.5")->required();
    add_scale(shift_cmd, trig_scale);
    add_format(shift_cmd, trig_format);

    std::string add_x;
    std::string add_y;
    std::string add_rule = "sin-sum";
    auto* addrule_cmd = trig_cmd->add_subcommand("addrule", "Angle addition and subtraction rules");
    addrule_cmd->add_option("--x-degrees", add_x, "x in degrees")->required();
    addrule_cmd->add_option("--y-degrees", add_y, "y in degrees")->required();
    addrule_cmd->add_option("--rule", add_rule, "Rule")
        ->check(CLI::IsMember({"sin-sum", "sin-diff", "cos-sum", "cos-diff"}))
        ->capture_default_str();
    add_scale(addrule_cmd, trig_scale);
    add_format(addrule_cmd, trig_format);

    // quad
    auto* quad_cmd = app.add_subcommand("quad", "Cyclic quadrilaterals");
    quad_cmd->require_subcommand(1);
    std::vector<std::string> sides;
    unsigned quad_scale = kDefaultScale;
    std::string quad_format = "text";
    auto* radius_cmd = quad_cmd->add_subcommand("radius", "Circumradius from four sides");
    radius_cmd->add_option("--sides", sides, "a,b,c,d")->required()->delimiter(',')->expected(4);
    add_scale(radius_cmd, quad_scale);
    add_format(radius_cmd, quad_format);

    // chrono
    auto* chrono_cmd = app.add_subcommand("chrono", "Kali-day chronology");
    chrono_cmd->require_subcommand(1);
    std::string chrono_format = "text";
    auto* check_cmd = chrono_cmd->add_subcommand("check", "Epoch date of the lunar tables");
    add_format(check_cmd, chrono_format);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*pi_cmd) {
            const SeriesSpec spec{parse_series_id(series_name), terms, parse_correction(correction_name), digits};
            if (spec.correction != Correction::None && spec.series != SeriesId::Leibniz) {
                err << "error: --correction applies only to --series leibniz\n";
                return kExitUsage;
            }
            const PiResult r = evaluate(spec);
            Json doc;
            doc["value"] = r.value.to_string();
            doc["series"] = std::string(to_string(spec.series));
            doc["correction"] = std::string(to_string(spec.correction));
            doc["terms"] = r.terms_used;
            doc["digits"] = spec.digits;
            doc["error_bound"] = r.error_bound ? Json(r.error_bound->to_string()) : Json(nullptr);
            Emitter{out, pi_format == "json"}.emit(doc);
            return kExitOk;
        }

        if (*verify_cmd) {
            const VerifyReport report = build_verify_report();
            out << (verify_format == "json" ? report.to_json() : report.to_text());
            return report.pass() ? kExitOk : kExitCheckFailed;
        }

        if (*converge_cmd) {
            std::vector<SeriesId> ids;
            for (const auto& name : converge_series) {
                ids.push_back(parse_series_id(name));
            }
            std::vector<Correction> corrections;
            if (corrections_arg == "all") {
                corrections = {Correction::None, Correction::F1, Correction::F2, Correction::F3};
            } else {
                std::stringstream list(corrections_arg);
                for (std::string item; std::getline(list, item, ',');) {
                    corrections.push_back(parse_correction(item));
                }
            }
            if (n_max < 1) {
                err << "error: --n-max must be at least 1\n";
                return kExitUsage;
            }
            out << to_csv(convergence_rows(ids, corrections, n_max, converge_digits));
            return kExitOk;
        }

        if (*eval_cmd) {
            if (eval_degrees.empty() && eval_radians.empty()) {
                err << "error: one of --degrees or --radians is required\n";
                return kExitUsage;
            }
            const Angle theta = angle_from(eval_degrees, eval_radians, trig_scale);
            const CoeffPurpose purpose = eval_fn == "sin"   ? CoeffPurpose::Sin
                                         : eval_fn == "cos" ? CoeffPurpose::Cos
                                                            : CoeffPurpose::SinSq;
            const unsigned n =
                eval_terms > 0 ? eval_terms
                               : series_terms(purpose, theta.radians.abs(), trig_scale + kTrigGuardDigits);
            FixedDec value = purpose == CoeffPurpose::Sin   ? sin_series(theta, n, trig_scale)
                             : purpose == CoeffPurpose::Cos ? cos_series(theta, n, trig_scale)
                                                            : sin_sq_series(theta, n, trig_scale);
            Json doc;
            doc["value"] = value.to_string();
            doc["fn"] = eval_fn;
            doc["radians"] = theta.radians.rescaled(trig_scale).to_string();
            doc["terms"] = n;
            doc["scale"] = trig_scale;
            Emitter{out, trig_format == "json"}.emit(doc);
            return kExitOk;
        }

        if (*table_cmd) {
            const SineTable table = build_sine_table(table_scale);
            if (trig_format == "json") {
                Json doc;
                doc["scale"] = table.scale;
                doc["terms"] = table.terms;
                doc["entries"] = Json::array();
                for (unsigned k = 1; k <= SineTable::kEntries; ++k) {
                    doc["entries"].push_back({{"k", k},
                                              {"degrees", SineTable::degrees_label(k)},
                                              {"value", table.values[k - 1].to_string()}});
                }
                out << doc.dump(2) << "\n";
            } else {
                for (unsigned k = 1; k <= SineTable::kEntries; ++k) {
                    out << k << "," << SineTable::degrees_label(k) << "," << table.values[k - 1].to_string() << "\n";
                }
            }
            return kExitOk;
        }

        if (*shift_cmd) {
            const unsigned working = trig_scale + kTrigGuardDigits;
            const Angle u = Angle::from_degrees(FixedDec::parse(shift_u), working);
            const FixedDec h = FixedDec::parse(shift_h);
            const bool is_sin = shift_fn == "sin";
            const FixedDec approx = is_sin ? taylor_shift_sin(u, h, trig_scale) : taylor_shift_cos(u, h, trig_scale);
            const Angle shifted = Angle::from_radians(u.radians + h.rescaled(working));
            const FixedDec direct = is_sin ? sine(shifted, trig_scale) : cosine(shifted, trig_scale);
            Json doc;
            doc["value"] = approx.to_string();
            doc["fn"] = shift_fn;
            doc["direct"] = direct.to_string();
            doc["difference"] = (approx - direct).to_string();
            Emitter{out, trig_format == "json"}.emit(doc);
            return kExitOk;
        }

        if (*addrule_cmd) {
            const unsigned working = trig_scale + kTrigGuardDigits;
            const Angle x = Angle::from_degrees(FixedDec::parse(add_x), working);
            const Angle y = Angle::from_degrees(FixedDec::parse(add_y), working);
            const AngleRule rule = parse_rule(add_rule);
            const FixedDec rhs = angle_add(x, y, rule, trig_scale);
            const bool sum = rule == AngleRule::SinSum || rule == AngleRule::CosSum;
            const Angle combined = Angle::from_radians(sum ? x.radians + y.radians : x.radians - y.radians);
            const bool is_sin = rule == AngleRule::SinSum || rule == AngleRule::SinDiff;
            const FixedDec direct = is_sin ? sine(combined, trig_scale) : cosine(combined, trig_scale);
            Json doc;
            doc["value"] = rhs.to_string();
            doc["rule"] = add_rule;
            doc["direct"] = direct.to_string();
            doc["difference"] = (rhs - direct).to_string();
            Emitter{out, trig_format == "json"}.emit(doc);
            return kExitOk;
        }

        if (*radius_cmd) {
            const QuadSides q{FixedDec::parse(sides[0]), FixedDec::parse(sides[1]), FixedDec::parse(sides[2]),
                              FixedDec::parse(sides[3])};
            Json doc;
            doc["value"] = circumradius(q, quad_scale).to_string();
            doc["scale"] = quad_scale;
            Emitter{out, quad_format == "json"}.emit(doc);
            return kExitOk;
        }

        if (*check_cmd) {
            const EpochReport r = venvaroha_epoch_check();
            Json doc;
            doc["kali_day"] = r.kali_day.to_string();
            doc["jd"] = r.jd.to_string();
            doc["date"] = r.date.to_string();
            doc["expected"] = r.expected.to_string();
            doc["offset_days"] = r.offset_days;
            doc["tolerance_days"] = chrono_constants::kEpochToleranceDays;
            doc["pass"] = r.matches_expected;
            Emitter{out, chrono_format == "json"}.emit(doc);
            return r.matches_expected ? kExitOk : kExitCheckFailed;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace madhava::cli
