#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "madhava/cli.hpp"

using madhava::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        result.push_back(line);
    }
    return result;
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

} // namespace

TEST_CASE("pi subcommand") {
    auto r = invoke({"pi", "--series", "sqrt12", "--terms", "28", "--digits", "14"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "3.14159265358979");

    r = invoke({"pi", "--series", "leibniz", "--terms", "1", "--digits", "6"});
    CHECK(first_line(r.out) == "4.000000");
    r = invoke({"pi", "--series", "aux-b", "--terms", "1", "--digits", "6"});
    CHECK(first_line(r.out) == "2.666666");
    r = invoke({"pi", "--series", "leibniz", "--terms", "1", "--correction", "f3", "--digits", "12"});
    CHECK(first_line(r.out) == "3.111111111111");

    r = invoke({"pi", "--series", "aux-c", "--terms", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"value", "series", "correction", "terms", "digits", "error_bound"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["value"] == "3.13725490196078431372");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(invoke({"pi", "--series", "aux-a", "--terms", "3", "--correction", "f1"}).code == 2);
    CHECK(invoke({"pi", "--series", "nope", "--terms", "3"}).code == 2);
    CHECK(invoke({"pi", "--series", "leibniz", "--terms", "0"}).code == 2);
    CHECK(invoke({"converge", "--series", "leibniz", "--n-max", "0"}).code == 2);
    CHECK(invoke({"bogus"}).code == 2);
    CHECK(invoke({}).code == 2);
    const auto r = invoke({"quad", "radius", "--sides", "5,1,1,1"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("verify") {
    auto r = invoke({"verify", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["checks"].is_array());
    CHECK(j["checks"].size() == 6);
    for (const auto& check : j["checks"]) {
        for (const char* key : {"name", "expected", "computed", "tolerance", "pass"}) {
            CHECK(check.contains(key));
        }
        CHECK(check["pass"] == true);
    }
    r = invoke({"verify"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).back() == "all checks passed");
}

TEST_CASE("converge") {
    const std::vector<std::string> args = {"converge", "--series",      "leibniz", "--n-max",
                                           "3",        "--corrections", "all",     "--digits", "12"};
    const auto r = invoke(args);
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 13);
    CHECK(rows[0] == "series,correction,n,value,abs_error");
    CHECK(rows[1] == "leibniz,none,1,4.000000000000,0.858407346411");

    // byte-identical on a second run
    CHECK(invoke(args).out == r.out);

    const auto table = madhava::cli::convergence_rows(
        {madhava::SeriesId::Leibniz}, {madhava::Correction::None, madhava::Correction::F3}, 30, 20);
    for (std::size_t n = 2; n <= 30; ++n) {
        const auto& plain = table[n - 1];
        const auto& f3 = table[30 + n - 1];
        REQUIRE(plain.n == n);
        REQUIRE(f3.n == n);
        CHECK(f3.abs_error < plain.abs_error);
    }
}

TEST_CASE("trig subcommands") {
    auto r = invoke({"trig", "eval", "--fn", "sin", "--degrees", "30", "--scale", "12"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "0.500000000000");

    r = invoke({"trig", "table"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 24);
    CHECK(rows[7] == "8,30.00,0.5000000000");
    CHECK(rows[23] == "24,90.00,1.0000000000");

    r = invoke({"trig", "addrule", "--x-degrees", "30", "--y-degrees", "15", "--rule", "sin-sum", "--scale", "19"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "0.7071067811865475244");

    r = invoke({"trig", "shift", "--fn", "sin", "--u-degrees", "30", "--h-radians", "0.01", "--scale", "8"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out).substr(0, 7) == "0.50863");
}

TEST_CASE("quad and chrono") {
    auto r = invoke({"quad", "radius", "--sides", "3,4,3,4", "--scale", "6", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["value"] == "2.500000");

    r = invoke({"chrono", "check", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["date"] == "1402-03-09");
    CHECK(j["pass"] == true);
}
