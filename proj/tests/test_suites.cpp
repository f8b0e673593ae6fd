#include "skolab/suites.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

using namespace skolab;

namespace {

RunConfig quick(std::string suite)
{
    RunConfig c;
    c.suites = {std::move(suite)};
    return c;
}

std::string message(const RunConfig& c)
{
    try {
        validate(c);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(Suites, Parsers)
{
    EXPECT_EQ(parse_t("1,2,1"), (std::vector<std::uint32_t>{1, 2, 1}));
    EXPECT_THROW(parse_t("1,0,1"), ConfigError);
    EXPECT_THROW(parse_t("1,x"), ConfigError);
    bool all = false;
    EXPECT_EQ(parse_lambda("all", 5, &all).size(), 5u);
    EXPECT_TRUE(all);
    EXPECT_EQ(parse_lambda("3", 5, &all), (std::vector<std::uint32_t>{3}));
    EXPECT_FALSE(all);
    EXPECT_THROW(parse_lambda("-1", 5), ConfigError);
    EXPECT_TRUE(parse_suites("all").empty());
    EXPECT_EQ(parse_suites("spanning,formulas,spanning"), (std::vector<std::string>{"spanning", "formulas"}));
    EXPECT_THROW(parse_suites("nope"), ConfigError);
    EXPECT_EQ(parse_format("csv"), ReportFormat::csv);
    EXPECT_THROW(parse_format("xml"), ConfigError);
    EXPECT_EQ(suite_names().size(), 9u);
}

TEST(Suites, ValidationMessages)
{
    RunConfig c;
    EXPECT_EQ(message(c), "");
    c.p = 4;
    EXPECT_EQ(message(c), "p must be an odd prime > 3");
    c.p = 3;
    EXPECT_EQ(message(c), "p must be an odd prime > 3");
    c = RunConfig{};
    c.n = 2;
    c.t = {1, 1};
    EXPECT_EQ(message(c), "n must be at least 3");
    c = RunConfig{};
    c.t = {1, 1};
    EXPECT_EQ(message(c), "t must have n entries");
    c = RunConfig{};
    c.lambdas = {5};
    EXPECT_EQ(message(c), "lambda must lie in 0..p-1");
    c = RunConfig{};
    c.suites = {"bogus"};
    EXPECT_EQ(message(c), "unknown suite 'bogus'");
    c = RunConfig{};
    c.t = {3, 3, 3};
    EXPECT_NE(message(c).find("too large"), std::string::npos);
    EXPECT_THROW(run_suites(c), ConfigError);
}

TEST(Suites, DeterministicJson)
{
    RunConfig c = quick("algebra-axioms");
    c.seed = 42;
    std::string a = report_json(run_suites(c)), b = report_json(run_suites(c));
    EXPECT_EQ(a, b);
    c.seed = 43;
    auto j = nlohmann::json::parse(report_json(run_suites(c)));
    EXPECT_EQ(j["params"]["seed"], 43);
}

TEST(Suites, JsonLayout)
{
    Report r = run_suites(quick("bracket-identities"));
    auto j = nlohmann::json::parse(report_json(r));
    EXPECT_EQ(j["params"]["p"], 5);
    EXPECT_EQ(j["params"]["t"], nlohmann::json::array({1, 1, 1}));
    ASSERT_EQ(j["suites"].size(), 1u);
    const auto& s = j["suites"][0];
    EXPECT_EQ(s["name"], "bracket-identities");
    EXPECT_EQ(s["lambda"], 2);
    for (const auto& chk : s["checks"]) {
        for (const char* k : {"claim", "anchor", "expected", "computed", "pass"}) EXPECT_TRUE(chk.contains(k)) << k;
        EXPECT_FALSE(chk.contains("millis"));
    }
    EXPECT_EQ(j["all_pass"].get<bool>(), r.all_pass());
    auto t = nlohmann::json::parse(report_json(r, true));
    EXPECT_TRUE(t["suites"][0]["checks"][0].contains("millis"));
}

TEST(Suites, CsvAndText)
{
    Report r = run_suites(quick("algebra-axioms"));
    std::string csv = report_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "suite,lambda,claim,anchor,expected,computed,pass");
    std::size_t lines = 0;
    for (char ch : csv) lines += ch == '\n';
    EXPECT_EQ(lines, r.suites[0].checks.size() + 1);
    std::string timed = report_csv(r, true);
    EXPECT_EQ(timed.substr(0, timed.find('\n')), "suite,lambda,claim,anchor,expected,computed,pass,millis");
    std::string text = report_text(r);
    EXPECT_NE(text.find(std::to_string(r.suites[0].checks.size()) + " checks, 0 failed"), std::string::npos);
    EXPECT_EQ(render_report(r, ReportFormat::csv), csv);
    EXPECT_TRUE(r.all_pass());
}

TEST(Suites, ComparisonRunsOnceWithoutLambda)
{
    RunConfig c = quick("comparison");
    c.lambdas = parse_lambda("all", 5, &c.all_lambdas);
    Report r = run_suites(c);
    ASSERT_EQ(r.suites.size(), 1u);
    EXPECT_FALSE(r.suites[0].lambda);
}

TEST(Suites, SpanningJson)
{
    AlgebraContext ctx(AlgebraParams{5, 3, {1, 1, 1}, 2});
    auto j = nlohmann::json::parse(spanning_json(ctx));
    EXPECT_EQ(j["rank"], 1003);
    EXPECT_EQ(j["nullity"], 1003);
}
