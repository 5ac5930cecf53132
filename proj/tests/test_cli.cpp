#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "condind/dispatch.hpp"
#include "condind/error.hpp"
#include "condind/scenario.hpp"
#include "helpers.hpp"

using namespace condind;
using condind::testing::rv;
using nlohmann::json;

namespace {

const char* kCanonical = R"({
  "atoms": [{"label": "a", "prob": "1/4"}, {"label": "b", "prob": "1/4"},
            {"label": "c", "prob": "1/4"}, {"label": "d", "prob": "1/4"}],
  "partitions": {"F0": [["a", "b", "c", "d"]], "H": [["a", "b"], ["c", "d"]],
                 "F1": [["a", "b"], ["c", "d"]], "F2": [["a"], ["b"], ["c"], ["d"]]},
  "filtration": ["F0", "F1", "F2"],
  "variables": {"X": {"a": "1", "b": "3", "c": "2", "d": "6"}}
})";

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("condind_test_" + name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

json run_json(const std::vector<std::string>& args, int expected_code = kExitOk) {
  RunResult r = dispatch(args);
  EXPECT_EQ(r.exit_code, expected_code) << r.output;
  return json::parse(r.output);
}

std::vector<std::string> values_of(const json& v) {
  std::vector<std::string> out;
  for (const auto& [k, x] : v.items()) out.push_back(x.get<std::string>());
  return out;
}

}  // namespace

TEST(Scenario, LoadsCanonicalText) {
  Scenario s = parse_scenario(kCanonical);
  EXPECT_EQ(s.space->size(), 4u);
  EXPECT_EQ(s.variable("X"), rv(s.space, {1, 3, 2, 6}));
  ASSERT_TRUE(s.filtration.has_value());
  EXPECT_EQ(s.filtration->size(), 3u);
  EXPECT_EQ(s, canonical_scenario());
  EXPECT_EQ(s.partition("discrete"), Partition::discrete(4));
  EXPECT_THROW(s.partition("nope"), UnknownName);
  EXPECT_THROW(s.variable("nope"), UnknownName);
}

TEST(Scenario, ValuesMayBeInfiniteOrDecimal) {
  Scenario s = parse_scenario(R"({"atoms": [{"label": "u", "prob": "0.25"}, {"label": "v", "prob": 0.75}],
                                  "variables": {"X": {"u": "-inf", "v": "1.5"}}})");
  EXPECT_EQ(s.variable("X"), rv(s.space, {"-inf", "3/2"}));
  EXPECT_EQ(s.space->prob(1), Rational(3, 4));
}

TEST(Scenario, RejectsNullAtom) {
  EXPECT_THROW(parse_scenario(R"({"atoms": [{"label": "a", "prob": "0"}, {"label": "b", "prob": "1"}]})"),
               ValidationError);
}

TEST(Scenario, RejectsNonRefiningFiltration) {
  std::string text = kCanonical;
  text.replace(text.find(R"(["F0", "F1", "F2"])"), 18, R"(["F2", "F0"])");
  EXPECT_THROW(parse_scenario(text), ValidationError);
}

TEST(Scenario, RejectsBrokenShapes) {
  EXPECT_THROW(parse_scenario(R"({"atoms": [{"label": "a", "prob": "1"}], "partitions": {"H": [["a"], ["a"]]}})"),
               ValidationError);
  EXPECT_THROW(parse_scenario(R"({"atoms": [{"label": "a", "prob": "1"}], "variables": {"X": {"b": "1"}}})"),
               ValidationError);
  EXPECT_THROW(parse_scenario(R"({"atoms": "none"})"), ValidationError);
}

TEST(Scenario, ParseErrorCarriesLine) {
  try {
    parse_scenario("{\n  \"atoms\": [\n    {\"label\": \"a\",, }\n  ]\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(load_scenario("/nonexistent/condind.json"), ParseError);
}

TEST(Scenario, RoundTrip) {
  Scenario s = parse_scenario(kCanonical);
  s.densities.emplace("rho", rv(s.space, {"1/2", "3/2", "1", "1"}));
  Scenario back = parse_scenario(scenario_to_json(s));
  EXPECT_EQ(back, s);
  EXPECT_EQ(scenario_to_json(back), scenario_to_json(s));
}

TEST(Dispatch, ApplyEsssup) {
  json out = run_json({"apply", "--indicator", "esssup", "--sigma", "H", "--var", "X"});
  EXPECT_EQ(out["command"], "apply");
  EXPECT_EQ(values_of(out["result"]["value"]), (std::vector<std::string>{"3", "3", "6", "6"}));
  EXPECT_FALSE(out.contains("elapsed_ms"));
}

TEST(Dispatch, ApplyFromFile) {
  std::string path = write_temp("canonical", kCanonical);
  json out = run_json({"--scenario", path, "apply", "--indicator", "mix:esssup", "--var", "X"});
  EXPECT_EQ(values_of(out["result"]["value"]), (std::vector<std::string>{"2", "2", "4", "4"}));
}

TEST(Dispatch, Risk) {
  json out = run_json({"risk", "--indicator", "condexp", "--var", "X"});
  std::string dumped = out["result"].dump();
  for (const char* v : {"\"-2\"", "\"-4\""}) EXPECT_NE(dumped.find(v), std::string::npos) << dumped;
}

TEST(Dispatch, Envelope) {
  json out = run_json({"envelope", "--indicator", "esssup", "--payoff", "X"});
  std::string dumped = out["result"].dump();
  EXPECT_NE(dumped.find("\"V\""), std::string::npos) << dumped;
  EXPECT_NE(dumped.find("\"6\""), std::string::npos) << dumped;
}

TEST(Dispatch, ExitCodes) {
  EXPECT_EQ(dispatch({"frobnicate"}).exit_code, kExitValidation);
  EXPECT_NE(dispatch({"frobnicate"}).output.find("unknown command"), std::string::npos);
  EXPECT_EQ(dispatch({"apply", "--indicator", "nope", "--var", "X"}).exit_code, kExitValidation);
  EXPECT_EQ(dispatch({"apply", "--indicator", "esssup", "--var", "Q"}).exit_code, kExitValidation);
  EXPECT_EQ(dispatch({"--scenario", "/nonexistent.json", "apply", "--indicator", "esssup", "--var", "X"}).exit_code,
            kExitValidation);
  std::string bad = write_temp("null_atom", R"({"atoms": [{"label": "a", "prob": "0"}, {"label": "b", "prob": "1"}]})");
  EXPECT_EQ(dispatch({"--scenario", bad, "verify-all"}).exit_code, kExitValidation);
  EXPECT_EQ(dispatch({"recover-density", "--indicator", "esssup"}).exit_code, kExitCounterexample);
  EXPECT_EQ(dispatch({"tower", "--indicator", "esssup;essinf;esssup", "--s", "F0", "--t", "F1"}).exit_code,
            kExitCounterexample);
  EXPECT_EQ(dispatch({"check", "--indicator", "esssup", "--property", "linear"}).exit_code, kExitCounterexample);
  EXPECT_EQ(dispatch({"check", "--indicator", "condexp", "--property", "linear"}).exit_code, kExitOk);
}

TEST(Dispatch, TextFormat) {
  RunResult r = dispatch({"--format", "text", "check", "--indicator", "esssup", "--property", "axioms"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.output.rfind("Verified", 0), 0u) << r.output;
}

TEST(Dispatch, CapFromEnvironment) {
  const std::vector<std::string> args{"--format", "text", "--sigma", "discrete", "--samples", "5",
                                      "check",    "--indicator", "esssup",  "--property", "regular"};
  ::unsetenv("CONDIND_CAP");
  EXPECT_EQ(dispatch(args).output.find("Skipped-partial"), std::string::npos);
  ::setenv("CONDIND_CAP", "2", 1);
  RunResult capped = dispatch(args);
  EXPECT_NE(capped.output.find("Skipped-partial"), std::string::npos) << capped.output;
  std::vector<std::string> explicit_cap = args;
  explicit_cap.insert(explicit_cap.begin(), {"--cap", "10"});
  EXPECT_EQ(dispatch(explicit_cap).output.find("Skipped-partial"), std::string::npos);
  ::setenv("CONDIND_CAP", "lots", 1);
  EXPECT_EQ(dispatch(args).exit_code, kExitValidation);
  ::unsetenv("CONDIND_CAP");
}

TEST(Dispatch, VerifyAllIsDeterministic) {
  RunResult a = dispatch({"verify-all", "--seed", "7"});
  RunResult b = dispatch({"verify-all", "--seed", "7"});
  EXPECT_EQ(a.exit_code, kExitOk) << a.output.substr(0, 2000);
  EXPECT_EQ(a.output, b.output);
  RunResult c = dispatch({"verify-all", "--seed", "8", "--samples", "50"});
  EXPECT_EQ(c.exit_code, kExitOk);
  EXPECT_NE(a.output, c.output);
}
