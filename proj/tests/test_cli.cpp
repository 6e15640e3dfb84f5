// End-to-end checks of the installed CLI surface: exit codes, diagnostics,
// output stability, JSON schema and spec round-trips.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include "gridbasis/dsl.hpp"

#include "support.hpp"

namespace {

const std::string kCli = GRIDBASIS_CLI_PATH;

support::CliResult run(const std::string& args, const std::string& env = "") {
  return support::run_cli(kCli, args, env);
}

}  // namespace

TEST_CASE("member answers and exit codes") {
  // 35142 contains the copy 3,5,1,2 of 3412: a false answer still exits 0
  const auto no = run("member --class \"Av(2143,3412)\" --perm 35142");
  CHECK(no.exit_code == 0);
  CHECK(no.out == "false\n");

  const auto yes = run("member --class \"Av(2143,3412)\" --perm 35241");
  CHECK(yes.exit_code == 0);
  CHECK(yes.out == "true\n");

  const auto inc_no = run("member --class inc --perm 132");
  CHECK(inc_no.exit_code == 0);
  CHECK(inc_no.out == "false\n");
}

TEST_CASE("member witnesses") {
  const auto grid = run("member --grid \"[dec inc; inc dec]\" --perm 3142 --witness");
  CHECK(grid.exit_code == 0);
  CHECK(grid.out == "true\nwitness: v=2 h=2\n");

  const auto juxt = run("member --juxt \"[inc|inc]\" --perm 1324 --witness");
  CHECK(juxt.exit_code == 0);
  CHECK(juxt.out == "true\nwitness: v=2\n");

  const auto vert = run("member --juxt \"[inc/inc]\" --perm 21 --witness");
  CHECK(vert.exit_code == 0);
  CHECK(vert.out == "true\nwitness: h=1\n");

  const auto cls = run("member --class inc --perm 123 --witness");
  CHECK(cls.exit_code == 0);
  CHECK(cls.out == "true\n");

  const auto json = run("member --grid \"[dec inc; inc dec]\" --perm 3142 --witness --format json");
  CHECK(json.exit_code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["member"] == true);
  CHECK(j["witness"]["v"] == 2);
  CHECK(j["witness"]["h"] == 2);
}

TEST_CASE("squint subcommand") {
  const auto a = run("squint --grid \"[dec inc; inc dec]\" --perm 2143 --side A --witness");
  CHECK(a.exit_code == 0);
  CHECK(a.out == "true\nwitness: v=2 r=3 l=0\n");
  const auto b = run("squint --grid \"[dec inc; inc dec]\" --perm 2143 --side B");
  CHECK(b.exit_code == 0);
  CHECK(b.out == "false\n");
}

TEST_CASE("basis reports in both formats") {
  const auto text = run("basis --grid \"[dec inc; inc dec]\" --max-len 6");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("basis-count: 2") != std::string::npos);
  CHECK(text.out.find("  2143\n") != std::string::npos);
  CHECK(text.out.find("  3412\n") != std::string::npos);
  CHECK(text.out.find("stabilized-at: 4") != std::string::npos);

  const auto json = run("basis --grid \"[dec inc; inc dec]\" --max-len 6 --format json");
  CHECK(json.exit_code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK_FALSE(support::check_report_schema(j).has_value());
  CHECK(j["basis"] == nlohmann::json({{2, 1, 4, 3}, {3, 4, 1, 2}}));
  // the rendered class re-parses to an equal value
  const auto g = gridbasis::parse_grid(j["class"].get<std::string>());
  CHECK(g == gridbasis::parse_grid("[dec inc; inc dec]"));
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::string args = "relbasis --grid \"[dec inc; inc dec]\" --max-len 5 --format json";
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);

  const auto workers1 = run("basis --grid \"[inc inc; inc inc]\" --max-len 5 --workers 1");
  const auto workers4 = run("basis --grid \"[inc inc; inc inc]\" --max-len 5 --workers 4");
  CHECK(workers1.out == workers4.out);
}

TEST_CASE("parse errors exit 2 with a diagnostic") {
  const auto bad_perm = run("member --class inc --perm 120");
  CHECK(bad_perm.exit_code == 2);
  CHECK(bad_perm.err.find("error:") != std::string::npos);
  CHECK(bad_perm.err.find("\"0\"") != std::string::npos);
  CHECK(bad_perm.err.find("position 2") != std::string::npos);

  const auto bad_class = run("basis --class \"Avx(21)\" --max-len 3");
  CHECK(bad_class.exit_code == 2);
  CHECK(bad_class.err.find("Avx") != std::string::npos);

  const auto bad_grid = run("basis --grid \"[inc inc]\" --max-len 3");
  CHECK(bad_grid.exit_code == 2);

  const auto no_source = run("basis --max-len 3");
  CHECK(no_source.exit_code == 2);

  const auto two_sources = run("member --class inc --grid \"[inc inc; inc inc]\" --perm 1");
  CHECK(two_sources.exit_code == 2);

  const auto bad_sub = run("frobnicate");
  CHECK(bad_sub.exit_code == 2);

  const auto bad_side = run("squint --grid \"[inc inc; inc inc]\" --perm 1 --side C");
  CHECK(bad_side.exit_code == 2);
}

TEST_CASE("resource errors exit 3") {
  const auto too_long = run("basis --class inc --max-len 13");
  CHECK(too_long.exit_code == 2);  // rejected by option validation (range 0..12)

  const auto budget = run("basis --class all --max-len 8 --memory-budget 64");
  CHECK(budget.exit_code == 3);
  CHECK(budget.err.find("length") != std::string::npos);
}

TEST_CASE("GRIDBASIS_MAX_LEN lowers but never raises the cap") {
  const auto lowered = run("basis --class inc --max-len 6", "GRIDBASIS_MAX_LEN=5");
  CHECK(lowered.exit_code == 3);
  CHECK(lowered.err.find("hard length cap") != std::string::npos);

  const auto ok = run("basis --class inc --max-len 5", "GRIDBASIS_MAX_LEN=5");
  CHECK(ok.exit_code == 0);

  // the cap never rises above 12, even with a larger env value
  const auto still_capped = run("basis --class empty --max-len 12", "GRIDBASIS_MAX_LEN=20");
  CHECK(still_capped.exit_code == 0);
  const auto above_cap = run("basis --class empty --max-len 13", "GRIDBASIS_MAX_LEN=20");
  CHECK(above_cap.exit_code == 2);

  const auto junk = run("basis --class inc --max-len 3", "GRIDBASIS_MAX_LEN=zzz");
  CHECK(junk.exit_code == 2);
}

TEST_CASE("verify subcommands") {
  const auto lemma3 = run("verify-lemma3 --grid \"[dec inc; inc dec]\" --max-len 5");
  CHECK(lemma3.exit_code == 0);
  CHECK(lemma3.out == "PASS\n");

  const auto obs2 = run("verify-obs2 --grid \"[dec inc; inc dec]\" --max-len 5");
  CHECK(obs2.exit_code == 0);
  CHECK(obs2.out == "PASS\n");

  const auto json = run("verify-lemma3 --grid \"[dec inc; inc dec]\" --max-len 4 --format json");
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["verdict"] == "PASS");
  CHECK(j["counterexample"].is_null());

  const auto obs2_json = run("verify-obs2 --grid \"[inc inc; dec dec]\" --max-len 5 --format json");
  CHECK(obs2_json.exit_code == 0);
  const auto oj = nlohmann::json::parse(obs2_json.out);
  CHECK(oj["verdict"] == "PASS");
  CHECK(oj["violations"].empty());
}

TEST_CASE("relbasis report") {
  const auto text = run("relbasis --grid \"[dec inc; inc dec]\" --max-len 5");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("relative-basis-count: 2") != std::string::npos);
  CHECK(text.out.find("2143 side=A") != std::string::npos);
  CHECK(text.out.find("3412 side=B") != std::string::npos);

  const auto json = run("relbasis --grid \"[dec inc; inc dec]\" --max-len 5 --format json");
  const auto j = nlohmann::json::parse(json.out);
  CHECK_FALSE(support::check_report_schema(j).has_value());
  CHECK(j["side_tags"]["2143"] == "A");
  CHECK(j["side_tags"]["3412"] == "B");
  CHECK(j["outside_basis"].empty());
}

TEST_CASE("survey, theorem2 and nonfb-demo run") {
  const auto survey = run("survey-monotone --max-len 4 --format json");
  CHECK(survey.exit_code == 0);
  const auto j = nlohmann::json::parse(survey.out);
  CHECK(j["orbits"].size() == 6);
  for (const auto& orbit : j["orbits"])
    CHECK_FALSE(support::check_report_schema(orbit["report"]).has_value());

  const auto theorem2 =
      run("theorem2 --c-basis \"Av(321)\" --d-basis inc --form 2 --max-len 4 --format json");
  CHECK(theorem2.exit_code == 0);
  CHECK_FALSE(support::check_report_schema(nlohmann::json::parse(theorem2.out)).has_value());

  const auto nonfb = run("nonfb-demo --max-len 4 --format json");
  CHECK(nonfb.exit_code == 0);
  const auto nj = nlohmann::json::parse(nonfb.out);
  CHECK_FALSE(support::check_report_schema(nj).has_value());
  CHECK(nj["class"] == "[empty Av(321654); Av(321654) empty]");
}

TEST_CASE("a reduced basis warns on stderr") {
  const auto r = run("member --class \"Av(21,321)\" --perm 123");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "true\n");
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(r.err.find("inc") != std::string::npos);
}
