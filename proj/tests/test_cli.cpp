#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hankel_lab/cli.hpp"

using namespace hankel_lab;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, const Registry& registry = default_registry()) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, registry, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s, const std::string& prefix) {
  std::istringstream is(s);
  std::size_t n = 0;
  for (std::string line; std::getline(is, line);) n += line.rfind(prefix, 0) == 0 ? 1 : 0;
  return n;
}

// A check whose left side uses a moment sequence with one wrong term.
Registry broken_registry() {
  Registry r;
  r.push_back(Check{"broken-catalan", "(18)", "Catalan numbers with a(2) + 1", 4, ParamKind::None,
                    [](const CheckContext& ctx) {
                      const auto bad = perturb(sequences::catalan_numbers<Integer>(), 2);
                      return run_per_n("broken-catalan", ctx.n_max,
                                       [bad](std::size_t n) { return catalan_form_at(bad, n); });
                    }});
  r.push_back(Check{"ok", "(18)", "Catalan numbers", 2, ParamKind::None, [](const CheckContext& ctx) {
                      const auto a = sequences::catalan_numbers<Integer>();
                      return run_per_n("ok", ctx.n_max, [a](std::size_t n) { return catalan_form_at(a, n); });
                    }});
  r.push_back(Check{"inexact", "-", "raises an inexact division", 1, ParamKind::None, [](const CheckContext& ctx) {
                      return run_per_n("inexact", ctx.n_max, [](std::size_t) -> Comparison {
                        return {exact_div(Integer(3), Integer(2)).is_zero(), "", ""};
                      });
                    }});
  return r;
}

}  // namespace

TEST_CASE("list") {
  const auto r = invoke({"list"});
  CHECK(r.code == 0);
  for (const char* id : {"thm1", "cor1", "cor6", "eq57", "mutation"}) CHECK(r.out.find(id) != std::string::npos);
  CHECK(count_lines(r.out, "") == default_registry().size());

  const auto j = invoke({"list", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"default_n\": 8") != std::string::npos);
  CHECK(j.out.find("\"equations\": \"(17), (18)\"") != std::string::npos);

  CHECK(invoke({"list", "--bogus"}).code == 2);
  CHECK(invoke({"list", "--format", "yaml"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
}

TEST_CASE("run") {
  const auto r = invoke({"run", "cor1", "--n-max", "6"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out, "PASS cor1 ") == 7);
  CHECK(count_lines(r.out, "FAIL") == 0);

  CHECK(invoke({"run", "nosuch"}).code == 2);
  CHECK(invoke({"run", "cor1,nosuch"}).code == 2);
  CHECK(invoke({"run"}).code == 2);
  CHECK(invoke({"run", "cor1", "--n-max", "-1"}).code == 2);
  CHECK(invoke({"run", "cor1", "--param", "x"}).code == 2);
  CHECK(invoke({"run", "cor1", "--format", "xml"}).code == 2);

  const auto two = invoke({"run", "cor1,cor2", "lemma", "--n-max", "1"});
  CHECK(two.code == 0);
  CHECK(count_lines(two.out, "PASS") == 6);

  const auto csv = invoke({"run", "cor1", "--n-max", "2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("check,n,pass,millis,lhs,rhs\n", 0) == 0);
  CHECK(count_lines(csv.out, "cor1,") == 3);

  const auto q = invoke({"run", "cor3", "--n-max", "2", "--param", "1/2"});
  CHECK(q.code == 0);
  CHECK(invoke({"run", "eq41", "--n-max", "1", "--param", "1"}).code == 1);
}

TEST_CASE("run --out duplicates the report") {
  const std::string path = "test_cli_out.txt";
  const auto r = invoke({"run", "cor1", "--n-max", "3", "--out", path});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == r.out);
  std::remove(path.c_str());
}

TEST_CASE("exit codes with a deliberately broken registry") {
  const Registry reg = broken_registry();
  const auto bad = invoke({"run", "broken-catalan"}, reg);
  CHECK(bad.code == 1);
  CHECK(count_lines(bad.out, "FAIL broken-catalan") >= 1);
  CHECK(bad.out.find("  lhs: ") != std::string::npos);
  CHECK(invoke({"run", "ok"}, reg).code == 0);
  CHECK(invoke({"run", "all"}, reg).code == 3);
  CHECK(invoke({"run", "ok,broken-catalan"}, reg).code == 1);
  CHECK(invoke({"run", "inexact"}, reg).code == 3);
  CHECK(invoke({"run", "cor1"}, reg).code == 2);

  const auto j = invoke({"run", "broken-catalan", "--format", "json"}, reg);
  CHECK(j.code == 1);
  const auto reports = cli::reports_from_json(j.out);
  REQUIRE(reports.size() == 1);
  CHECK_FALSE(reports[0].passed());
  CHECK(j.out.find("\"rhs\"") != std::string::npos);
}

TEST_CASE("JSON report round-trips for every check at n_max = 3") {
  const auto r = invoke({"run", "all", "--n-max", "3", "--format", "json"});
  CHECK(r.code == 0);
  const auto reports = cli::reports_from_json(r.out);
  CHECK(reports.size() == default_registry().size());
  CHECK(cli::reports_to_json(reports) + "\n" == r.out);

  std::vector<CheckReport> direct;
  for (const auto& c : default_registry()) direct.push_back(c.run(CheckContext{3, std::nullopt, kDefaultSeed}));
  REQUIRE(direct.size() == reports.size());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    CHECK(reports[i].id == direct[i].id);
    REQUIRE(reports[i].outcomes.size() == 4);
    for (std::size_t n = 0; n < 4; ++n) {
      CHECK(reports[i].outcomes[n].n == direct[i].outcomes[n].n);
      CHECK(reports[i].outcomes[n].pass == direct[i].outcomes[n].pass);
    }
  }

  CheckReport failing{"x", {{0, true, "", "", 1}, {1, false, "a, \"b\"", "c\nd", 2}}, 3};
  const auto back = cli::reports_from_json(cli::reports_to_json({failing}));
  REQUIRE(back.size() == 1);
  CHECK(back[0].outcomes == failing.outcomes);
}

TEST_CASE("seq") {
  CHECK(invoke({"seq", "motzkin", "8"}).out == "1 1 2 4 9 21 51 127\n");
  CHECK(invoke({"seq", "schroder-large", "6"}).out == "1 2 6 22 90 394\n");
  CHECK(invoke({"seq", "schroder-little", "6"}).out == "1 1 3 11 45 197\n");
  CHECK(invoke({"seq", "catalan", "6"}).out == "1 1 2 5 14 42\n");
  CHECK(invoke({"seq", "central-binomial", "5"}).out == "1 2 6 20 70\n");
  CHECK(invoke({"seq", "double-factorial", "5"}).out == "1 1 3 15 105\n");
  CHECK(invoke({"seq", "carlitz-q-catalan", "3"}).out == "1; 1; 1 + q\n");
  CHECK(invoke({"seq", "motzkin-u", "3"}).out == "1; u; 1 + u^2\n");
  CHECK(invoke({"seq", "motzkin-u", "8", "--param", "1"}).out == "1 1 2 4 9 21 51 127\n");
  CHECK(invoke({"seq", "carlitz-q-catalan", "6", "--param", "1"}).out == "1 1 2 5 14 42\n");
  CHECK(invoke({"seq", "andrews-q-catalan", "3", "--param", "1"}).out == "1 1/4 1/8\n");
  CHECK(invoke({"seq", "q-central-binomial", "3", "--param", "1"}).out == "1 1/2 3/8\n");
  CHECK(invoke({"seq", "from-t:1", "6"}).out == "1 1 2 5 14 42\n");
  CHECK(invoke({"seq", "from-t:1,2", "6"}).out == "1 1 3 11 45 197\n");
  CHECK(invoke({"seq", "from-t:1/2", "3"}).out == "1 1/2 1/2\n");
  CHECK(invoke({"seq", "catalan", "0"}).out == "\n");

  CHECK(invoke({"seq", "nosuch", "3"}).code == 2);
  CHECK(invoke({"seq", "from-t:1,x", "3"}).code == 2);
  CHECK(invoke({"seq", "catalan", "3", "--param", "2"}).code == 2);
  CHECK(invoke({"seq", "catalan"}).code == 2);
  CHECK(invoke({"seq", "andrews-q-catalan", "3", "--param", "-1"}).code == 2);
  for (const auto& name : cli::sequence_names()) CHECK(invoke({"seq", name, "4"}).code == 0);
}

TEST_CASE("det") {
  CHECK(invoke({"det", "catalan", "3", "0", "none"}).out == "1\n");
  CHECK(invoke({"det", "catalan", "1", "0", "conv"}).out == "1 - x\n");
  CHECK(invoke({"det", "motzkin", "2", "0", "none"}).out == "1\n");
  CHECK(invoke({"det", "catalan", "0", "0", "lin"}).out == "-1 + x\n");
  CHECK(invoke({"det", "catalan", "4", "1", "none"}).out == "1\n");
  CHECK(invoke({"det", "schroder-little", "0", "0", "lin"}).out == "-1 + x\n");
  CHECK(invoke({"det", "schroder-little", "1", "0", "lin"}).out.find("x^2") != std::string::npos);
  CHECK(invoke({"det", "carlitz-q-catalan", "1", "0", "conv"}).out == "q - x\n");
  CHECK(invoke({"det", "from-t:1,2", "2", "0", "none"}).out == "8\n");

  CHECK(invoke({"det", "nosuch", "1", "0", "none"}).code == 2);
  CHECK(invoke({"det", "catalan", "1", "3", "none"}).code == 2);
  CHECK(invoke({"det", "catalan", "1", "0", "both"}).code == 2);
}
