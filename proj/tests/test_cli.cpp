#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "json.hpp"

#include "daha/macdonald.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = daha::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("poly records") {
  const Outcome zero = run_cli({"poly", "--type", "A", "--rank", "1", "--weight", "0"});
  REQUIRE(zero.code == daha::cli::kExitOk);
  CHECK(json::parse(zero.out)["terms"] == json::parse(R"([{"exp":[0],"coeff":"1"}])"));

  // e_{-omega} on A1 against the Y-eigenvector oracle.
  const daha::RootDatum d = daha::RootDatum::build('A', 1);
  daha::Coweight b;
  b[0] = -1;
  const daha::LaurentPoly oracle = daha::oracle_e(d, b);
  json expected = json::array();
  for (const auto& [m, c] : oracle.terms())
    expected.push_back({{"exp", {m[0]}}, {"coeff", daha::to_string(c, d.two_m())}});
  const Outcome neg = run_cli({"poly", "--type", "A", "--rank", "1", "--weight", "-1"});
  REQUIRE(neg.code == daha::cli::kExitOk);
  const json rec = json::parse(neg.out);
  CHECK(rec["terms"] == expected);
  CHECK(rec["terms"].size() == 2);
  CHECK(rec["weight"] == json::parse("[-1]"));
}

TEST_CASE("datum dump") {
  const Outcome g2 = run_cli({"datum", "--type", "G", "--rank", "2"});
  REQUIRE(g2.code == daha::cli::kExitOk);
  const json j = json::parse(g2.out);
  CHECK(j["family"] == "G");
  CHECK(j["positive_roots"].size() == 6);
  CHECK(j["cartan"] == json::parse(R"([["2","-3"],["-1","2"]])"));
  CHECK(run_cli({"poly", "--type", "G", "--rank", "2", "--dump-datum"}).out == g2.out);
  CHECK(json::parse(run_cli({"datum", "--type", "A", "--rank", "1"}).out)["coweight_gram"] ==
        json::parse(R"([["1/2"]])"));
}

TEST_CASE("classify") {
  const Outcome rho = run_cli({"classify", "--type", "A", "--rank", "1", "--xi-rho-inverse"});
  REQUIRE(rho.code == daha::cli::kExitOk);
  const json j = json::parse(rho.out);
  CHECK(j["flags"]["cospherical"] == false);
  CHECK(j["flags"]["irreducible"] == false);
  CHECK(j["witnesses"] == json::parse(R"([{"root":[1],"j":0,"value":"t^-1"}])"));
  CHECK(run_cli({"classify", "--type", "A", "--rank", "1", "--xi-rho"}).out == rho.out);

  const json gen = json::parse(run_cli({"classify", "--type", "A", "--rank", "2", "--generic"}).out);
  CHECK(gen["witnesses"].empty());
  for (const auto& [k, v] : gen["flags"].items()) CHECK_MESSAGE(v == true, k);

  const json half = json::parse(run_cli({"classify", "--type", "A", "--rank", "1", "--xi", "q:-1/2,t_l:0"}).out);
  CHECK(half["flags"]["induced_irreducible"] == false);
  CHECK(half["witnesses"][0]["value"] == "1");

  CHECK(run_cli({"classify", "--type", "A", "--rank", "1"}).code == daha::cli::kExitUsage);
  CHECK(run_cli({"classify", "--type", "A", "--rank", "1", "--xi", "q=1"}).code == daha::cli::kExitUsage);
  CHECK(run_cli({"classify", "--type", "A", "--rank", "1", "--xi-rho", "--generic"}).code == daha::cli::kExitUsage);
}

TEST_CASE("verify suites and exit status") {
  const Outcome rel = run_cli({"verify", "relations", "--type", "C", "--rank", "2", "--degree", "2"});
  CHECK(rel.code == daha::cli::kExitOk);
  CHECK(json::parse(rel.out)["pass"] == true);

  const Outcome mac = run_cli({"verify", "macdonald", "--type", "A", "--rank", "2", "--maxlen", "5"});
  CHECK(mac.code == daha::cli::kExitOk);

  const std::vector<std::string> jack{"verify", "jackson", "--type", "A",    "--rank",     "1",
                                      "--q",    "0.25",    "--k",    "-1.37", "--truncate", "40"};
  const Outcome j1 = run_cli(jack);
  CHECK(j1.code == daha::cli::kExitOk);
  const json rep = json::parse(j1.out);
  CHECK(rep["groups"][0]["checks"].get<int>() > 0);
  CHECK_FALSE(rep["notes"].empty());

  // A zero tolerance fails every checked pair.
  auto strict = jack;
  strict.insert(strict.end(), {"--tol", "0"});
  CHECK(run_cli(strict).code == daha::cli::kExitCheckFailed);

  CHECK(run_cli({"verify", "degenerate", "--type", "A", "--rank", "2", "--degree", "1"}).code == daha::cli::kExitOk);
  CHECK(run_cli({"verify", "discrete", "--type", "A", "--rank", "1", "--maxlen", "3"}).code == daha::cli::kExitOk);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == daha::cli::kExitUsage);
  CHECK(run_cli({"bogus"}).code == daha::cli::kExitUsage);
  CHECK(run_cli({"poly", "--type", "Q", "--rank", "1"}).code == daha::cli::kExitUsage);
  CHECK(run_cli({"poly", "--type", "A", "--rank", "2", "--weight", "1"}).code == daha::cli::kExitUsage);
  CHECK(run_cli({"poly", "--type", "A", "--rank", "1", "--weight", "x"}).code == daha::cli::kExitUsage);
  CHECK(run_cli({"verify", "nonsense"}).code == daha::cli::kExitUsage);
  CHECK(run_cli({"aomoto", "--a", "-1", "--b", "1"}).code == daha::cli::kExitUsage);
  CHECK(run_cli({"degenerate", "--kappa", "1/x"}).code == daha::cli::kExitUsage);
  CHECK(run_cli({"--help"}).code == daha::cli::kExitOk);
}

TEST_CASE("summation traces") {
  const Outcome j = run_cli({"jackson", "--a", "1", "--b", "1", "--k", "-2.37", "--truncate", "6"});
  REQUIRE(j.code == daha::cli::kExitOk);
  std::istringstream lines(j.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "shell_length,shell_sum,cumulative,ratio,tail_estimate");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 7);

  const Outcome a = run_cli({"aomoto", "--a", "1", "--b", "2", "--k", "-2.37", "--truncate", "5"});
  REQUIRE(a.code == daha::cli::kExitOk);
  CHECK(a.out.rfind("shell_length,", 0) == 0);
}

TEST_CASE("determinism and output files") {
  const std::vector<std::vector<std::string>> configs{
      {"datum", "--type", "C", "--rank", "2"},
      {"poly", "--type", "A", "--rank", "2", "--weight", "1,-1"},
      {"classify", "--type", "C", "--rank", "2", "--xi-rho", "--primitive", "2"},
      {"verify", "degenerate", "--type", "A", "--rank", "1", "--degree", "2"},
      {"jackson", "--a", "2", "--b", "-1", "--k", "-2.37", "--truncate", "5"},
  };
  for (const auto& args : configs) {
    const Outcome first = run_cli(args), second = run_cli(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }

  const std::string path = "test_cli_out.json";
  std::remove(path.c_str());
  const Outcome written = run_cli({"poly", "--type", "A", "--rank", "1", "--weight", "2", "--out", path});
  REQUIRE(written.code == daha::cli::kExitOk);
  CHECK(written.out.empty());
  std::ifstream f(path);
  std::stringstream content;
  content << f.rdbuf();
  CHECK(content.str() == run_cli({"poly", "--type", "A", "--rank", "1", "--weight", "2"}).out);
  std::remove(path.c_str());
}
