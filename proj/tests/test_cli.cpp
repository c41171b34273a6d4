#include <catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "lgr/cli.hpp"
#include "lgr/restriction.hpp"

using namespace lgr;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lgr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("cli restrict") {
  const auto h = run({"restrict", "--n", "3", "--alpha", "1,3,-2", "--beta", "3,-2,-1", "--theory", "H"});
  CHECK(h.code == 0);
  CHECK(has(h.out, "value:      2*t1^2 + 4*t1*t2 - 2*t1*t3 + 2*t2^2 - 2*t2*t3\n"));
  CHECK(has(h.out, "term_count: 3\n"));

  const auto k = run({"restrict", "--n", "3", "--alpha", "1,3,-2", "--beta", "3,-2,-1", "--theory", "K"});
  CHECK(k.code == 0);
  CHECK(has(k.out, "term_count: 5\n"));

  const auto id = run({"restrict", "--n", "2", "--alpha", "1,2", "--beta", "-2,-1", "--theory", "K"});
  CHECK(id.code == 0);
  CHECK(has(id.out, "value:      1\n"));

  const auto zero = run({"restrict", "--n", "2", "--alpha", "-2,-1", "--beta", "1,-2"});
  CHECK(has(zero.out, "value:      0\n"));
  CHECK(has(zero.out, "term_count: 0\n"));

  const auto js = run({"restrict", "--n", "3", "--alpha", "1,3,5", "--beta", "3,5,6", "--format", "json"});
  REQUIRE(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["term_count"] == 3);
  CHECK(laurent_from_json(j["value"]) ==
        restrict_h(IsotropicIndex(3, {1, 3, 5}), IsotropicIndex(3, {3, 5, 6})).value);
  CHECK(j["alpha"]["signed"] == "1,3,-2");
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"restrict", "--n", "2", "--alpha", "1,1", "--beta", "1,2"}).code == cli::kUsage);
  CHECK(run({"restrict", "--n", "2", "--alpha", "1,2"}).code == cli::kUsage);
  CHECK(run({"restrict", "--n", "2", "--alpha", "1,2", "--beta", "1,2", "--theory", "Q"}).code == cli::kUsage);
  CHECK(run({"table", "--n", "9"}).code == cli::kUsage);
  CHECK(run({"models", "--lambda", "2,2", "--mu", "3"}).code == cli::kUsage);
  CHECK(run({"verify", "--n", "2", "--suite", "nope"}).code == cli::kUsage);
  CHECK(run({"verify", "--n", "7"}).code == cli::kUsage);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(has(help.out, "restrict"));
}

TEST_CASE("cli table") {
  const auto csv = run({"table", "--n", "1", "--theory", "H", "--out", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "\"alpha\\beta\",\"1\",\"-1\"\n\"1\",\"1\",\"1\"\n\"-1\",\"0\",\"-2*t1\"\n");
  const auto js = run({"table", "--n", "2", "--theory", "K", "--out", "json"});
  REQUIRE(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["rows"].size() == 4);
  CHECK(j["columns"].size() == 4);
  CHECK(run({"table", "--n", "3", "--theory", "K", "--serial"}).out == run({"table", "--n", "3", "--theory", "K"}).out);
}

TEST_CASE("cli models and render") {
  const auto m = run({"models", "--lambda", "3,1", "--mu", "5,3,2,1"});
  CHECK(m.code == 0);
  CHECK(has(m.out, "tableaux: 10\n"));
  CHECK(has(m.out, "subsets: 10\n"));
  CHECK(has(m.out, "families: 10\n"));
  const auto js = nlohmann::json::parse(run({"models", "--lambda", "3,1", "--mu", "5,3,2,1", "--format", "json"}).out);
  CHECK(js["families"]["count"] == 10);
  CHECK(js["tableaux"]["items"][0][0]["entries"] == std::vector<int>{1});
  const auto empty = run({"models", "--lambda", "[]", "--mu", "2,1", "--model", "subsets"});
  CHECK(has(empty.out, "subsets: 1\n"));

  const auto svg = run({"render", "--lambda", "3,1", "--mu", "5,3,2,1", "--model", "families", "--index", "3"});
  CHECK(svg.code == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);
  CHECK(run({"render", "--lambda", "3,1", "--mu", "5,3,2,1", "--index", "10"}).code == cli::kUsage);
  const auto rho = run({"render", "--rho", "5,3,2,1,1", "--format", "ascii"});
  CHECK(rho.out == "[5,3,2,1,1] -> [5,2]\n");
  CHECK(run({"render", "--rho", "5,3,2,1,1"}).out.rfind("<svg", 0) == 0);

  const auto dir = std::filesystem::temp_directory_path() / "lgr_render_test";
  std::filesystem::remove_all(dir);
  const auto all = run({"render", "--lambda", "3,1", "--mu", "5,3,2,1", "--model", "subsets", "--out-dir", dir.string()});
  CHECK(all.code == 0);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator()) == 10);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli chart") {
  const auto c = run({"chart", "--n", "4", "--beta", "1,4,6,7"});
  CHECK(c.code == 0);
  CHECK(has(c.out, "R_beta (10 coordinates)"));
  CHECK(has(c.out, "-y[2,bar3]"));
  const auto j = nlohmann::json::parse(run({"chart", "--n", "4", "--beta", "1,-4,-3,-2", "--format", "json"}).out);
  CHECK(j["coordinates"].size() == 10);
}

TEST_CASE("cli verify") {
  const auto ok = run({"verify", "--n", "2", "--suite", "all"});
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "all suites passed"));
  CHECK(run({"verify", "--n", "2", "--corrupt"}).code == cli::kVerifyFailed);
  const auto chern = run({"verify", "--n", "3", "--suite", "chern"});
  CHECK(chern.code == 0);
  CHECK(has(chern.out, "checked 64, failed 0"));
  const auto js = nlohmann::json::parse(run({"verify", "--n", "2", "--suite", "gkm,positivity", "--format", "json"}).out);
  CHECK(js["ok"] == true);
  CHECK(js["suites"].size() == 3);
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> args{"table", "--n", "3", "--theory", "K", "--out", "json"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> v{"verify", "--n", "3", "--format", "json"};
  CHECK(run(v).out == run(v).out);
}
