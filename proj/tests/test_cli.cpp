#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <filesystem>
#include <regex>
#include <set>
#include <sstream>

#include "doctest.h"

#include "duelbench/cli.hpp"
#include "duelbench/config.hpp"
#include "duelbench/error.hpp"
#include "duelbench/results_io.hpp"
#include "duelbench/svg_plot.hpp"

using namespace duelbench;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("duelbench_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct Outcome {
  int code;
  std::string out, err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

const char* kMinimalConfig = R"(# minimal experiment
seed = 7
horizon = 10000
arms = 5
games = 2
iterations = 2
policies = ["sup-klucb"]
)";

}  // namespace

TEST_CASE("parse_config") {
  const auto cfg = parse_config(R"(
seed = 42          # master seed
horizon = 5000
arms = [3, 6, 9]
games = 4
iterations = 3
min_gap = 0.125
checkpoints = 50
policies = ["sup-klucb", "rucb", "dts"]
out = "results dir"
serial = true

[sup-klucb]
c1 = 0.3
c2 = 1.5

[dts]
alpha = 0.6
)");
  const auto& ex = cfg.experiment;
  CHECK(ex.seed == 42);
  CHECK(ex.horizon == 5000);
  CHECK(ex.arms == std::vector<std::size_t>{3, 6, 9});
  CHECK(ex.games == 4);
  CHECK(ex.iterations == 3);
  CHECK(ex.min_gap == 0.125);
  CHECK(ex.checkpoints == 50);
  CHECK(ex.serial);
  CHECK(cfg.out_dir == "results dir");
  REQUIRE(ex.policies.size() == 3);
  CHECK(ex.policies[0].c1 == 0.3);
  CHECK(ex.policies[0].c2 == 1.5);
  CHECK(ex.policies[1].alpha == 0.0);
  CHECK(ex.policies[2].alpha == 0.6);

  const auto again = parse_config(to_config_text(cfg));
  CHECK(to_config_text(again) == to_config_text(cfg));
  CHECK(again.experiment.policies[0].c1 == 0.3);
  CHECK(again.experiment.min_gap == 0.125);
}

TEST_CASE("parse_config errors name the line") {
  CHECK_THROWS_WITH_AS(parse_config("seed = 1\nbogus = 2\n"), doctest::Contains("line 2"),
                       ValidationError);
  CHECK_THROWS_AS(parse_config("horizon = ten\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("arms = [3, 4\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("[mystery]\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("[rucb]\nalpha = 0.4\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("[rucb]\nc1 = 0.4\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("seed = -3\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("just words\n"), ValidationError);
}

TEST_CASE("run writes every artifact") {
  TempDir tmp;
  const fs::path cfg = tmp.path / "exp.toml";
  write_file(cfg, kMinimalConfig);
  const fs::path out = tmp.path / "out";
  const auto r = cli({"run", "--config", cfg.string(), "--out", out.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(fs::exists(out / "results.csv"));
  CHECK(fs::exists(out / "summary.json"));
  CHECK(fs::exists(out / "config.resolved.toml"));
  CHECK(fs::exists(out / "instances" / "game_000.csv"));
  CHECK(fs::exists(out / "instances" / "game_001.csv"));

  std::istringstream csv(read_file(out / "results.csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "policy,game,iteration,round,cum_regret");
  std::set<std::string> runs;
  while (std::getline(csv, line)) {
    const auto cut = line.find(',', line.find(',', line.find(',') + 1) + 1);
    runs.insert(line.substr(0, cut));
  }
  CHECK(runs.size() == 4);

  const auto summary = nlohmann::json::parse(read_file(out / "summary.json"));
  REQUIRE(summary.contains("sup-klucb"));
  for (const char* key : {"rounds", "mean", "p25", "p75", "final_winner_accuracy"}) {
    CHECK(summary["sup-klucb"].contains(key));
  }

  std::ifstream inst(out / "instances" / "game_001.csv");
  CHECK(read_matrix_csv(inst).size() == 5);

  SUBCASE("the resolved config reproduces the run byte for byte") {
    const fs::path out2 = tmp.path / "out2";
    const auto again = cli({"run", "--config", (out / "config.resolved.toml").string(), "--out",
                            out2.string(), "--serial"});
    REQUIRE(again.code == kExitOk);
    CHECK(read_file(out / "results.csv") == read_file(out2 / "results.csv"));
    CHECK(read_file(out / "summary.json") == read_file(out2 / "summary.json"));
  }
}

TEST_CASE("flags override config values") {
  TempDir tmp;
  const fs::path cfg = tmp.path / "exp.toml";
  write_file(cfg, kMinimalConfig);
  const auto r = cli({"validate", "--config", cfg.string(), "--horizon", "123", "--arms", "4",
                      "--policies", "dts,random", "--seed", "9"});
  REQUIRE(r.code == kExitOk);
  const auto resolved = parse_config(r.out);
  CHECK(resolved.experiment.horizon == 123);
  CHECK(resolved.experiment.seed == 9);
  CHECK(resolved.experiment.arms == std::vector<std::size_t>{4});
  CHECK(resolved.experiment.games == 2);
  REQUIRE(resolved.experiment.policies.size() == 2);
  CHECK(resolved.experiment.policies[1].name == "random");
}

TEST_CASE("validation failures exit with 2") {
  TempDir tmp;
  const auto k2 = cli({"run", "--arms", "2", "--policies", "sup-klucb", "--out",
                       (tmp.path / "x").string()});
  CHECK(k2.code == kExitConfig);
  CHECK(k2.err.find("c2") != std::string::npos);
  CHECK(k2.err.find("singular") != std::string::npos);

  CHECK(cli({"sweep", "--arms", "", "--out", (tmp.path / "y").string()}).code == kExitConfig);
  CHECK(cli({"run", "--arms", "3,4"}).code == kExitConfig);
  CHECK(cli({"run", "--config", (tmp.path / "missing.toml").string()}).code == kExitConfig);
  CHECK(cli({"run", "--policies", "nope"}).code == kExitConfig);
  CHECK(cli({"frobnicate"}).code == kExitConfig);
  CHECK(cli({}).code == kExitConfig);
}

TEST_CASE("runtime failures exit with 3") {
  TempDir tmp;
  const fs::path blocker = tmp.path / "file";
  write_file(blocker, "x");
  const auto r = cli({"run", "--arms", "3", "--horizon", "50", "--out", (blocker / "sub").string()});
  CHECK(r.code == kExitRuntime);
  CHECK(cli({"plot", (tmp.path / "none.json").string(), (tmp.path / "p.svg").string()}).code ==
        kExitRuntime);
}

TEST_CASE("sweep") {
  TempDir tmp;
  const std::vector<std::string> common{"--horizon", "600", "--games", "1", "--iterations", "2",
                                        "--policies", "sup-klucb,rucb,dts", "--checkpoints", "20"};
  auto args = [&](std::vector<std::string> head) {
    head.insert(head.end(), common.begin(), common.end());
    return head;
  };
  const fs::path sweep_dir = tmp.path / "sweep";
  REQUIRE(cli(args({"sweep", "--arms", "3,6,9", "--out", sweep_dir.string()})).code == kExitOk);
  const auto summary = nlohmann::json::parse(read_file(sweep_dir / "summary.json"));
  CHECK(summary["sweep"]["final_regret"].size() == 9);
  CHECK(summary["sweep"]["arms"] == nlohmann::json::array({3, 6, 9}));
  CHECK(summary["per_k"].contains("6"));

  const fs::path one = tmp.path / "one";
  const fs::path single = tmp.path / "single";
  REQUIRE(cli(args({"sweep", "--arms", "3", "--out", one.string()})).code == kExitOk);
  REQUIRE(cli(args({"run", "--arms", "3", "--out", single.string()})).code == kExitOk);
  CHECK(read_file(one / "k_3" / "results.csv") == read_file(single / "results.csv"));
  CHECK(read_file(one / "k_3" / "summary.json") == read_file(single / "summary.json"));

  const fs::path svg = tmp.path / "sweep.svg";
  REQUIRE(cli({"plot", (sweep_dir / "summary.json").string(), svg.string()}).code == kExitOk);
  const std::string doc = read_file(svg);
  CHECK(count(doc, "<polyline class=\"mean\"") == 3);
}

TEST_CASE("plot") {
  nlohmann::json summary;
  const std::vector<std::uint64_t> rounds{1, 10, 100, 1000};
  summary["sup-klucb"] = {{"rounds", rounds},
                          {"mean", {0.5, 3.0, 9.0, 15.0}},
                          {"p25", {0.25, 2.0, 7.0, 11.0}},
                          {"p75", {0.75, 4.0, 10.0, 19.5}},
                          {"final_winner_accuracy", 1.0}};
  summary["rucb"] = {{"rounds", rounds},
                     {"mean", {0.5, 5.0, 50.0, 400.0}},
                     {"p25", {0.5, 5.0, 50.0, 400.0}},
                     {"p75", {0.5, 5.0, 50.0, 400.0}},
                     {"final_winner_accuracy", 0.5}};
  summary["dts"] = summary["sup-klucb"];

  const std::string svg = render_svg(summary);
  CHECK(count(svg, "<polyline class=\"mean\"") == 3);
  CHECK(count(svg, "<polygon class=\"band\"") == 3);
  CHECK(svg == render_svg(summary));

  // Line styles: solid sup-klucb, dashed rucb, dotted dts.
  const std::regex line_re("<polyline class=\"mean\" data-policy=\"([a-z-]+)\"[^>]*>");
  std::map<std::string, std::string> tags;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line_re); it != std::sregex_iterator();
       ++it) {
    tags[(*it)[1]] = (*it)[0];
  }
  CHECK(tags["sup-klucb"].find("stroke-dasharray") == std::string::npos);
  CHECK(tags["rucb"].find("stroke-dasharray=\"8,5\"") != std::string::npos);
  CHECK(tags["dts"].find("stroke-dasharray=\"2,4\"") != std::string::npos);

  // Plotted values are exactly the summary means.
  CHECK(tags["rucb"].find("data-values=\"0.5 5 50 400\"") != std::string::npos);
  CHECK(tags["sup-klucb"].find("data-values=\"0.5 3 9 15\"") != std::string::npos);

  // Zero-width band: upper and lower edges coincide, so the polygon has no area.
  const std::regex band_re("<polygon class=\"band\" data-policy=\"rucb\"[^>]*points=\"([^\"]*)\"");
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, band_re));
  std::vector<std::pair<double, double>> pts;
  std::istringstream ps(m[1].str());
  std::string tok;
  while (ps >> tok) {
    const auto comma = tok.find(',');
    pts.emplace_back(std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1)));
  }
  double area = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % pts.size()];
    area += a.first * b.second - b.first * a.second;
  }
  CHECK(std::abs(area) < 1e-9);

  CHECK_THROWS_AS(render_svg(nlohmann::json::array()), ValidationError);
  nlohmann::json broken;
  broken["dts"] = {{"rounds", {1, 2}}, {"mean", {1.0}}, {"p25", {1.0}}, {"p75", {1.0}}};
  CHECK_THROWS_AS(render_svg(broken), ValidationError);
}

TEST_CASE("plot command is a pure function of the summary file") {
  TempDir tmp;
  const fs::path out = tmp.path / "run";
  REQUIRE(cli({"run", "--arms", "4", "--horizon", "500", "--games", "1", "--iterations", "1",
               "--policies", "sup-klucb,rucb,dts", "--out", out.string()})
              .code == kExitOk);
  const fs::path a = tmp.path / "a.svg", b = tmp.path / "b.svg";
  REQUIRE(cli({"plot", (out / "summary.json").string(), a.string()}).code == kExitOk);
  REQUIRE(cli({"plot", (out / "summary.json").string(), b.string()}).code == kExitOk);
  const std::string svg = read_file(a);
  CHECK(svg == read_file(b));
  CHECK(count(svg, "<polygon class=\"band\"") == 3);
  write_file(tmp.path / "bad.json", "{not json");
  CHECK(cli({"plot", (tmp.path / "bad.json").string(), a.string()}).code == kExitConfig);
}

TEST_CASE("the installed binary honours exit codes") {
  TempDir tmp;
  const std::string bin = DUELBENCH_CLI_PATH;
  const std::string quiet = " > /dev/null 2>&1";
  const int ok = std::system((bin + " run --arms 3 --horizon 100 --out " +
                              (tmp.path / "o").string() + quiet).c_str());
  CHECK(WEXITSTATUS(ok) == 0);
  const int bad = std::system((bin + " run --arms 2 --policies sup-klucb" + quiet).c_str());
  CHECK(WEXITSTATUS(bad) == 2);
}
