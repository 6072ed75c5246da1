#include "helpers.hpp"

#include "kcenter/cli.hpp"
#include "kcenter/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace kcenter;
using namespace kcenter::testing;
using io::Json;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "kcenter");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Compares stdout with tests/golden/<name>. KCENTER_UPDATE_GOLDEN=1
// rewrites the file instead.
void check_golden(const std::string& name, const Outcome& o) {
  REQUIRE(o.code == 0);
  const auto path = std::filesystem::path(KCENTER_FIXTURES).parent_path() / "golden" / name;
  const char* update = std::getenv("KCENTER_UPDATE_GOLDEN");
  if (update != nullptr && std::string(update) == "1") {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream(path) << o.out;
    return;
  }
  CAPTURE(name);
  CHECK(o.out == read_file(path));
}

}  // namespace

TEST_CASE("validate") {
  const auto ok = run({"validate", "--instance", fixture("square.json")});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.rfind("m=4 d=2", 0) == 0);
  CHECK(run({"validate", "--instance", fixture("duplicate.json")}).code == cli::kValidation);
  const auto unbounded = run({"validate", "--instance", fixture("single_halfspace.json")});
  CHECK(unbounded.code == cli::kValidation);
  CHECK(unbounded.err.find("UnboundedSet") != std::string::npos);
  CHECK(run({"validate", "--instance", fixture("malformed.json")}).code == cli::kParse);
  CHECK(run({"validate", "--instance", fixture("no_such_file.json")}).code == cli::kParse);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"solve", "--instance", fixture("square.json")}).code == cli::kUsage);
  CHECK(run({"solve", "--instance", fixture("square.json"), "--k", "2", "--method", "magic"}).code == cli::kUsage);
}

TEST_CASE("solve") {
  const auto sq = run({"solve", "--instance", fixture("square.json"), "--k", "3"});
  REQUIRE(sq.code == 0);
  CHECK(Json::parse(sq.out)["value"] == 0.5);
  check_golden("solve_square_k3.json", sq);

  const auto line = run({"solve", "--instance", fixture("line_0_1_10.json"), "--k", "2"});
  CHECK(Json::parse(line.out)["value"] == 0.5);
  CHECK(Json::parse(line.out)["partition"] == Json::parse("[[1, 2], [3]]"));
  check_golden("solve_line_k2.json", line);

  CHECK(Json::parse(run({"solve", "--instance", fixture("square.json"), "--k", "4"}).out)["value"] == 0.0);

  const auto heur = run({"solve", "--instance", fixture("square.json"), "--k", "3", "--method", "heuristic",
                         "--restarts", "20", "--seed", "42"});
  CHECK(std::abs(Json::parse(heur.out)["value"].get<double>() - 0.5) <= 1e-6);
  check_golden("solve_square_k3_heuristic.json", heur);

  const auto big = run({"solve", "--instance", fixture("random15.json"), "--k", "2"});
  CHECK(big.code == cli::kResourceGuard);
  CHECK(big.err.find("--force") != std::string::npos);
  const auto big_heur = run({"solve", "--instance", fixture("random15.json"), "--k", "3", "--method", "heuristic",
                             "--seed", "3"});
  CHECK(big_heur.code == 0);
  check_golden("solve_random15_heuristic.json", big_heur);
}

TEST_CASE("solve writes reports atomically") {
  const auto path = std::filesystem::temp_directory_path() / "kcenter_cli_report.json";
  const auto r = run({"solve", "--instance", fixture("line_0_1_10.json"), "--k", "2", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "value = 0.5\n");
  CHECK(Json::parse(read_file(path))["value"] == 0.5);
  std::filesystem::remove(path);
}

TEST_CASE("one-center") {
  const auto sq = run({"one-center", "--instance", fixture("square_linf.json")});
  const Json j = Json::parse(sq.out);
  CHECK(j["radius"] == 0.5);
  CHECK(j["center"] == Json::parse("[0.5, 0.5]"));
  check_golden("one_center_square_linf.json", sq);

  const auto hs = run({"one-center", "--instance", fixture("square_halfspaces.json")});
  CHECK(std::abs(Json::parse(hs.out)["radius"].get<double>() - 0.5) <= 1e-6);

  const auto single = run({"one-center", "--instance", fixture("singleton.json")});
  CHECK(Json::parse(single.out)["radius"] == 0.0);
  check_golden("one_center_singleton.json", single);
}

TEST_CASE("certify") {
  const auto line = run({"certify", "--instance", fixture("line_0_1_10.json"), "--centers", "[[5], [30]]"});
  CHECK(Json::parse(line.out)["verdict"] == "certified_local");
  CHECK(Json::parse(line.out)["value"] == 5.0);
  check_golden("certify_line_5_30.json", line);

  const auto pair = run({"certify", "--instance", fixture("line_0_1.json"), "--centers", "[[0.5], [3]]"});
  CHECK(Json::parse(pair.out)["verdict"] == "certified_local");
  CHECK(Json::parse(pair.out)["value"] == 0.5);
  check_golden("certify_line_05_3.json", pair);

  const auto tri = run({"certify", "--instance", fixture("triangle.json"), "--centers", "[[0.5, 0.5], [-0.01, -0.01]]"});
  CHECK(Json::parse(tri.out)["verdict"] == "not_certified");
  check_golden("certify_triangle.json", tri);

  CHECK(run({"certify", "--instance", fixture("triangle.json"), "--centers", "[[1, 2, 3]]"}).code ==
        cli::kValidation);
}

TEST_CASE("compactness") {
  const std::vector<std::tuple<std::string, std::string, std::string>> cases = {
      {"square.json", "3", "noncompact"},
      {"square_linf.json", "2", "noncompact"},
      {"square.json", "2", "compact"},
      {"line_0_1_10.json", "2", "compact"},
  };
  for (const auto& [file, k, verdict] : cases) {
    const auto r = run({"compactness", "--instance", fixture(file), "--k", k});
    CAPTURE(file);
    CHECK(Json::parse(r.out)["verdict"] == verdict);
    check_golden("compactness_" + std::filesystem::path(file).stem().string() + "_k" + k + ".json", r);
  }
  CHECK(run({"compactness", "--instance", fixture("square.json"), "--k", "1"}).code == cli::kValidation);
}

TEST_CASE("probe") {
  const std::vector<std::string> args = {"probe", "--instance", fixture("triangle.json"), "--centers",
                                         "[[0.5, 0.5], [-0.01, -0.01]]", "--radius", "1e-3", "--samples",
                                         "10000", "--seed", "7"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["verdict"] == "no_improvement");
  check_golden("probe_triangle.json", a);

  const auto free = run({"probe", "--instance", fixture("square.json"), "--centers", "[[0.5, 0], [0.5, 1], [7, 7]]",
                         "--samples", "100", "--seed", "1"});
  const Json j = Json::parse(free.out);
  REQUIRE(j["free_centers"].size() == 1);
  CHECK(j["free_centers"][0]["center"] == 3);
  CHECK(j["free_centers"][0]["ray_constant"] == true);
  check_golden("probe_square_free.json", free);
}

TEST_CASE("bound2") {
  const auto sq = run({"bound2", "--instance", fixture("square.json")});
  const Json j = Json::parse(sq.out);
  CHECK(j["bound"].get<double>() < j["r1"].get<double>());
  CHECK(j["value"].get<double>() <= j["bound"].get<double>());
  check_golden("bound2_square.json", sq);
  CHECK(run({"bound2", "--instance", fixture("square_linf.json")}).code == cli::kValidation);
  CHECK(run({"bound2", "--instance", fixture("singleton.json")}).code == cli::kValidation);
}

TEST_CASE("emit-csv") {
  const auto dir = std::filesystem::temp_directory_path() / "kcenter_csv_test";
  std::filesystem::create_directories(dir);
  const auto r1 = (dir / "a.json").string();
  const auto r2 = (dir / "b.json").string();
  run({"solve", "--instance", fixture("square.json"), "--k", "3", "--out", r1});
  run({"compactness", "--instance", fixture("square.json"), "--k", "2", "--out", r2});

  const auto empty = run({"emit-csv"});
  CHECK(empty.out == "instance,report,k,method,value,gap,verdict\n");
  const auto both = run({"emit-csv", r1, r2});
  CHECK(both.code == 0);
  std::size_t rows = 0;
  for (char c : both.out) rows += c == '\n';
  CHECK(rows == 3);
  check_golden("emit_csv_mixed.csv", both);
  std::filesystem::remove_all(dir);
}

TEST_CASE("gen") {
  const auto a = run({"gen", "--m", "6", "--d", "3", "--seed", "5"});
  const auto b = run({"gen", "--m", "6", "--d", "3", "--seed", "5"});
  CHECK(a.out == b.out);
  const Instance inst = io::instance_from_json(Json::parse(a.out));
  CHECK(inst.size() == 6);
  CHECK(inst.dimension() == 3);
  CHECK(run({"gen", "--gauge", "banana"}).code == cli::kParse);
}
