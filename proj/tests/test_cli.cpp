#include "nk/cli.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace nk;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "novikov-knot");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  const fs::path d = fs::temp_directory_path() / "novikov_knot_cli_test";
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("parse subcommand") {
  Run r = cli({"parse", oracle::fixture("trefoil.pres")});
  CHECK(r.code == 0);
  CHECK(r.out.find("generators: s1 s2 s3") != std::string::npos);
  r = cli({"parse", "--braid", "3: 1 -2 1 -2", "--out", "-"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["generators"].size() == 4);
  CHECK(cli({"parse", "/nonexistent.pres"}).code == kExitInput);
  CHECK(cli({"bogus"}).code == kExitInput);
}

TEST_CASE("alexander subcommand on the trefoil") {
  const Run r = cli({"alexander", "--braid", "2: 1 1 1", "--trivial-rep"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict:     monic") != std::string::npos);
  CHECK(r.out.find("(1 - t + t^2) / (1 - t)") != std::string::npos);
}

TEST_CASE("novikov subcommand and determinism") {
  const fs::path a = scratch() / "a.json", b = scratch() / "b.json";
  const std::vector<std::string> args = {"novikov", "-p", oracle::fixture("conway.pres"), "--rep",
                                         oracle::fixture("conway_h.rep"), "--upper", "2 (handle construction)"};
  auto with_out = [&](const fs::path& f) {
    auto v = args;
    v.push_back("--out");
    v.push_back(f.string());
    return v;
  };
  REQUIRE(cli(with_out(a)).code == 0);
  REQUIRE(cli(with_out(b)).code == 0);
  CHECK(slurp(a) == slurp(b));
  const auto j = nlohmann::json::parse(slurp(a));
  CHECK(j["schema"] == "novikov-knot/v1");
  CHECK(j["conventions"]["matrix_convention"] == "as-given");
  CHECK(j["best"]["bracket"] == nlohmann::json::array({2, 2}));
  CHECK(j["conclusion"] == "MN = 2");

  const Run bound = cli({"bound", "--profile", a.string(), "--copies", "10", "--upper", "20 (scaled)"});
  CHECK(bound.code == 0);
  CHECK(bound.out.find("bracket: [4, 20]") != std::string::npos);
}

TEST_CASE("exit codes") {
  const fs::path bad = scratch() / "bad.rep";
  std::ofstream(bad) << "s1: (12)\ns2: (23)\ns3: (12)\n";
  CHECK(cli({"novikov", "-p", oracle::fixture("trefoil.pres"), "--rep", bad.string()}).code == kExitVerification);
  CHECK(cli({"novikov", "-p", oracle::fixture("trefoil.pres"), "--rep", "/missing.rep"}).code == kExitInput);
  CHECK(cli({"novikov", "--braid", "2: 3"}).code == kExitInput);
  CHECK(cli({"reps", "-p", oracle::fixture("trefoil.pres"), "search", "class=3cycle"}).code == kExitInput);
  CHECK(cli({"reps", "-p", oracle::fixture("trefoil.pres"), "--verify", bad.string()}).code == kExitVerification);
}

TEST_CASE("reps search finds h") {
  const Run r = cli({"reps", "-p", oracle::fixture("conway.pres"), "search", "k=5", "class=3cycle", "--out", "-"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["representations"].size() == 2);
}

TEST_CASE("batch keeps manifest order and isolates failures") {
  const fs::path dir = scratch();
  const fs::path m = dir / "manifest.json";
  std::ofstream(m) << R"([
    {"name": "unknot", "presentation": ")" << oracle::fixture("unknot.pres") << R"(", "trivial_rep": true},
    {"name": "broken", "presentation": "does-not-exist.pres", "trivial_rep": true},
    {"name": "trefoil", "braid": "2: 1 1 1", "trivial_rep": true},
    {"name": "conway", "presentation": ")" << oracle::fixture("conway.pres") << R"(", "search": "k=5 class=3cycle"}
  ])";
  const auto jobs = parse_manifest(slurp(m), dir.string());
  const auto rows = run_batch(jobs, 3);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].name == "unknot");
  CHECK(rows[1].code == kExitInput);
  CHECK(rows[2].monic == true);
  CHECK(rows[3].q1_lower == 1);
  CHECK(rows[3].mn_lower == 2);
  CHECK(to_json(run_batch(jobs, 1)) == to_json(rows));

  const fs::path empty = dir / "empty.json";
  std::ofstream(empty) << "[]";
  const Run r = cli({"batch", empty.string(), "--out", "-"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["summary"].empty());
}
