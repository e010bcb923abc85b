#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ovt/atlas.hpp"
#include "ovt/chart.hpp"
#include "ovt/cli.hpp"
#include "ovt/optimal.hpp"
#include "ovt/report.hpp"
#include "ovt/spectra_db.hpp"

using namespace ovt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ovt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int spawn(const std::string& args) {
  std::string cmd = std::string(OVT_EXE) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

const std::string kDb = std::string(OVT_DATA_DIR) + "/example_db.csv";

}  // namespace

TEST(Cli, TargetsMatchesLibrary) {
  auto r = run({"targets"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, report::targets_csv(build_target_set()));
  EXPECT_EQ(run({"targets", "--json"}).out, report::targets_json(build_target_set()));
}

TEST(Cli, SolveOptimalMatchesLibrary) {
  auto r = run({"solve-optimal", "--target", "0.64,0.33", "--json"});
  EXPECT_EQ(r.code, 0);
  Colorimeter c;
  auto target = Chromaticity::from_xy(0.64, 0.33);
  auto lib = solve_optimal(target, auto_genus(target, c), c);
  EXPECT_EQ(r.out, report::solve_json(lib));
  EXPECT_NE(r.out.find("band_stop"), std::string::npos);
}

TEST(Cli, SolveOptimalLuminanceScaling) {
  auto r = run({"solve-optimal", "--target", "0.30,0.60", "--genus", "band_pass", "--lc", "0.715"});
  EXPECT_EQ(r.code, 0);
  Colorimeter c;
  auto lib = solve_optimal(Chromaticity::from_xy(0.3, 0.6), Genus::band_pass, c);
  lib.params = scale_to_luminance(lib.params, 0.715, c);
  EXPECT_EQ(r.out, report::solve_text(lib));
}

TEST(Cli, UnreachableTargetExitsOne) {
  auto r = run({"solve-optimal", "--target", "0.0,0.5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("unreachable"), std::string::npos);
  auto ye = run({"solve-optimal", "--target", "0.4193,0.5053", "--genus", "band_pass"});
  EXPECT_EQ(ye.code, 1);
  EXPECT_NE(ye.err.find("0.4193"), std::string::npos);
}

TEST(Cli, MatchMatchesLibrary) {
  auto r = run({"match", "--db", kDb});
  EXPECT_EQ(r.code, 0);
  Colorimeter c;
  auto db = load_database(kDb, DbFormat::wide_csv, c);
  auto targets = build_target_set();
  std::ostringstream expected;
  write_match_csv(expected, match_nearest(targets, db));
  EXPECT_EQ(r.out, expected.str());
}

TEST(Cli, MissingDatabase) {
  auto r = run({"match", "--db", "missing.csv"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("database not found"), std::string::npos);
}

TEST(Cli, AtlasMatchesLibrary) {
  auto dir = std::filesystem::temp_directory_path() / "ovt_cli_atlas";
  std::filesystem::create_directories(dir);
  auto out = (dir / "a.csv").string();
  auto r = run({"atlas", "--j", "50", "--surround", "dark", "--la", "50", "--spacing", "2", "--out", out,
                "--svg", (dir / "a.svg").string()});
  EXPECT_EQ(r.code, 0);
  auto gamut = DisplayGamut::rec709();
  AtlasSpec spec{display_viewing_conditions(gamut, 50.0, 20.0, Surround::dark), 50.0, 2.0, gamut, 60.0};
  std::ostringstream expected;
  write_atlas_csv(expected, generate_atlas(spec).points);
  auto text = slurp(out);
  EXPECT_EQ(text, expected.str());
  EXPECT_EQ(text.substr(0, text.find('\n')), "J,a_m_prime,b_m_prime,X,Y,Z,x,y,R_lin,G_lin,B_lin");
  EXPECT_TRUE(std::filesystem::exists(dir / "a.svg"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, ChartWritesPngAndSidecar) {
  auto dir = std::filesystem::temp_directory_path() / "ovt_cli_chart";
  std::filesystem::create_directories(dir);
  auto png = dir / "chart.png";
  EXPECT_EQ(run({"chart", "--out", png.string()}).code, 0);
  std::vector<ChartPatch> patches;
  for (const auto& t : build_target_set()) {
    patches.push_back({t.name, t.rgb_weights, PatchSource::optimal, t.L_C, std::nullopt});
  }
  auto lib = render_chart(patches, {});
  auto bytes = slurp(png);
  EXPECT_EQ(bytes, std::string(lib.png.begin(), lib.png.end()));
  EXPECT_EQ(slurp(dir / "chart.meta.json"), metadata_to_json(lib.metadata));
  EXPECT_EQ(run({"chart", "--set", "atlas", "--spacing", "8", "--out", (dir / "atlas.png").string()}).code, 0);
  EXPECT_EQ(run({"chart", "--set", "matched", "--db", kDb, "--out", (dir / "m.png").string()}).code, 0);
  EXPECT_EQ(run({"chart", "--set", "nope", "--out", (dir / "x.png").string()}).code, 2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ConfigFileDefaultsAndFlagPrecedence) {
  auto dir = std::filesystem::temp_directory_path() / "ovt_cli_config";
  std::filesystem::create_directories(dir);
  auto cfg = dir / "run.json";
  std::ofstream(cfg) << R"({"surround": "dark", "la": 50, "j": 50, "spacing": 4})";
  auto from_cfg = run({"atlas", "--config", cfg.string()});
  auto from_flags = run({"atlas", "--surround", "dark", "--la", "50", "--j", "50", "--spacing", "4"});
  EXPECT_EQ(from_cfg.code, 0);
  EXPECT_EQ(from_cfg.out, from_flags.out);
  auto override = run({"atlas", "--config", cfg.string(), "--spacing", "8"});
  auto direct = run({"atlas", "--surround", "dark", "--la", "50", "--j", "50", "--spacing", "8"});
  EXPECT_EQ(override.out, direct.out);
  std::ofstream(cfg) << R"({"no_such_option": 1})";
  EXPECT_EQ(run({"targets", "--config", cfg.string()}).code, 2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, Table1ReportsEveryColumn) {
  auto r = run({"table1", "--json"});
  Colorimeter c;
  auto entries = table1_suite(c);
  EXPECT_EQ(r.out, report::table1_json(entries));
  bool all = std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.report.converged; });
  EXPECT_EQ(r.code, all ? 0 : 1);
}

TEST(Cli, ExitCodesFromBinary) {
  EXPECT_EQ(spawn("targets"), 0);
  EXPECT_EQ(spawn("--help"), 0);
  EXPECT_EQ(spawn("targets --bogus"), 2);
  EXPECT_EQ(spawn(""), 2);
  EXPECT_EQ(spawn("solve-optimal"), 2);
  EXPECT_EQ(spawn("match --db missing.csv"), 1);
  EXPECT_EQ(spawn("atlas --la -5"), 1);
}
