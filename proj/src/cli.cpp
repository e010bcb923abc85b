#include "ovt/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ovt/atlas.hpp"
#include "ovt/chart.hpp"
#include "ovt/optimal.hpp"
#include "ovt/report.hpp"
#include "ovt/spectra_db.hpp"

namespace ovt::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Colorimeter make_colorimeter(const RunConfig& cfg) {
  return {resolve_illuminant(cfg.illuminant), parse_observer(cfg.observer)};
}

DisplayGamut make_gamut(const RunConfig& cfg) {
  DisplayGamut gamut = DisplayGamut::rec709(cfg.white_luminance);
  if (!(cfg.white_luminance > 0.0)) throw Error("display white luminance must be positive");
  if (cfg.primaries.empty() && cfg.white_point.empty()) {
    if (cfg.gamut != "rec709") throw Error("unknown gamut preset '" + cfg.gamut + "'");
    return gamut;
  }
  std::array<Chromaticity, 3> primaries = gamut.space.primaries();
  Chromaticity white = gamut.space.white();
  if (!cfg.primaries.empty()) {
    for (std::size_t k = 0; k < 3; ++k) {
      primaries[k] = Chromaticity::from_xy(cfg.primaries[2 * k], cfg.primaries[2 * k + 1]);
    }
  }
  if (!cfg.white_point.empty()) white = Chromaticity::from_xy(cfg.white_point[0], cfg.white_point[1]);
  gamut.space = RgbColorspace(primaries, white);
  return gamut;
}

Cam16ViewingConditions make_vc(const RunConfig& cfg, const DisplayGamut& gamut) {
  return display_viewing_conditions(gamut, cfg.L_A, cfg.Y_b, parse_surround(cfg.surround), cfg.D);
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw Error("cannot write " + cfg.out);
  file << text;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path.string());
  file << text;
}

SolveOptions solve_options(const RunConfig& cfg) {
  SolveOptions options;
  options.tolerance = cfg.tolerance;
  options.init = {cfg.init[0], cfg.init[1]};
  return options;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Colorimeter colorimeter = make_colorimeter(cfg);
  auto target = Chromaticity::from_xy(cfg.target[0], cfg.target[1]);
  Genus genus = cfg.genus == "auto" ? auto_genus(target, colorimeter) : parse_genus(cfg.genus);
  SolveReport report = solve_optimal(target, genus, colorimeter, solve_options(cfg));
  if (cfg.L_C) report.params = scale_to_luminance(report.params, *cfg.L_C, colorimeter);
  emit(cfg, cfg.json ? report::solve_json(report) : report::solve_text(report), out);
  if (!report.converged) {
    err << "error: target (" << report::sig6(target.x) << ", " << report::sig6(target.y)
        << ") unreachable with genus " << to_string(genus) << ": best delta_e "
        << report::sig6(report.achieved_delta_e) << " exceeds tolerance "
        << report::sig6(cfg.tolerance) << '\n';
    return 1;
  }
  return 0;
}

int cmd_table1(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto entries = table1_suite(make_colorimeter(cfg), solve_options(cfg));
  emit(cfg, cfg.json ? report::table1_json(entries) : report::table1_text(entries), out);
  int status = 0;
  for (const auto& e : entries) {
    if (!e.report.converged) {
      err << "error: column " << e.name << " did not converge (delta_e "
          << report::sig6(e.report.achieved_delta_e) << ")\n";
      status = 1;
    }
  }
  return status;
}

int cmd_targets(const RunConfig& cfg, std::ostream& out) {
  auto targets = build_target_set();
  emit(cfg, cfg.json ? report::targets_json(targets) : report::targets_csv(targets), out);
  return 0;
}

std::vector<MatchResult> run_match(const RunConfig& cfg, const Colorimeter& colorimeter,
                                   std::vector<SpectraRecord>& db) {
  if (cfg.db.empty()) throw UsageError("--db is required");
  db = load_database(cfg.db, parse_db_format(cfg.format), colorimeter);
  auto targets = build_target_set();
  return match_nearest(targets, db);
}

int cmd_match(const RunConfig& cfg, std::ostream& out) {
  std::vector<SpectraRecord> db;
  auto results = run_match(cfg, make_colorimeter(cfg), db);
  std::ostringstream csv;
  write_match_csv(csv, results);
  emit(cfg, csv.str(), out);
  return 0;
}

Atlas run_atlas(const RunConfig& cfg, const DisplayGamut& gamut) {
  AtlasSpec spec{make_vc(cfg, gamut), cfg.J, cfg.spacing, gamut, cfg.bound};
  return generate_atlas(spec);
}

int cmd_atlas(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  DisplayGamut gamut = make_gamut(cfg);
  Atlas atlas = run_atlas(cfg, gamut);
  std::ostringstream csv;
  write_atlas_csv(csv, atlas.points);
  emit(cfg, csv.str(), out);
  if (!cfg.svg.empty()) {
    std::ostringstream svg;
    write_scatter_svg(svg, ucs_scatter(atlas.points, cfg.J, cfg.bound));
    write_file(cfg.svg, svg.str());
  }
  if (!cfg.svg_xy.empty()) {
    std::ostringstream svg;
    write_scatter_svg(svg, xy_scatter(atlas.points, gamut, cfg.J));
    write_file(cfg.svg_xy, svg.str());
  }
  const auto& d = atlas.diagnostics;
  err << "atlas: " << atlas.points.size() << " points from " << d.candidates << " candidates ("
      << d.out_of_gamut << " out of gamut, " << d.inversion_failures << " inversion failures)\n";
  return 0;
}

int cmd_chart(const RunConfig& cfg, std::ostream& err) {
  if (cfg.out.empty()) throw UsageError("chart requires --out <file.png>");
  DisplayGamut gamut = make_gamut(cfg);
  std::vector<ChartPatch> patches;
  ChartOptions options;
  options.transfer = cfg.linear ? TransferFunction::linear : TransferFunction::rec709;
  options.gamut = gamut;
  options.illuminant = cfg.illuminant;
  options.observer = std::string(to_string(parse_observer(cfg.observer)));

  if (cfg.set == "targets") {
    for (const auto& t : build_target_set()) {
      patches.push_back({t.name, t.rgb_weights, PatchSource::optimal, t.L_C, std::nullopt});
    }
  } else if (cfg.set == "atlas") {
    Atlas atlas = run_atlas(cfg, gamut);
    for (const auto& p : atlas.points) {
      patches.push_back({"a" + std::to_string(p.i) + "_b" + std::to_string(p.j), p.rgb_linear,
                         PatchSource::atlas, std::nullopt, p.ucs});
    }
    options.viewing = ViewingMetadata{cfg.L_A, cfg.Y_b, std::string(to_string(parse_surround(cfg.surround)))};
  } else if (cfg.set == "matched") {
    Colorimeter colorimeter = make_colorimeter(cfg);
    std::vector<SpectraRecord> db;
    auto results = run_match(cfg, colorimeter, db);
    for (const auto& r : results) {
      auto it = std::find_if(db.begin(), db.end(), [&](const auto& rec) { return rec.id == r.record_id; });
      Tristimulus xyz = colorimeter(it->spectrum);
      auto rgb = gamut.to_rgb_linear(xyz);
      if (!gamut_contains(xyz, gamut)) {
        err << "warning: " << r.target_name << ":" << r.record_id
            << " lies outside the display gamut; clipped\n";
      }
      for (double& c : rgb) c = std::clamp(c, 0.0, 1.0);
      patches.push_back({r.target_name + ":" + r.record_id, rgb, PatchSource::matched,
                         relative_luminance_to_lc(xyz.Y), std::nullopt});
    }
  } else {
    throw UsageError("unknown --set '" + cfg.set + "' (expected targets, atlas or matched)");
  }
  if (patches.empty()) throw Error("colour set is empty");

  ChartLayout layout;
  layout.patch_px = cfg.patch_px;
  layout.gap_px = cfg.gap_px;
  layout.cols = cfg.cols > 0 ? cfg.cols
                             : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(patches.size()))));
  layout.rows = cfg.rows > 0 ? cfg.rows
                             : static_cast<int>((patches.size() + static_cast<std::size_t>(layout.cols) - 1) /
                                                static_cast<std::size_t>(layout.cols));
  if (!cfg.icc.empty()) {
    std::ifstream icc(cfg.icc, std::ios::binary);
    if (!icc) throw Error("ICC profile not found: " + cfg.icc);
    options.icc_profile.assign(std::istreambuf_iterator<char>(icc), std::istreambuf_iterator<char>());
  }

  RenderedChart chart = render_chart(patches, layout, options);
  std::filesystem::path png_path(cfg.out);
  write_file(png_path, std::string(chart.png.begin(), chart.png.end()));
  auto meta_path = png_path;
  meta_path.replace_extension(".meta.json");
  export_metadata(chart.metadata, meta_path);
  err << "chart: " << patches.size() << " patches, " << layout.rows << "x" << layout.cols << " -> "
      << png_path.string() << ", " << meta_path.string() << '\n';
  return 0;
}

std::string config_value(const nlohmann::json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_number()) {
    std::ostringstream s;
    s.precision(17);
    s << value.get<double>();
    return s.str();
  }
  if (value.is_array()) {
    std::string joined;
    for (const auto& v : value) {
      if (!joined.empty()) joined += ',';
      joined += config_value(v);
    }
    return joined;
  }
  throw UsageError("unsupported config value " + value.dump());
}

/// Applies config-file entries to options the command line left unset.
void apply_config(const std::string& path, CLI::App& app, CLI::App* sub) {
  std::ifstream in(path);
  if (!in) throw Error("config file not found: " + path);
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed config file " + path + ": " + e.what());
  }
  if (!root.is_object()) throw Error("config file must hold a JSON object");
  for (const auto& [key, value] : root.items()) {
    std::string name = "--" + key;
    CLI::Option* opt = sub ? sub->get_option_no_throw(name) : nullptr;
    if (!opt) opt = app.get_option_no_throw(name);
    if (!opt) throw UsageError("unknown config key '" + key + "'");
    if (opt->count() > 0) continue;
    opt->add_result(config_value(value));
    opt->run_callback();
  }
}

std::vector<double> pair_or_throw(const std::vector<double>& v, const char* what) {
  if (v.size() != 2) throw UsageError(std::string(what) + " expects two comma-separated numbers");
  return v;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Optical test-table toolkit: optimal colours, spectra matching, CAM16-UCS atlases"};
  app.name("ovt");
  app.require_subcommand(1);
  app.fallthrough();

  double D = -1.0;
  app.add_option("--config", cfg.config, "JSON config file; command-line flags win");
  app.add_option("--illuminant", cfg.illuminant, "D65, A, E or a spectrum CSV path")->capture_default_str();
  app.add_option("--observer", cfg.observer, "degree2 or degree10")->capture_default_str();
  app.add_option("--gamut", cfg.gamut, "display gamut preset")->capture_default_str();
  app.add_option("--primaries", cfg.primaries, "xr,yr,xg,yg,xb,yb")->delimiter(',')->expected(6);
  app.add_option("--white-point", cfg.white_point, "x,y")->delimiter(',')->expected(2);
  app.add_option("--white-luminance", cfg.white_luminance, "display white, cd/m^2")->capture_default_str();
  app.add_option("--la", cfg.L_A, "adapting luminance L_A, cd/m^2")->capture_default_str();
  app.add_option("--yb", cfg.Y_b, "background relative luminance Y_b")->capture_default_str();
  app.add_option("--surround", cfg.surround, "average, dim or dark")->capture_default_str();
  auto* d_opt = app.add_option("--d", D, "degree of adaptation (default: from surround and L_A)");
  app.add_option("--out", cfg.out, "output file (default: stdout)");
  app.add_flag("--json", cfg.json, "JSON output");

  auto* solve = app.add_subcommand("solve-optimal", "solve an optimal-colour spectrum for a chromaticity");
  solve->add_option("--target", cfg.target, "x,y")->delimiter(',')->expected(2)->required();
  solve->add_option("--genus", cfg.genus, "band_pass, band_stop or auto")->capture_default_str();
  solve->add_option("--tolerance", cfg.tolerance, "delta_e tolerance")->capture_default_str();
  solve->add_option("--init", cfg.init, "initial lambda1,lambda2")->delimiter(',')->expected(2);
  auto* lc_opt = solve->add_option("--lc", cfg.L_C, "scale K to this relative luminance (0..1)");
  (void)lc_opt;

  auto* table1 = app.add_subcommand("table1", "reproduce the ten-column optimal-colour table");
  table1->add_option("--tolerance", cfg.tolerance, "delta_e tolerance")->capture_default_str();

  auto* targets = app.add_subcommand("targets", "print the sixteen-colour target set");

  auto* match = app.add_subcommand("match", "match the target set against a spectra database");
  match->add_option("--db", cfg.db, "database CSV")->required();
  match->add_option("--format", cfg.format, "wide_csv or long_csv")->capture_default_str();

  auto* atlas = app.add_subcommand("atlas", "generate an in-gamut CAM16-UCS atlas slice");
  auto add_atlas_options = [&](CLI::App* cmd) {
    cmd->add_option("--j", cfg.J, "CAM16 lightness of the slice")->capture_default_str();
    cmd->add_option("--spacing", cfg.spacing, "grid spacing in UCS units")->capture_default_str();
    cmd->add_option("--bound", cfg.bound, "search bound on |a'_M|, |b'_M|")->capture_default_str();
  };
  add_atlas_options(atlas);
  atlas->add_option("--svg", cfg.svg, "write an (a'_M, b'_M) scatter plot");
  atlas->add_option("--svg-xy", cfg.svg_xy, "write an (x, y) scatter plot");

  auto* chart = app.add_subcommand("chart", "render a 16-bit PNG test chart with metadata sidecar");
  chart->add_option("--set", cfg.set, "targets, atlas or matched")->capture_default_str();
  chart->add_option("--rows", cfg.rows, "rows (default: square layout)");
  chart->add_option("--cols", cfg.cols, "columns (default: square layout)");
  chart->add_option("--patch", cfg.patch_px, "patch size in pixels")->capture_default_str();
  chart->add_option("--gap", cfg.gap_px, "gap in pixels")->capture_default_str();
  chart->add_flag("--linear", cfg.linear, "store linear signal instead of the Rec.709 OETF");
  chart->add_option("--icc", cfg.icc, "embed this ICC profile");
  chart->add_option("--db", cfg.db, "database CSV for --set matched");
  chart->add_option("--format", cfg.format, "wide_csv or long_csv")->capture_default_str();
  add_atlas_options(chart);

  try {
    app.parse(argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    if (!cfg.config.empty()) apply_config(cfg.config, app, sub);
    if (d_opt->count() > 0) cfg.D = D;
    if (solve->parsed()) {
      pair_or_throw(cfg.init, "--init");
      return cmd_solve(cfg, out, err);
    }
    if (table1->parsed()) return cmd_table1(cfg, out, err);
    if (targets->parsed()) return cmd_targets(cfg, out);
    if (match->parsed()) return cmd_match(cfg, out);
    if (atlas->parsed()) return cmd_atlas(cfg, out, err);
    if (chart->parsed()) return cmd_chart(cfg, err);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ovt::cli
