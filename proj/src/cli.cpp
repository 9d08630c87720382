#include "taxicab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "taxicab/atlas.hpp"
#include "taxicab/json_io.hpp"
#include "taxicab/oracle.hpp"
#include "taxicab/render_svg.hpp"
#include "taxicab/section_builder.hpp"

namespace taxicab {

namespace {

Bbox parse_box(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.size() != 4) throw geometry_error(ErrorCode::kParse, "box needs x0,y0,x1,y1");
  return {v[0], v[1], v[2], v[3]};
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw geometry_error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  f << text;
}

std::string raster_text(const std::vector<std::string>& rows) {
  return Json(rows).dump(1) + "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact taxicab conic sections"};
  app.require_subcommand(1);

  std::string spec_path, output, box_text, range_text = "-2,-2,2,2", plane_text, kappa_text;
  int grid_n = 201, atlas_n = 101, workers = 1, samples = 50, transects = 40;

  auto* classify_cmd = app.add_subcommand("classify", "print the conic class");
  classify_cmd->add_option("spec", spec_path, "cone spec JSON")->required();

  auto* section_cmd = app.add_subcommand("section", "write the section as JSON");
  section_cmd->add_option("spec", spec_path, "cone spec JSON")->required();
  section_cmd->add_option("-o,--output", output, "output path (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "check the section against the oracle");
  verify_cmd->add_option("spec", spec_path, "cone spec JSON")->required();
  verify_cmd->add_option("-o,--output", output, "report path (default stdout)");
  verify_cmd->add_option("--grid", grid_n, "grid points per axis (odd)");
  verify_cmd->add_option("--bbox", box_text, "x0,y0,x1,y1 (default: section box padded by 1)");
  verify_cmd->add_option("--samples", samples, "samples per piece");
  verify_cmd->add_option("--transects", transects, "exact transect lines");

  auto* atlas_cmd = app.add_subcommand("atlas", "classification raster over line parameters");
  atlas_cmd->add_option("--plane", plane_text, "A1,A2,A3")->required();
  atlas_cmd->add_option("--kappa", kappa_text, "kappa")->required();
  atlas_cmd->add_option("--grid", atlas_n, "cells per axis");
  atlas_cmd->add_option("--range", range_text, "x0,y0,x1,y1 (default -2,-2,2,2)");
  atlas_cmd->add_option("--workers", workers, "worker threads");
  atlas_cmd->add_option("-o,--output", output, "output path (default stdout)");

  auto* ukappa_cmd = app.add_subcommand("ukappa", "classification raster for A = a");
  ukappa_cmd->add_option("--kappa", kappa_text, "kappa")->required();
  ukappa_cmd->add_option("--grid", atlas_n, "cells per axis");
  ukappa_cmd->add_option("--range", range_text, "x0,y0,x1,y1 (default -2,-2,2,2)");
  ukappa_cmd->add_option("--workers", workers, "worker threads");
  ukappa_cmd->add_option("-o,--output", output, "output path (default stdout)");

  auto* render_cmd = app.add_subcommand("render", "draw a section JSON as SVG");
  render_cmd->add_option("section", spec_path, "section JSON")->required();
  render_cmd->add_option("--viewport", box_text, "x0,y0,x1,y1");
  render_cmd->add_option("-o,--output", output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidSpec;
  }

  try {
    if (*classify_cmd) {
      out << to_string(classify(load_cone(spec_path))) << "\n";
    } else if (*section_cmd) {
      emit(section_json(build_section(load_cone(spec_path))).dump(2) + "\n", output, out);
    } else if (*verify_cmd) {
      ConeSpec cone = load_cone(spec_path);
      OracleConfig cfg;
      cfg.grid_n = grid_n;
      VerifyOptions opts;
      if (!box_text.empty()) opts.box = parse_box(box_text);
      opts.samples_per_piece = samples;
      opts.transects = transects;
      VerificationReport rep = verify_section(cone, build_section(cone), opts, cfg);
      emit(report_json(rep).dump(2) + "\n", output, out);
      if (!rep.ok()) return kExitVerificationFailed;
    } else if (*atlas_cmd || *ukappa_cmd) {
      Bbox r = parse_box(range_text);
      AtlasGrid grid{r.x0, r.y0, r.x1, r.y1, atlas_n};
      Rational kappa = parse_rational(kappa_text);
      if (*atlas_cmd) {
        emit(raster_text(atlas_sweep(normalize_plane(parse_triple(plane_text)), kappa, grid, workers)),
             output, out);
      } else {
        UKappaSweep sweep = ukappa_sweep(kappa, grid, workers);
        emit(raster_text(sweep.raster), output, out);
        if (sweep.inconsistencies > 0) {
          err << sweep.inconsistencies << " cells disagree with U_kappa membership\n";
          return kExitVerificationFailed;
        }
      }
    } else if (*render_cmd) {
      std::ifstream in(spec_path);
      if (!in) throw geometry_error(ErrorCode::kParse, "cannot read '" + spec_path + "'");
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::exception& e) {
        throw geometry_error(ErrorCode::kParse, e.what());
      }
      RenderSpec spec;
      if (!box_text.empty()) spec.viewport = parse_box(box_text);
      emit(render_section(section_from_json(j), spec), output, out);
    }
  } catch (const geometry_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidSpec;
  }
  return kExitOk;
}

}  // namespace taxicab
