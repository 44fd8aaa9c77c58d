// knotwork -- braid/knot invariants, framing data, and fibration sampling
// from the command line. JSON goes to stdout (or --out); curves and field
// grids are CSV. Exit status is nonzero on any precondition violation,
// with the offending input named on stderr.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "knotwork/geometry.hpp"
#include "knotwork/report.hpp"

using namespace knotwork;

namespace {

struct InputSelector {
  std::string braid_text;
  std::string pd_path;
  std::string catalog_name;

  void attach(CLI::App* cmd, bool allow_pd = true) {
    auto* b = cmd->add_option("--braid", braid_text,
                              "braid word, e.g. \"1 1 1\" or \"n=4 1 -2\"");
    CLI::Option* p = nullptr;
    if (allow_pd)
      p = cmd->add_option("--pd", pd_path, "path to a PD JSON file");
    auto* n = cmd->add_option("--name", catalog_name, "catalog entry name");
    b->excludes(n);
    if (p) {
      b->excludes(p);
      p->excludes(n);
    }
  }

  bool provided() const {
    return !braid_text.empty() || !pd_path.empty() || !catalog_name.empty();
  }

  std::optional<BraidWord> braid() const {
    if (!braid_text.empty()) return parse_braid(braid_text);
    if (!catalog_name.empty()) {
      for (const auto& e : load_catalog())
        if (e.name == catalog_name) return e.braid;
      throw std::invalid_argument("unknown catalog entry '" + catalog_name + "'");
    }
    return std::nullopt;
  }

  LinkDiagram diagram() const {
    if (!braid_text.empty()) return closure_to_diagram(parse_braid(braid_text));
    if (!pd_path.empty()) return pd_from_json(json::parse(read_text_file(pd_path)));
    if (!catalog_name.empty()) {
      for (const auto& e : load_catalog())
        if (e.name == catalog_name) return e.diagram();
      throw std::invalid_argument("unknown catalog entry '" + catalog_name + "'");
    }
    throw std::invalid_argument("no input given (use --braid, --pd or --name)");
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

void emit_json(const json& j, const std::string& out_path) {
  emit(j.dump(2) + "\n", out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knot invariants, framed-band data, and fibration sampling"};
  app.require_subcommand(1);

  std::string out_path;

  // --- invariants ------------------------------------------------------
  auto* inv = app.add_subcommand("invariants",
                                 "full invariant bundle (JSON)");
  InputSelector inv_in;
  inv_in.attach(inv);
  inv->add_option("--out", out_path, "write to file instead of stdout");
  inv->callback([&] {
    emit_json(invariant_bundle(inv_in.diagram(), inv_in.braid()), out_path);
  });

  // --- seifert ---------------------------------------------------------
  auto* sei = app.add_subcommand("seifert", "Seifert surface data (JSON)");
  InputSelector sei_in;
  sei_in.attach(sei);
  sei->add_option("--out", out_path, "write to file instead of stdout");
  sei->callback([&] {
    auto braid = sei_in.braid();
    if (braid) {
      emit_json(seifert_json(seifert_data_from_braid(*braid)), out_path);
      return;
    }
    LinkDiagram d = sei_in.diagram();
    SeifertSurfaceData data;
    data.circles = seifert_circles(d);
    data.crossings = d.crossing_count();
    data.boundary_components = d.component_count();
    auto [chi, g] =
        euler_genus(data.circles, data.crossings, data.boundary_components);
    data.euler = chi;
    data.genus = g;
    emit_json(seifert_json(data), out_path);
  });

  // --- framing ---------------------------------------------------------
  auto* fra = app.add_subcommand("framing", "framed-band report (JSON)");
  InputSelector fra_in;
  fra_in.attach(fra);
  std::string convention = "vertical";
  int explicit_twist = 0;
  fra->add_option("--convention", convention, "vertical | explicit")
      ->check(CLI::IsMember({"vertical", "explicit"}));
  fra->add_option("--twist", explicit_twist,
                  "twist count for the explicit convention");
  fra->add_option("--out", out_path, "write to file instead of stdout");
  fra->callback([&] {
    FramingConvention conv = convention == "vertical"
                                 ? FramingConvention::vertical
                                 : FramingConvention::explicit_twist;
    emit_json(
        framing_json(band_from_diagram(fra_in.diagram(), conv, explicit_twist),
                     conv),
        out_path);
  });

  // --- fibration-check -------------------------------------------------
  auto* fib = app.add_subcommand("fibration-check",
                                 "fibrability screening of a braid closure");
  InputSelector fib_in;
  fib_in.attach(fib, /*allow_pd=*/false);
  fib->add_option("--out", out_path, "write to file instead of stdout");
  fib->callback([&] {
    auto braid = fib_in.braid();
    if (!braid)
      throw std::invalid_argument("fibration-check needs a braid input");
    emit_json(fibrability_json(fibrability_report(*braid)), out_path);
  });

  // --- fiber -----------------------------------------------------------
  auto* fbr = app.add_subcommand(
      "fiber", "sample a Hopf or torus-knot fiber curve (CSV)");
  int alpha = 0, beta = 0, samples = 512, space = 3;
  std::vector<double> base;
  fbr->add_option("--alpha", alpha, "torus action exponent on z1");
  fbr->add_option("--beta", beta, "torus action exponent on z2");
  fbr->add_option("--base", base,
                  "2-sphere base point x y z for a plain Hopf fiber")
      ->expected(3);
  fbr->add_option("--samples", samples, "sample count")->check(CLI::Range(3, 1 << 20));
  fbr->add_option("--space", space, "3: stereographic image, 4: on the 3-sphere")
      ->check(CLI::IsMember({3, 4}));
  fbr->add_option("--out", out_path, "write to file instead of stdout");
  fbr->callback([&] {
    SampledCurve curve;
    if (!base.empty()) {
      curve = hopf_fiber({base[0], base[1], base[2]}, samples);
    } else if (alpha != 0 && beta != 0) {
      if (std::gcd(alpha, beta) != 1)
        std::cerr << "note: gcd(alpha, beta) != 1, the fiber is a link fiber\n";
      const double r = 1.0 / std::sqrt(2.0);
      curve = torus_fiber(alpha, beta, {Complex(r, 0), Complex(r, 0)}, samples);
    } else {
      throw std::invalid_argument(
          "fiber needs --alpha/--beta or a --base point");
    }
    if (space == 3) curve = stereo_project_curve(curve);
    std::ostringstream os;
    write_curve_csv(os, curve);
    emit(os.str(), out_path);
  });

  // --- linking ---------------------------------------------------------
  auto* lnk = app.add_subcommand(
      "linking", "Gauss linking number of two closed curve CSVs");
  std::vector<std::string> curve_files;
  lnk->add_option("curves", curve_files, "two curve CSV files")
      ->expected(2)
      ->check(CLI::ExistingFile);
  lnk->callback([&] {
    std::ifstream f1(curve_files[0]), f2(curve_files[1]);
    SampledCurve c1 = read_curve_csv(f1), c2 = read_curve_csv(f2);
    std::printf("%.6f\n", gauss_linking(c1, c2));
  });

  // --- field -----------------------------------------------------------
  auto* fld = app.add_subcommand(
      "field", "sample the static hopfion B/E fields on a grid (CSV)");
  int grid = 8;
  double extent = 2.0, step = 1e-4;
  fld->add_option("--grid", grid, "points per axis")->check(CLI::Range(1, 256));
  fld->add_option("--extent", extent, "half-width of the sampled cube");
  fld->add_option("--step", step, "finite-difference step");
  fld->add_option("--out", out_path, "write to file instead of stdout");
  fld->callback([&] {
    std::vector<FieldSample> samples;
    for (int i = 0; i < grid; ++i)
      for (int j = 0; j < grid; ++j)
        for (int k = 0; k < grid; ++k) {
          auto coord = [&](int idx) {
            return grid == 1 ? 0.0 : -extent + 2 * extent * idx / (grid - 1);
          };
          Vec3 x{coord(i), coord(j), coord(k)};
          try {
            samples.push_back(ranada_field(x, step));
          } catch (const std::domain_error&) {
            // singular locus: leave the grid point out
          }
        }
    std::ostringstream os;
    write_field_csv(os, samples);
    emit(os.str(), out_path);
  });

  // --- catalog ---------------------------------------------------------
  auto* cat = app.add_subcommand("catalog",
                                 "list, dump, or verify the built-in fixtures");
  bool verify = false, list = false;
  std::string entry_name, extended_path;
  cat->add_option("--name", entry_name, "dump one entry as JSON");
  cat->add_flag("--verify", verify, "recompute and check all known values");
  cat->add_flag("--list", list, "list entry names");
  cat->add_option("--extended", extended_path,
                  "also load 11-crossing fixtures from a JSON file");
  cat->add_option("--out", out_path, "write to file instead of stdout");
  cat->callback([&] {
    auto entries = load_catalog();
    if (!extended_path.empty())
      for (auto& e : load_extended_fixtures(extended_path))
        entries.push_back(std::move(e));
    if (list) {
      std::string names;
      for (const auto& e : entries) names += e.name + "\n";
      emit(names, out_path);
      return;
    }
    if (!entry_name.empty()) {
      for (const auto& e : entries)
        if (e.name == entry_name) {
          json j{{"name", e.name}};
          if (e.braid) j["braid"] = e.braid->str();
          if (e.pd_code) j["pd"] = *e.pd_code;
          j["pd_json"] = pd_to_json(e.diagram());
          json known = json::array();
          for (const auto& kv : e.known)
            known.push_back({{"invariant", kv.invariant},
                             {"expected", kv.expected},
                             {"source", kv.source}});
          j["known"] = std::move(known);
          emit_json(j, out_path);
          return;
        }
      throw std::invalid_argument("unknown catalog entry '" + entry_name + "'");
    }
    if (verify) {
      int failures = 0;
      emit(verification_table(verify_catalog(entries), &failures), out_path);
      if (failures > 0) throw std::runtime_error(
          std::to_string(failures) + " catalog check(s) failed");
      return;
    }
    throw std::invalid_argument("catalog needs --list, --name or --verify");
  });

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
