/* Command-line surface for the library: Zariski decompositions,
 * Newton-Okounkov bodies, the two-parameter slice family with its boundary
 * verdict, cohomology tables, holonomicity certification, and the combined
 * report. Exit codes: 0 success, 1 usage, 2 mathematical precondition
 * violation, 3 fit-not-found.
 */

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nokholo/cohomology.hpp"
#include "nokholo/holonomic.hpp"
#include "nokholo/json_io.hpp"
#include "nokholo/lattice.hpp"
#include "nokholo/nok.hpp"
#include "nokholo/report.hpp"
#include "nokholo/svg.hpp"
#include "nokholo/zariski.hpp"

namespace {

using namespace nokholo;

std::string fixtures_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("NOKHOLO_FIXTURES")) return env;
  return "fixtures";
}

SurfaceData load_surface_arg(const std::string& path, const std::string& fixtures) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return load_surface(path);
  const fs::path alt = fs::path(fixtures) / path;
  if (fs::exists(alt)) return load_surface(alt.string());
  throw std::invalid_argument("surface file not found: '" + path + "' (also tried " +
                              alt.string() + ")");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file_atomic(out_path, text);
}

std::vector<Rat> make_grid(long count, const Rat& epsilon) {
  std::vector<Rat> grid;
  for (long j = 0; j < count; ++j) grid.push_back(Rat(j) * epsilon / Rat(count));
  return grid;
}

struct SliceOutput {
  SurfaceData surface;
  SliceRegion region;
  BoundaryVerdict verdict;
  FlagOnSurface flag;
};

SliceOutput run_klm_slice(long dim, long grid_count, const Rat& epsilon) {
  KlmFamily fam = build_klm_family(dim);
  if (epsilon > fam.epsilon)
    throw std::domain_error("epsilon exceeds the ampleness bound " + rat_str(fam.epsilon));
  SliceOutput out{fam.surface, {}, {}, fam.flag};
  out.region =
      slice_region(fam.surface, fam.b0, fam.w, fam.c, epsilon, make_grid(grid_count, epsilon));
  out.verdict = classify_boundary(out.region);
  return out;
}

SliceOutput run_custom_slice(const SurfaceData& s, const std::string& b0, const std::string& w,
                             const std::string& c, long grid_count, const Rat& epsilon) {
  SliceOutput out{s, {}, {}, FlagOnSurface{s.cls(c), std::nullopt}};
  out.region =
      slice_region(s, s.cls(b0), s.cls(w), s.cls(c), epsilon, make_grid(grid_count, epsilon));
  out.verdict = classify_boundary(out.region);
  return out;
}

int cmd_report_run(const std::string& out_dir, const std::string& fixtures) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const auto path = [&](const std::string& name) { return (fs::path(out_dir) / name).string(); };

  // Main exhibit: O(3,1) on P^2 x P^2 with the flag through E x E.
  SliceOutput klm = run_klm_slice(4, 7, epsilon_working());
  const std::vector<Rat> stack_grid = make_grid(5, epsilon_working());
  KlmFamily fam = build_klm_family(4);
  auto bodies = assemble_slice_body(fam.surface, fam.b0, fam.w, fam.c, fam.flag, stack_grid);
  CoefficientTable main_table = kunneth_table(parse_factors("P2,P2"), parse_ray("3,1"), 40);
  HolonomicCertificate main_cert = certify_complexity(main_table, {});

  // Control exhibit: the polyhedral slice family on the blow-up, paired with
  // a semi-ample product table whose complexity function also certifies.
  SurfaceData blowup = [&]() {
    try {
      return load_surface_arg("blowup.json", fixtures);
    } catch (const std::invalid_argument&) {
      return make_blowup_surface();
    }
  }();
  SliceOutput control = run_custom_slice(blowup, "2H-E", "H", "H-E", 7, Rat(1, 2));
  CoefficientTable control_table = kunneth_table(parse_factors("E,P1"), parse_ray("0,1"), 40);
  HolonomicCertificate control_cert = certify_complexity(control_table, {});

  write_file_atomic(path("slice_klm.json"), slice_json_text(klm.surface, klm.region, klm.verdict));
  write_file_atomic(path("slice_control.json"),
                    slice_json_text(control.surface, control.region, control.verdict));
  write_file_atomic(path("complexity_p2xp2_31.csv"), table_csv(main_table));
  write_file_atomic(path("complexity_p2xp2_31.csv.json"), table_sidecar_json(main_table));
  write_file_atomic(path("certificate_p2xp2_31.json"), certificate_json_text(main_cert));
  write_file_atomic(path("complexity_exp1_01.csv"), table_csv(control_table));
  write_file_atomic(path("certificate_exp1_01.json"), certificate_json_text(control_cert));

  ReportExhibit main_ex;
  main_ex.title = "O(3,1) on P2 x P2, flag through E x E (dimension 4)";
  main_ex.divisor_line =
      "Both certificates concern the same divisor D with line bundle O(3,1): the slice family "
      "B(s,t) = (9-9s)f1 + 3f2 - t(f1+f2+Delta) on E x E bounds the Newton-Okounkov slice, and "
      "E(x,q) = sum dim H^i(O(nD)) x^n q^i is its complexity function.";
  main_ex.surface = klm.surface;
  main_ex.region = klm.region;
  main_ex.verdict = klm.verdict;
  main_ex.certificate = main_cert;
  main_ex.certificate_label = "Complexity table of O(3,1) on P2 x P2, N = 40, holdout 10.";
  main_ex.svgs = {slice_region_svg(klm.region, klm.verdict, "slice region, O(3,1) family"),
                  slice_stack_svg(bodies, "slice bodies, s = 0 .. 2/5"),
                  body_svg(bodies.front().second, "body at s = 0 (area 27 = B.B/2)")};

  ReportExhibit control_ex;
  control_ex.title = "Polyhedral control: 2H - E on the blow-up of P2";
  control_ex.divisor_line =
      "Control family B(s,t) = (2-s)H - E - t(H-E) on the one-point blow-up: every exit time is "
      "rational and the boundary is a line. The holonomicity side shows the semi-ample product "
      "table O(0,1) on E x P1, which certifies as well.";
  control_ex.surface = control.surface;
  control_ex.region = control.region;
  control_ex.verdict = control.verdict;
  control_ex.certificate = control_cert;
  control_ex.certificate_label = "Complexity table of O(0,1) on E x P1, N = 40, holdout 10.";
  control_ex.svgs = {
      slice_region_svg(control.region, control.verdict, "slice region, control family")};

  write_file_atomic(path("report.html"), report_html({main_ex, control_ex}));
  std::cout << "report written to " << path("report.html") << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Newton-Okounkov slice geometry and holonomic complexity certificates"};
  app.require_subcommand(1);
  std::string fixtures_flag;
  app.add_option("--fixtures", fixtures_flag,
                 "fixture directory (default: $NOKHOLO_FIXTURES or ./fixtures)");

  // zariski <surface.json> <class>
  auto* zar = app.add_subcommand("zariski", "Zariski decomposition of a pseudoeffective class");
  std::string zar_surface, zar_class, zar_out;
  zar->add_option("surface", zar_surface, "surface JSON file")->required();
  zar->add_option("class", zar_class, "divisor class, e.g. \"H+2E\"")->required();
  zar->add_option("-o,--out", zar_out, "output JSON path (default: stdout)");

  // body <surface.json> <class> --flag-curve C [--flag-point i]
  auto* body = app.add_subcommand("body", "Newton-Okounkov body of a big nef class");
  std::string body_surface, body_class, body_curve, body_out, body_svg_path;
  long body_point = -1;
  body->add_option("surface", body_surface, "surface JSON file")->required();
  body->add_option("class", body_class, "big nef divisor class")->required();
  body->add_option("--flag-curve", body_curve, "flag curve class")->required();
  body->add_option("--flag-point", body_point,
                   "negative-curve index carrying the flag point (default: general point)");
  body->add_option("-o,--out", body_out, "output JSON path (default: stdout)");
  body->add_option("--svg", body_svg_path, "also write an SVG figure");

  // slice
  auto* slice = app.add_subcommand("slice", "two-parameter slice family and boundary verdict");
  long slice_dim = 4, slice_grid = 7;
  std::string slice_eps = "1/2", slice_out, slice_svg_path, slice_stack_path;
  std::string slice_surface, slice_b0, slice_w, slice_c;
  slice->add_option("--dim", slice_dim, "ambient dimension d >= 4 (default 4)");
  slice->add_option("--grid", slice_grid, "number of grid samples (default 7)");
  slice->add_option("--epsilon", slice_eps, "upper bound for s (default 1/2)");
  slice->add_option("--surface", slice_surface, "custom surface JSON (control mode)");
  slice->add_option("--b0", slice_b0, "custom family base class");
  slice->add_option("--w", slice_w, "custom family first direction");
  slice->add_option("--c", slice_c, "custom family flag direction");
  slice->add_option("-o,--out", slice_out, "output JSON path (default: stdout)");
  slice->add_option("--svg", slice_svg_path, "write the region SVG");
  slice->add_option("--stack-svg", slice_stack_path, "write the stacked-bodies SVG");

  // complexity
  auto* cpx = app.add_subcommand("complexity", "cohomology coefficient table as CSV");
  std::string cpx_factors, cpx_ray, cpx_out;
  long cpx_n = 40;
  cpx->add_option("--factors", cpx_factors, "e.g. \"P2,P2\" or \"E,P1\" (E* = nontrivial)")
      ->required();
  cpx->add_option("--ray", cpx_ray, "multidegree of D per factor, e.g. \"3,1\"")->required();
  cpx->add_option("-N", cpx_n, "truncation order (default 40)");
  cpx->add_option("-o,--out", cpx_out, "output CSV path (sidecar written alongside)");

  // certify
  auto* cert = app.add_subcommand("certify", "guess and certify holonomicity of a table");
  std::string cert_table, cert_out;
  CertifyOptions cert_opt;
  cert->add_option("table", cert_table, "coefficient table CSV")->required();
  cert->add_option("--deg-num", cert_opt.deg_num, "numerator degree bound (default: d)");
  cert->add_option("--deg-den", cert_opt.deg_den, "denominator degree bound (default: d+1)");
  cert->add_option("--holdout", cert_opt.holdout, "validation coefficients (default 10)");
  cert->add_option("--modulus", cert_opt.modulus, "fit residue classes of n mod m separately");
  cert->add_option("--max-transient", cert_opt.max_transient,
                   "largest transient prefix to try (default 4)");
  cert->add_option("-o,--out", cert_out, "certificate JSON path (default: stdout)");

  // report
  auto* rep = app.add_subcommand("report", "full bundle: boundary verdict next to certificate");
  std::string rep_out;
  rep->add_option("-o,--out", rep_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::string fixtures = fixtures_dir(fixtures_flag);
  try {
    if (*zar) {
      const SurfaceData s = load_surface_arg(zar_surface, fixtures);
      const DivisorClass b = s.cls(zar_class);
      const ZariskiDecomposition z = zariski_decompose(s, b);
      emit(zariski_json_text(s, b, z), zar_out);
      return 0;
    }
    if (*body) {
      const SurfaceData s = load_surface_arg(body_surface, fixtures);
      const DivisorClass b = s.cls(body_class);
      FlagOnSurface flag{s.cls(body_curve), std::nullopt};
      if (body_point >= 0) flag.point_on_negative_curve = static_cast<std::size_t>(body_point);
      const NokBody nb = nok_surface_body(s, b, flag);
      emit(body_json_text(s, b, flag, nb), body_out);
      if (!body_svg_path.empty())
        write_file_atomic(body_svg_path, body_svg(nb, "body of " + s.render(b)));
      return 0;
    }
    if (*slice) {
      const Rat eps = parse_rat(slice_eps);
      SliceOutput out = slice_surface.empty()
                            ? run_klm_slice(slice_dim, slice_grid, eps)
                            : run_custom_slice(load_surface_arg(slice_surface, fixtures),
                                               slice_b0, slice_w, slice_c, slice_grid, eps);
      emit(slice_json_text(out.surface, out.region, out.verdict), slice_out);
      if (!slice_svg_path.empty())
        write_file_atomic(slice_svg_path,
                          slice_region_svg(out.region, out.verdict, "slice region"));
      if (!slice_stack_path.empty()) {
        std::vector<Rat> svals;
        for (const SliceSample& smp : out.region.samples) svals.push_back(smp.s);
        auto bodies = assemble_slice_body(out.surface, out.region.b0, out.region.w, out.region.c,
                                          out.flag, svals);
        write_file_atomic(slice_stack_path, slice_stack_svg(bodies, "slice bodies"));
      }
      return 0;
    }
    if (*cpx) {
      const CoefficientTable t = kunneth_table(parse_factors(cpx_factors), parse_ray(cpx_ray),
                                               cpx_n);
      emit(table_csv(t), cpx_out);
      if (!cpx_out.empty()) write_file_atomic(cpx_out + ".json", table_sidecar_json(t));
      return 0;
    }
    if (*cert) {
      const CoefficientTable t = load_table_csv(cert_table);
      const HolonomicCertificate hc = certify_complexity(t, cert_opt);
      if (hc.verdict == CertVerdict::NO_FIT_FOUND) {
        std::cerr << "NO_FIT_FOUND: slice " << hc.failing_slice
                  << " admits no rational fit within the given bounds; no certificate emitted\n";
        return 3;
      }
      emit(certificate_json_text(hc), cert_out);
      return 0;
    }
    if (*rep) return cmd_report_run(rep_out, fixtures);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
