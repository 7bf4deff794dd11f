#include "nokholo/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nokholo {

using nlohmann::ordered_json;

static ordered_json surd_json(const Surd& v) {
  ordered_json j;
  j["a"] = rat_str(v.rational_part());
  j["b"] = rat_str(v.surd_coefficient());
  j["d"] = v.radicand().str();
  const auto mp = v.minimal_polynomial();
  j["minpoly"] = {mp[0].str(), mp[1].str(), mp[2].str()};
  const auto [lo, hi] = v.interval();
  j["interval"] = {rat_str(lo), rat_str(hi)};
  j["approx"] = double_str(v.approx());
  return j;
}

std::string surd_json_text(const Surd& v) { return surd_json(v).dump(2) + "\n"; }

std::string zariski_json_text(const SurfaceData& s, const DivisorClass& b,
                              const ZariskiDecomposition& z) {
  ordered_json j;
  j["surface"] = s.name;
  j["class"] = s.render(b);
  j["P"] = s.render(z.positive_part);
  ordered_json n = ordered_json::array();
  for (const auto& [idx, coeff] : z.negative_coeffs)
    n.push_back({s.render(s.negative_curve(idx)), rat_str(coeff)});
  j["N"] = n;
  return j.dump(2) + "\n";
}

std::string body_json_text(const SurfaceData& s, const DivisorClass& b, const FlagOnSurface& flag,
                           const NokBody& body) {
  ordered_json j;
  j["surface"] = s.name;
  j["class"] = s.render(b);
  ordered_json fl;
  fl["curve"] = s.render(flag.curve_class);
  if (flag.point_on_negative_curve)
    fl["point_on_negative_curve"] = *flag.point_on_negative_curve;
  else
    fl["point"] = "general";
  j["flag"] = fl;
  j["mu"] = surd_json(body.extent());
  ordered_json bps = ordered_json::array();
  for (const Surd& t : body.breakpoints) bps.push_back(surd_json(t));
  j["breakpoints"] = bps;
  ordered_json pieces = ordered_json::array();
  for (const BodyPiece& p : body.pieces) {
    ordered_json pj;
    pj["t_lo"] = surd_json(p.t_lo);
    pj["t_hi"] = surd_json(p.t_hi);
    pj["alpha"] = {rat_str(p.alpha_icpt), rat_str(p.alpha_slope)};
    pj["beta"] = {rat_str(p.beta_icpt), rat_str(p.beta_slope)};
    pieces.push_back(pj);
  }
  j["pieces"] = pieces;
  ordered_json verts = ordered_json::array();
  for (const auto& [t, y] : body.vertices()) verts.push_back({surd_json(t), surd_json(y)});
  j["vertices"] = verts;
  j["area"] = rat_str(body.area());
  return j.dump(2) + "\n";
}

std::string slice_json_text(const SurfaceData& s, const SliceRegion& region,
                            const BoundaryVerdict& verdict) {
  ordered_json j;
  j["surface"] = s.name;
  ordered_json fam;
  fam["B0"] = s.render(region.b0);
  fam["W"] = s.render(region.w);
  fam["C"] = s.render(region.c);
  fam["epsilon"] = rat_str(region.epsilon);
  j["family"] = fam;
  ordered_json q;
  q["monomials"] = {"t^2", "s*t", "s^2", "t", "s", "1"};
  ordered_json qc = ordered_json::array();
  for (const Rat& v : region.boundary.c) qc.push_back(rat_str(v));
  q["coefficients"] = qc;
  q["display"] = region.boundary.str();
  j["Q"] = q;
  ordered_json samples = ordered_json::array();
  for (const SliceSample& smp : region.samples) {
    ordered_json sj;
    sj["s"] = rat_str(smp.s);
    sj["mu"] = surd_json(smp.mu);
    samples.push_back(sj);
  }
  j["samples"] = samples;
  j["fit_count"] = region.fit_count;
  j["holdout_count"] = region.samples.size() - region.fit_count;
  ordered_json vj;
  vj["kind"] = verdict.kind == BoundaryKind::NONDEGENERATE_CONIC ? "NONDEGENERATE_CONIC"
                                                                 : "PIECEWISE_LINEAR";
  if (verdict.kind == BoundaryKind::NONDEGENERATE_CONIC) {
    ordered_json m = ordered_json::array();
    for (const RatVec& row : verdict.matrix) {
      ordered_json r = ordered_json::array();
      for (const Rat& v : row) r.push_back(rat_str(v));
      m.push_back(r);
    }
    vj["matrix"] = m;
    vj["determinant"] = rat_str(verdict.determinant);
  } else {
    ordered_json lines = ordered_json::array();
    for (const BoundaryLine& l : verdict.lines) {
      ordered_json lj;
      lj["s"] = surd_json(l.a);
      lj["t"] = surd_json(l.b);
      lj["1"] = surd_json(l.c);
      lines.push_back(lj);
    }
    vj["lines"] = lines;
  }
  j["verdict"] = vj;
  return j.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace nokholo
