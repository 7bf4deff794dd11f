#include "nokholo/svg.hpp"

#include <algorithm>
#include <sstream>

namespace nokholo {

namespace {

constexpr double kWidth = 480, kHeight = 360, kMargin = 48;

struct Frame {
  double xmin, xmax, ymin, ymax;

  double px(double x) const {
    return kMargin + (x - xmin) / (xmax - xmin) * (kWidth - 2 * kMargin);
  }
  double py(double y) const {
    return kHeight - kMargin - (y - ymin) / (ymax - ymin) * (kHeight - 2 * kMargin);
  }
};

std::string svg_open(const std::string& title) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <text x=\"" << kMargin << "\" y=\"24\" font-family=\"monospace\" font-size=\"13\">"
     << title << "</text>\n";
  return os.str();
}

void axes(std::ostringstream& os, const Frame& f, const std::string& xlabel,
          const std::string& ylabel) {
  os << "  <line x1=\"" << f.px(f.xmin) << "\" y1=\"" << f.py(0) << "\" x2=\"" << f.px(f.xmax)
     << "\" y2=\"" << f.py(0) << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  os << "  <line x1=\"" << f.px(0) << "\" y1=\"" << f.py(f.ymin) << "\" x2=\"" << f.px(0)
     << "\" y2=\"" << f.py(f.ymax) << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  os << "  <text x=\"" << f.px(f.xmax) - 12 << "\" y=\"" << f.py(0) + 16
     << "\" font-family=\"monospace\" font-size=\"11\">" << xlabel << "</text>\n";
  os << "  <text x=\"" << f.px(0) + 6 << "\" y=\"" << f.py(f.ymax) + 4
     << "\" font-family=\"monospace\" font-size=\"11\">" << ylabel << "</text>\n";
}

} // namespace

std::string body_svg(const NokBody& body, const std::string& title) {
  const auto verts = body.vertices();
  double xmax = 0.1, ymax = 0.1;
  for (const auto& [t, y] : verts) {
    xmax = std::max(xmax, t.approx());
    ymax = std::max(ymax, y.approx());
  }
  const Frame f{-0.08 * xmax, 1.1 * xmax, -0.12 * ymax, 1.12 * ymax};

  std::ostringstream os;
  os << svg_open(title);
  axes(os, f, "t", "y");
  os << "  <polygon points=\"";
  for (const auto& [t, y] : verts)
    os << double_str(f.px(t.approx())) << "," << double_str(f.py(y.approx())) << " ";
  os << "\" fill=\"#9ecae1\" fill-opacity=\"0.55\" stroke=\"#3182bd\" stroke-width=\"1.5\"/>\n";

  // Annotate the extent with its minimal polynomial when it is irrational.
  const Surd mu = body.extent();
  if (!mu.is_rational()) {
    const auto mp = mu.minimal_polynomial();
    os << "  <text x=\"" << f.px(mu.approx()) - 40 << "\" y=\"" << f.py(0) + 32
       << "\" font-family=\"monospace\" font-size=\"11\">t-extent: root of " << mp[2].str()
       << "t^2" << (mp[1] >= 0 ? "+" : "") << mp[1].str() << "t" << (mp[0] >= 0 ? "+" : "")
       << mp[0].str() << " = " << double_str(mu.approx()) << "</text>\n";
  }
  for (const auto& [t, y] : verts)
    os << "  <circle cx=\"" << double_str(f.px(t.approx())) << "\" cy=\""
       << double_str(f.py(y.approx())) << "\" r=\"2.5\" fill=\"#08519c\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::string slice_region_svg(const SliceRegion& region, const BoundaryVerdict& verdict,
                             const std::string& title) {
  double smax = rat_double(region.epsilon), tmax = 0.1;
  for (const SliceSample& smp : region.samples) tmax = std::max(tmax, smp.mu.approx());
  const Frame f{-0.08 * smax, 1.08 * smax, -0.12 * tmax, 1.2 * tmax};

  std::ostringstream os;
  os << svg_open(title);
  axes(os, f, "s", "t");

  // Dense polyline of the fitted boundary t = mu(s): solve Q(s, t) = 0 for
  // the branch through the samples, drawn from the exact conic coefficients.
  const auto& q = region.boundary.c;
  os << "  <polyline fill=\"none\" stroke=\"#de2d26\" stroke-width=\"1.8\" points=\"";
  const double s0 = rat_double(region.samples.front().s);
  const double s1 = rat_double(region.samples.back().s);
  const double ref = region.samples.front().mu.approx();
  for (int k = 0; k <= 160; ++k) {
    const double s = s0 + (s1 - s0) * k / 160.0;
    const double a2 = rat_double(q[0]);
    const double a1 = rat_double(q[1]) * s + rat_double(q[3]);
    const double a0 = rat_double(q[2]) * s * s + rat_double(q[4]) * s + rat_double(q[5]);
    double t;
    if (a2 == 0) {
      if (a1 == 0) continue;
      t = -a0 / a1;
    } else {
      const double disc = a1 * a1 - 4 * a2 * a0;
      if (disc < 0) continue;
      const double r1 = (-a1 - std::sqrt(disc)) / (2 * a2);
      const double r2 = (-a1 + std::sqrt(disc)) / (2 * a2);
      t = std::abs(r1 - ref) < std::abs(r2 - ref) ? r1 : r2;
    }
    os << double_str(f.px(s)) << "," << double_str(f.py(t)) << " ";
  }
  os << "\"/>\n";

  for (const SliceSample& smp : region.samples)
    os << "  <circle cx=\"" << double_str(f.px(rat_double(smp.s))) << "\" cy=\""
       << double_str(f.py(smp.mu.approx())) << "\" r=\"3\" fill=\"#a50f15\"/>\n";

  os << "  <text x=\"" << kMargin << "\" y=\"" << kHeight - 12
     << "\" font-family=\"monospace\" font-size=\"11\">Q = " << region.boundary.str() << "  ["
     << (verdict.kind == BoundaryKind::NONDEGENERATE_CONIC ? "NONDEGENERATE_CONIC"
                                                           : "PIECEWISE_LINEAR")
     << "]</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string slice_stack_svg(const std::vector<std::pair<Rat, NokBody>>& bodies,
                            const std::string& title) {
  // Oblique projection: (s, t, y) -> (t + 0.45 s, y + 0.35 s).
  double xmax = 0.1, ymax = 0.1;
  for (const auto& [s, body] : bodies) {
    const double sh = rat_double(s);
    for (const auto& [t, y] : body.vertices()) {
      xmax = std::max(xmax, t.approx() + 0.45 * sh);
      ymax = std::max(ymax, y.approx() + 0.35 * sh);
    }
  }
  const Frame f{-0.08 * xmax, 1.08 * xmax, -0.1 * ymax, 1.12 * ymax};

  std::ostringstream os;
  os << svg_open(title);
  for (auto it = bodies.rbegin(); it != bodies.rend(); ++it) {
    const double sh = rat_double(it->first);
    os << "  <polygon points=\"";
    for (const auto& [t, y] : it->second.vertices())
      os << double_str(f.px(t.approx() + 0.45 * sh)) << ","
         << double_str(f.py(y.approx() + 0.35 * sh)) << " ";
    os << "\" fill=\"#c7e9c0\" fill-opacity=\"0.5\" stroke=\"#31a354\" stroke-width=\"1.2\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace nokholo
