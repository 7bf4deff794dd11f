#include "nokholo/nok.hpp"

#include <algorithm>
#include <stdexcept>

namespace nokholo {

/* ---------------------------------------------------------------- bodies */

namespace {

struct AffineCoeffs {
  RatVec icpt, slope; // a_i(t) = icpt[i] + slope[i] * t over the support
};

// Solves (B - tC - sum a_i(t) C_i).C_j = 0 on the support, split into the
// constant and t-linear parts of the right-hand side.
AffineCoeffs solve_support_affine(const SurfaceData& s, const DivisorClass& b,
                                  const DivisorClass& c, const std::vector<std::size_t>& support) {
  const std::size_t k = support.size();
  RatMat gram(k, RatVec(k));
  RatVec rhs0(k), rhs1(k);
  for (std::size_t i = 0; i < k; ++i) {
    const DivisorClass ci = s.negative_curve(support[i]);
    rhs0[i] = intersect(b, ci, s);
    rhs1[i] = -intersect(c, ci, s);
    for (std::size_t j = 0; j < k; ++j)
      gram[i][j] = intersect(ci, s.negative_curve(support[j]), s);
  }
  if (!negative_definite(gram)) throw std::domain_error("inconsistent negative-curve data");
  auto icpt = solve_square(gram, rhs0);
  auto slope = solve_square(gram, rhs1);
  if (!icpt || !slope) throw std::domain_error("inconsistent negative-curve data");
  return {*icpt, *slope};
}

struct ChamberData {
  std::vector<std::size_t> support;
  AffineCoeffs coeffs;
  DivisorClass p_icpt, p_slope; // P_t = p_icpt + t * p_slope
};

ChamberData chamber_at(const SurfaceData& s, const DivisorClass& b, const DivisorClass& c,
                       std::vector<std::size_t> support, const Rat& t) {
  const std::size_t ncurves = s.negative_curves.size();
  const std::size_t guard = 4 * (ncurves + 1) * (ncurves + 1);
  AffineCoeffs coeffs;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > guard) throw std::domain_error("inconsistent negative-curve data");
    coeffs = solve_support_affine(s, b, c, support);
    DivisorClass p = b - t * c;
    for (std::size_t i = 0; i < support.size(); ++i)
      p = p - (coeffs.icpt[i] + coeffs.slope[i] * t) * s.negative_curve(support[i]);

    // A curve outside the support that P meets negatively (or tangentially
    // with negative drift) enters; a support coefficient at zero with
    // negative drift leaves.
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < ncurves && !enter; ++j) {
      if (std::find(support.begin(), support.end(), j) != support.end()) continue;
      const DivisorClass cj = s.negative_curve(j);
      const Rat val = intersect(p, cj, s);
      if (val < 0) enter = j;
      if (val == 0) {
        DivisorClass p_slope = -c;
        for (std::size_t i = 0; i < support.size(); ++i)
          p_slope = p_slope - coeffs.slope[i] * s.negative_curve(support[i]);
        if (intersect(p_slope, cj, s) < 0) enter = j;
      }
    }
    if (enter) {
      support.push_back(*enter);
      std::sort(support.begin(), support.end());
      continue;
    }
    std::optional<std::size_t> leave;
    for (std::size_t i = 0; i < support.size() && !leave; ++i) {
      const Rat val = coeffs.icpt[i] + coeffs.slope[i] * t;
      if (val < 0 || (val == 0 && coeffs.slope[i] < 0)) leave = i;
    }
    if (leave) {
      support.erase(support.begin() + static_cast<long>(*leave));
      continue;
    }
    break;
  }

  ChamberData out;
  out.support = std::move(support);
  out.coeffs = std::move(coeffs);
  out.p_icpt = b;
  out.p_slope = -c;
  for (std::size_t i = 0; i < out.support.size(); ++i) {
    out.p_icpt = out.p_icpt - out.coeffs.icpt[i] * s.negative_curve(out.support[i]);
    out.p_slope = out.p_slope - out.coeffs.slope[i] * s.negative_curve(out.support[i]);
  }
  return out;
}

} // namespace

NokBody nok_surface_body(const SurfaceData& s, const DivisorClass& b, const FlagOnSurface& flag) {
  const DivisorClass& c = flag.curve_class;
  if (c.lattice_id != s.name) throw std::domain_error("foreign class");
  bool c_zero = true;
  for (const Rat& v : c.coords) c_zero = c_zero && v == 0;
  if (c_zero || !cone_contains(s.pseff, c, s))
    throw std::invalid_argument("flag curve must be nonzero and pseudoeffective");
  if (flag.point_on_negative_curve) {
    const std::size_t idx = *flag.point_on_negative_curve;
    if (idx >= s.negative_curves.size()) throw std::invalid_argument("flag point curve index");
    if (!s.point_multiplicities.count(idx))
      throw std::invalid_argument("no recorded multiplicity for the flag point curve");
  }
  if (!cone_contains(s.nef, b, s)) throw std::domain_error("reduce to nef part first");
  if (intersect(b, b, s) <= 0) throw std::domain_error("not big");

  const ExitTime exit = cone_exit_time(s.pseff, b, c, s);
  if (exit.infinite) throw std::domain_error("body unbounded in flag direction");
  const Surd mu = exit.value;
  if (sign(mu) <= 0) throw std::domain_error("not big");

  // Multiplicity weights: zero for a general flag point, the recorded
  // multiplicity on the selected curve otherwise.
  const auto mult_of = [&](std::size_t idx) -> Rat {
    if (!flag.point_on_negative_curve || *flag.point_on_negative_curve != idx) return Rat(0);
    return Rat(s.point_multiplicities.at(idx));
  };

  NokBody body;
  body.breakpoints.push_back(Surd(Rat(0)));

  Rat t_cur = 0;
  std::vector<std::size_t> support;
  const std::size_t chamber_guard = 2 * s.negative_curves.size() + 2;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > chamber_guard) throw std::domain_error("inconsistent negative-curve data");
    const ChamberData ch = chamber_at(s, b, c, support, t_cur);
    support = ch.support;

    // Next wall: support coefficient vanishing, or a new curve starting to
    // meet P negatively; both are roots of affine functions of t.
    Surd t_end = mu;
    for (std::size_t j = 0; j < s.negative_curves.size(); ++j) {
      if (std::find(support.begin(), support.end(), j) != support.end()) continue;
      const DivisorClass cj = s.negative_curve(j);
      const Rat g_slope = intersect(ch.p_slope, cj, s);
      if (g_slope >= 0) continue;
      const Rat root = -intersect(ch.p_icpt, cj, s) / g_slope;
      if (root > t_cur && Surd(root) < t_end) t_end = Surd(root);
    }
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (ch.coeffs.slope[i] >= 0) continue;
      const Rat root = -ch.coeffs.icpt[i] / ch.coeffs.slope[i];
      if (root > t_cur && Surd(root) < t_end) t_end = Surd(root);
    }

    BodyPiece piece;
    piece.t_lo = Surd(t_cur);
    piece.t_hi = t_end;
    piece.alpha_icpt = 0;
    piece.alpha_slope = 0;
    for (std::size_t i = 0; i < support.size(); ++i) {
      const Rat m = mult_of(support[i]);
      piece.alpha_icpt += ch.coeffs.icpt[i] * m;
      piece.alpha_slope += ch.coeffs.slope[i] * m;
    }
    const Rat pc_icpt = intersect(ch.p_icpt, c, s);
    const Rat pc_slope = intersect(ch.p_slope, c, s);
    piece.beta_icpt = piece.alpha_icpt + pc_icpt;
    piece.beta_slope = piece.alpha_slope + pc_slope;
    body.pieces.push_back(piece);
    body.breakpoints.push_back(t_end);

    if (t_end == mu) break;
    t_cur = t_end.as_rational(); // interior walls are roots of affine rational functions
  }

  // alpha starts at the origin side non-negative, and the chambers must agree
  // where they meet.
  if (sign(body.pieces.front().alpha_at(Surd(Rat(0)))) < 0)
    throw std::domain_error("inconsistent negative-curve data");
  for (std::size_t k = 0; k + 1 < body.pieces.size(); ++k) {
    const Surd& t = body.breakpoints[k + 1];
    if (body.pieces[k].alpha_at(t) != body.pieces[k + 1].alpha_at(t) ||
        body.pieces[k].beta_at(t) != body.pieces[k + 1].beta_at(t))
      throw std::domain_error("inconsistent negative-curve data");
  }

  // Normalized volume identity: the body of a big nef divisor has Euclidean
  // area B.B/2. Failure means the cone data and curve list disagree.
  if (Rat(2) * body.area() != intersect(b, b, s))
    throw std::domain_error("area identity failed: inconsistent surface data");
  return body;
}

std::vector<std::pair<Surd, Surd>> NokBody::vertices() const {
  std::vector<std::pair<Surd, Surd>> pts;
  // Lower chain left to right, then upper chain right to left.
  pts.emplace_back(breakpoints.front(), pieces.front().alpha_at(breakpoints.front()));
  for (std::size_t k = 0; k < pieces.size(); ++k)
    pts.emplace_back(breakpoints[k + 1], pieces[k].alpha_at(breakpoints[k + 1]));
  for (std::size_t k = pieces.size(); k-- > 0;)
    pts.emplace_back(breakpoints[k + 1], pieces[k].beta_at(breakpoints[k + 1]));
  pts.emplace_back(breakpoints.front(), pieces.front().beta_at(breakpoints.front()));

  const auto same = [](const auto& p, const auto& q) {
    return p.first == q.first && p.second == q.second;
  };
  std::vector<std::pair<Surd, Surd>> dedup;
  for (const auto& p : pts)
    if (dedup.empty() || !same(dedup.back(), p)) dedup.push_back(p);
  while (dedup.size() > 1 && same(dedup.front(), dedup.back())) dedup.pop_back();

  // Drop cyclically collinear points (exact cross products).
  const auto collinear = [](const auto& p, const auto& q, const auto& r) {
    const Surd ux = q.first - p.first, uy = q.second - p.second;
    const Surd vx = r.first - q.first, vy = r.second - q.second;
    return sign(ux * vy - uy * vx) == 0;
  };
  bool changed = true;
  while (changed && dedup.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < dedup.size(); ++i) {
      const auto& p = dedup[(i + dedup.size() - 1) % dedup.size()];
      const auto& q = dedup[i];
      const auto& r = dedup[(i + 1) % dedup.size()];
      if (collinear(p, q, r)) {
        dedup.erase(dedup.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return dedup;
}

Rat NokBody::area() const {
  Surd acc{Rat(0)};
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const BodyPiece& pc = pieces[k];
    const Surd lo = breakpoints[k], hi = breakpoints[k + 1];
    const Rat h_icpt = pc.beta_icpt - pc.alpha_icpt;
    const Rat h_slope = pc.beta_slope - pc.alpha_slope;
    const Surd width = hi - lo;
    const Surd sq = hi * hi - lo * lo;
    acc = acc + Surd(h_icpt) * width + Surd(h_slope / 2) * sq;
  }
  if (!acc.is_rational()) throw std::logic_error("irrational body area");
  return acc.as_rational();
}

/* ------------------------------------------------------- E x E family */

SurfaceData make_product_elliptic_surface() {
  SurfaceData s;
  s.name = "ExE";
  s.basis = {"f1", "f2", "Delta"};
  // Fibers and diagonal on E x E: pairwise intersection 1, self-intersection
  // 0 by adjunction (2g - 2 = C^2 for a curve of genus g on an abelian
  // surface, and all three are elliptic).
  s.form.matrix = {{Rat(0), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(1)}, {Rat(1), Rat(1), Rat(0)}};
  ConeSpec cone;
  cone.kind = ConeKind::QUADRATIC;
  cone.ample_reference = {Rat(1), Rat(1), Rat(1)};
  s.nef = cone;
  s.pseff = cone; // Nef = NE on E x E without complex multiplication
  validate_surface(s);
  return s;
}

SurfaceData make_blowup_surface() {
  SurfaceData s;
  s.name = "blowup_p2";
  s.basis = {"H", "E"};
  s.form.matrix = {{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}};
  s.nef.kind = ConeKind::POLYHEDRAL;
  s.nef.inequalities = {{Rat(0), Rat(1)}, {Rat(1), Rat(-1)}};   // E, H - E
  s.pseff.kind = ConeKind::POLYHEDRAL;
  s.pseff.inequalities = {{Rat(1), Rat(-1)}, {Rat(1), Rat(0)}}; // H - E, H
  s.negative_curves = {{Rat(0), Rat(1)}};                       // E
  s.point_multiplicities[0] = 1; // flag curve H - E meets E once
  validate_surface(s);
  return s;
}

DivisorClass restrict_bidegree(const SurfaceData& exe, long a, long b) {
  // E embeds in P^2 as a cubic, so a line meets it in three points:
  // O(1,0)|_{ExE} = 3 f1 and O(0,1)|_{ExE} = 3 f2.
  return exe.cls({Rat(3 * a), Rat(3 * b), Rat(0)});
}

std::pair<Rat, Rat> restriction_pair(const Rat& s) { return {Rat(3) - 3 * s, Rat(3)}; }

bool restriction_ample(const Rat& s) {
  const auto [p, e] = restriction_pair(s);
  return p > 0 && e > 0;
}

Rat epsilon_sup() { return Rat(1); } // 3 - 3s > 0 exactly on s < 1

Rat epsilon_working() { return Rat(1, 2); }

KlmFamily build_klm_family(long d) {
  if (d < 4) throw std::invalid_argument("flag construction needs dimension >= 4");
  KlmFamily fam{make_product_elliptic_surface(), {}, {}, {}, epsilon_sup(), {}};
  // The flag ends in (E x E, curve, point) for every d >= 4: the leading
  // steps P^{d-2-k} x P^2 are hyperplane restrictions that keep the
  // bidegree (3,1), so the output does not depend on d.
  fam.b0 = restrict_bidegree(fam.surface, 3, 1); // 9 f1 + 3 f2
  // [Y2]|_{Y2}: Y2 is the pullback of a plane cubic under the first
  // projection, of class 3 pr1* O(1); restricting gives 3 * (3 f1) = 9 f1.
  fam.w = Rat(3) * restrict_bidegree(fam.surface, 1, 0);
  fam.c = fam.surface.cls({Rat(1), Rat(1), Rat(1)}); // f1 + f2 + Delta
  fam.flag = FlagOnSurface{fam.c, std::nullopt};
  return fam;
}

/* ------------------------------------------------------------- slices */

namespace {

// Monomial values [t^2, st, s^2, t, s, 1] at (s, mu) split into the rational
// part and the sqrt(d) part; the surd row is present only when mu is
// irrational.
void sample_rows(const Rat& s, const Surd& mu, RatMat& rows,
                 const std::vector<std::size_t>& columns) {
  const Rat a = mu.rational_part(), b = mu.surd_coefficient();
  const Rat d(mu.radicand());
  const RatVec rational_part = {a * a + b * b * d, s * a, s * s, a, s, Rat(1)};
  const RatVec surd_part = {2 * a * b, s * b, Rat(0), b, Rat(0), Rat(0)};
  RatVec r1, r2;
  for (std::size_t c : columns) {
    r1.push_back(rational_part[c]);
    r2.push_back(surd_part[c]);
  }
  rows.push_back(std::move(r1));
  if (b != 0) rows.push_back(std::move(r2));
}

} // namespace

SliceRegion slice_region(const SurfaceData& s, const DivisorClass& b0, const DivisorClass& w,
                         const DivisorClass& c, const Rat& epsilon, const std::vector<Rat>& grid) {
  if (!cone_contains(s.nef, b0, s)) throw std::domain_error("base divisor not nef");
  if (grid.size() < 5) throw std::invalid_argument("insufficient samples");
  std::vector<Rat> svals = grid;
  std::sort(svals.begin(), svals.end());
  if (std::adjacent_find(svals.begin(), svals.end()) != svals.end())
    throw std::invalid_argument("duplicate grid values");
  if (svals.front() < 0 || svals.back() >= epsilon)
    throw std::invalid_argument("grid outside [0, epsilon)");

  SliceRegion region;
  region.b0 = b0;
  region.w = w;
  region.c = c;
  region.epsilon = epsilon;
  for (const Rat& sv : svals) {
    const DivisorClass bs = b0 - sv * w;
    if (!cone_contains(s.nef, bs, s)) throw std::domain_error("family leaves the nef cone");
    const ExitTime exit = cone_exit_time(s.nef, bs, c, s);
    if (exit.infinite) throw std::domain_error("unbounded slice direction");
    region.samples.push_back({sv, exit.value});
  }
  const std::size_t n = region.samples.size();
  region.fit_count = n >= 7 ? n - 2 : n;

  // A linear boundary is preferred when it exists; it must fit every sample.
  {
    RatMat rows;
    const std::vector<std::size_t> lin_cols = {3, 4, 5};
    for (const SliceSample& smp : region.samples) sample_rows(smp.s, smp.mu, rows, lin_cols);
    const auto basis = nullspace(rows, 3);
    if (!basis.empty()) {
      Conic q;
      q.c[3] = basis[0][0];
      q.c[4] = basis[0][1];
      q.c[5] = basis[0][2];
      region.boundary = q.normalized();
      for (const SliceSample& smp : region.samples)
        if (sign(region.boundary.eval(smp.s, smp.mu)) != 0)
          throw std::logic_error("linear fit failed verification");
      return region;
    }
  }

  RatMat rows;
  const std::vector<std::size_t> all_cols = {0, 1, 2, 3, 4, 5};
  for (std::size_t i = 0; i < region.fit_count; ++i)
    sample_rows(region.samples[i].s, region.samples[i].mu, rows, all_cols);
  const auto basis = nullspace(rows, 6);
  if (basis.empty()) throw std::domain_error("boundary not algebraic of degree <= 2");
  Conic q;
  // Nullspace coordinates follow the fixed monomial order.
  for (std::size_t i = 0; i < 6; ++i) q.c[i] = basis[0][i];
  region.boundary = q.normalized();
  // Exact verification on every sample, including the held-out ones.
  for (const SliceSample& smp : region.samples)
    if (sign(region.boundary.eval(smp.s, smp.mu)) != 0)
      throw std::domain_error("boundary not algebraic of degree <= 2");
  return region;
}

namespace {

// Splits a degenerate (det = 0) conic into two affine lines; coefficients
// may live in a real quadratic extension.
std::vector<BoundaryLine> degenerate_lines(const Conic& q) {
  const Rat t2 = q.c[0], st = q.c[1], s2 = q.c[2], t1 = q.c[3], s1 = q.c[4], one = q.c[5];

  const auto lines_from_quadratic = [](const Rat& lead, const Rat& mid_s, const Rat& mid_1,
                                       const Rat& low_s2, const Rat& low_s1, const Rat& low_1,
                                       bool in_t) -> std::vector<BoundaryLine> {
    // lead*v^2 + (mid_s*u + mid_1)*v + (low_s2*u^2 + low_s1*u + low_1), with
    // (u, v) = (s, t) or (t, s). Discriminant in u must be e*(linear)^2.
    const Rat d2 = mid_s * mid_s - 4 * lead * low_s2;
    const Rat d1 = 2 * mid_s * mid_1 - 4 * lead * low_s1;
    const Rat d0 = mid_1 * mid_1 - 4 * lead * low_1;
    Surd sq_lin_s{Rat(0)}, sq_lin_1{Rat(0)};
    if (d2 != 0) {
      if (d1 * d1 - 4 * d2 * d0 != 0)
        throw std::logic_error("degenerate conic without a line factorization");
      if (d2 < 0) throw std::domain_error("conic has no real line components");
      const Surd e = surd_sqrt(d2);
      sq_lin_s = e;
      sq_lin_1 = e * Surd(d1 / (2 * d2));
    } else {
      if (d1 != 0) throw std::logic_error("degenerate conic without a line factorization");
      if (d0 < 0) throw std::domain_error("conic has no real line components");
      sq_lin_1 = surd_sqrt(d0);
    }
    // v = (-(mid_s u + mid_1) +- sqrt(disc)) / (2 lead)
    std::vector<BoundaryLine> out;
    for (int pm : {+1, -1}) {
      const Surd su = Surd(mid_s) - Surd(Rat(pm)) * sq_lin_s;
      const Surd cu = Surd(mid_1) - Surd(Rat(pm)) * sq_lin_1;
      if (in_t)
        out.push_back({su, Surd(2 * lead), cu}); // a*s + b*t + c with t solved
      else
        out.push_back({Surd(2 * lead), su, cu});
    }
    if (out[0].a == out[1].a && out[0].b == out[1].b && out[0].c == out[1].c) out.pop_back();
    return out;
  };

  if (t2 != 0) return lines_from_quadratic(t2, st, t1, s2, s1, one, /*in_t=*/true);
  if (s2 != 0) return lines_from_quadratic(s2, st, s1, t2, t1, one, /*in_t=*/false);
  // Pure st form: c1*st + c3*t + c4*s + c5 with c1*c5 = c3*c4 splits into
  // (c1 s + c3)(c1 t + c4) / c1.
  if (st == 0) throw std::logic_error("degenerate_lines called on a linear form");
  return {{Surd(st), Surd(Rat(0)), Surd(t1)}, {Surd(Rat(0)), Surd(st), Surd(s1)}};
}

} // namespace

BoundaryVerdict classify_boundary(const SliceRegion& region) {
  const Conic& q = region.boundary;
  if (q.is_zero()) throw std::invalid_argument("zero boundary polynomial");

  BoundaryVerdict verdict;
  if (q.quadratic_part_zero()) {
    verdict.kind = BoundaryKind::PIECEWISE_LINEAR;
    verdict.lines = {{Surd(q.c[4]), Surd(q.c[3]), Surd(q.c[5])}};
    return verdict;
  }

  const RatMat m = q.matrix();
  const Rat d = det(m);
  if (d != 0) {
    bool quad_part_active = false;
    for (const SliceSample& smp : region.samples) {
      Conic quad_only;
      quad_only.c[0] = q.c[0];
      quad_only.c[1] = q.c[1];
      quad_only.c[2] = q.c[2];
      if (sign(quad_only.eval(smp.s, smp.mu)) != 0) {
        quad_part_active = true;
        break;
      }
    }
    if (!quad_part_active)
      throw std::logic_error("quadratic part vanishes along a nondegenerate conic");
    verdict.kind = BoundaryKind::NONDEGENERATE_CONIC;
    verdict.matrix = m;
    verdict.determinant = d;
    return verdict;
  }

  verdict.kind = BoundaryKind::PIECEWISE_LINEAR;
  verdict.lines = degenerate_lines(q);
  // Every sample must land on one of the lines.
  for (const SliceSample& smp : region.samples) {
    bool on_line = false;
    for (const BoundaryLine& l : verdict.lines) {
      const Surd val = l.a * Surd(smp.s) + l.b * smp.mu + l.c;
      if (sign(val) == 0) {
        on_line = true;
        break;
      }
    }
    if (!on_line) throw std::logic_error("sample misses every line of a degenerate conic");
  }
  return verdict;
}

std::vector<std::pair<Rat, NokBody>> assemble_slice_body(const SurfaceData& s,
                                                         const DivisorClass& b0,
                                                         const DivisorClass& w,
                                                         const DivisorClass& c,
                                                         const FlagOnSurface& flag,
                                                         const std::vector<Rat>& grid) {
  if (!(flag.curve_class == c))
    throw std::invalid_argument("flag curve differs from the slice direction");
  std::vector<std::pair<Rat, NokBody>> out;
  out.reserve(grid.size());
  for (const Rat& sv : grid) out.emplace_back(sv, nok_surface_body(s, b0 - sv * w, flag));
  return out;
}

} // namespace nokholo
