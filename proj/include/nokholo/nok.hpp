#ifndef NOKHOLO_NOK_HPP
#define NOKHOLO_NOK_HPP

/* Newton-Okounkov bodies of big nef divisors on surfaces with respect to a
 * (curve, point) flag, the two-parameter slice family B(s,t) = B0 - sW - tC
 * on the abelian surface E x E, and the exact classification of the slice
 * boundary as piecewise linear or a nondegenerate conic. The conic verdict
 * is a certificate of non-polyhedrality of the ambient body slice.
 */

#include "nokholo/lattice.hpp"
#include "nokholo/poly.hpp"
#include "nokholo/zariski.hpp"

#include <optional>
#include <vector>

namespace nokholo {

struct FlagOnSurface {
  DivisorClass curve_class;
  // Flag point on the indexed negative curve (multiplicity comes from
  // SurfaceData.point_multiplicities); absent means a general point.
  std::optional<std::size_t> point_on_negative_curve;
};

// One Zariski chamber [t_lo, t_hi] of the body: both boundary functions are
// affine in t, alpha(t) = alpha_icpt + alpha_slope*t and likewise beta.
struct BodyPiece {
  Surd t_lo, t_hi;
  Rat alpha_icpt, alpha_slope;
  Rat beta_icpt, beta_slope;

  Surd alpha_at(const Surd& t) const { return Surd(alpha_slope) * t + Surd(alpha_icpt); }
  Surd beta_at(const Surd& t) const { return Surd(beta_slope) * t + Surd(beta_icpt); }
};

struct NokBody {
  std::vector<Surd> breakpoints; // 0 = t_0 < ... < t_m = mu
  std::vector<BodyPiece> pieces; // one per interval

  const Surd& extent() const { return breakpoints.back(); } // mu
  // Counterclockwise boundary vertices, collinear points dropped.
  std::vector<std::pair<Surd, Surd>> vertices() const;
  // Exact Euclidean area; rational for every valid body (equals B.B/2).
  Rat area() const;
};

// Body of a big nef divisor via the Zariski chamber walk. Errors:
// "reduce to nef part first" when B is not nef, "not big" when B.B <= 0.
NokBody nok_surface_body(const SurfaceData& s, const DivisorClass& b, const FlagOnSurface& flag);

// --- the E x E slice family -------------------------------------------------

// NS(E x E) for E without complex multiplication: basis (f1, f2, Delta),
// pairing f1.f2 = f1.Delta = f2.Delta = 1 and all self-intersections 0
// (2g - 2 = 0 on an abelian surface), nef = pseff = the quadratic cone.
SurfaceData make_product_elliptic_surface();

// Blow-up of P^2 at a point: basis (H, E), H^2 = 1, E^2 = -1, H.E = 0;
// nef cone cut out by the curves {E, H-E}, pseudoeffective cone by
// {H-E, H}; E is the unique negative curve (multiplicity 1 at the flag
// point of the non-general flag fixture). The polyhedral control surface.
SurfaceData make_blowup_surface();

// Restriction of O(a,b) from P^2 x P^2 to E x E: a plane elliptic curve is a
// cubic, so O(1,0)|_{ExE} = 3 f1 and O(0,1)|_{ExE} = 3 f2.
DivisorClass restrict_bidegree(const SurfaceData& exe, long a, long b);

// D|_{Y1} - s Y2 on Y1 = P^2 x E modeled as the split pair (3 - 3s, 3);
// ample iff both entries are positive.
std::pair<Rat, Rat> restriction_pair(const Rat& s);
bool restriction_ample(const Rat& s);
// Supremum of { s : restriction_pair(s) ample } = 1.
Rat epsilon_sup();
// Working parameter recommended for slice grids.
Rat epsilon_working();

struct KlmFamily {
  SurfaceData surface; // E x E
  DivisorClass b0;     // 9 f1 + 3 f2, restriction of O(3,1)
  DivisorClass w;      // 9 f1, restriction of [Y2]|_{Y2}
  DivisorClass c;      // f1 + f2 + Delta, the flag curve class
  Rat epsilon;
  FlagOnSurface flag;  // flag curve with a general point
};

// Flag data for dimension d >= 4; the output is independent of d because the
// extra flag steps P^{d-2-k} x P^2 restrict O(3,1) to O(3,1).
KlmFamily build_klm_family(long d);

struct SliceSample {
  Rat s;
  Surd mu; // cone_exit_time(nef, B0 - sW, C)
};

struct SliceRegion {
  DivisorClass b0, w, c;
  Rat epsilon;
  Conic boundary; // Q(s,t), canonically normalized; vanishes on all samples
  std::vector<SliceSample> samples;
  std::size_t fit_count; // samples used for fitting; the rest are held out
};

// Exact degree-<=2 fit of the boundary t = mu(s) over a sample grid.
// Requires >= 5 distinct grid values inside [0, epsilon); with >= 7 samples
// the last two are held out of the fit and verified exactly. Errors:
// "insufficient samples" and "boundary not algebraic of degree <= 2".
SliceRegion slice_region(const SurfaceData& s, const DivisorClass& b0, const DivisorClass& w,
                         const DivisorClass& c, const Rat& epsilon, const std::vector<Rat>& grid);

enum class BoundaryKind { PIECEWISE_LINEAR, NONDEGENERATE_CONIC };

struct BoundaryLine {
  // a*s + b*t + c = 0; coefficients may live in a quadratic extension.
  Surd a, b, c;
};

struct BoundaryVerdict {
  BoundaryKind kind;
  // NONDEGENERATE_CONIC certificate: the symmetric matrix of Q in (s, t, 1)
  // and its nonzero determinant.
  RatMat matrix;
  Rat determinant;
  // PIECEWISE_LINEAR certificate: the affine pieces covering the samples.
  std::vector<BoundaryLine> lines;
};

BoundaryVerdict classify_boundary(const SliceRegion& region);

// One Newton-Okounkov body per slice parameter; the CLI stacks these into
// the 3-dimensional wireframe.
std::vector<std::pair<Rat, NokBody>> assemble_slice_body(const SurfaceData& s,
                                                         const DivisorClass& b0,
                                                         const DivisorClass& w,
                                                         const DivisorClass& c,
                                                         const FlagOnSurface& flag,
                                                         const std::vector<Rat>& grid);

} // namespace nokholo

#endif
