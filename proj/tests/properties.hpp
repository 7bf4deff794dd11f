#ifndef NOKHOLO_TESTS_PROPERTIES_HPP
#define NOKHOLO_TESTS_PROPERTIES_HPP

/* The six property suites, shared between the unit tests and the acceptance
 * runner. Each returns true on success and uses a fixed seed, so runs are
 * reproducible everywhere.
 */

#include <random>
#include <vector>

#include "nokholo/holonomic.hpp"
#include "nokholo/nok.hpp"
#include "nokholo/zariski.hpp"

namespace nokholo::props {

inline Rat random_rat(std::mt19937& rng, long lo = -9, long hi = 9) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, 6);
  return Rat(num(rng), den(rng));
}

inline DivisorClass random_class(std::mt19937& rng, const SurfaceData& s) {
  RatVec coords;
  for (std::size_t i = 0; i < s.rank(); ++i) coords.push_back(random_rat(rng));
  return s.cls(coords);
}

// A random class inside the cone: non-negative combination of generators for
// the fixtures we use (quadratic cone: h plus a small perturbation kept
// inside; polyhedral duals: combinations of nef generators).
inline DivisorClass random_cone_class(std::mt19937& rng, const SurfaceData& s,
                                      const ConeSpec& cone) {
  std::uniform_int_distribution<long> num(0, 6);
  for (;;) {
    DivisorClass c = s.zero();
    if (cone.kind == ConeKind::QUADRATIC) {
      // h-dominated classes: t*h + small direction stays in the cone for
      // t large; rejection-sample exactly.
      c = Rat(num(rng) + 3) * s.cls(cone.ample_reference) + random_class(rng, s);
    } else {
      for (std::size_t i = 0; i < s.rank(); ++i) {
        RatVec e(s.rank(), Rat(0));
        e[i] = 1;
        c = c + Rat(num(rng)) * s.cls(e);
      }
    }
    if (cone_contains(cone, c, s)) return c;
  }
}

/* 1. Bilinearity and symmetry of the intersection pairing. */
inline bool bilinearity_symmetry(const SurfaceData& s, int iterations = 200, unsigned seed = 11) {
  std::mt19937 rng(seed);
  for (int it = 0; it < iterations; ++it) {
    const DivisorClass a = random_class(rng, s), b = random_class(rng, s),
                       c = random_class(rng, s);
    const Rat x = random_rat(rng), y = random_rat(rng);
    if (intersect(x * a + y * b, c, s) != x * intersect(a, c, s) + y * intersect(b, c, s))
      return false;
    if (intersect(a, b, s) != intersect(b, a, s)) return false;
  }
  return true;
}

/* 2. Cone convexity. */
inline bool cone_convexity(const SurfaceData& s, const ConeSpec& cone, int iterations = 120,
                           unsigned seed = 23) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(0, 12);
  for (int it = 0; it < iterations; ++it) {
    const DivisorClass c1 = random_cone_class(rng, s, cone), c2 = random_cone_class(rng, s, cone);
    const Rat lambda = Rat(num(rng), 12);
    if (!cone_contains(cone, lambda * c1 + (Rat(1) - lambda) * c2, s)) return false;
  }
  return true;
}

/* 3. Exit-time consistency: just inside stays in, just outside leaves. */
inline bool exit_time_consistency(const SurfaceData& s, const ConeSpec& cone, int iterations = 60,
                                  unsigned seed = 37) {
  std::mt19937 rng(seed);
  for (int it = 0; it < iterations; ++it) {
    const DivisorClass b = random_cone_class(rng, s, cone);
    const DivisorClass c = random_class(rng, s);
    bool zero = true;
    for (const Rat& v : c.coords) zero = zero && v == 0;
    if (zero) continue;
    const ExitTime exit = cone_exit_time(cone, b, c, s);
    if (exit.infinite) continue;
    const auto [lo, hi] = exit.value.refine(Rat(1, 1000));
    if (lo > 0 && !cone_contains(cone, b - lo * c, s)) return false;
    if (!cone_contains(cone, b - (lo > 0 ? lo : Rat(0)) * c, s)) return false;
    const Rat outside = hi + Rat(1, 1000000);
    if (cone_contains(cone, b - outside * c, s)) return false;
  }
  return true;
}

/* 4. Body convexity: alpha convex non-decreasing, beta concave. */
inline bool body_convexity(const NokBody& body) {
  for (std::size_t k = 0; k < body.pieces.size(); ++k) {
    if (body.pieces[k].alpha_slope < 0) return false; // alpha non-decreasing
    if (k + 1 < body.pieces.size()) {
      if (body.pieces[k].alpha_slope > body.pieces[k + 1].alpha_slope) return false;
      if (body.pieces[k].beta_slope < body.pieces[k + 1].beta_slope) return false;
    }
  }
  return true;
}

/* 5. Guess stability: dropping five coefficients does not change the fit. */
inline bool guess_stability(const PowerSeriesTable& t, long deg_u, long deg_v, long holdout) {
  const auto full = guess_rational(t, deg_u, deg_v, holdout);
  PowerSeriesTable shorter{RatVec(t.b.begin(), t.b.end() - 5)};
  const auto less = guess_rational(shorter, deg_u, deg_v, std::max<long>(holdout - 5, 2));
  if (!full || !less) return false;
  return full->num == less->num && full->den == less->den;
}

/* 6. Certificate soundness: the fits reproduce the table exactly and the
 * operator identity holds as polynomials. */
inline bool certificate_soundness(const CoefficientTable& table,
                                  const HolonomicCertificate& cert) {
  if (cert.verdict != CertVerdict::CERTIFIED_HOLONOMIC) return false;
  if (!cert.symbolic_identity_checked) return false;
  // V f - U vanishes through order N for every slice: expand U/V per slice.
  for (long i = 0; i <= table.d; ++i) {
    const PowerSeriesTable slice = table_slice(table, i);
    const Poly& v = cert.denominator;
    const Poly u = cert.numerator.q_coeff(static_cast<std::size_t>(i));
    RatVec expanded(slice.b.size(), Rat(0));
    for (std::size_t n = 0; n < expanded.size(); ++n) {
      Rat acc = u.coeff(n);
      for (std::size_t m = 1; m <= static_cast<std::size_t>(std::max<long>(v.degree(), 0)); ++m)
        if (m <= n) acc -= v.coeff(m) * expanded[n - m];
      expanded[n] = acc / v.coeff(0);
    }
    if (expanded != slice.b) return false;
  }
  // Operator identity, re-checked from the certificate pieces.
  const PolyXQ u = cert.numerator;
  const Poly v = cert.denominator;
  if (u.is_zero()) return true;
  const PolyXQ w = u.derivative_x() * PolyXQ::from_x(v) - u * PolyXQ::from_x(v.derivative());
  const PolyXQ check = cert.x_operator.p[0] * w + cert.x_operator.p[1] * (u * PolyXQ::from_x(v));
  return check.is_zero();
}

} // namespace nokholo::props

#endif
