#ifndef NOKHOLO_ZARISKI_HPP
#define NOKHOLO_ZARISKI_HPP

/* Zariski decomposition B = P + N on a surface: P nef, N an effective
 * combination of negative curves with negative-definite Gram matrix and
 * P orthogonal to every component of N. This is the engine behind the
 * Newton-Okounkov boundary functions.
 */

#include "nokholo/lattice.hpp"

#include <utility>
#include <vector>

namespace nokholo {

struct ZariskiDecomposition {
  DivisorClass positive_part;
  // (negative-curve index, coefficient), indices increasing, coefficients > 0.
  std::vector<std::pair<std::size_t, Rat>> negative_coeffs;

  DivisorClass negative_part(const SurfaceData& s) const;
};

bool is_pseudoeffective(const SurfaceData& s, const DivisorClass& b);

// Iterative support augmentation: while P = B - N is not nef, adjoin a
// negative curve meeting P negatively and re-solve (B - N).C_i = 0 on the
// support. Throws std::domain_error("not pseudoeffective") on bad input and
// std::domain_error("inconsistent negative-curve data") when the input
// surface cannot support a decomposition.
ZariskiDecomposition zariski_decompose(const SurfaceData& s, const DivisorClass& b);

} // namespace nokholo

#endif
