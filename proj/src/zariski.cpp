#include "nokholo/zariski.hpp"

#include <algorithm>
#include <stdexcept>

namespace nokholo {

DivisorClass ZariskiDecomposition::negative_part(const SurfaceData& s) const {
  DivisorClass n = s.zero();
  for (const auto& [idx, coeff] : negative_coeffs) n = n + coeff * s.negative_curve(idx);
  return n;
}

bool is_pseudoeffective(const SurfaceData& s, const DivisorClass& b) {
  return cone_contains(s.pseff, b, s);
}

// Solves (B - sum a_i C_i).C_j = 0 for j in the support. The Gram matrix of
// a genuine negative-curve set is negative definite, so the system is
// uniquely solvable with a_i >= 0.
static std::vector<Rat> support_coefficients(const SurfaceData& s, const DivisorClass& b,
                                             const std::vector<std::size_t>& support) {
  const std::size_t k = support.size();
  RatMat gram(k, RatVec(k));
  RatVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    const DivisorClass ci = s.negative_curve(support[i]);
    rhs[i] = intersect(b, ci, s);
    for (std::size_t j = 0; j < k; ++j)
      gram[i][j] = intersect(ci, s.negative_curve(support[j]), s);
  }
  if (!negative_definite(gram)) throw std::domain_error("inconsistent negative-curve data");
  auto sol = solve_square(gram, rhs);
  if (!sol) throw std::domain_error("inconsistent negative-curve data");
  for (const Rat& a : *sol)
    if (a < 0) throw std::domain_error("inconsistent negative-curve data");
  return *sol;
}

ZariskiDecomposition zariski_decompose(const SurfaceData& s, const DivisorClass& b) {
  if (!is_pseudoeffective(s, b)) throw std::domain_error("not pseudoeffective");

  std::vector<std::size_t> support;
  std::vector<Rat> coeffs;
  DivisorClass p = b;
  while (!cone_contains(s.nef, p, s)) {
    std::optional<std::size_t> next;
    for (std::size_t j = 0; j < s.negative_curves.size(); ++j) {
      if (std::find(support.begin(), support.end(), j) != support.end()) continue;
      if (intersect(p, s.negative_curve(j), s) < 0) {
        next = j;
        break;
      }
    }
    if (!next) {
      // P meets every negative curve non-negatively yet fails the declared
      // nef cone: the cone data and curve list disagree.
      throw std::domain_error("inconsistent negative-curve data");
    }
    support.push_back(*next);
    coeffs = support_coefficients(s, b, support);
    p = b;
    for (std::size_t i = 0; i < support.size(); ++i)
      p = p - coeffs[i] * s.negative_curve(support[i]);
  }

  ZariskiDecomposition out;
  out.positive_part = p;
  for (std::size_t i = 0; i < support.size(); ++i)
    if (coeffs[i] != 0) out.negative_coeffs.emplace_back(support[i], coeffs[i]);
  std::sort(out.negative_coeffs.begin(), out.negative_coeffs.end(),
            [](const auto& a, const auto& b2) { return a.first < b2.first; });
  return out;
}

} // namespace nokholo
