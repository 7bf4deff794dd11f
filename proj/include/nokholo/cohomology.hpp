#ifndef NOKHOLO_COHOMOLOGY_HPP
#define NOKHOLO_COHOMOLOGY_HPP

/* Exact sheaf-cohomology tables a_{n,i} = dim H^i(X; O(nD)) for split line
 * bundles on products of projective spaces and elliptic curves: factor-wise
 * closed formulas combined by the Kunneth rule. Entries are arbitrary-
 * precision integers.
 */

#include "nokholo/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nokholo {

struct FactorSpec {
  enum class Kind { PROJECTIVE_SPACE, ELLIPTIC_CURVE };
  Kind kind = Kind::PROJECTIVE_SPACE;
  long dim = 1;                    // m for P^m; 1 for an elliptic curve
  bool trivial_degree_zero = true; // elliptic only: degree-0 bundle is O (vs nontrivial)
};

// (h^0, ..., h^m) of O(a) on P^m.
std::vector<Int> cohomology_projective_space(long m, long a);

// (h^0, h^1) of a degree-e line bundle on an elliptic curve; at e = 0 the
// answer depends on whether the bundle is trivial.
std::pair<Int, Int> cohomology_elliptic(long e, bool trivial_degree_zero);

struct MultidegreeRay {
  std::vector<long> c; // multidegree of nD on factor j is c[j] * n
};

struct CoefficientTable {
  long N = 0; // truncation order in n
  long d = 0; // dim X
  std::vector<std::vector<Int>> a; // a[n][i], 0 <= n <= N, 0 <= i <= d
  std::vector<FactorSpec> factors;
  MultidegreeRay ray;

  const Int& at(long n, long i) const { return a.at(n).at(i); }
};

CoefficientTable kunneth_table(const std::vector<FactorSpec>& factors, const MultidegreeRay& ray,
                               long N);

// CSV with header "n,i,dim"; a row is emitted when the entry is nonzero or
// structural (the full n = 0 row and the whole i = 0 column), which makes N
// and d recoverable from the file alone.
std::string table_csv(const CoefficientTable& t);
CoefficientTable table_from_csv_text(const std::string& text);
CoefficientTable load_table_csv(const std::string& path);

// JSON sidecar recording factors, ray, N, d.
std::string table_sidecar_json(const CoefficientTable& t);

// Factor syntax: comma list of "P<m>" (projective space), "E" (elliptic,
// trivial degree-zero bundle), "E*" (elliptic, nontrivial degree zero).
std::vector<FactorSpec> parse_factors(const std::string& spec);
MultidegreeRay parse_ray(const std::string& spec);

} // namespace nokholo

#endif
