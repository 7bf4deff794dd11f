#ifndef NOKHOLO_LATTICE_HPP
#define NOKHOLO_LATTICE_HPP

/* Neron-Severi lattices of surfaces: an intersection pairing on a named
 * basis, nef and pseudoeffective cones given either by finitely many
 * inequalities or by the quadratic condition {C^2 >= 0, C.h >= 0} of an
 * abelian surface, and the list of negative curves. All cone verdicts are
 * exact; exit times along rays are rational or quadratic surds.
 */

#include "nokholo/linalg.hpp"
#include "nokholo/rational.hpp"
#include "nokholo/surd.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nokholo {

struct DivisorClass {
  RatVec coords;
  std::string lattice_id;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(const Rat& s, const DivisorClass& a);
bool operator==(const DivisorClass& a, const DivisorClass& b);

struct IntersectionForm {
  RatMat matrix; // symmetric, nondegenerate
};

enum class ConeKind { POLYHEDRAL, QUADRATIC };

struct ConeSpec {
  ConeKind kind = ConeKind::POLYHEDRAL;
  // POLYHEDRAL: contains C iff C.L >= 0 for every listed L.
  std::vector<RatVec> inequalities;
  // QUADRATIC: contains C iff C.C >= 0 and C.h >= 0, h the ample reference.
  RatVec ample_reference;
};

struct SurfaceData {
  std::string name;
  std::vector<std::string> basis;
  IntersectionForm form;
  ConeSpec nef;
  ConeSpec pseff;
  std::vector<RatVec> negative_curves;
  std::map<std::size_t, long> point_multiplicities; // negative-curve index -> mult at flag point

  std::size_t rank() const { return basis.size(); }
  DivisorClass cls(RatVec coords) const;
  DivisorClass cls(const std::string& expr) const; // e.g. "9f1+3f2", "2H-3E"
  DivisorClass zero() const;
  DivisorClass negative_curve(std::size_t i) const;
  std::string render(const DivisorClass& c) const; // canonical expression string
};

inline constexpr std::size_t kDefaultMaxRank = 16;

// Checks all SurfaceData invariants (symmetry, nondegeneracy, cone sanity,
// negative curves pseudoeffective with negative self-intersection).
// Throws std::invalid_argument with a description on failure.
void validate_surface(const SurfaceData& s, std::size_t max_rank = kDefaultMaxRank);

Rat intersect(const DivisorClass& a, const DivisorClass& b, const SurfaceData& s);

bool cone_contains(const ConeSpec& cone, const DivisorClass& c, const SurfaceData& s);

struct ExitTime {
  bool infinite = false;
  Surd value{Rat(0)};

  static ExitTime inf() { return {true, Surd(Rat(0))}; }
  static ExitTime at(Surd v) { return {false, std::move(v)}; }
};

// sup{ t >= 0 : B - tC in cone }. B must lie in the cone and C must be
// nonzero. Polyhedral cones give rational times (min of ratios); quadratic
// cones give quadratic surds.
ExitTime cone_exit_time(const ConeSpec& cone, const DivisorClass& b, const DivisorClass& c,
                        const SurfaceData& s);

// Degree-m pullback along a generically finite dominant morphism: pairing
// scales by m, cones and negative curves transport verbatim, so membership
// of a pulled-back class matches membership downstairs.
SurfaceData pullback_embed(const SurfaceData& s, long m);

// Transports a class to a lattice with the same rank (coordinates verbatim).
DivisorClass transport(const SurfaceData& target, const DivisorClass& c);

// JSON round-trip per the published schema (rationals as "p/q" strings).
SurfaceData surface_from_json_text(const std::string& text);
SurfaceData load_surface(const std::string& path);
std::string surface_to_json_text(const SurfaceData& s);

} // namespace nokholo

#endif
