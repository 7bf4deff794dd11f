#ifndef NOKHOLO_LINALG_HPP
#define NOKHOLO_LINALG_HPP

/* Exact linear algebra over Q. Square systems and determinants go through
 * Bareiss fraction-free elimination on integer-cleared matrices; nullspaces
 * come from a canonical reduced row echelon form, so repeated runs produce
 * identical bases.
 */

#include "nokholo/rational.hpp"

#include <optional>
#include <vector>

namespace nokholo {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

Rat dot(const RatVec& x, const RatVec& y);
RatVec mat_vec(const RatMat& m, const RatVec& x);

// Determinant of a square rational matrix (Bareiss on the integer clearing).
Rat det(const RatMat& m);

// Alternating-minor test: (-1)^k det(G_k) > 0 for every leading principal minor.
bool negative_definite(const RatMat& g);

// Unique solution of the square system A x = b, or nullopt when A is singular.
std::optional<RatVec> solve_square(const RatMat& a, const RatVec& b);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(RatMat& m);

// Canonical nullspace basis (one vector per free column, in column order;
// the free coordinate is set to 1).
std::vector<RatVec> nullspace(const RatMat& m, std::size_t cols);

} // namespace nokholo

#endif
