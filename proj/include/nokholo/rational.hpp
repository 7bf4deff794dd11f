#ifndef NOKHOLO_RATIONAL_HPP
#define NOKHOLO_RATIONAL_HPP

/* Exact integer and rational arithmetic used throughout. All positivity
 * and membership verdicts in this project are exact; floating point only
 * ever appears in rendered output (SVG coordinates, reporting).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace nokholo {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p", "-p", "p/q" (whitespace-trimmed). Throws std::invalid_argument
// on malformed input or zero denominator.
Rat parse_rat(const std::string& s);

// Canonical rendering: gcd(p,q)=1, q>0, "p" when q==1, else "p/q".
std::string rat_str(const Rat& r);

double rat_double(const Rat& r);

// Locale-independent decimal rendering with 12 significant digits.
std::string double_str(double x);

// Binomial coefficient C(n, k) for k >= 0; zero when n < k or n < 0.
Int binomial(long long n, long long k);

// Floor of the integer square root; n must be >= 0.
Int isqrt(const Int& n);

// True iff n is a perfect square; on success *root holds the square root.
bool is_square(const Int& n, Int* root = nullptr);

// Writes n = square^2 * result with result square-free (n >= 1).
// Complete trial division; inputs in this project stay small.
Int squarefree_part(const Int& n, Int& square);

// Rational bounds lo <= sqrt(d) <= hi with hi - lo <= eps (d >= 0, eps > 0).
std::pair<Rat, Rat> sqrt_bounds(const Int& d, const Rat& eps);

} // namespace nokholo

#endif
