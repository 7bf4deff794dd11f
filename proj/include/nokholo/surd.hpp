#ifndef NOKHOLO_SURD_HPP
#define NOKHOLO_SURD_HPP

/* Quadratic surds a + b*sqrt(d): the exact number domain for cone exit
 * times and Newton-Okounkov vertices. Degree over Q is at most 2, which
 * is all the quadratic cone geometry in this project can produce. Every
 * surd carries an isolating rational interval; all comparisons are exact
 * sign computations, never floating point.
 */

#include "nokholo/rational.hpp"

#include <array>
#include <string>
#include <utility>

namespace nokholo {

class Surd {
public:
  Surd() : a_(0), b_(0), d_(1) { set_interval(); }
  Surd(const Rat& r) : a_(r), b_(0), d_(1) { set_interval(); } // NOLINT: implicit by design
  Surd(long long n) : Surd(Rat(n)) {}                          // NOLINT
  // Normalizes: square part of d folded into b, b==0 forces d=1, d==1 folds into a.
  Surd(const Rat& a, const Rat& b, const Int& d);

  const Rat& rational_part() const { return a_; }
  const Rat& surd_coefficient() const { return b_; }
  const Int& radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  // Only valid when is_rational().
  const Rat& as_rational() const;

  // Isolating interval [lo, hi]: contains the value, excludes its conjugate.
  std::pair<Rat, Rat> interval() const { return {lo_, hi_}; }
  // Shrinks the isolating interval to width <= eps by exact bisection.
  std::pair<Rat, Rat> refine(const Rat& eps) const;

  // Ascending integer coefficients [c0, c1, c2] of the minimal polynomial,
  // coprime with positive leading coefficient; c2 == 0 for rationals.
  std::array<Int, 3> minimal_polynomial() const;

  double approx() const;
  std::string str() const;

  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x);
  friend Surd operator*(const Surd& x, const Surd& y);
  friend Surd operator/(const Surd& x, const Surd& y);
  friend int sign(const Surd& x);

private:
  Rat a_, b_;
  Int d_;
  Rat lo_, hi_;
  void set_interval();
};

int sign(const Surd& x);
inline bool operator==(const Surd& x, const Surd& y) { return sign(x - y) == 0; }
inline bool operator!=(const Surd& x, const Surd& y) { return sign(x - y) != 0; }
inline bool operator<(const Surd& x, const Surd& y) { return sign(x - y) < 0; }
inline bool operator<=(const Surd& x, const Surd& y) { return sign(x - y) <= 0; }
inline bool operator>(const Surd& x, const Surd& y) { return sign(x - y) > 0; }
inline bool operator>=(const Surd& x, const Surd& y) { return sign(x - y) >= 0; }

// Exact square root of a non-negative rational, as a surd.
Surd surd_sqrt(const Rat& x);

} // namespace nokholo

#endif
