#ifndef NOKHOLO_POLY_HPP
#define NOKHOLO_POLY_HPP

/* Dense polynomials with rational coefficients: the workhorse for series
 * fitting, annihilating operators, and boundary conics. Univariate Poly is
 * kept trimmed (no trailing zeros); PolyXQ layers a second variable q with
 * polynomial-in-x coefficients, which is all the bivariate structure the
 * complexity function needs (q-degree is bounded by dim X).
 */

#include "nokholo/linalg.hpp"
#include "nokholo/rational.hpp"
#include "nokholo/surd.hpp"

#include <string>
#include <vector>

namespace nokholo {

class Poly {
public:
  Poly() = default;
  explicit Poly(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
  static Poly constant(const Rat& v) { return Poly({v}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }

  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RatVec& coeffs() const { return c_; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat leading() const;

  Rat eval(const Rat& x) const;
  Surd eval(const Surd& x) const;
  Poly derivative() const;
  Poly shifted(long k) const;          // multiply by x^k
  Poly substitute_power(long m) const; // p(x^m)

  // Scales so all coefficients are coprime integers with positive leading one.
  Poly integer_normalized() const;

  std::string str(const std::string& var = "x") const;

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(const Rat& s, const Poly& p);
  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }

private:
  RatVec c_;
  void trim();
};

// Quotient and remainder with deg(rem) < deg(divisor).
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
// Monic gcd (gcd of anything with 0 is the monic version of the other).
Poly poly_gcd(Poly a, Poly b);
Poly poly_lcm(const Poly& a, const Poly& b);

// Truncated power series (coefficients 0..order) helpers.
RatVec series_derivative(const RatVec& b);
RatVec series_mul_poly(const RatVec& b, const Poly& p, std::size_t order);

/* Polynomials in x and q, stored as q-power coefficients. */
class PolyXQ {
public:
  PolyXQ() = default;
  explicit PolyXQ(std::vector<Poly> q_coeffs) : qc_(std::move(q_coeffs)) { trim(); }
  static PolyXQ from_x(const Poly& p) { return PolyXQ({p}); }

  bool is_zero() const { return qc_.empty(); }
  long q_degree() const { return static_cast<long>(qc_.size()) - 1; }
  const std::vector<Poly>& q_coeffs() const { return qc_; }
  Poly q_coeff(std::size_t i) const { return i < qc_.size() ? qc_[i] : Poly(); }

  PolyXQ derivative_x() const;
  PolyXQ derivative_q() const;
  std::string str() const;

  friend PolyXQ operator+(const PolyXQ& p, const PolyXQ& q);
  friend PolyXQ operator-(const PolyXQ& p, const PolyXQ& q);
  friend PolyXQ operator*(const PolyXQ& p, const PolyXQ& q);
  friend PolyXQ operator*(const Poly& p, const PolyXQ& q);
  friend bool operator==(const PolyXQ& p, const PolyXQ& q) { return p.qc_ == q.qc_; }

private:
  std::vector<Poly> qc_;
  void trim();
};

/* Total-degree-<=2 form in (s, t). Coefficient order is the fixed monomial
 * order [t^2, s*t, s^2, t, s, 1] used everywhere a conic is serialized. */
struct Conic {
  std::array<Rat, 6> c{}; // t2, st, s2, t, s, one

  bool is_zero() const;
  bool quadratic_part_zero() const;
  Surd eval(const Rat& s, const Surd& t) const;
  // Symmetric matrix in variables (s, t, 1).
  RatMat matrix() const;
  // Coprime integer coefficients, first nonzero in monomial order positive.
  Conic normalized() const;
  std::string str() const;
};

} // namespace nokholo

#endif
