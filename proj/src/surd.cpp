#include "nokholo/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace nokholo {

Surd::Surd(const Rat& a, const Rat& b, const Int& d) : a_(a), b_(b), d_(d) {
  if (d_ < 1) throw std::domain_error("radicand must be >= 1");
  if (b_ == 0) {
    d_ = 1;
  } else {
    Int square;
    d_ = squarefree_part(d_, square);
    b_ *= square;
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
  }
  set_interval();
}

const Rat& Surd::as_rational() const {
  if (!is_rational()) throw std::logic_error("surd is irrational");
  return a_;
}

void Surd::set_interval() {
  if (b_ == 0) {
    lo_ = hi_ = a_;
    return;
  }
  // Width 1/64 on sqrt(d) keeps the conjugate (distance 2|b|sqrt(d)) well outside.
  auto [slo, shi] = sqrt_bounds(d_, Rat(1, 64));
  if (b_ > 0) {
    lo_ = a_ + b_ * slo;
    hi_ = a_ + b_ * shi;
  } else {
    lo_ = a_ + b_ * shi;
    hi_ = a_ + b_ * slo;
  }
}

std::pair<Rat, Rat> Surd::refine(const Rat& eps) const {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  Rat lo = lo_, hi = hi_;
  while (hi - lo > eps) {
    const Rat mid = (lo + hi) / 2;
    if (sign(*this - Surd(mid)) >= 0)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

std::array<Int, 3> Surd::minimal_polynomial() const {
  if (b_ == 0) {
    // q*t - p
    return {-numerator(a_), denominator(a_), Int(0)};
  }
  // (t - a)^2 - b^2 d  =  t^2 - 2a t + (a^2 - b^2 d)
  const Rat c1 = -2 * a_;
  const Rat c0 = a_ * a_ - b_ * b_ * Rat(d_);
  Int den = boost::multiprecision::lcm(denominator(c0), denominator(c1));
  Int i0 = numerator(c0) * (den / denominator(c0));
  Int i1 = numerator(c1) * (den / denominator(c1));
  Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(i0), abs(i1)), den);
  return {i0 / g, i1 / g, den / g};
}

double Surd::approx() const {
  return rat_double(a_) + rat_double(b_) * std::sqrt(d_.convert_to<double>());
}

std::string Surd::str() const {
  if (b_ == 0) return rat_str(a_);
  std::string s;
  if (a_ != 0) s += rat_str(a_);
  if (b_ == 1)
    s += s.empty() ? "" : "+";
  else if (b_ == -1)
    s += "-";
  else {
    if (!s.empty() && b_ > 0) s += "+";
    s += rat_str(b_) + "*";
  }
  s += "sqrt(" + d_.str() + ")";
  return s;
}

static void require_compatible(const Surd& x, const Surd& y) {
  if (x.radicand() != 1 && y.radicand() != 1 && x.radicand() != y.radicand())
    throw std::logic_error("incompatible radicands " + x.radicand().str() + " and " +
                           y.radicand().str());
}

Surd operator+(const Surd& x, const Surd& y) {
  require_compatible(x, y);
  const Int d = x.radicand() != 1 ? x.radicand() : y.radicand();
  return Surd(x.a_ + y.a_, x.b_ + y.b_, d);
}

Surd operator-(const Surd& x, const Surd& y) {
  require_compatible(x, y);
  const Int d = x.radicand() != 1 ? x.radicand() : y.radicand();
  return Surd(x.a_ - y.a_, x.b_ - y.b_, d);
}

Surd operator-(const Surd& x) { return Surd(-x.a_, -x.b_, x.d_); }

Surd operator*(const Surd& x, const Surd& y) {
  require_compatible(x, y);
  const Int d = x.radicand() != 1 ? x.radicand() : y.radicand();
  return Surd(x.a_ * y.a_ + x.b_ * y.b_ * Rat(d), x.a_ * y.b_ + x.b_ * y.a_, d);
}

Surd operator/(const Surd& x, const Surd& y) {
  require_compatible(x, y);
  const Int d = x.radicand() != 1 ? x.radicand() : y.radicand();
  // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d)
  const Rat norm = y.a_ * y.a_ - y.b_ * y.b_ * Rat(d);
  if (norm == 0) {
    if (y.a_ == 0 && y.b_ == 0) throw std::domain_error("division by zero");
    throw std::logic_error("norm zero with nonzero surd"); // impossible for squarefree d > 1
  }
  const Surd inv(y.a_ / norm, -y.b_ / norm, d);
  return x * inv;
}

int sign(const Surd& x) {
  const int sa = x.a_ == 0 ? 0 : (x.a_ > 0 ? 1 : -1);
  const int sb = x.b_ == 0 ? 0 : (x.b_ > 0 ? 1 : -1);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 d.
  const Rat lhs = x.a_ * x.a_, rhs = x.b_ * x.b_ * Rat(x.d_);
  if (lhs == rhs) return 0;
  return (lhs > rhs) ? sa : sb;
}

Surd surd_sqrt(const Rat& x) {
  if (x < 0) throw std::domain_error("sqrt of negative rational");
  if (x == 0) return Surd(Rat(0));
  // sqrt(p/q) = sqrt(p*q) / q
  const Int pq = numerator(x) * denominator(x);
  return Surd(Rat(0), Rat(1, denominator(x)), pq);
}

} // namespace nokholo
