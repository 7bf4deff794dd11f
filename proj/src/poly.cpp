#include "nokholo/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace nokholo {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::leading() const {
  if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Surd Poly::eval(const Surd& x) const {
  Surd acc{Rat(0)};
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Surd(c_[i]);
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  RatVec d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return Poly(std::move(d));
}

Poly Poly::shifted(long k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return Poly();
  RatVec out(c_.size() + static_cast<std::size_t>(k), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
  return Poly(std::move(out));
}

Poly Poly::substitute_power(long m) const {
  if (m < 1) throw std::invalid_argument("power must be >= 1");
  if (is_zero()) return Poly();
  RatVec out(static_cast<std::size_t>((c_.size() - 1) * m + 1), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * m] = c_[i];
  return Poly(std::move(out));
}

Poly Poly::integer_normalized() const {
  if (is_zero()) return Poly();
  Int den = 1;
  for (const Rat& v : c_) den = boost::multiprecision::lcm(den, denominator(v));
  Int g = 0;
  for (const Rat& v : c_) g = boost::multiprecision::gcd(g, abs(numerator(v) * (den / denominator(v))));
  Rat scale = Rat(den) / Rat(g);
  if (c_.back() < 0) scale = -scale;
  return scale * (*this);
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rat& v = c_[i];
    if (v == 0) continue;
    if (!first) os << (v > 0 ? " + " : " - ");
    if (first && v < 0) os << "-";
    const Rat av = v > 0 ? v : Rat(-v);
    if (i == 0 || av != 1) os << rat_str(av);
    if (i > 0) {
      if (av != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

Poly operator+(const Poly& p, const Poly& q) {
  RatVec out(std::max(p.c_.size(), q.c_.size()), Rat(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(i) + q.coeff(i);
  return Poly(std::move(out));
}

Poly operator-(const Poly& p, const Poly& q) {
  RatVec out(std::max(p.c_.size(), q.c_.size()), Rat(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(i) - q.coeff(i);
  return Poly(std::move(out));
}

Poly operator-(const Poly& p) { return Rat(-1) * p; }

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  RatVec out(p.c_.size() + q.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < p.c_.size(); ++i)
    for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
  return Poly(std::move(out));
}

Poly operator*(const Rat& s, const Poly& p) {
  RatVec out = p.c_;
  for (Rat& v : out) v *= s;
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = num;
  RatVec q(num.is_zero() ? 0 : std::max<long>(0, num.degree() - den.degree() + 1), Rat(0));
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    const long k = rem.degree() - den.degree();
    const Rat f = rem.leading() / den.leading();
    q[k] = f;
    rem = rem - f * den.shifted(k);
  }
  return {Poly(std::move(q)), rem};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rat(1) / a.leading()) * a; // monic
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const Poly g = poly_gcd(a, b);
  return divmod(a * b, g).first;
}

RatVec series_derivative(const RatVec& b) {
  if (b.size() <= 1) return {};
  RatVec d(b.size() - 1);
  for (std::size_t i = 1; i < b.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * b[i];
  return d;
}

RatVec series_mul_poly(const RatVec& b, const Poly& p, std::size_t order) {
  RatVec out(order + 1, Rat(0));
  for (std::size_t n = 0; n <= order; ++n) {
    Rat acc = 0;
    for (std::size_t m = 0; m <= std::min<std::size_t>(n, p.coeffs().size() ? p.coeffs().size() - 1 : 0);
         ++m) {
      if (n - m < b.size()) acc += p.coeff(m) * b[n - m];
    }
    out[n] = acc;
  }
  return out;
}

void PolyXQ::trim() {
  while (!qc_.empty() && qc_.back().is_zero()) qc_.pop_back();
}

PolyXQ PolyXQ::derivative_x() const {
  std::vector<Poly> out;
  out.reserve(qc_.size());
  for (const Poly& p : qc_) out.push_back(p.derivative());
  return PolyXQ(std::move(out));
}

PolyXQ PolyXQ::derivative_q() const {
  if (qc_.size() <= 1) return PolyXQ();
  std::vector<Poly> out(qc_.size() - 1);
  for (std::size_t i = 1; i < qc_.size(); ++i) out[i - 1] = Rat(static_cast<long>(i)) * qc_[i];
  return PolyXQ(std::move(out));
}

std::string PolyXQ::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < qc_.size(); ++i) {
    if (qc_[i].is_zero()) continue;
    if (!first) os << " + ";
    if (i == 0) {
      os << qc_[i].str();
    } else {
      const bool unit = qc_[i].degree() == 0 && qc_[i].coeff(0) == 1;
      if (!unit) {
        if (qc_[i].degree() == 0)
          os << rat_str(qc_[i].coeff(0)) << "*";
        else
          os << "(" << qc_[i].str() << ")*";
      }
      os << "q";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

PolyXQ operator+(const PolyXQ& p, const PolyXQ& q) {
  std::vector<Poly> out(std::max(p.qc_.size(), q.qc_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.q_coeff(i) + q.q_coeff(i);
  return PolyXQ(std::move(out));
}

PolyXQ operator-(const PolyXQ& p, const PolyXQ& q) {
  std::vector<Poly> out(std::max(p.qc_.size(), q.qc_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.q_coeff(i) - q.q_coeff(i);
  return PolyXQ(std::move(out));
}

PolyXQ operator*(const PolyXQ& p, const PolyXQ& q) {
  if (p.is_zero() || q.is_zero()) return PolyXQ();
  std::vector<Poly> out(p.qc_.size() + q.qc_.size() - 1);
  for (std::size_t i = 0; i < p.qc_.size(); ++i)
    for (std::size_t j = 0; j < q.qc_.size(); ++j) out[i + j] = out[i + j] + p.qc_[i] * q.qc_[j];
  return PolyXQ(std::move(out));
}

PolyXQ operator*(const Poly& p, const PolyXQ& q) { return PolyXQ::from_x(p) * q; }

bool Conic::is_zero() const {
  for (const Rat& v : c)
    if (v != 0) return false;
  return true;
}

bool Conic::quadratic_part_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }

Surd Conic::eval(const Rat& s, const Surd& t) const {
  Surd acc(c[2] * s * s + c[4] * s + c[5]); // pure-s and constant terms
  acc = acc + Surd(c[1] * s + c[3]) * t;
  acc = acc + Surd(c[0]) * t * t;
  return acc;
}

RatMat Conic::matrix() const {
  // Variables ordered (s, t, 1).
  return {{c[2], c[1] / 2, c[4] / 2}, {c[1] / 2, c[0], c[3] / 2}, {c[4] / 2, c[3] / 2, c[5]}};
}

Conic Conic::normalized() const {
  Int den = 1;
  for (const Rat& v : c) den = boost::multiprecision::lcm(den, denominator(v));
  Int g = 0;
  for (const Rat& v : c) g = boost::multiprecision::gcd(g, abs(numerator(v) * (den / denominator(v))));
  if (g == 0) return *this; // zero form
  Rat scale = Rat(den) / Rat(g);
  for (const Rat& v : c) {
    if (v != 0) {
      if (v * scale < 0) scale = -scale;
      break;
    }
  }
  Conic out;
  for (std::size_t i = 0; i < 6; ++i) out.c[i] = c[i] * scale;
  return out;
}

std::string Conic::str() const {
  static const char* names[6] = {"t^2", "s*t", "s^2", "t", "s", ""};
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < 6; ++i) {
    const Rat& v = c[i];
    if (v == 0) continue;
    if (!first) os << (v > 0 ? " + " : " - ");
    if (first && v < 0) os << "-";
    const Rat av = v > 0 ? v : Rat(-v);
    const bool named = names[i][0] != '\0';
    if (!named || av != 1) os << rat_str(av);
    if (named) {
      if (av != 1) os << "*";
      os << names[i];
    }
    first = false;
  }
  return os.str();
}

} // namespace nokholo
