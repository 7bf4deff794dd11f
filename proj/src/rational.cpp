#include "nokholo/rational.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace nokholo {

static std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

static bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rat parse_rat(const std::string& raw) {
  const std::string s = trim(raw);
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(s)) throw std::invalid_argument("bad rational: '" + raw + "'");
    return Rat(Int(s));
  }
  const std::string p = trim(s.substr(0, slash));
  const std::string q = trim(s.substr(slash + 1));
  if (!is_integer_literal(p) || !is_integer_literal(q))
    throw std::invalid_argument("bad rational: '" + raw + "'");
  Int den(q);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + raw + "'");
  return Rat(Int(p), den);
}

std::string rat_str(const Rat& r) {
  const Int num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double rat_double(const Rat& r) { return r.convert_to<double>(); }

std::string double_str(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  k = std::min(k, n - k);
  Int acc = 1;
  for (long long j = 1; j <= k; ++j) {
    acc *= n - k + j;
    acc /= j; // exact at every step: product of j consecutive integers
  }
  return acc;
}

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

bool is_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int r = isqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

Int squarefree_part(const Int& n, Int& square) {
  if (n < 1) throw std::domain_error("squarefree_part needs n >= 1");
  Int rest = n, sf = 1;
  square = 1;
  for (Int p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned mult = 0;
    while (rest % p == 0) {
      rest /= p;
      ++mult;
    }
    for (unsigned i = 0; i + 1 < mult; i += 2) square *= p;
    if (mult % 2) sf *= p;
  }
  return sf * rest; // rest is 1 or a prime occurring once
}

std::pair<Rat, Rat> sqrt_bounds(const Int& d, const Rat& eps) {
  if (d < 0) throw std::domain_error("sqrt of negative");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  Int r = isqrt(d);
  if (r * r == d) return {Rat(r), Rat(r)};
  Rat lo(r), hi(r + 1);
  while (hi - lo > eps) {
    const Rat mid = (lo + hi) / 2;
    if (mid * mid <= Rat(d))
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

} // namespace nokholo
