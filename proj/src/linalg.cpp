#include "nokholo/linalg.hpp"

#include <stdexcept>

namespace nokholo {

using IntMat = std::vector<std::vector<Int>>;

Rat dot(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

RatVec mat_vec(const RatMat& m, const RatVec& x) {
  RatVec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], x);
  return out;
}

// Clears denominators row by row; scale collects the product of row multipliers.
static IntMat clear_rows(const RatMat& m, Rat& scale) {
  scale = 1;
  IntMat out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Int l = 1;
    for (const Rat& v : m[i]) l = boost::multiprecision::lcm(l, denominator(v));
    scale *= Rat(l);
    out[i].reserve(m[i].size());
    for (const Rat& v : m[i]) out[i].push_back(numerator(v) * (l / denominator(v)));
  }
  return out;
}

// Bareiss fraction-free elimination. Returns the determinant up to the sign
// of the row swaps already applied; zero when singular.
static Int bareiss_det(IntMat a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Int prev = 1;
  int swaps = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev; // division is exact
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return (swaps % 2) ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

Rat det(const RatMat& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det: not square");
  if (n == 0) return 1;
  Rat scale;
  IntMat a = clear_rows(m, scale);
  return Rat(bareiss_det(std::move(a))) / scale;
}

bool negative_definite(const RatMat& g) {
  const std::size_t n = g.size();
  for (std::size_t k = 1; k <= n; ++k) {
    RatMat minor(k, RatVec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = g[i][j];
    const Rat d = det(minor);
    if ((k % 2 == 1 && d >= 0) || (k % 2 == 0 && d <= 0)) return false;
  }
  return true;
}

std::optional<RatVec> solve_square(const RatMat& a, const RatVec& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve: size mismatch");
  if (n == 0) return RatVec{};
  RatMat aug(n, RatVec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("solve: not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  Rat scale;
  IntMat m = clear_rows(aug, scale);

  // Fraction-free forward elimination on the augmented matrix.
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return std::nullopt;
      std::swap(m[k], m[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  if (m[n - 1][n - 1] == 0) return std::nullopt;

  RatVec x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rat acc(m[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rat(m[ii][j]) * x[j];
    x[ii] = acc / Rat(m[ii][ii]);
  }
  return x;
}

std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const Rat inv = Rat(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RatVec> nullspace(const RatMat& m_in, std::size_t cols) {
  RatMat m = m_in;
  for (auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("nullspace: ragged matrix");
  const std::vector<std::size_t> pivots = rref(m);

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace nokholo
