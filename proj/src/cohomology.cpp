#include "nokholo/cohomology.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nokholo {

std::vector<Int> cohomology_projective_space(long m, long a) {
  if (m < 1) throw std::invalid_argument("projective space dimension must be >= 1");
  std::vector<Int> h(static_cast<std::size_t>(m) + 1, Int(0));
  if (a >= 0) h[0] = binomial(a + m, m);
  if (a <= -m - 1) h[static_cast<std::size_t>(m)] = binomial(-a - 1, m); // Serre duality
  return h;
}

std::pair<Int, Int> cohomology_elliptic(long e, bool trivial_degree_zero) {
  if (e > 0) return {Int(e), Int(0)}; // Riemann-Roch, h^1 = 0 for positive degree
  if (e < 0) return {Int(0), Int(-e)};
  if (trivial_degree_zero) return {Int(1), Int(1)}; // structure sheaf of a genus-1 curve
  return {Int(0), Int(0)};
}

CoefficientTable kunneth_table(const std::vector<FactorSpec>& factors, const MultidegreeRay& ray,
                               long N) {
  if (N < 0) throw std::invalid_argument("truncation order must be >= 0");
  if (factors.empty()) throw std::invalid_argument("need at least one factor");
  if (ray.c.size() != factors.size()) throw std::invalid_argument("ray length != factor count");

  CoefficientTable t;
  t.factors = factors;
  t.ray = ray;
  t.N = N;
  t.d = 0;
  for (const FactorSpec& f : factors) t.d += f.kind == FactorSpec::Kind::PROJECTIVE_SPACE ? f.dim : 1;

  t.a.assign(static_cast<std::size_t>(N) + 1,
             std::vector<Int>(static_cast<std::size_t>(t.d) + 1, Int(0)));
  for (long n = 0; n <= N; ++n) {
    // Kunneth: convolve the factor cohomology vectors.
    std::vector<Int> acc = {Int(1)};
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const long deg = ray.c[j] * n;
      std::vector<Int> h;
      if (factors[j].kind == FactorSpec::Kind::PROJECTIVE_SPACE) {
        h = cohomology_projective_space(factors[j].dim, deg);
      } else {
        const auto [h0, h1] = cohomology_elliptic(deg, factors[j].trivial_degree_zero);
        h = {h0, h1};
      }
      std::vector<Int> next(acc.size() + h.size() - 1, Int(0));
      for (std::size_t p = 0; p < acc.size(); ++p)
        for (std::size_t q = 0; q < h.size(); ++q) next[p + q] += acc[p] * h[q];
      acc = std::move(next);
    }
    for (std::size_t i = 0; i < acc.size(); ++i) t.a[n][i] = acc[i];
  }
  return t;
}

std::string table_csv(const CoefficientTable& t) {
  std::ostringstream os;
  os << "n,i,dim\n";
  for (long n = 0; n <= t.N; ++n)
    for (long i = 0; i <= t.d; ++i) {
      const Int& v = t.at(n, i);
      if (v != 0 || n == 0 || i == 0) os << n << "," << i << "," << v.str() << "\n";
    }
  return os.str();
}

CoefficientTable table_from_csv_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  if (line != "n,i,dim" && line != "n,i,dim\r") throw std::invalid_argument("bad CSV header");

  std::vector<std::tuple<long, long, Int>> entries;
  long maxn = 0, maxi = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string ns, is, vs;
    if (!std::getline(row, ns, ',') || !std::getline(row, is, ',') || !std::getline(row, vs))
      throw std::invalid_argument("bad CSV row: " + line);
    const long n = std::stol(ns), i = std::stol(is);
    if (n < 0 || i < 0) throw std::invalid_argument("negative index in CSV");
    entries.emplace_back(n, i, Int(vs));
    maxn = std::max(maxn, n);
    maxi = std::max(maxi, i);
  }
  CoefficientTable t;
  t.N = maxn;
  t.d = maxi;
  t.a.assign(static_cast<std::size_t>(maxn) + 1,
             std::vector<Int>(static_cast<std::size_t>(maxi) + 1, Int(0)));
  for (const auto& [n, i, v] : entries) {
    if (v < 0) throw std::invalid_argument("negative dimension in CSV");
    t.a[n][i] = v;
  }
  return t;
}

CoefficientTable load_table_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open table file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return table_from_csv_text(ss.str());
}

std::string table_sidecar_json(const CoefficientTable& t) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json factors = nlohmann::ordered_json::array();
  for (const FactorSpec& f : t.factors) {
    if (f.kind == FactorSpec::Kind::PROJECTIVE_SPACE)
      factors.push_back("P" + std::to_string(f.dim));
    else
      factors.push_back(f.trivial_degree_zero ? "E" : "E*");
  }
  j["factors"] = factors;
  j["ray"] = t.ray.c;
  j["N"] = t.N;
  j["d"] = t.d;
  return j.dump(2) + "\n";
}

std::vector<FactorSpec> parse_factors(const std::string& spec) {
  std::vector<FactorSpec> out;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok.empty()) throw std::invalid_argument("empty factor token");
    FactorSpec f;
    if (tok[0] == 'P' || tok[0] == 'p') {
      f.kind = FactorSpec::Kind::PROJECTIVE_SPACE;
      f.dim = std::stol(tok.substr(1));
      if (f.dim < 1) throw std::invalid_argument("bad projective factor '" + tok + "'");
    } else if (tok == "E") {
      f.kind = FactorSpec::Kind::ELLIPTIC_CURVE;
      f.dim = 1;
      f.trivial_degree_zero = true;
    } else if (tok == "E*") {
      f.kind = FactorSpec::Kind::ELLIPTIC_CURVE;
      f.dim = 1;
      f.trivial_degree_zero = false;
    } else {
      throw std::invalid_argument("unknown factor '" + tok + "'");
    }
    out.push_back(f);
  }
  if (out.empty()) throw std::invalid_argument("empty factor list");
  return out;
}

MultidegreeRay parse_ray(const std::string& spec) {
  MultidegreeRay ray;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) ray.c.push_back(std::stol(tok));
  if (ray.c.empty()) throw std::invalid_argument("empty ray");
  return ray;
}

} // namespace nokholo
