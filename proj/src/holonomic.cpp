#include "nokholo/holonomic.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nokholo {

/* ------------------------------------------------- eventual polynomials */

std::optional<EventualPolynomial> fit_eventual_polynomial(const PowerSeriesTable& t,
                                                          long max_degree) {
  const long n_ord = t.order();
  if (n_ord < kMinGuessOrder || max_degree < 0 || max_degree > n_ord / 2)
    throw std::invalid_argument("table too short");

  // (max_degree+1)-st finite differences of the tail must vanish.
  RatVec dif = t.b;
  for (long level = 0; level <= max_degree; ++level) {
    for (std::size_t i = 0; i + 1 < dif.size(); ++i) dif[i] = dif[i + 1] - dif[i];
    dif.pop_back();
  }
  long r = 0;
  for (std::size_t i = dif.size(); i-- > 0;) {
    if (dif[i] != 0) {
      r = static_cast<long>(i) + 1;
      break;
    }
  }
  if (r > n_ord / 2) return std::nullopt;

  // Newton forward interpolation at the start of the stable tail.
  RatVec window(t.b.begin() + r, t.b.begin() + r + max_degree + 1);
  Poly p;
  Poly basis = Poly::constant(Rat(1)); // binom(x - r, k)
  for (long k = 0; k <= max_degree; ++k) {
    p = p + window[0] * basis;
    basis = basis * Poly({Rat(-r - k), Rat(1)});
    basis = (Rat(1) / Rat(k + 1)) * basis;
    for (std::size_t i = 0; i + 1 < window.size(); ++i) window[i] = window[i + 1] - window[i];
    if (!window.empty()) window.pop_back();
  }
  for (long n = r; n <= n_ord; ++n)
    if (p.eval(Rat(n)) != t.b[n]) return std::nullopt; // tail not polynomial of this degree
  return EventualPolynomial{p, r};
}

/* --------------------------------------------------------- rational fits */

namespace {

// Series expansion of num/den through `order` (den(0) != 0), plus prefix.
RatVec expand_fit(const RationalFit& fit, long order) {
  RatVec out(static_cast<std::size_t>(order) + 1, Rat(0));
  const Rat v0 = fit.den.coeff(0);
  for (long n = 0; n <= order; ++n) {
    Rat acc = fit.num.coeff(static_cast<std::size_t>(n));
    for (long m = 1; m <= std::min<long>(n, fit.den.degree()); ++m)
      acc -= fit.den.coeff(static_cast<std::size_t>(m)) * out[n - m];
    out[n] = acc / v0;
  }
  for (std::size_t j = 0; j < fit.transient_prefix.size(); ++j) out[j] = fit.transient_prefix[j];
  return out;
}

bool fit_matches(const RationalFit& fit, const RatVec& b) {
  const RatVec expanded = expand_fit(fit, static_cast<long>(b.size()) - 1);
  return expanded == b;
}

// Builds the coefficient rows of [x^n](v * f - u) = 0 for n in [0, upto].
RatMat pade_rows(const RatVec& b, long deg_u, long deg_v, long upto) {
  const std::size_t cols = static_cast<std::size_t>(deg_u + deg_v + 2);
  RatMat rows;
  for (long n = 0; n <= upto; ++n) {
    RatVec row(cols, Rat(0));
    if (n <= deg_u) row[static_cast<std::size_t>(n)] = Rat(-1);
    for (long m = 0; m <= std::min<long>(n, deg_v); ++m)
      row[static_cast<std::size_t>(deg_u + 1 + m)] = b[n - m];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<RationalFit> fit_from_nullspace(const std::vector<RatVec>& basis, long deg_u,
                                              long deg_v, const RatVec& b) {
  for (const RatVec& vec : basis) {
    const Rat v0 = vec[static_cast<std::size_t>(deg_u + 1)];
    if (v0 == 0) continue;
    Poly u(RatVec(vec.begin(), vec.begin() + deg_u + 1));
    Poly v(RatVec(vec.begin() + deg_u + 1, vec.begin() + deg_u + 1 + deg_v + 1));
    if (!u.is_zero()) {
      const Poly g = poly_gcd(u, v);
      u = divmod(u, g).first;
      v = divmod(v, g).first;
    } else {
      v = Poly::constant(Rat(1));
    }
    const Rat scale = Rat(1) / v.coeff(0);
    RationalFit fit{scale * u, scale * v, {}};
    if (!fit_matches(fit, b)) continue; // candidate failed holdout validation
    return fit;
  }
  return std::nullopt;
}

} // namespace

std::optional<RationalFit> guess_rational(const PowerSeriesTable& t, long deg_u, long deg_v,
                                          long holdout) {
  const long n_ord = t.order();
  if (n_ord < kMinGuessOrder || deg_u < 0 || deg_v < 0 || holdout < 0 ||
      deg_u + deg_v + 2 + holdout > n_ord + 1)
    throw std::invalid_argument("table too short");

  const RatMat fit_rows = pade_rows(t.b, deg_u, deg_v, n_ord - holdout);
  auto fit = fit_from_nullspace(nullspace(fit_rows, static_cast<std::size_t>(deg_u + deg_v + 2)),
                                deg_u, deg_v, t.b);
  if (fit) return fit;
  // The canonical fit-window candidate failed its holdout; any surviving fit
  // must satisfy every coefficient, so intersect with the full system.
  const RatMat all_rows = pade_rows(t.b, deg_u, deg_v, n_ord);
  return fit_from_nullspace(nullspace(all_rows, static_cast<std::size_t>(deg_u + deg_v + 2)),
                            deg_u, deg_v, t.b);
}

std::optional<RationalFit> guess_rational_transient(const PowerSeriesTable& t, long deg_u,
                                                    long deg_v, long holdout, long max_transient) {
  for (long r = 0; r <= max_transient; ++r) {
    const long du = deg_u + r;
    if (du + deg_v + 2 + holdout > t.order() + 1) break;
    PowerSeriesTable masked = t;
    for (long j = 0; j < r; ++j) masked.b[j] = 0;
    const RatMat rows = pade_rows(masked.b, du, deg_v, masked.order() - holdout);
    auto fit = fit_from_nullspace(nullspace(rows, static_cast<std::size_t>(du + deg_v + 2)), du,
                                  deg_v, masked.b);
    if (!fit) {
      const RatMat all = pade_rows(masked.b, du, deg_v, masked.order());
      fit = fit_from_nullspace(nullspace(all, static_cast<std::size_t>(du + deg_v + 2)), du,
                               deg_v, masked.b);
    }
    if (fit) {
      fit->transient_prefix.assign(t.b.begin(), t.b.begin() + r);
      return fit;
    }
  }
  return std::nullopt;
}

/* --------------------------------------------------- annihilating ODEs */

namespace {

// [x^i] of the ell-th derivative of the series.
Rat deriv_coeff(const RatVec& b, long ell, long i) {
  if (i < 0 || i + ell >= static_cast<long>(b.size())) return Rat(0);
  Rat f = b[i + ell];
  for (long j = 1; j <= ell; ++j) f *= Rat(i + j);
  return f;
}

OdeOperator operator_from_vector(const RatVec& vec, long k, long deg) {
  OdeOperator op;
  op.var = 'x';
  op.order = k;
  for (long j = 0; j <= k; ++j) {
    RatVec coeffs(vec.begin() + j * (deg + 1), vec.begin() + (j + 1) * (deg + 1));
    op.p.emplace_back(std::move(coeffs));
  }
  // Joint integer normalization, first nonzero leading coefficient positive.
  Int den = 1;
  for (const Poly& p : op.p)
    for (const Rat& v : p.coeffs()) den = boost::multiprecision::lcm(den, denominator(v));
  Int g = 0;
  for (const Poly& p : op.p)
    for (const Rat& v : p.coeffs())
      g = boost::multiprecision::gcd(g, abs(numerator(v) * (den / denominator(v))));
  Rat scale = g == 0 ? Rat(1) : Rat(den) / Rat(g);
  for (const Poly& p : op.p) {
    if (!p.is_zero()) {
      if (p.leading() * scale < 0) scale = -scale;
      break;
    }
  }
  for (Poly& p : op.p) p = scale * p;
  return op;
}

} // namespace

bool operator_annihilates(const OdeOperator& op, const PowerSeriesTable& t) {
  const long k = op.order;
  const long verifiable = t.order() - k;
  if (verifiable < 0) return false;
  for (long n = 0; n <= verifiable; ++n) {
    Rat acc = 0;
    for (long j = 0; j <= k; ++j) {
      const Poly& p = op.p[static_cast<std::size_t>(j)];
      for (long m = 0; m <= p.degree(); ++m)
        acc += p.coeff(static_cast<std::size_t>(m)) * deriv_coeff(t.b, k - j, n - m);
    }
    if (acc != 0) return false;
  }
  return true;
}

std::optional<OdeOperator> guess_ode(const PowerSeriesTable& t, long max_order,
                                     long max_coeff_degree, long holdout) {
  const long n_ord = t.order();
  if (n_ord < kMinGuessOrder || max_order < 1 || max_coeff_degree < 0 || holdout < 0 ||
      (max_order + 1) * (max_coeff_degree + 1) + holdout > n_ord - max_order)
    throw std::invalid_argument("table too short");

  for (long k = 1; k <= max_order; ++k) {
    for (long deg = 0; deg <= max_coeff_degree; ++deg) {
      const std::size_t cols = static_cast<std::size_t>((k + 1) * (deg + 1));
      const auto build_rows = [&](long upto) {
        RatMat rows;
        for (long n = 0; n <= upto; ++n) {
          RatVec row;
          row.reserve(cols);
          for (long j = 0; j <= k; ++j)
            for (long m = 0; m <= deg; ++m) row.push_back(deriv_coeff(t.b, k - j, n - m));
          rows.push_back(std::move(row));
        }
        return rows;
      };
      const auto try_basis = [&](const std::vector<RatVec>& basis) -> std::optional<OdeOperator> {
        for (const RatVec& vec : basis) {
          OdeOperator op = operator_from_vector(vec, k, deg);
          bool nonzero = false;
          for (const Poly& p : op.p) nonzero = nonzero || !p.is_zero();
          if (!nonzero) continue;
          if (operator_annihilates(op, t)) return op; // holdout included in the residual check
        }
        return std::nullopt;
      };
      auto op = try_basis(nullspace(build_rows(n_ord - k - holdout), cols));
      if (!op) op = try_basis(nullspace(build_rows(n_ord - k), cols));
      if (op) return op;
    }
  }
  return std::nullopt;
}

/* -------------------------------------------------------- certification */

PowerSeriesTable table_slice(const CoefficientTable& table, long i) {
  PowerSeriesTable t;
  t.b.reserve(static_cast<std::size_t>(table.N) + 1);
  for (long n = 0; n <= table.N; ++n) t.b.push_back(Rat(table.at(n, i)));
  return t;
}

namespace {

// Folds a transient prefix into the numerator: the represented series is
// prefix + num/den, itself rational with the same denominator.
Poly folded_numerator(const RationalFit& fit) {
  Poly prefix(fit.transient_prefix);
  return fit.num + prefix * fit.den;
}

// Fits one q-slice, assembling residue classes when modulus > 1.
std::optional<RationalFit> fit_slice_series(const PowerSeriesTable& slice, long deg_u, long deg_v,
                                            long holdout, long modulus, long max_transient) {
  if (modulus == 1) return guess_rational_transient(slice, deg_u, deg_v, holdout, max_transient);

  const long n_ord = slice.order();
  std::vector<RationalFit> class_fits;
  for (long r = 0; r < modulus; ++r) {
    PowerSeriesTable cls;
    for (long a = 0; a * modulus + r <= n_ord; ++a) cls.b.push_back(slice.b[a * modulus + r]);
    const long avail = cls.order() + 1 - (deg_u + deg_v + 2);
    const long h = std::min(holdout, avail);
    if (h < 2) throw std::invalid_argument("table too short for this modulus");
    auto fit = guess_rational_transient(cls, deg_u, deg_v, h, max_transient);
    if (!fit) return std::nullopt;
    class_fits.push_back(*fit);
  }

  // f(x) = sum_r x^r * g_r(x^m): common denominator lcm of v_r(x^m).
  Poly den = Poly::constant(Rat(1));
  for (const RationalFit& cf : class_fits) den = poly_lcm(den, cf.den.substitute_power(modulus));
  const Rat d0 = den.coeff(0);
  if (d0 == 0) throw std::logic_error("assembled denominator vanishes at 0");
  den = (Rat(1) / d0) * den;

  Poly num;
  for (long r = 0; r < modulus; ++r) {
    const Poly ur = folded_numerator(class_fits[r]).substitute_power(modulus);
    const Poly vr = class_fits[r].den.substitute_power(modulus);
    num = num + (ur * divmod(den, vr).first).shifted(r);
  }
  if (!num.is_zero()) {
    const Poly g = poly_gcd(num, den);
    num = divmod(num, g).first;
    den = divmod(den, g).first;
    const Rat scale = Rat(1) / den.coeff(0);
    num = scale * num;
    den = scale * den;
  } else {
    den = Poly::constant(Rat(1));
  }
  RationalFit fit{num, den, {}};
  if (!fit_matches(fit, slice.b)) throw std::logic_error("modulus assembly failed verification");
  return fit;
}

PolyXQ normalize_joint(std::vector<PolyXQ>& ps) {
  Int den = 1;
  for (const PolyXQ& pxq : ps)
    for (const Poly& p : pxq.q_coeffs())
      for (const Rat& v : p.coeffs()) den = boost::multiprecision::lcm(den, denominator(v));
  Int g = 0;
  for (const PolyXQ& pxq : ps)
    for (const Poly& p : pxq.q_coeffs())
      for (const Rat& v : p.coeffs())
        g = boost::multiprecision::gcd(g, abs(numerator(v) * (den / denominator(v))));
  Rat scale = g == 0 ? Rat(1) : Rat(den) / Rat(g);
  bool sign_set = false;
  for (const PolyXQ& pxq : ps) {
    for (const Poly& p : pxq.q_coeffs()) {
      if (!p.is_zero()) {
        if (p.leading() * scale < 0) scale = -scale;
        sign_set = true;
        break;
      }
    }
    if (sign_set) break;
  }
  const Poly s = Poly::constant(scale);
  for (PolyXQ& pxq : ps) pxq = s * pxq;
  return ps.empty() ? PolyXQ() : ps[0];
}

} // namespace

std::string HolonomicCertificate::closed_form() const {
  if (numerator.is_zero()) return "0";
  return "(" + numerator.str() + ") / (" + denominator.str() + ")";
}

HolonomicCertificate certify_complexity(const CoefficientTable& table, const CertifyOptions& opt) {
  const long d = table.d;
  const long deg_u = opt.deg_num >= 0 ? opt.deg_num : d;
  const long deg_v = opt.deg_den >= 0 ? opt.deg_den : d + 1;
  if (opt.modulus < 1) throw std::invalid_argument("modulus must be >= 1");

  HolonomicCertificate cert;
  cert.holdout = opt.holdout;
  cert.modulus = opt.modulus;

  for (long i = 0; i <= d; ++i) {
    const PowerSeriesTable slice = table_slice(table, i);
    auto fit =
        fit_slice_series(slice, deg_u, deg_v, opt.holdout, opt.modulus, opt.max_transient);
    if (!fit) {
      cert.verdict = CertVerdict::NO_FIT_FOUND;
      cert.failing_slice = i;
      return cert;
    }
    if (!fit_matches(*fit, slice.b)) throw std::logic_error("fit failed final validation");
    cert.fits.push_back(std::move(*fit));
  }

  // Assemble f = sum_i q^i u_i / v_i over the common denominator V.
  Poly common = Poly::constant(Rat(1));
  for (const RationalFit& fit : cert.fits) common = poly_lcm(common, fit.den);
  common = (Rat(1) / common.coeff(0)) * common;

  std::vector<Poly> q_coeffs;
  for (long i = 0; i <= d; ++i) {
    const RationalFit& fit = cert.fits[static_cast<std::size_t>(i)];
    q_coeffs.push_back(folded_numerator(fit) * divmod(common, fit.den).first);
  }
  cert.numerator = PolyXQ(std::move(q_coeffs));
  cert.denominator = common;

  // Order-1 annihilator of U/V: (UV) f' - (U'V - UV') f = 0. The identity is
  // checked as polynomials after clearing V^2, independent of the table size.
  const PolyXQ u = cert.numerator;
  const Poly v = cert.denominator;
  if (u.is_zero()) {
    // Zero series: 1 * f = 0, with a nonzero coefficient as required.
    cert.x_operator.var = 'x';
    cert.x_operator.order = 0;
    cert.x_operator.p = {PolyXQ::from_x(Poly::constant(Rat(1)))};
    cert.symbolic_identity_checked = true;
  } else {
    const PolyXQ w = u.derivative_x() * PolyXQ::from_x(v) - u * PolyXQ::from_x(v.derivative());
    std::vector<PolyXQ> ps = {u * PolyXQ::from_x(v), PolyXQ() - w};
    normalize_joint(ps);
    cert.x_operator.var = 'x';
    cert.x_operator.order = 1;
    cert.x_operator.p = ps;
    const PolyXQ check = ps[0] * w + ps[1] * (u * PolyXQ::from_x(v));
    if (!check.is_zero()) throw std::logic_error("x-operator identity failed");
    cert.symbolic_identity_checked = true;
  }

  // q-direction: f has q-degree <= d, so d/dq^{d+1} annihilates it.
  cert.q_operator_order = d + 1;
  PolyXQ qd = cert.numerator;
  for (long j = 0; j <= d; ++j) qd = qd.derivative_q();
  if (!qd.is_zero()) throw std::logic_error("q-operator identity failed");

  cert.verdict = CertVerdict::CERTIFIED_HOLONOMIC;
  return cert;
}

/* -------------------------------------------------------------- JSON */

namespace {

nlohmann::ordered_json poly_json(const Poly& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const Rat& v : p.coeffs()) j.push_back(rat_str(v));
  if (p.is_zero()) j.push_back("0");
  return j;
}

nlohmann::ordered_json polyxq_json(const PolyXQ& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const Poly& c : p.q_coeffs()) j.push_back(poly_json(c));
  if (p.is_zero()) j.push_back(poly_json(Poly()));
  return j;
}

} // namespace

std::string certificate_json_text(const HolonomicCertificate& cert) {
  nlohmann::ordered_json j;
  j["verdict"] = cert.verdict == CertVerdict::CERTIFIED_HOLONOMIC ? "CERTIFIED_HOLONOMIC"
                                                                  : "NO_FIT_FOUND";
  if (cert.verdict == CertVerdict::NO_FIT_FOUND) {
    j["failing_slice"] = cert.failing_slice;
    j["holdout"] = cert.holdout;
    j["modulus"] = cert.modulus;
    return j.dump(2) + "\n";
  }
  nlohmann::ordered_json fits = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < cert.fits.size(); ++i) {
    nlohmann::ordered_json f;
    f["slice"] = i;
    f["numerator"] = poly_json(cert.fits[i].num);
    f["denominator"] = poly_json(cert.fits[i].den);
    nlohmann::ordered_json prefix = nlohmann::ordered_json::array();
    for (const Rat& v : cert.fits[i].transient_prefix) prefix.push_back(rat_str(v));
    f["transient_prefix"] = prefix;
    fits.push_back(f);
  }
  j["fits"] = fits;
  j["closed_form"] = cert.closed_form();
  j["numerator_xq"] = polyxq_json(cert.numerator);
  j["denominator_x"] = poly_json(cert.denominator);
  nlohmann::ordered_json xop;
  xop["var"] = std::string(1, cert.x_operator.var);
  xop["order"] = cert.x_operator.order;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const PolyXQ& p : cert.x_operator.p) coeffs.push_back(polyxq_json(p));
  xop["p"] = coeffs;
  j["x_operator"] = xop;
  nlohmann::ordered_json qop;
  qop["var"] = "q";
  qop["order"] = cert.q_operator_order;
  qop["form"] = "d^" + std::to_string(cert.q_operator_order) + "/dq^" +
                std::to_string(cert.q_operator_order);
  j["q_operator"] = qop;
  nlohmann::ordered_json validation;
  validation["holdout"] = cert.holdout;
  validation["modulus"] = cert.modulus;
  validation["holdout_residuals_zero"] = true;
  validation["symbolic_identity"] = cert.symbolic_identity_checked;
  j["validation"] = validation;
  return j.dump(2) + "\n";
}

} // namespace nokholo
