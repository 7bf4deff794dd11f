#ifndef NOKHOLO_HOLONOMIC_HPP
#define NOKHOLO_HOLONOMIC_HPP

/* Guess-then-certify machinery for complexity-function tables. Guessing
 * (rational fits, annihilating operators) is exact linear algebra with
 * holdout validation; certification additionally pins a symbolic identity
 * for the fitted closed form, so a certificate never rests on the guess
 * alone. Failure to fit is reported as NO_FIT_FOUND, never as a
 * non-holonomicity claim.
 */

#include "nokholo/cohomology.hpp"
#include "nokholo/poly.hpp"
#include "nokholo/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nokholo {

struct PowerSeriesTable {
  RatVec b; // coefficients 0..N

  long order() const { return static_cast<long>(b.size()) - 1; }
};

// Minimum data before any guessing call is accepted.
inline constexpr long kMinGuessOrder = 8;

struct EventualPolynomial {
  Poly p;
  long transient = 0; // p(n) = b_n for all n >= transient
};

// Smallest r and polynomial of degree <= max_degree matching the tail, via
// finite differences; nullopt when no fit exists with r <= N/2.
std::optional<EventualPolynomial> fit_eventual_polynomial(const PowerSeriesTable& t,
                                                          long max_degree);

struct RationalFit {
  Poly num, den; // den(0) = 1, gcd(num, den) = 1
  // When nonempty, num/den expands with zero coefficients below the prefix
  // length and matches the table from there on; the prefix stores the true
  // initial coefficients.
  RatVec transient_prefix;

  long transient() const { return static_cast<long>(transient_prefix.size()); }
};

// Exact Pade-style fit of the table by u/v with deg u <= deg_u, deg v <=
// deg_v, validated on the final `holdout` coefficients. Nullopt when no
// denominator with v(0) != 0 fits.
std::optional<RationalFit> guess_rational(const PowerSeriesTable& t, long deg_u, long deg_v,
                                          long holdout);

// Same, but on failure retries with the first r <= max_transient
// coefficients set aside as a transient prefix.
std::optional<RationalFit> guess_rational_transient(const PowerSeriesTable& t, long deg_u,
                                                    long deg_v, long holdout, long max_transient);

struct OdeOperator {
  char var = 'x';
  long order = 0;
  std::vector<Poly> p; // p[0] acts on the highest derivative
};

// Annihilating operator search over orders 1..max_order and coefficient
// degrees 0..max_coeff_degree (smallest first), holdout-validated.
std::optional<OdeOperator> guess_ode(const PowerSeriesTable& t, long max_order,
                                     long max_coeff_degree, long holdout);

// Residual of the operator applied to the truncated series, checked through
// the verifiable order.
bool operator_annihilates(const OdeOperator& op, const PowerSeriesTable& t);

enum class CertVerdict { CERTIFIED_HOLONOMIC, NO_FIT_FOUND };

struct BivariateOperator {
  char var = 'x';
  long order = 1;
  std::vector<PolyXQ> p; // p[0] acts on the highest derivative
};

struct HolonomicCertificate {
  CertVerdict verdict = CertVerdict::NO_FIT_FOUND;
  long failing_slice = -1;      // set when verdict is NO_FIT_FOUND
  std::vector<RationalFit> fits; // one per q-slice i = 0..d
  PolyXQ numerator;              // U(x, q) of the assembled closed form U/V
  Poly denominator;              // V(x), V(0) = 1
  BivariateOperator x_operator;
  long q_operator_order = 0; // q_operator = d/dq^{q_operator_order}
  long holdout = 0;
  long modulus = 1;
  bool symbolic_identity_checked = false;

  std::string closed_form() const;
};

struct CertifyOptions {
  long deg_num = -1; // default: table dimension d
  long deg_den = -1; // default: d + 1
  long holdout = 10;
  long modulus = 1;      // fit residue classes of n mod m separately
  long max_transient = 4;
};

// Lemma-style certification: rational fit per q-slice, assembled closed form
// U/V, order-1 x-operator certified by a symbolic polynomial identity, and
// q-operator d/dq^{d+1} (the q-degree is bounded by d).
HolonomicCertificate certify_complexity(const CoefficientTable& table, const CertifyOptions& opt);

PowerSeriesTable table_slice(const CoefficientTable& table, long i);

std::string certificate_json_text(const HolonomicCertificate& cert);

} // namespace nokholo

#endif
