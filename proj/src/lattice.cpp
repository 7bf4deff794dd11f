#include "nokholo/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nokholo {

static void require_same_lattice(const DivisorClass& a, const DivisorClass& b) {
  if (a.lattice_id != b.lattice_id) throw std::domain_error("foreign class");
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  require_same_lattice(a, b);
  DivisorClass out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  require_same_lattice(a, b);
  DivisorClass out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

DivisorClass operator-(const DivisorClass& a) { return Rat(-1) * a; }

DivisorClass operator*(const Rat& s, const DivisorClass& a) {
  DivisorClass out = a;
  for (Rat& v : out.coords) v *= s;
  return out;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  return a.lattice_id == b.lattice_id && a.coords == b.coords;
}

DivisorClass SurfaceData::cls(RatVec coords) const {
  if (coords.size() != rank()) throw std::invalid_argument("coordinate length != lattice rank");
  return {std::move(coords), name};
}

DivisorClass SurfaceData::zero() const { return {RatVec(rank(), Rat(0)), name}; }

DivisorClass SurfaceData::negative_curve(std::size_t i) const {
  if (i >= negative_curves.size()) throw std::out_of_range("negative-curve index");
  return {negative_curves[i], name};
}

/* Linear-combination parser for expressions like "9f1+3f2", "H+2E",
 * "3/2H - E", "0". Basis names are matched longest-first at each position. */
DivisorClass SurfaceData::cls(const std::string& expr) const {
  RatVec coords(rank(), Rat(0));
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
  };
  std::vector<std::size_t> order(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return basis[a].size() > basis[b].size(); });

  skip_ws();
  if (i == expr.size()) throw std::invalid_argument("empty class expression");
  bool any_term = false;
  while (i < expr.size()) {
    skip_ws();
    Rat coeff = 1;
    bool saw_sign = false;
    if (expr[i] == '+' || expr[i] == '-') {
      if (expr[i] == '-') coeff = -1;
      saw_sign = true;
      ++i;
      skip_ws();
    }
    // optional rational coefficient p or p/q
    std::size_t j = i;
    while (j < expr.size() && std::isdigit(static_cast<unsigned char>(expr[j]))) ++j;
    if (j > i && j < expr.size() && expr[j] == '/') {
      std::size_t k = j + 1;
      while (k < expr.size() && std::isdigit(static_cast<unsigned char>(expr[k]))) ++k;
      if (k > j + 1) j = k;
    }
    bool saw_number = j > i;
    if (saw_number) {
      coeff *= parse_rat(expr.substr(i, j - i));
      i = j;
      skip_ws();
      if (i < expr.size() && expr[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    // optional basis name
    bool matched = false;
    for (std::size_t k : order) {
      const std::string& bn = basis[k];
      if (expr.compare(i, bn.size(), bn) == 0) {
        coords[k] += coeff;
        i += bn.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      if (!saw_number)
        throw std::invalid_argument("cannot parse class expression at '" + expr.substr(i) + "'");
      if (coeff != 0) throw std::invalid_argument("constant term in class expression");
      // a bare "0" term contributes nothing
    }
    (void)saw_sign;
    any_term = true;
    skip_ws();
  }
  if (!any_term) throw std::invalid_argument("empty class expression");
  return {std::move(coords), name};
}

std::string SurfaceData::render(const DivisorClass& c) const {
  if (c.lattice_id != name) throw std::domain_error("foreign class");
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < rank(); ++k) {
    const Rat& v = c.coords[k];
    if (v == 0) continue;
    if (!first) os << (v > 0 ? "+" : "-");
    if (first && v < 0) os << "-";
    const Rat av = v > 0 ? v : Rat(-v);
    if (av != 1) os << rat_str(av);
    os << basis[k];
    first = false;
  }
  if (first) return "0";
  return os.str();
}

Rat intersect(const DivisorClass& a, const DivisorClass& b, const SurfaceData& s) {
  if (a.lattice_id != s.name || b.lattice_id != s.name) throw std::domain_error("foreign class");
  return dot(a.coords, mat_vec(s.form.matrix, b.coords));
}

bool cone_contains(const ConeSpec& cone, const DivisorClass& c, const SurfaceData& s) {
  if (c.lattice_id != s.name) throw std::domain_error("foreign class");
  if (cone.kind == ConeKind::POLYHEDRAL) {
    for (const RatVec& l : cone.inequalities)
      if (intersect(c, s.cls(l), s) < 0) return false;
    return true;
  }
  const DivisorClass h = s.cls(cone.ample_reference);
  return intersect(c, c, s) >= 0 && intersect(c, h, s) >= 0;
}

static bool is_zero_class(const DivisorClass& c) {
  for (const Rat& v : c.coords)
    if (v != 0) return false;
  return true;
}

ExitTime cone_exit_time(const ConeSpec& cone, const DivisorClass& b, const DivisorClass& c,
                        const SurfaceData& s) {
  if (is_zero_class(c)) throw std::invalid_argument("exit direction is the zero class");
  if (!cone_contains(cone, b, s)) throw std::domain_error("base outside cone");

  if (cone.kind == ConeKind::POLYHEDRAL) {
    std::optional<Rat> best;
    for (const RatVec& lc : cone.inequalities) {
      const DivisorClass l = s.cls(lc);
      const Rat cl = intersect(c, l, s);
      if (cl <= 0) continue; // B - tC only gains on this inequality
      const Rat ratio = intersect(b, l, s) / cl;
      if (!best || ratio < *best) best = ratio;
    }
    if (!best) return ExitTime::inf();
    return ExitTime::at(Surd(*best));
  }

  // Quadratic cone {q >= 0, .h >= 0} with q(t) = C^2 t^2 - 2 B.C t + B^2.
  const DivisorClass h = s.cls(cone.ample_reference);
  const Rat bb = intersect(b, b, s), bc = intersect(b, c, s), cc = intersect(c, c, s);
  const Rat bh = intersect(b, h, s), ch = intersect(c, h, s);

  std::optional<Surd> half_space_exit;
  if (ch > 0) half_space_exit = Surd(bh / ch);

  std::optional<Surd> quadric_exit;
  if (cc == 0) {
    if (bc > 0) quadric_exit = Surd(bb / (2 * bc));
  } else {
    const Rat disc = bc * bc - bb * cc;
    if (cc > 0) {
      // Exit through the smaller root; tangency (disc == 0) never leaves {q >= 0}.
      if (disc > 0) {
        const Surd root = (Surd(bc) - surd_sqrt(disc)) / Surd(cc);
        if (sign(root) >= 0) quadric_exit = root;
        // root < 0 means q stays nonnegative on [0, inf)
      }
    } else {
      // cc < 0: q opens downward, disc >= 0 automatically; the feasible
      // interval [r-, r+] contains 0 and exits at r+.
      quadric_exit = (Surd(bc) - surd_sqrt(disc)) / Surd(cc);
    }
  }

  if (!half_space_exit && !quadric_exit) return ExitTime::inf();
  Surd mu{Rat(0)};
  if (half_space_exit && quadric_exit)
    mu = (*half_space_exit < *quadric_exit) ? *half_space_exit : *quadric_exit;
  else
    mu = half_space_exit ? *half_space_exit : *quadric_exit;
  if (sign(mu) < 0) throw std::logic_error("negative exit time with base in cone");
  return ExitTime::at(mu);
}

SurfaceData pullback_embed(const SurfaceData& s, long m) {
  if (m < 1) throw std::invalid_argument("pullback degree must be >= 1");
  SurfaceData out = s;
  out.name = s.name + "#pb" + std::to_string(m);
  for (std::string& bn : out.basis) bn += "^*";
  for (auto& row : out.form.matrix)
    for (Rat& v : row) v *= m;
  return out;
}

DivisorClass transport(const SurfaceData& target, const DivisorClass& c) {
  if (c.coords.size() != target.rank()) throw std::invalid_argument("rank mismatch in transport");
  return {c.coords, target.name};
}

void validate_surface(const SurfaceData& s, std::size_t max_rank) {
  const std::size_t n = s.rank();
  if (n == 0) throw std::invalid_argument("empty basis");
  if (n > max_rank) throw std::invalid_argument("lattice rank exceeds guard");
  if (s.form.matrix.size() != n) throw std::invalid_argument("matrix size != rank");
  for (const auto& row : s.form.matrix)
    if (row.size() != n) throw std::invalid_argument("matrix not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (s.form.matrix[i][j] != s.form.matrix[j][i])
        throw std::invalid_argument("intersection matrix not symmetric");
  if (det(s.form.matrix) == 0) throw std::invalid_argument("degenerate intersection pairing");

  const auto check_cone = [&](const ConeSpec& cone, const char* which) {
    if (cone.kind == ConeKind::POLYHEDRAL) {
      if (cone.inequalities.empty())
        throw std::invalid_argument(std::string(which) + ": polyhedral cone needs inequalities");
      for (const RatVec& l : cone.inequalities)
        if (l.size() != n) throw std::invalid_argument(std::string(which) + ": bad inequality length");
    } else {
      if (cone.ample_reference.size() != n)
        throw std::invalid_argument(std::string(which) + ": bad ample reference length");
      const DivisorClass h = s.cls(cone.ample_reference);
      if (intersect(h, h, s) <= 0)
        throw std::invalid_argument(std::string(which) + ": ample reference must have h.h > 0");
    }
  };
  check_cone(s.nef, "nef");
  check_cone(s.pseff, "pseff");

  for (std::size_t i = 0; i < s.negative_curves.size(); ++i) {
    const DivisorClass c = s.negative_curve(i);
    if (intersect(c, c, s) >= 0)
      throw std::invalid_argument("negative curve with non-negative self-intersection");
    if (!cone_contains(s.pseff, c, s))
      throw std::invalid_argument("negative curve outside pseudoeffective cone");
  }
  for (const auto& [idx, mult] : s.point_multiplicities) {
    if (idx >= s.negative_curves.size())
      throw std::invalid_argument("point multiplicity refers to unknown curve");
    if (mult < 0) throw std::invalid_argument("negative point multiplicity");
  }
}

using nlohmann::ordered_json;

static RatVec coords_from_json(const ordered_json& j) {
  RatVec out;
  for (const auto& v : j) {
    if (v.is_string())
      out.push_back(parse_rat(v.get<std::string>()));
    else
      out.push_back(Rat(v.get<long long>()));
  }
  return out;
}

static ordered_json coords_to_json(const RatVec& v) {
  ordered_json j = ordered_json::array();
  for (const Rat& r : v) j.push_back(rat_str(r));
  return j;
}

static ConeSpec cone_from_json(const ordered_json& j) {
  ConeSpec cone;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "POLYHEDRAL") {
    cone.kind = ConeKind::POLYHEDRAL;
    for (const auto& l : j.at("inequalities")) cone.inequalities.push_back(coords_from_json(l));
  } else if (kind == "QUADRATIC") {
    cone.kind = ConeKind::QUADRATIC;
    cone.ample_reference = coords_from_json(j.at("ample_reference"));
  } else {
    throw std::invalid_argument("unknown cone kind '" + kind + "'");
  }
  return cone;
}

static ordered_json cone_to_json(const ConeSpec& cone) {
  ordered_json j;
  if (cone.kind == ConeKind::POLYHEDRAL) {
    j["kind"] = "POLYHEDRAL";
    ordered_json ineqs = ordered_json::array();
    for (const RatVec& l : cone.inequalities) ineqs.push_back(coords_to_json(l));
    j["inequalities"] = ineqs;
  } else {
    j["kind"] = "QUADRATIC";
    j["ample_reference"] = coords_to_json(cone.ample_reference);
  }
  return j;
}

SurfaceData surface_from_json_text(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  SurfaceData s;
  s.name = j.value("name", std::string("surface"));
  for (const auto& b : j.at("basis")) s.basis.push_back(b.get<std::string>());
  for (const auto& row : j.at("matrix")) s.form.matrix.push_back(coords_from_json(row));
  s.nef = cone_from_json(j.at("nef"));
  s.pseff = cone_from_json(j.at("pseff"));
  if (j.contains("negative_curves"))
    for (const auto& c : j.at("negative_curves")) s.negative_curves.push_back(coords_from_json(c));
  if (j.contains("point_multiplicities"))
    for (const auto& [key, val] : j.at("point_multiplicities").items())
      s.point_multiplicities[static_cast<std::size_t>(std::stoul(key))] = val.get<long>();
  validate_surface(s);
  return s;
}

SurfaceData load_surface(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open surface file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return surface_from_json_text(ss.str());
}

std::string surface_to_json_text(const SurfaceData& s) {
  ordered_json j;
  j["name"] = s.name;
  j["basis"] = s.basis;
  ordered_json rows = ordered_json::array();
  for (const auto& row : s.form.matrix) rows.push_back(coords_to_json(row));
  j["matrix"] = rows;
  j["nef"] = cone_to_json(s.nef);
  j["pseff"] = cone_to_json(s.pseff);
  ordered_json negs = ordered_json::array();
  for (const auto& c : s.negative_curves) negs.push_back(coords_to_json(c));
  j["negative_curves"] = negs;
  ordered_json mults = ordered_json::object();
  for (const auto& [idx, mult] : s.point_multiplicities) mults[std::to_string(idx)] = mult;
  j["point_multiplicities"] = mults;
  return j.dump(2) + "\n";
}

} // namespace nokholo
