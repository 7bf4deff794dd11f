#include "doctest.h"

#include "nokholo/json_io.hpp"
#include "nokholo/lattice.hpp"
#include "nokholo/nok.hpp"

#include "properties.hpp"

using namespace nokholo;

namespace {
const SurfaceData& exe() {
  static const SurfaceData s = make_product_elliptic_surface();
  return s;
}
const SurfaceData& blowup() {
  static const SurfaceData s = make_blowup_surface();
  return s;
}
} // namespace

TEST_CASE("E x E pairing: adjunction forces square-zero fibers") {
  const SurfaceData& s = exe();
  // 2g - 2 = C^2 on an abelian surface and fibers/diagonal have genus 1,
  // so the diagonal entries of the pairing are forced to vanish.
  for (std::size_t i = 0; i < 3; ++i) CHECK(s.form.matrix[i][i] == 0);
  CHECK(intersect(s.cls("f1"), s.cls("f2"), s) == 1);
  CHECK(intersect(s.cls("f1"), s.cls("Delta"), s) == 1);
  CHECK(intersect(s.cls("f2"), s.cls("Delta"), s) == 1);
}

TEST_CASE("intersection pairing examples") {
  const SurfaceData& s = exe();
  CHECK(intersect(s.cls("9f1+3f2"), s.cls("f1+f2+Delta"), s) == 24);
  CHECK(intersect(s.zero(), s.cls("f1+f2+Delta"), s) == 0);
  const SurfaceData other = blowup();
  CHECK_THROWS_WITH_AS(intersect(other.cls("H"), s.cls("f1"), s), "foreign class",
                       std::domain_error);
}

TEST_CASE("class expression parsing round-trips") {
  const SurfaceData& s = exe();
  CHECK(s.render(s.cls("9f1+3f2")) == "9f1+3f2");
  CHECK(s.cls("f1 + f2 + Delta") == s.cls({Rat(1), Rat(1), Rat(1)}));
  CHECK(s.cls("3/2f1 - f2") == s.cls({Rat(3, 2), Rat(-1), Rat(0)}));
  CHECK(s.cls("0") == s.zero());
  CHECK(s.render(s.zero()) == "0");
  CHECK(blowup().cls("2H-3E") == blowup().cls({Rat(2), Rat(-3)}));
  CHECK_THROWS_AS(s.cls("9g1"), std::invalid_argument);
  CHECK_THROWS_AS(s.cls(""), std::invalid_argument);
}

TEST_CASE("cone membership") {
  const SurfaceData& s = exe();
  CHECK(cone_contains(s.nef, s.cls("f1"), s));
  CHECK(cone_contains(s.nef, s.zero(), s));
  CHECK(!cone_contains(s.nef, s.cls("-f1"), s));
  CHECK(cone_contains(blowup().nef, blowup().cls("H"), blowup()));
  CHECK(!cone_contains(blowup().nef, blowup().cls("E"), blowup()));
}

TEST_CASE("quadratic cone exit time is the 4 - sqrt(7) surd") {
  const SurfaceData& s = exe();
  const DivisorClass b = s.cls("9f1+3f2");
  const DivisorClass c = s.cls("f1+f2+Delta");
  const ExitTime exit = cone_exit_time(s.nef, b, c, s);
  REQUIRE(!exit.infinite);
  const Surd mu = exit.value;
  CHECK(mu == Surd(Rat(4)) - surd_sqrt(Rat(7)));
  const auto mp = mu.minimal_polynomial();
  CHECK(mp == std::array<Int, 3>{Int(9), Int(-8), Int(1)});
  CHECK(Surd(Rat(0)) < mu);
  CHECK(mu < Surd(Rat(3)));

  // Independent oracle: bisection on the membership oracle pins mu to 1e-12.
  Rat lo = 0, hi = 3;
  for (int iter = 0; iter < 60; ++iter) {
    const Rat mid = (lo + hi) / 2;
    if (cone_contains(s.nef, b - mid * c, s))
      lo = mid;
    else
      hi = mid;
  }
  CHECK(Surd(lo) <= mu);
  CHECK(mu <= Surd(hi));
  CHECK(mu.approx() == doctest::Approx(1.354248688).epsilon(1e-9));
}

TEST_CASE("exit time edge cases") {
  const SurfaceData& s = exe();
  const DivisorClass h = s.cls("f1+f2+Delta");
  // Moving deeper into the cone never exits.
  CHECK(cone_exit_time(s.nef, h, -h, s).infinite);
  CHECK_THROWS_WITH_AS(cone_exit_time(s.nef, s.cls("-f1"), h, s), "base outside cone",
                       std::domain_error);
  CHECK_THROWS_AS(cone_exit_time(s.nef, h, s.zero(), s), std::invalid_argument);

  // Null direction: exit through the quadric is linear in t.
  const ExitTime along_fiber = cone_exit_time(s.nef, s.cls("9f1+3f2"), s.cls("f1"), s);
  REQUIRE(!along_fiber.infinite);
  CHECK(along_fiber.value == Surd(Rat(9)));

  // Polyhedral cone: minimum of ratios.
  const SurfaceData& bl = blowup();
  const ExitTime poly = cone_exit_time(bl.nef, bl.cls("2H-E"), bl.cls("H-E"), bl);
  REQUIRE(!poly.infinite);
  CHECK(poly.value == Surd(Rat(1)));
}

TEST_CASE("pullback scales the pairing and preserves verdicts") {
  const SurfaceData& s = exe();
  const SurfaceData p1 = pullback_embed(s, 1);
  CHECK(p1.form.matrix == s.form.matrix);

  const SurfaceData p2 = pullback_embed(s, 2);
  CHECK(intersect(p2.cls({Rat(1), Rat(0), Rat(0)}), p2.cls({Rat(0), Rat(1), Rat(0)}), p2) == 2);

  std::mt19937 rng(71);
  for (int it = 0; it < 120; ++it) {
    const DivisorClass alpha = props::random_class(rng, s);
    for (long m : {1L, 2L, 3L, 5L}) {
      const SurfaceData pm = pullback_embed(s, m);
      const DivisorClass pa = transport(pm, alpha);
      CHECK(cone_contains(s.nef, alpha, s) == cone_contains(pm.nef, pa, pm));
      CHECK(intersect(pa, pa, pm) == Rat(m) * intersect(alpha, alpha, s));
    }
  }
}

TEST_CASE("pullback preserves exit times") {
  const SurfaceData& s = exe();
  const DivisorClass b = s.cls("9f1+3f2"), c = s.cls("f1+f2+Delta");
  const Surd mu = cone_exit_time(s.nef, b, c, s).value;
  for (long m : {2L, 3L, 5L}) {
    const SurfaceData pm = pullback_embed(s, m);
    const ExitTime et = cone_exit_time(pm.nef, transport(pm, b), transport(pm, c), pm);
    REQUIRE(!et.infinite);
    CHECK(et.value == mu);
  }
}

TEST_CASE("surface JSON round-trip") {
  for (const SurfaceData* s : {&exe(), &blowup()}) {
    const std::string text = surface_to_json_text(*s);
    const SurfaceData back = surface_from_json_text(text);
    CHECK(back.name == s->name);
    CHECK(back.basis == s->basis);
    CHECK(back.form.matrix == s->form.matrix);
    CHECK(back.negative_curves == s->negative_curves);
    CHECK(surface_to_json_text(back) == text);
  }
}

TEST_CASE("surface validation rejects bad data") {
  SurfaceData s = exe();
  s.form.matrix[0][1] = 2; // breaks symmetry
  CHECK_THROWS_AS(validate_surface(s), std::invalid_argument);

  SurfaceData degenerate = exe();
  degenerate.form.matrix = {{Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1)},
                            {Rat(0), Rat(1), Rat(0)}};
  CHECK_THROWS_AS(validate_surface(degenerate), std::invalid_argument);

  SurfaceData bad_curve = blowup();
  bad_curve.negative_curves = {{Rat(1), Rat(0)}}; // H has H^2 = 1
  CHECK_THROWS_AS(validate_surface(bad_curve), std::invalid_argument);

  SurfaceData big;
  big.name = "big";
  for (int i = 0; i < 17; ++i) big.basis.push_back("e" + std::to_string(i));
  big.form.matrix.assign(17, RatVec(17, Rat(0)));
  for (int i = 0; i < 17; ++i) big.form.matrix[i][i] = 1;
  big.nef.kind = ConeKind::POLYHEDRAL;
  big.nef.inequalities = {RatVec(17, Rat(1))};
  big.pseff = big.nef;
  CHECK_THROWS_AS(validate_surface(big), std::invalid_argument); // rank guard
}

TEST_CASE("property: bilinearity and symmetry") {
  CHECK(props::bilinearity_symmetry(exe()));
  CHECK(props::bilinearity_symmetry(blowup()));
}

TEST_CASE("property: cone convexity") {
  CHECK(props::cone_convexity(exe(), exe().nef));
  CHECK(props::cone_convexity(blowup(), blowup().nef));
  CHECK(props::cone_convexity(blowup(), blowup().pseff));
}

TEST_CASE("property: exit-time consistency") {
  CHECK(props::exit_time_consistency(exe(), exe().nef));
  CHECK(props::exit_time_consistency(blowup(), blowup().nef));
  CHECK(props::exit_time_consistency(blowup(), blowup().pseff));
}
