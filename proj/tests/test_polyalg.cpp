#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stabkit/json_io.hpp"
#include "stabkit/poly.hpp"
#include "stabkit/rng.hpp"

using namespace stabkit;

namespace {

BihomPoly uni(const std::vector<long>& coeffs) {
  // coeffs[k] is the coefficient of x^k y^(n-k)
  unsigned n = static_cast<unsigned>(coeffs.size() - 1);
  BihomPoly p(DegreeVec{n});
  for (unsigned k = 0; k <= n; ++k) p.add_term(DegreeVec{k}, GaussRat(coeffs[k]));
  return p;
}

BihomPoly random_poly(const DegreeVec& lam, Rng& rng) {
  BihomPoly p(lam);
  for (const auto& mu : monomial_basis(lam)) {
    if (rng.coin(40)) continue;
    p.add_term(mu, GaussRat(rng.rat(5, 3), rng.rat(5, 3)));
  }
  return p;
}

}  // namespace

TEST_CASE("gaussian rational field basics") {
  GaussRat a(mpq_class(3, 2), mpq_class(-1, 3));
  GaussRat b(mpq_class(-7, 5), mpq_class(2));
  CHECK((a + b) - b == a);
  CHECK(a * b == b * a);
  CHECK((a / b) * b == a);
  CHECK(a * a.inverse() == GaussRat(1));
  CHECK(parse_rat("-14/21") == mpq_class(-2, 3));
  CHECK(rat_str(mpq_class(-2, 3)) == "-2/3");
  CHECK_THROWS(parse_rat("1/0"));
}

TEST_CASE("addition: cancellation, identity, disjoint supports") {
  BihomPoly xmy = uni({-1, 1});  // x - y
  BihomPoly xpy = uni({1, 1});   // x + y
  BihomPoly two_x = uni({0, 2});
  CHECK(add(xmy, xpy) == two_x);
  CHECK(add(xmy, BihomPoly::zero(DegreeVec{1})) == xmy);

  BihomPoly xsq = uni({0, 0, 1});
  BihomPoly two_xy = uni({0, 2, 0});
  BihomPoly sum = add(xsq, two_xy);
  CHECK(sum.coeff(DegreeVec{2}) == GaussRat(1));
  CHECK(sum.coeff(DegreeVec{1}) == GaussRat(2));
  CHECK_THROWS(add(xmy, xsq));
}

TEST_CASE("multiplication: difference of squares, roots, unit") {
  BihomPoly xmy = uni({-1, 1});
  BihomPoly xpy = uni({1, 1});
  CHECK(mul(xmy, xpy) == uni({-1, 0, 1}));  // x^2 - y^2

  // (x - a y)(x - b y) = x^2 - (a+b) x y + a b y^2 with a = 2, b = 5
  BihomPoly pa = uni({-2, 1}), pb = uni({-5, 1});
  CHECK(mul(pa, pb) == uni({10, -7, 1}));

  BihomPoly one = BihomPoly::constant(1, GaussRat(1));
  CHECK(mul(xmy, one) == xmy);
}

TEST_CASE("partial derivatives") {
  // d/dx (x^2 y) in V(3) -> 2 x y
  BihomPoly p(DegreeVec{3});
  p.add_term(DegreeVec{2}, GaussRat(1));
  BihomPoly dx = partial(p, 0, Var::X);
  CHECK(dx == uni({0, 2, 0}));

  // d/dy (x^2) in V(2) -> 0 in V(1)
  BihomPoly q = uni({0, 0, 1});
  CHECK(partial(q, 0, Var::Y).is_zero());
  CHECK(partial(q, 0, Var::Y).degree() == DegreeVec{1});

  // d/dx1 (x1 x2 - y1 y2) -> x2
  BihomPoly m(DegreeVec{1, 1});
  m.add_term(DegreeVec{1, 1}, GaussRat(1));
  m.add_term(DegreeVec{0, 0}, GaussRat(-1));
  BihomPoly d1 = partial(m, 0, Var::X);
  CHECK(d1.degree() == DegreeVec{0, 1});
  CHECK(d1.coeff(DegreeVec{0, 1}) == GaussRat(1));

  BihomPoly c = BihomPoly::constant(1, GaussRat(3));
  CHECK_THROWS(partial(c, 0, Var::X));
}

TEST_CASE("homogenize and dehomogenize") {
  std::map<DegreeVec, GaussRat, GradedLex> f;
  f[DegreeVec{2}] = GaussRat(1);
  f[DegreeVec{0}] = GaussRat(1);
  CHECK(homogenize(f, DegreeVec{2}) == uni({1, 0, 1}));  // x^2 + y^2

  // degree drop: f = x at lambda = 2 gives x y (a root at infinity)
  std::map<DegreeVec, GaussRat, GradedLex> g;
  g[DegreeVec{1}] = GaussRat(1);
  CHECK(homogenize(g, DegreeVec{2}) == uni({0, 1, 0}));

  // x1 x2 x3 - 1 at (1,1,1)
  std::map<DegreeVec, GaussRat, GradedLex> h;
  h[DegreeVec{1, 1, 1}] = GaussRat(1);
  h[DegreeVec{0, 0, 0}] = GaussRat(-1);
  BihomPoly hp = homogenize(h, DegreeVec{1, 1, 1});
  CHECK(hp.coeff(DegreeVec{0, 0, 0}) == GaussRat(-1));
  CHECK(dehomogenize(hp) == h);

  std::map<DegreeVec, GaussRat, GradedLex> bad;
  bad[DegreeVec{3}] = GaussRat(1);
  CHECK_THROWS(homogenize(bad, DegreeVec{2}));

  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    DegreeVec lam{static_cast<unsigned>(rng.range(0, 4)),
                  static_cast<unsigned>(rng.range(0, 3))};
    BihomPoly p = random_poly(lam, rng);
    CHECK(homogenize(dehomogenize(p), lam) == p);
  }
}

TEST_CASE("evaluation and projective consistency") {
  BihomPoly p = uni({1, 0, 1});  // x^2 + y^2
  CHECK(evaluate(p, ProjPoint({{GaussRat(1), GaussRat(1)}})) == GaussRat(2));

  BihomPoly q = uni({-2, 1});  // x - 2y
  CHECK(evaluate(q, ProjPoint({{GaussRat(2), GaussRat(1)}})).is_zero());
  CHECK(evaluate(q, ProjPoint({{GaussRat(4), GaussRat(2)}})).is_zero());

  BihomPoly m(DegreeVec{1, 1, 1});
  m.add_term(DegreeVec{1, 1, 1}, GaussRat(1));
  m.add_term(DegreeVec{0, 0, 0}, GaussRat(-1));
  ProjPoint ones({{GaussRat(1), GaussRat(1)},
                  {GaussRat(1), GaussRat(1)},
                  {GaussRat(1), GaussRat(1)}});
  CHECK(evaluate(m, ones).is_zero());
}

TEST_CASE("homogeneity under representative scaling") {
  Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    DegreeVec lam{static_cast<unsigned>(rng.range(1, 3)),
                  static_cast<unsigned>(rng.range(0, 2))};
    BihomPoly p = random_poly(lam, rng);
    std::vector<ProjPoint::Coord> base, scaled;
    GaussRat factor(1);
    for (std::size_t k = 0; k < lam.size(); ++k) {
      GaussRat a(rng.rat(4, 2), rng.rat(4, 2));
      GaussRat b(rng.rat(4, 2), GaussRat(1).re());
      if (a.is_zero() && b.is_zero()) b = GaussRat(1);
      GaussRat c(rng.rat(3, 2), rng.rat(3, 2));
      if (c.is_zero()) c = GaussRat(2);
      base.push_back({a, b});
      scaled.push_back({a * c, b * c});
      for (unsigned u = 0; u < lam[k]; ++u) factor *= c;
    }
    CHECK(evaluate(p, ProjPoint(scaled)) == factor * evaluate(p, ProjPoint(base)));
  }
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(37);
  for (int i = 0; i < 25; ++i) {
    DegreeVec lam{static_cast<unsigned>(rng.range(0, 2)),
                  static_cast<unsigned>(rng.range(0, 2))};
    BihomPoly a = random_poly(lam, rng);
    BihomPoly b = random_poly(lam, rng);
    BihomPoly c = random_poly(lam, rng);
    CHECK(add(a, b) == add(b, a));
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
  }
}

TEST_CASE("mixed partials commute") {
  Rng rng(41);
  for (int i = 0; i < 25; ++i) {
    DegreeVec lam{2, 2};
    BihomPoly p = random_poly(lam, rng);
    CHECK(partial(partial(p, 0, Var::X), 1, Var::Y) ==
          partial(partial(p, 1, Var::Y), 0, Var::X));
    CHECK(partial(partial(p, 0, Var::X), 0, Var::Y) ==
          partial(partial(p, 0, Var::Y), 0, Var::X));
  }
}

TEST_CASE("top-degree monic") {
  CHECK(is_top_degree_monic(uni({0, -3, 1})));   // x^2 - 3xy
  CHECK_FALSE(is_top_degree_monic(uni({0, 0, 2})));
  CHECK_FALSE(is_top_degree_monic(uni({0, 1, 0})));  // xy has a root at infinity
}

TEST_CASE("json round trip, graded-lex term order") {
  Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    DegreeVec lam{static_cast<unsigned>(rng.range(0, 3)),
                  static_cast<unsigned>(rng.range(0, 3))};
    BihomPoly p = random_poly(lam, rng);
    Json j = to_json(p);
    CHECK(poly_from_json(j) == p);
    CHECK(to_json(poly_from_json(j)) == j);
  }
  // serialized rationals are exact strings
  BihomPoly p(DegreeVec{1});
  p.add_term(DegreeVec{0}, GaussRat(mpq_class(1, 3), mpq_class(-2, 7)));
  Json j = to_json(p);
  CHECK(j["terms"][0]["re"] == "1/3");
  CHECK(j["terms"][0]["im"] == "-2/7");
}

TEST_CASE("interchange caps") {
  Json big;
  big["degree"] = Json::array({30});
  big["terms"] = Json::array();
  CHECK_THROWS(poly_from_json(big));  // exceeds the total-degree cap
  Json wide;
  wide["degree"] = Json::array({1, 1, 1, 1, 1, 1, 1});
  wide["terms"] = Json::array();
  CHECK_THROWS(poly_from_json(wide));  // exceeds the variable-count cap
}

TEST_CASE("projective point equality") {
  ProjPoint a({{GaussRat(2), GaussRat(1)}});
  ProjPoint b({{GaussRat(4), GaussRat(2)}});
  ProjPoint c({{GaussRat(3), GaussRat(1)}});
  CHECK(a == b);
  CHECK_FALSE(a == c);
  CHECK_THROWS(ProjPoint({{GaussRat(0), GaussRat(0)}}));
}
