#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stabkit/apolarity.hpp"
#include "stabkit/generators.hpp"
#include "stabkit/polarization.hpp"
#include "stabkit/rng.hpp"

using namespace stabkit;

namespace {

BihomPoly multi(const DegreeVec& deg, std::initializer_list<std::pair<DegreeVec, long>> terms) {
  BihomPoly p(deg);
  for (const auto& [mu, c] : terms) p.add_term(mu, GaussRat(c));
  return p;
}

}  // namespace

TEST_CASE("polarization of monomials") {
  // x^2 -> x1 x2
  BihomPoly xsq = multi(DegreeVec{2}, {{DegreeVec{2}, 1}});
  CHECK(polarize(xsq) == multi(DegreeVec{1, 1}, {{DegreeVec{1, 1}, 1}}));

  // xy -> (x1 y2 + x2 y1) / 2
  BihomPoly xy = multi(DegreeVec{2}, {{DegreeVec{1}, 1}});
  BihomPoly up = polarize(xy);
  CHECK(up.coeff(DegreeVec{1, 0}) == GaussRat(mpq_class(1, 2)));
  CHECK(up.coeff(DegreeVec{0, 1}) == GaussRat(mpq_class(1, 2)));
  CHECK(up.terms().size() == 2);

  // y^n -> y1 ... yn
  BihomPoly yc = multi(DegreeVec{3}, {{DegreeVec{0}, 1}});
  CHECK(polarize(yc) == multi(DegreeVec{1, 1, 1}, {{DegreeVec{0, 0, 0}, 1}}));
}

TEST_CASE("projection inverts polarization") {
  CHECK(project(multi(DegreeVec{1, 1}, {{DegreeVec{1, 1}, 1}}), DegreeVec{2}) ==
        multi(DegreeVec{2}, {{DegreeVec{2}, 1}}));

  BihomPoly half = multi(DegreeVec{1, 1}, {{DegreeVec{1, 0}, 1}, {DegreeVec{0, 1}, 1}});
  half = scale(half, GaussRat(mpq_class(1, 2)));
  CHECK(project(half, DegreeVec{2}) == multi(DegreeVec{2}, {{DegreeVec{1}, 1}}));

  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    DegreeVec lam{static_cast<unsigned>(rng.range(1, 3)),
                  static_cast<unsigned>(rng.range(0, 2))};
    BihomPoly p = gen_random_poly(lam, rng);
    CHECK(project(polarize(p), lam) == p);
  }
  CHECK_THROWS(project(multi(DegreeVec{2}, {{DegreeVec{2}, 1}}), DegreeVec{2}));
}

TEST_CASE("polarized evaluation via contraction") {
  // p = x^2, pts = ((1:1),(2:1)): polarization x1 x2 evaluates to 2
  BihomPoly xsq = multi(DegreeVec{2}, {{DegreeVec{2}, 1}});
  ProjPoint pts({{GaussRat(1), GaussRat(1)}, {GaussRat(2), GaussRat(1)}});
  CHECK(polarized_evaluation(xsq, pts) == GaussRat(2));

  // p = xy, pts = ((0:1),(1:1)) -> 1/2
  BihomPoly xy = multi(DegreeVec{2}, {{DegreeVec{1}, 1}});
  ProjPoint pts2({{GaussRat(0), GaussRat(1)}, {GaussRat(1), GaussRat(1)}});
  CHECK(polarized_evaluation(xy, pts2) == GaussRat(mpq_class(1, 2)));

  // diagonal points collapse to plain evaluation
  Rng rng(7);
  for (int i = 0; i < 25; ++i) {
    DegreeVec lam{static_cast<unsigned>(rng.range(1, 3))};
    BihomPoly p = gen_random_poly(lam, rng);
    GaussRat a(rng.rat(4, 2), rng.rat(4, 2));
    GaussRat b(1);
    std::vector<ProjPoint::Coord> cs(total(lam), {a, b});
    CHECK(polarized_evaluation(p, ProjPoint(cs)) ==
          evaluate(p, ProjPoint({{a, b}})));
  }

  // both routes agree on random tuples
  for (int i = 0; i < 20; ++i) {
    DegreeVec lam{static_cast<unsigned>(rng.range(1, 2)),
                  static_cast<unsigned>(rng.range(1, 2))};
    BihomPoly p = gen_random_poly(lam, rng);
    std::vector<ProjPoint::Coord> cs;
    for (unsigned u = 0; u < total(lam); ++u)
      cs.push_back({GaussRat(rng.rat(4, 2), rng.rat(4, 2)), GaussRat(1)});
    ProjPoint tuple(cs);
    CHECK(polarized_evaluation(p, tuple) == evaluate(polarize(p), tuple));
  }
}

TEST_CASE("polarization is equivariant for unimodular actions") {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    DegreeVec lam{static_cast<unsigned>(rng.range(1, 3)),
                  static_cast<unsigned>(rng.range(1, 2))};
    BihomPoly p = gen_random_poly(lam, rng);
    MoebiusTuple tup{gen_moebius(rng, true), gen_moebius(rng, true)};
    // diagonal tuple repeats phi_k across the lambda_k polarized pairs
    MoebiusTuple diag;
    for (std::size_t k = 0; k < lam.size(); ++k)
      for (unsigned u = 0; u < lam[k]; ++u) diag.push_back(tup[k]);
    CHECK(polarize(act_poly(tup, p)) == act_poly(diag, polarize(p)));
    CHECK(project(act_poly(diag, polarize(p)), lam) == act_poly(tup, p));
  }
}

TEST_CASE("form commutes with polarization up to a per-degree constant") {
  Rng rng(13);
  for (const DegreeVec& lam :
       {DegreeVec{2}, DegreeVec{3}, DegreeVec{1, 2}, DegreeVec{2, 2}}) {
    GaussRat c = form_polarization_factor(lam);
    CHECK_FALSE(c.is_zero());
    for (int i = 0; i < 10; ++i) {
      BihomPoly p = gen_random_poly(lam, rng);
      BihomPoly q = gen_random_poly(lam, rng);
      CHECK(apolarity_form(polarize(p), polarize(q)) == c * apolarity_form(p, q));
    }
  }
}

TEST_CASE("symbol of polarized operator is the polarized symbol") {
  Rng rng(17);
  for (int i = 0; i < 12; ++i) {
    DegreeVec lam{static_cast<unsigned>(rng.range(1, 2))};
    DegreeVec alf{static_cast<unsigned>(rng.range(1, 2))};
    LinearOp T = gen_random_operator(lam, alf, rng);
    // polarized operator: up o T o down on the multi-affine spaces
    LinearOp P(ones_of(lam), ones_of(alf));
    for (std::size_t j = 0; j < P.cols(); ++j) {
      BihomPoly mono = BihomPoly::monomial(ones_of(lam), P.in_basis()[j], GaussRat(1));
      P.set_column(j, polarize(T.apply(project(mono, lam))));
    }
    BihomPoly lhs = symbol(P);
    BihomPoly rhs = polarize(symbol(T));
    CHECK(proportional(lhs, rhs));
  }
}
