#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stabkit/convolution.hpp"
#include "stabkit/generators.hpp"
#include "stabkit/stability.hpp"

using namespace stabkit;

namespace {

BihomPoly uni(const std::vector<long>& coeffs) {
  unsigned n = static_cast<unsigned>(coeffs.size() - 1);
  BihomPoly p(DegreeVec{n});
  for (unsigned k = 0; k <= n; ++k) p.add_term(DegreeVec{k}, GaussRat(coeffs[k]));
  return p;
}

}  // namespace

TEST_CASE("additive convolution basics") {
  // n = 1: (x - y) * (x - y) -> x - 2y (roots add)
  BihomPoly xm1 = uni({-1, 1});
  CHECK(additive_convolution(xm1, xm1) == uni({-2, 1}));

  // q = x^n acts as the identity
  Rng rng(3);
  for (int i = 0; i < 15; ++i) {
    unsigned n = static_cast<unsigned>(rng.range(1, 6));
    BihomPoly p = gen_random_poly(DegreeVec{n}, rng, true);
    BihomPoly delta = BihomPoly::monomial(DegreeVec{n}, DegreeVec{n}, GaussRat(1));
    CHECK(additive_convolution(p, delta) == p);
  }
  CHECK_THROWS(additive_convolution(uni({1, 1}), uni({1, 1, 1})));
}

TEST_CASE("multiplicative convolution basics") {
  // n = 1: (x - a y) x (x - b y) = ab y - x, root (ab:1)
  BihomPoly pa = uni({-3, 1}), pb = uni({-5, 1});
  BihomPoly m = multiplicative_convolution(pa, pb);
  CHECK(m == uni({15, -1}));
  CHECK(evaluate(m, ProjPoint({{GaussRat(15), GaussRat(1)}})).is_zero());

  // zero coefficients kill the matching output coefficient
  BihomPoly p = uni({1, 0, 1});
  BihomPoly q = uni({1, 1, 1});
  BihomPoly r = multiplicative_convolution(p, q);
  CHECK(r.coeff(DegreeVec{1}).is_zero());
}

TEST_CASE("bilinearity and symmetry on random inputs") {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    unsigned n = static_cast<unsigned>(rng.range(1, 5));
    BihomPoly p = gen_random_poly(DegreeVec{n}, rng);
    BihomPoly q = gen_random_poly(DegreeVec{n}, rng);
    BihomPoly r = gen_random_poly(DegreeVec{n}, rng);
    GaussRat a(rng.rat(4, 2), rng.rat(4, 2)), b(rng.rat(4, 2), rng.rat(4, 2));

    CHECK(additive_convolution(p, q) == additive_convolution(q, p));
    CHECK(multiplicative_convolution(p, q) == multiplicative_convolution(q, p));
    BihomPoly lin = additive_convolution(add(scale(p, a), scale(q, b)), r);
    BihomPoly rhs = add(scale(additive_convolution(p, r), a),
                        scale(additive_convolution(q, r), b));
    CHECK(lin == rhs);
  }
}

TEST_CASE("convolution operators match the pointwise formulas") {
  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    unsigned n = static_cast<unsigned>(rng.range(1, 5));
    BihomPoly q = gen_real_rooted_monic(n, rng);
    LinearOp Ta = additive_convolution_op(q);
    LinearOp Tm = multiplicative_convolution_op(q);
    BihomPoly p = gen_random_poly(DegreeVec{n}, rng);
    CHECK(Ta.apply(p) == additive_convolution(p, q));
    CHECK(Tm.apply(p) == multiplicative_convolution(p, q));
  }
}

TEST_CASE("additive convolution symbol closed form") {
  // Symb(T_q) is proportional to prod_j (x w - (z + z_j w) y)
  std::vector<long> roots{1, -2, 3};
  BihomPoly q = BihomPoly::constant(1, GaussRat(1));
  for (long r : roots) {
    BihomPoly lin(DegreeVec{1});
    lin.add_term(DegreeVec{1}, GaussRat(1));
    lin.add_term(DegreeVec{0}, GaussRat(-r));
    q = mul(q, lin);
  }
  BihomPoly s = symbol(additive_convolution_op(q));
  BihomPoly expect = BihomPoly::constant(2, GaussRat(1));
  for (long r : roots) {
    BihomPoly f(DegreeVec{1, 1});
    f.add_term(DegreeVec{0, 1}, GaussRat(1));   // x w
    f.add_term(DegreeVec{1, 0}, GaussRat(-1));  // -z y
    f.add_term(DegreeVec{0, 0}, GaussRat(-r));  // -z_j w y
    expect = mul(expect, f);
  }
  CHECK(proportional(s, expect));
}

TEST_CASE("multiplicative convolution symbol closed form") {
  // Symb(T_q) proportional to prod_j (x w - z_j z y); for q = (x - y)^n this
  // specializes to (x w - z y)^n.
  unsigned n = 3;
  BihomPoly q = BihomPoly::constant(1, GaussRat(1));
  for (unsigned i = 0; i < n; ++i) q = mul(q, uni({-1, 1}));
  BihomPoly s = symbol(multiplicative_convolution_op(q));
  BihomPoly base(DegreeVec{1, 1});
  base.add_term(DegreeVec{0, 1}, GaussRat(1));
  base.add_term(DegreeVec{1, 0}, GaussRat(-1));
  BihomPoly expect = BihomPoly::constant(2, GaussRat(1));
  for (unsigned i = 0; i < n; ++i) expect = mul(expect, base);
  CHECK(proportional(s, expect));
}

TEST_CASE("minroot and maxroot sandwiches") {
  Rng rng(11);
  for (int i = 0; i < 25; ++i) {
    unsigned n = static_cast<unsigned>(rng.range(2, 5));
    BihomPoly p = gen_real_rooted_monic(n, rng);
    BihomPoly q = gen_real_rooted_monic(n, rng);
    BihomPoly c = additive_convolution(p, q);
    REQUIRE_FALSE(c.is_zero());
    REQUIRE(real_rooted(c) == Rootedness::Yes);
    RootEnclosure ep = minmax_root(p, 40), eq = minmax_root(q, 40), ec = minmax_root(c, 40);
    CHECK(ep.min_root->lo + eq.min_root->lo <= ec.min_root->hi);
    CHECK(ec.max_root->lo <= ep.max_root->hi + eq.max_root->hi);
  }
  for (int i = 0; i < 25; ++i) {
    unsigned n = static_cast<unsigned>(rng.range(2, 5));
    BihomPoly p = gen_real_rooted_monic(n, rng, 1, 6);
    BihomPoly q = gen_real_rooted_monic(n, rng, 1, 6);
    BihomPoly c = multiplicative_convolution(p, q);
    REQUIRE_FALSE(c.is_zero());
    REQUIRE(real_rooted(c) == Rootedness::Yes);
    RootEnclosure ep = minmax_root(p, 40), eq = minmax_root(q, 40), ec = minmax_root(c, 40);
    CHECK(ep.min_root->lo * eq.min_root->lo <= ec.min_root->hi);
    CHECK(ec.max_root->lo <= ep.max_root->hi * eq.max_root->hi);
  }
}

TEST_CASE("shifted derivative window example") {
  // (y d/dx - 1)(x - 2y)^2 = (x - 2y)(4y - x), roots {2, 4}
  BihomPoly p = mul(uni({-2, 1}), uni({-2, 1}));
  LinearOp T = shifted_derivative_op(GaussRat(1), 2);
  BihomPoly out = T.apply(p);
  CHECK(out == mul(uni({-2, 1}), uni({4, -1})));
  RootEnclosure e = minmax_root(out, 16);
  CHECK(e.min_root->lo == 2);
  CHECK(e.max_root->hi == 4);
}
