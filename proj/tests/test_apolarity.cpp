#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stabkit/apolarity.hpp"
#include "stabkit/generators.hpp"
#include "stabkit/json_io.hpp"
#include "stabkit/rng.hpp"

using namespace stabkit;

namespace {

BihomPoly uni(const std::vector<long>& coeffs) {
  unsigned n = static_cast<unsigned>(coeffs.size() - 1);
  BihomPoly p(DegreeVec{n});
  for (unsigned k = 0; k <= n; ++k) p.add_term(DegreeVec{k}, GaussRat(coeffs[k]));
  return p;
}

GaussRat constant_of(const TensorPoly& t) {
  return t.poly.coeff(DegreeVec(t.poly.arity(), 0));
}

BihomPoly triple_diag(long t) {
  BihomPoly p(DegreeVec{1, 1, 1});
  p.add_term(DegreeVec{1, 1, 1}, GaussRat(1));
  p.add_term(DegreeVec{0, 0, 0}, GaussRat(-t));
  return p;
}

}  // namespace

TEST_CASE("d_map basics") {
  // D(x (x) y) = 1
  BihomPoly x = uni({0, 1}), y = uni({1, 0});
  CHECK(constant_of(d_map(tensor(x, y), 0)) == GaussRat(1));

  // D(p (x) q) = p1 q0 - p0 q1 for linear p, q (hand expansion)
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    GaussRat p0(rng.rat(5, 2), rng.rat(5, 2)), p1(rng.rat(5, 2), rng.rat(5, 2));
    GaussRat q0(rng.rat(5, 2), rng.rat(5, 2)), q1(rng.rat(5, 2), rng.rat(5, 2));
    BihomPoly p(DegreeVec{1}), q(DegreeVec{1});
    p.add_term(DegreeVec{0}, p0);
    p.add_term(DegreeVec{1}, p1);
    q.add_term(DegreeVec{0}, q0);
    q.add_term(DegreeVec{1}, q1);
    CHECK(constant_of(d_map(tensor(p, q), 0)) == p1 * q0 - p0 * q1);
  }
}

TEST_CASE("transvectants: multiplication, Jacobian, Hessian value") {
  BihomPoly p = uni({1, 2, 3});
  BihomPoly q = uni({-1, 0, 1});
  CHECK(transvectant(p, q, 0u) == mul(p, q));

  // first transvectant equals the Jacobian dx p dy q - dy p dx q
  BihomPoly jac = sub(mul(partial(p, 0, Var::X), partial(q, 0, Var::Y)),
                      mul(partial(p, 0, Var::Y), partial(q, 0, Var::X)));
  CHECK(transvectant(p, q, 1u) == jac);

  // second transvectant of (x^2 + y^2) with itself: direct differentiation
  // gives D^2 = 8 (a nonzero constant multiple of the classical Hessian 4).
  BihomPoly h = uni({1, 0, 1});
  BihomPoly tv = transvectant(h, h, 2u);
  CHECK(tv.degree() == DegreeVec{0});
  CHECK(tv.coeff(DegreeVec{0}) == GaussRat(8));

  CHECK_THROWS(transvectant(p, uni({1, 1}), 2u));
}

TEST_CASE("D-map is SL2-equivariant; substitution form scales by det") {
  Rng rng(5);
  for (int i = 0; i < 25; ++i) {
    bool unimodular = rng.coin();
    MoebiusMap phi = gen_moebius(rng, unimodular);
    DegreeVec deg{static_cast<unsigned>(rng.range(1, 3))};
    BihomPoly p = gen_random_poly(deg, rng);
    BihomPoly q = gen_random_poly(deg, rng);
    if (unimodular) {
      // D(phi p (x) phi q) = phi . D(p (x) q) exactly for det 1
      TensorPoly lhs = d_map(tensor(act_poly(phi, p), act_poly(phi, q)), 0);
      TensorPoly base = d_map(tensor(p, q), 0);
      MoebiusMap inv = phi.inverse();
      BihomPoly moved = base.poly;
      moved = pair_substitute(moved, 0, inv.a(), inv.b(), inv.c(), inv.d());
      moved = pair_substitute(moved, 1, inv.a(), inv.b(), inv.c(), inv.d());
      CHECK(lhs.poly == moved);
    } else {
      // Substitution form: D(S_A p (x) S_A q) = det(A) S_A(D(p (x) q)).
      auto subst = [&](const BihomPoly& r, std::size_t k) {
        return pair_substitute(r, k, phi.a(), phi.b(), phi.c(), phi.d());
      };
      TensorPoly lhs = d_map(tensor(subst(p, 0), subst(q, 0)), 0);
      BihomPoly base = d_map(tensor(p, q), 0).poly;
      CHECK(lhs.poly == scale(subst(subst(base, 0), 1), phi.det()));
    }
  }
}

TEST_CASE("apolarity form: linear case and the triple-diagonal vanishing example") {
  // lambda = (1): p = x - a y, q = x - b y  ->  a - b
  GaussRat a(mpq_class(3, 2)), b(mpq_class(-5, 7));
  BihomPoly p(DegreeVec{1}), q(DegreeVec{1});
  p.add_term(DegreeVec{1}, GaussRat(1));
  p.add_term(DegreeVec{0}, -a);
  q.add_term(DegreeVec{1}, GaussRat(1));
  q.add_term(DegreeVec{0}, -b);
  CHECK(apolarity_form(p, q) == a - b);

  // x1 x2 x3 - y1 y2 y3 is self-apolar
  CHECK(apolarity_form(triple_diag(1), triple_diag(1)).is_zero());
}

TEST_CASE("dual-basis contraction identity") {
  // D^lambda(p (x) x^a y^(lambda-a)) = lambda! (-1)^a d_x^(lambda-a) d_y^a p
  Rng rng(7);
  for (int i = 0; i < 25; ++i) {
    DegreeVec lam{static_cast<unsigned>(rng.range(1, 3)),
                  static_cast<unsigned>(rng.range(0, 2))};
    BihomPoly p = gen_random_poly(lam, rng);
    auto basis = monomial_basis(lam);
    const DegreeVec& alpha = basis[rng.below(basis.size())];
    BihomPoly mono = BihomPoly::monomial(lam, alpha, GaussRat(1));
    GaussRat lhs = constant_of(d_power(tensor(p, mono), lam));
    BihomPoly d = p;
    for (std::size_t k = 0; k < lam.size(); ++k) {
      for (unsigned u = 0; u < lam[k] - alpha[k]; ++u) d = partial(d, k, Var::X);
      for (unsigned u = 0; u < alpha[k]; ++u) d = partial(d, k, Var::Y);
    }
    GaussRat rhs = d.coeff(DegreeVec(lam.size(), 0)) * GaussRat(mpq_class(factorial(lam)));
    if (total(alpha) % 2 == 1) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("classical apolarity form conversion") {
  // classical = (-1)^{|lambda|} (lambda!)^{-2} D^lambda, probed on monomials
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    DegreeVec lam{static_cast<unsigned>(rng.range(1, 4))};
    BihomPoly p = gen_random_poly(lam, rng);
    BihomPoly q = gen_random_poly(lam, rng);
    CHECK(classical_apolarity(p, q) == classical_form_factor(lam) * apolarity_form(p, q));
  }
}

TEST_CASE("apolarity invariance under the group action") {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    DegreeVec lam{static_cast<unsigned>(rng.range(1, 3)),
                  static_cast<unsigned>(rng.range(1, 2))};
    BihomPoly p = gen_random_poly(lam, rng);
    BihomPoly q = gen_random_poly(lam, rng);
    bool unimodular = rng.coin();
    MoebiusTuple tup{gen_moebius(rng, unimodular), gen_moebius(rng, unimodular)};
    GaussRat before = apolarity_form(p, q);
    GaussRat after = apolarity_form(act_poly(tup, p), act_poly(tup, q));
    if (unimodular) {
      CHECK(after == before);
    } else {
      GaussRat factor(1);
      for (std::size_t k = 0; k < lam.size(); ++k) {
        GaussRat det = tup[k].det();
        // the form scales by det^{-lambda_k} per pair under the action
        for (unsigned u = 0; u < lam[k]; ++u) factor *= det;
      }
      CHECK(after * factor == before);
    }
  }
}

TEST_CASE("symbol closed forms") {
  // identity on V(n) -> (zy - xw)^n
  for (unsigned n = 1; n <= 4; ++n) {
    LinearOp id = LinearOp::identity(DegreeVec{n});
    BihomPoly s = symbol(id);
    BihomPoly base(DegreeVec{1, 1});
    base.add_term(DegreeVec{1, 0}, GaussRat(1));
    base.add_term(DegreeVec{0, 1}, GaussRat(-1));
    BihomPoly expect = BihomPoly::constant(2, GaussRat(1));
    for (unsigned i = 0; i < n; ++i) expect = mul(expect, base);
    CHECK(s == expect);
  }
}

TEST_CASE("operator_from_symbol inverts symbol") {
  Rng rng(13);
  // named examples: the identity symbol recovers the identity
  for (unsigned n = 1; n <= 3; ++n) {
    LinearOp id = LinearOp::identity(DegreeVec{n});
    CHECK(operator_from_symbol(symbol(id), DegreeVec{n}, DegreeVec{n}) == id);
  }
  for (int i = 0; i < 25; ++i) {
    DegreeVec lam{static_cast<unsigned>(rng.range(1, 3))};
    DegreeVec alf{static_cast<unsigned>(rng.range(0, 3))};
    if (rng.coin(30)) {
      lam.push_back(static_cast<unsigned>(rng.range(1, 2)));
      alf.push_back(static_cast<unsigned>(rng.range(0, 2)));
    }
    LinearOp T = gen_random_operator(lam, alf, rng);
    CHECK(operator_from_symbol(symbol(T), lam, alf) == T);
  }
  // two-sided: symbol(operator_from_symbol(s)) == s
  for (int i = 0; i < 10; ++i) {
    DegreeVec lam{2}, alf{1};
    BihomPoly s = gen_random_poly(concat(lam, alf), rng);
    CHECK(symbol(operator_from_symbol(s, lam, alf)) == s);
  }
}

TEST_CASE("symbol is linear") {
  Rng rng(17);
  DegreeVec lam{2}, alf{2};
  LinearOp S = gen_random_operator(lam, alf, rng);
  LinearOp T = gen_random_operator(lam, alf, rng);
  GaussRat a(rng.rat(4, 2), rng.rat(4, 2)), b(rng.rat(4, 2), rng.rat(4, 2));
  BihomPoly lhs = symbol(a * S + b * T);
  BihomPoly rhs = add(scale(symbol(S), a), scale(symbol(T), b));
  CHECK(lhs == rhs);
}

TEST_CASE("evaluation symbols") {
  // (a:b) = (0:1), lambda = (n): x^n
  BihomPoly s = evaluation_symbol(ProjPoint({{GaussRat(0), GaussRat(1)}}), DegreeVec{3});
  CHECK(s == uni({0, 0, 0, 1}));
  // (1:1), lambda = 2: (x - y)^2
  BihomPoly t = evaluation_symbol(ProjPoint({{GaussRat(1), GaussRat(1)}}), DegreeVec{2});
  CHECK(t == uni({1, -2, 1}));

  // contraction: D^lambda((bx-ay)^lambda (x) p) = (lambda!)^2 p(a:b)
  Rng rng(19);
  for (int i = 0; i < 25; ++i) {
    DegreeVec lam{static_cast<unsigned>(rng.range(1, 3)),
                  static_cast<unsigned>(rng.range(1, 2))};
    BihomPoly p = gen_random_poly(lam, rng);
    std::vector<ProjPoint::Coord> cs;
    for (std::size_t k = 0; k < lam.size(); ++k) {
      if (rng.coin(15))
        cs.push_back(ProjPoint::infinity());
      else
        cs.push_back({GaussRat(rng.rat(4, 2), rng.rat(4, 2)), GaussRat(1)});
    }
    ProjPoint z(cs);
    GaussRat lhs = apolarity_form(evaluation_symbol(z, lam), p);
    mpz_class lf = factorial(lam);
    CHECK(lhs == GaussRat(mpq_class(lf * lf)) * evaluate(p, z));
  }
}

TEST_CASE("symbol lemma against the matrix-apply oracle") {
  Rng rng(23);
  // named instances first
  {
    // T = identity, q arbitrary, r = 1: (lambda!)^2 q
    DegreeVec lam{2};
    LinearOp id = LinearOp::identity(lam);
    BihomPoly q = gen_random_poly(lam, rng);
    BihomPoly r = BihomPoly::constant(0, GaussRat(1));
    TensorPoly out = symbol_lemma_contract(symbol(id), lam, DegreeVec{2}, q,
                                           BihomPoly::monomial(DegreeVec{2}, DegreeVec{2},
                                                               GaussRat(1)));
    // oracle comparison below covers the general statement
    (void)out;
    (void)r;
  }
  {
    // T = d/dx on V(2), q = x^2, r = 1 in V(1): result (2!)^2 (2x) (x) r
    DegreeVec lam{2}, alf{1};
    LinearOp D(lam, alf);
    for (std::size_t j = 0; j < D.cols(); ++j) {
      BihomPoly mono = BihomPoly::monomial(lam, D.in_basis()[j], GaussRat(1));
      D.set_column(j, partial(mono, 0, Var::X));
    }
    BihomPoly q = uni({0, 0, 1});
    BihomPoly r(DegreeVec{1});
    r.add_term(DegreeVec{1}, GaussRat(1));  // r = x
    TensorPoly lhs = symbol_lemma_contract(symbol(D), lam, alf, q, r);
    TensorPoly rhs = tensor(scale(D.apply(q), GaussRat(4)), r);
    CHECK(lhs == rhs);
  }
  for (int i = 0; i < 30; ++i) {
    std::size_t m = 1 + rng.below(2), l = 1 + rng.below(2);
    DegreeVec lam, alf;
    for (std::size_t k = 0; k < m; ++k) lam.push_back(static_cast<unsigned>(rng.range(1, 2)));
    for (std::size_t k = 0; k < l; ++k) alf.push_back(static_cast<unsigned>(rng.range(0, 2)));
    LinearOp T = gen_random_operator(lam, alf, rng);
    BihomPoly q = gen_random_poly(lam, rng);
    BihomPoly r = gen_random_poly(alf, rng);
    TensorPoly lhs = symbol_lemma_contract(symbol(T), lam, alf, q, r);
    mpz_class lf = factorial(lam);
    TensorPoly rhs = tensor(scale(T.apply(q), GaussRat(mpq_class(lf * lf))), r);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("symbol equivariance for unimodular tuples") {
  Rng rng(29);
  for (int i = 0; i < 20; ++i) {
    bool unimodular = i % 2 == 0;
    DegreeVec lam{static_cast<unsigned>(rng.range(1, 2))};
    DegreeVec alf{static_cast<unsigned>(rng.range(1, 2))};
    LinearOp T = gen_random_operator(lam, alf, rng);
    MoebiusMap phi = gen_moebius(rng, unimodular);
    MoebiusMap psi = gen_moebius(rng, unimodular);
    // (Phi,Psi) . T := act(psi) o T o act(phi^{-1})
    LinearOp moved(lam, alf);
    for (std::size_t j = 0; j < moved.cols(); ++j) {
      BihomPoly mono = BihomPoly::monomial(lam, moved.in_basis()[j], GaussRat(1));
      moved.set_column(j, act_poly(psi, T.apply(act_poly(phi.inverse(), mono))));
    }
    BihomPoly lhs = symbol(moved);
    BihomPoly rhs = act_poly(MoebiusTuple{phi, psi}, symbol(T));
    if (unimodular)
      CHECK(lhs == rhs);
    else if (!lhs.is_zero())
      CHECK(proportional(lhs, rhs));  // det-power factor only
  }
}

TEST_CASE("operator json round trip") {
  Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    DegreeVec lam{static_cast<unsigned>(rng.range(1, 2)),
                  static_cast<unsigned>(rng.range(0, 2))};
    DegreeVec alf{static_cast<unsigned>(rng.range(0, 2)),
                  static_cast<unsigned>(rng.range(1, 2))};
    LinearOp T = gen_random_operator(lam, alf, rng);
    CHECK(op_from_json(to_json(T)) == T);
  }
}

TEST_CASE("pair evaluation produces the right sections") {
  // p = x1 x2 - y1 y2 at (x2:y2) = (3:1): section 3 x1 - y1
  BihomPoly m(DegreeVec{1, 1});
  m.add_term(DegreeVec{1, 1}, GaussRat(1));
  m.add_term(DegreeVec{0, 0}, GaussRat(-1));
  BihomPoly sec = evaluate_pair(m, 1, GaussRat(3), GaussRat(1));
  CHECK(sec.degree() == DegreeVec{1});
  CHECK(sec.coeff(DegreeVec{1}) == GaussRat(3));
  CHECK(sec.coeff(DegreeVec{0}) == GaussRat(-1));
  // evaluating the section equals evaluating the full polynomial
  Rng rng(37);
  for (int i = 0; i < 15; ++i) {
    BihomPoly p = gen_random_poly(DegreeVec{2, 2}, rng);
    GaussRat a(rng.rat(4, 2), rng.rat(4, 2)), b(1);
    GaussRat c(rng.rat(4, 2), rng.rat(4, 2)), d(1);
    BihomPoly s = evaluate_pair(p, 0, a, b);
    CHECK(evaluate(s, ProjPoint({{c, d}})) ==
          evaluate(p, ProjPoint({{a, b}, {c, d}})));
  }
}

TEST_CASE("apolarity form nondegenerate on small degrees") {
  // Gram matrix of the monomial basis is invertible for a few small lambda.
  for (const DegreeVec& lam : {DegreeVec{1}, DegreeVec{2}, DegreeVec{1, 1}}) {
    auto basis = monomial_basis(lam);
    std::size_t dim = basis.size();
    // The Gram matrix is antidiagonal by the dual-basis identity; check the
    // antidiagonal entries are nonzero.
    for (std::size_t i = 0; i < dim; ++i) {
      BihomPoly a = BihomPoly::monomial(lam, basis[i], GaussRat(1));
      BihomPoly b = BihomPoly::monomial(lam, sub(lam, basis[i]), GaussRat(1));
      CHECK_FALSE(apolarity_form(a, b).is_zero());
    }
  }
}

TEST_CASE("dimension guard") {
  CHECK_THROWS(check_operator_dims(DegreeVec{100, 100}, DegreeVec{100}));
}
