#include "stabkit/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabkit {

BihomPoly gen_rooted(unsigned n, const Region& r, Rng& rng) {
  BihomPoly out = BihomPoly::constant(1, GaussRat(1));
  for (unsigned i = 0; i < n; ++i) {
    ProjPoint::Coord root = sample(r, rng);
    BihomPoly lin(DegreeVec{1});
    lin.add_term(DegreeVec{1}, root.second);
    lin.add_term(DegreeVec{0}, -root.first);
    out = mul(out, lin);
  }
  return out;
}

BihomPoly gen_product_rooted(const DegreeVec& lambda, const RegionProduct& roots_in,
                             Rng& rng) {
  if (lambda.size() != roots_in.arity())
    throw std::invalid_argument("gen_product_rooted: arity mismatch");
  BihomPoly out = BihomPoly::constant(lambda.size(), GaussRat(1));
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    BihomPoly uni = gen_rooted(lambda[k], roots_in.factors[k], rng);
    // lift the univariate factor into pair k of the ambient space
    DegreeVec deg(lambda.size(), 0);
    deg[k] = lambda[k];
    BihomPoly lifted(deg);
    for (const auto& [mu, c] : uni.terms()) {
      DegreeVec nu(lambda.size(), 0);
      nu[k] = mu[0];
      lifted.add_term(nu, c);
    }
    out = mul(out, lifted);
  }
  return out;
}

BihomPoly gen_random_poly(const DegreeVec& lambda, Rng& rng, bool real_only) {
  BihomPoly out(lambda);
  auto basis = monomial_basis(lambda);
  for (const auto& mu : basis) {
    if (rng.coin(35)) continue;  // keep it sparse
    GaussRat c(rng.rat(6, 3), real_only ? mpq_class(0) : rng.rat(6, 3));
    out.add_term(mu, c);
  }
  if (out.is_zero())
    out.add_term(basis[rng.below(basis.size())], GaussRat(mpq_class(rng.range(1, 5))));
  return out;
}

LinearOp gen_random_operator(const DegreeVec& lambda, const DegreeVec& alpha, Rng& rng,
                             bool real_only) {
  LinearOp T(lambda, alpha);
  for (std::size_t c = 0; c < T.cols(); ++c)
    for (std::size_t r = 0; r < T.rows(); ++r) {
      if (rng.coin(40)) continue;
      GaussRat v(rng.rat(5, 3), real_only ? mpq_class(0) : rng.rat(5, 3));
      T.set_entry(r, c, v);
    }
  return T;
}

MoebiusMap gen_moebius(Rng& rng, bool unimodular) {
  if (!unimodular) {
    for (int tries = 0; tries < 64; ++tries) {
      GaussRat a(rng.rat(4, 2), rng.rat(4, 2));
      GaussRat b(rng.rat(4, 2), rng.rat(4, 2));
      GaussRat c(rng.rat(4, 2), rng.rat(4, 2));
      GaussRat d(rng.rat(4, 2), rng.rat(4, 2));
      if (!(a * d - b * c).is_zero()) return MoebiusMap(a, b, c, d);
    }
    throw std::logic_error("gen_moebius: exhausted tries");
  }
  // Unimodular: product of elementary det-1 matrices keeps det exactly 1.
  MoebiusMap out = MoebiusMap::identity();
  int count = static_cast<int>(rng.range(1, 3));
  for (int i = 0; i < count; ++i) {
    GaussRat t(rng.rat(4, 2), rng.rat(4, 2));
    MoebiusMap lower(GaussRat(1), GaussRat(0), t, GaussRat(1));
    MoebiusMap upper(GaussRat(1), t, GaussRat(0), GaussRat(1));
    out = rng.coin() ? out * lower : out * upper;
    if (rng.coin(25)) {
      // the rotation [[0,-1],[1,0]] to move away from triangular forms
      out = out * MoebiusMap(GaussRat(0), GaussRat(-1), GaussRat(1), GaussRat(0));
    }
  }
  return out;
}

BihomPoly gen_real_rooted_monic(unsigned n, Rng& rng, long lo, long hi) {
  BihomPoly out = BihomPoly::constant(1, GaussRat(1));
  for (unsigned i = 0; i < n; ++i) {
    // root = lo + (hi - lo) * u for rational u in [0, 1]
    long den = rng.range(1, 6);
    mpq_class u(rng.range(0, den), den);
    u.canonicalize();
    mpq_class root = mpq_class(lo) + mpq_class(hi - lo) * u;
    BihomPoly lin(DegreeVec{1});
    lin.add_term(DegreeVec{1}, GaussRat(1));
    lin.add_term(DegreeVec{0}, GaussRat(-root));
    out = mul(out, lin);
  }
  return out;
}

std::pair<BihomPoly, BihomPoly> gen_interlacing_pair(unsigned n, Rng& rng) {
  // alpha_1 <= beta_1 <= alpha_2 <= ... realized by sorted draws.
  std::vector<mpq_class> draws;
  draws.reserve(2 * n);
  for (unsigned i = 0; i < 2 * n; ++i) {
    mpq_class v(rng.range(-10, 10), rng.range(1, 3));
    v.canonicalize();
    draws.push_back(std::move(v));
  }
  std::sort(draws.begin(), draws.end());
  auto monic_from_roots = [](const std::vector<mpq_class>& roots) {
    BihomPoly out = BihomPoly::constant(1, GaussRat(1));
    for (const auto& r : roots) {
      BihomPoly lin(DegreeVec{1});
      lin.add_term(DegreeVec{1}, GaussRat(1));
      lin.add_term(DegreeVec{0}, GaussRat(-r));
      out = mul(out, lin);
    }
    return out;
  };
  std::vector<mpq_class> alphas, betas;
  for (unsigned i = 0; i < 2 * n; i += 2) {
    alphas.push_back(draws[i]);
    betas.push_back(draws[i + 1]);
  }
  return {monic_from_roots(alphas), monic_from_roots(betas)};
}

}  // namespace stabkit
