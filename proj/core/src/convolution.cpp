#include "stabkit/convolution.hpp"

#include <functional>
#include <stdexcept>

namespace stabkit {

namespace {

void require_uni_pair(const BihomPoly& p, const BihomPoly& q, const char* who) {
  if (p.arity() != 1 || q.arity() != 1)
    throw std::invalid_argument(std::string(who) + ": arity must be 1");
  if (p.degree() != q.degree())
    throw std::invalid_argument(std::string(who) + ": degree mismatch");
}

}  // namespace

BihomPoly additive_convolution(const BihomPoly& p, const BihomPoly& q) {
  require_uni_pair(p, q, "additive_convolution");
  const unsigned n = p.degree()[0];
  BihomPoly acc(DegreeVec{n});
  GaussRat inv_nfact(mpq_class(1) / mpq_class(factorial(n)));
  BihomPoly dk = p;  // (d/dx)^k p, rehomogenized by y^k
  for (unsigned k = 0; k <= n; ++k) {
    GaussRat qc = q.coeff(DegreeVec{n - k});
    if (!qc.is_zero()) {
      GaussRat w = qc * GaussRat(mpq_class(factorial(n - k))) * inv_nfact;
      // y^k * dk lives back in V(n): shift the x-exponent bookkeeping.
      for (const auto& [mu, c] : dk.terms()) acc.add_term(mu, c * w);
    }
    if (k == n) break;
    // y * d/dx keeps the homogeneous degree.
    BihomPoly next(DegreeVec{n});
    for (const auto& [mu, c] : dk.terms()) {
      if (mu[0] == 0) continue;
      next.add_term(DegreeVec{mu[0] - 1}, c * GaussRat(static_cast<long>(mu[0])));
    }
    dk = next;
  }
  return acc;
}

BihomPoly multiplicative_convolution(const BihomPoly& p, const BihomPoly& q) {
  require_uni_pair(p, q, "multiplicative_convolution");
  const unsigned n = p.degree()[0];
  BihomPoly acc(DegreeVec{n});
  for (unsigned k = 0; k <= n; ++k) {
    GaussRat pk = p.coeff(DegreeVec{k});
    GaussRat qk = q.coeff(DegreeVec{k});
    if (pk.is_zero() || qk.is_zero()) continue;
    GaussRat w(mpq_class(1) / mpq_class(binomial(n, k)));
    if (k % 2 == 1) w = -w;
    acc.add_term(DegreeVec{k}, pk * qk * w);
  }
  return acc;
}

namespace {

LinearOp op_from_unary(unsigned n, const std::function<BihomPoly(const BihomPoly&)>& f) {
  LinearOp T(DegreeVec{n}, DegreeVec{n});
  for (std::size_t j = 0; j < T.cols(); ++j) {
    BihomPoly mono = BihomPoly::monomial(DegreeVec{n}, T.in_basis()[j], GaussRat(1));
    T.set_column(j, f(mono));
  }
  return T;
}

}  // namespace

LinearOp additive_convolution_op(const BihomPoly& q) {
  unsigned n = q.degree()[0];
  return op_from_unary(n, [&](const BihomPoly& p) { return additive_convolution(p, q); });
}

LinearOp multiplicative_convolution_op(const BihomPoly& q) {
  unsigned n = q.degree()[0];
  return op_from_unary(
      n, [&](const BihomPoly& p) { return multiplicative_convolution(p, q); });
}

LinearOp shifted_derivative_op(const GaussRat& alpha, unsigned n) {
  return op_from_unary(n, [&](const BihomPoly& p) {
    // y * d/dx p - alpha p, degree preserved
    BihomPoly out = scale(p, -alpha);
    for (const auto& [mu, c] : p.terms()) {
      if (mu[0] == 0) continue;
      out.add_term(DegreeVec{mu[0] - 1}, c * GaussRat(static_cast<long>(mu[0])));
    }
    return out;
  });
}

LinearOp diff_composition_op(const std::vector<GaussRat>& alphas, unsigned n) {
  LinearOp T = LinearOp::identity(DegreeVec{n});
  for (const auto& a : alphas) T = compose(shifted_derivative_op(a, n), T);
  return T;
}

}  // namespace stabkit
