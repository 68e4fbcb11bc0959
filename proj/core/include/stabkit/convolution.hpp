#pragma once

#include "stabkit/apolarity.hpp"
#include "stabkit/poly.hpp"

namespace stabkit {

// Additive (Walsh) convolution on V(n):
//   p (*+) q = (1/n!) sum_k (n-k)! q_{n-k} y^k (d/dx)^k p,
// bilinear and symmetric; exact.
BihomPoly additive_convolution(const BihomPoly& p, const BihomPoly& q);

// Multiplicative (Grace-Szego) convolution on V(n):
//   p (*x) q = sum_k binom(n,k)^{-1} (-1)^k p_k q_k x^k y^{n-k}.
BihomPoly multiplicative_convolution(const BihomPoly& p, const BihomPoly& q);

// The convolutions as linear operators in Hom(V(n), V(n)) for fixed q.
LinearOp additive_convolution_op(const BihomPoly& q);
LinearOp multiplicative_convolution_op(const BihomPoly& q);

// The operator g -> f(y d/dx) g on V(n), f given by its real roots:
// f(t) = prod (t - alpha_j).
LinearOp diff_composition_op(const std::vector<GaussRat>& alphas, unsigned n);

// The single factor (y d/dx - alpha) on V(n).
LinearOp shifted_derivative_op(const GaussRat& alpha, unsigned n);

}  // namespace stabkit
