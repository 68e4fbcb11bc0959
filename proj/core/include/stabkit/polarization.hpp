#pragma once

#include "stabkit/poly.hpp"

namespace stabkit {

// Polarization V(lambda) -> V(1^|lambda|): variable k of V(lambda) expands to
// the consecutive multi-affine pairs (k,1)...(k,lambda_k); the image is
// symmetric within each block. On a single pair, x^j y^(n-j) maps to
// e_j(block) / binom(n,j) with the complementary y-variables filled in.
BihomPoly polarize(const BihomPoly& p);

// Diagonal projection V(1^lambda) -> V(lambda) for the declared grouping:
// identifies the variables of each block. Left inverse of polarize.
BihomPoly project(const BihomPoly& p, const DegreeVec& lambda);

// Evaluates (polarize(p))(pts) through the contraction
// D^lambda(project(evaluation_symbol(pts)) (x) p) / (lambda!)^2 without
// materializing the polarization. pts has |lambda| coordinates.
GaussRat polarized_evaluation(const BihomPoly& p, const ProjPoint& pts);

// The normalization constant relating the contraction route to the direct
// evaluation route; probed per degree and cached ((lambda!)^2 in fact).
GaussRat polarized_evaluation_factor(const DegreeVec& lambda);

// The polarization constant c with D^(1^lambda)(polarize p (x) polarize q) =
// c * D^lambda(p (x) q); determined by a monomial-pair probe and cached.
GaussRat form_polarization_factor(const DegreeVec& lambda);

}  // namespace stabkit
