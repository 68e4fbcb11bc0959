#pragma once

#include "stabkit/apolarity.hpp"
#include "stabkit/region.hpp"
#include "stabkit/rng.hpp"

namespace stabkit {

// Polynomial with all CP^1 roots in R, built as a product of linear factors
// from sampled roots (an infinity root appears as a factor y when the sampled
// point is (-1:0)).
BihomPoly gen_rooted(unsigned n, const Region& r, Rng& rng);

// Product over variables of per-variable rooted polynomials: stable on the
// complement of the product of root regions.
BihomPoly gen_product_rooted(const DegreeVec& lambda, const RegionProduct& roots_in,
                             Rng& rng);

// Random sparse polynomial of V(lambda) with small Gaussian-rational
// coefficients (not zero).
BihomPoly gen_random_poly(const DegreeVec& lambda, Rng& rng, bool real_only = false);

// Random dense operator with small rational entries.
LinearOp gen_random_operator(const DegreeVec& lambda, const DegreeVec& alpha, Rng& rng,
                             bool real_only = false);

// Random invertible Moebius map; unimodular (det 1) when requested.
MoebiusMap gen_moebius(Rng& rng, bool unimodular);

// Random real-rooted monic polynomial with rational roots in [lo, hi].
BihomPoly gen_real_rooted_monic(unsigned n, Rng& rng, long lo = -8, long hi = 8);

// Random interlacing monic pair (p, q) with p << q.
std::pair<BihomPoly, BihomPoly> gen_interlacing_pair(unsigned n, Rng& rng);

}  // namespace stabkit
