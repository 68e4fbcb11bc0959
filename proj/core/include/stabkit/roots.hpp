#pragma once

#include <optional>
#include <vector>

#include "stabkit/interval.hpp"
#include "stabkit/unipoly.hpp"

namespace stabkit {

// One isolated root of a univariate polynomial, as an element of CP^1.
// Exactly one representation applies:
//   - exact finite value (Gaussian rational),
//   - certified box known to contain exactly `multiplicity` roots
//     (all copies of one root of a squarefree factor),
//   - the point at infinity (-1:0) from hom-degree drop.
struct IsolatedRoot {
  enum class Kind { Exact, Box, Infinity };
  Kind kind = Kind::Exact;
  GaussRat value;      // Kind::Exact
  BoxC box;            // Kind::Box
  unsigned multiplicity = 1;
};

// All n roots of p in V(n) as isolated objects; the invariant
// sum of multiplicities == n always holds on success.
struct RootIsolation {
  unsigned ambient_degree = 0;
  std::vector<IsolatedRoot> roots;
  unsigned infinity_multiplicity() const {
    unsigned m = 0;
    for (const auto& r : roots)
      if (r.kind == IsolatedRoot::Kind::Infinity) m += r.multiplicity;
    return m;
  }
};

// Isolates all roots of the dehomogenization of p plus the roots at infinity,
// certifying each finite root either exactly or inside a box of width at most
// 2^-precision_bits. Returns nullopt if certification fails (caller reports
// INDETERMINATE rather than guessing).
std::optional<RootIsolation> isolate_roots(const BihomPoly& p, unsigned precision_bits);

// Same, for an explicit univariate polynomial and declared hom degree.
std::optional<RootIsolation> isolate_roots(const CPoly& f, unsigned ambient_degree,
                                           unsigned precision_bits);

// Interval evaluation of f over a box (coefficients exact).
BoxC eval_box(const CPoly& f, const BoxC& x);

// One interval-Newton contraction step; returns the new box if the step
// certifies (N(X) strictly inside X), nullopt otherwise.
std::optional<BoxC> newton_contract(const CPoly& f, const CPoly& fd, const BoxC& x);

}  // namespace stabkit
