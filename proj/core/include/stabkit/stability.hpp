#pragma once

#include <optional>
#include <string>

#include "stabkit/region.hpp"
#include "stabkit/roots.hpp"

namespace stabkit {

// Outcome of an exact yes/no question that must single out the zero
// polynomial (weak stability admits it; strong does not).
enum class Rootedness { Yes, No, ZeroPoly };

struct Verdict {
  enum class Status { Stable, Unstable, Indeterminate, WeaklyZero };
  Status status = Status::Indeterminate;
  std::optional<ProjPoint> witness;          // for Unstable
  std::optional<mpq_class> witness_radius;   // 0 for exact witnesses
  std::optional<mpq_class> margin;           // numeric path, distance lower bound
  unsigned long samples_used = 0;
  std::string note;

  bool stable() const { return status == Status::Stable; }
  bool unstable() const { return status == Status::Unstable; }
};

struct StabilityBudget {
  unsigned long samples = 2000;
  unsigned precision_bits = 64;
  std::uint64_t seed = 1;
};

// Exact real-rootedness of a real univariate polynomial in V(n) via Sturm
// theory; roots at infinity (degree drop) count as real.
Rootedness real_rooted(const BihomPoly& p);
bool qpoly_real_rooted(const QPoly& f);

// Exact: real-rooted and every CP^1 root (including infinity) lies in J.
Rootedness roots_in_boundary_set(const BihomPoly& p, const Arc& J);

// One real root of a real polynomial, exactly: either a rational value or a
// squarefree factor plus isolating interval, with multiplicity.
struct RealRoot {
  QPoly factor;       // squarefree, has exactly one root in iv
  RootInterval iv;
  unsigned multiplicity = 1;
};

// All real roots of f with multiplicity, sorted increasingly, with pairwise
// disjoint (or exactly equal) isolating intervals.
std::vector<RealRoot> exact_real_roots(const QPoly& f);

// -1 / 0 / +1 comparison of two exactly-represented real roots; refines the
// isolating intervals as needed and detects shared roots via gcd.
int compare_roots(RealRoot& a, RealRoot& b);

// Exact interlacing test per the chain a_1 <= b_1 <= a_2 <= ... <= a_n <= b_n
// for top-degree monic real-rooted p, q in V(n); throws otherwise.
bool interlace(const BihomPoly& p, const BihomPoly& q);

// Proper position p << q, i.e. q + ip weakly upper-half-plane stable.
// Univariate: exact. Multivariate: falsification through multivariate_stable.
Verdict proper_position(const BihomPoly& p, const BihomPoly& q,
                        const StabilityBudget& budget = {});

// Certified stability decision for one variable pair: pulls the region back
// to its canonical chart, isolates all roots in CP^1 and compares every
// certified root against the canonical set. A root box that straddles the
// region boundary at full precision yields Indeterminate, never a guess.
Verdict univariate_stable(const BihomPoly& p, const Region& region,
                          unsigned precision_bits = 64);

// Falsification by exact sampling plus per-variable univariate sections.
// Never returns an unconditional Stable for two or more variables: the
// no-counterexample outcome is Indeterminate with the budget recorded.
Verdict multivariate_stable(const BihomPoly& p, const RegionProduct& region,
                            const StabilityBudget& budget = {});

// Certified rational enclosures of the smallest and largest root of a
// real-rooted polynomial; enclosures absent when every root is at infinity.
struct RootEnclosure {
  std::optional<QIv> min_root, max_root;
  unsigned infinity_multiplicity = 0;
};
RootEnclosure minmax_root(const BihomPoly& p, unsigned precision_bits = 64);

}  // namespace stabkit
