#pragma once

#include <map>
#include <utility>
#include <vector>

#include "stabkit/degree.hpp"
#include "stabkit/rational.hpp"

namespace stabkit {

// Point of (CP^1)^m: one (a:b) pair per variable, never (0,0).
// Equality is projective per coordinate. The point at infinity is (-1:0).
class ProjPoint {
 public:
  using Coord = std::pair<GaussRat, GaussRat>;

  ProjPoint() = default;
  explicit ProjPoint(std::vector<Coord> coords);
  static Coord infinity() { return {GaussRat(-1), GaussRat(0)}; }

  std::size_t arity() const { return coords_.size(); }
  const Coord& coord(std::size_t k) const { return coords_[k]; }
  const std::vector<Coord>& coords() const { return coords_; }

  bool operator==(const ProjPoint& o) const;

 private:
  std::vector<Coord> coords_;
};

bool coord_eq(const ProjPoint::Coord& a, const ProjPoint::Coord& b);
bool is_infinity(const ProjPoint::Coord& c);

// Element of V(lambda): polynomial homogeneous of degree lambda_k in the
// pair (x_k, y_k), stored sparsely as mu -> coefficient of x^mu y^(lambda-mu).
// Zero coefficients are pruned; the zero polynomial keeps its ambient degree.
class BihomPoly {
 public:
  using TermMap = std::map<DegreeVec, GaussRat, GradedLex>;

  BihomPoly() = default;
  explicit BihomPoly(DegreeVec degree) : degree_(std::move(degree)) {}
  BihomPoly(DegreeVec degree, TermMap terms);

  const DegreeVec& degree() const { return degree_; }
  std::size_t arity() const { return degree_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of x^mu y^(lambda-mu); zero if absent.
  GaussRat coeff(const DegreeVec& mu) const;
  // Adds c to the coefficient at mu, pruning if the result is zero.
  void add_term(const DegreeVec& mu, const GaussRat& c);

  bool operator==(const BihomPoly& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
  }
  bool operator!=(const BihomPoly& o) const { return !(*this == o); }

  static BihomPoly zero(DegreeVec degree) { return BihomPoly(std::move(degree)); }
  // The constant polynomial c in V(0^m).
  static BihomPoly constant(std::size_t m, const GaussRat& c);
  static BihomPoly monomial(DegreeVec degree, DegreeVec mu, GaussRat c);
  std::string str() const;

 private:
  DegreeVec degree_;
  TermMap terms_;
};

BihomPoly add(const BihomPoly& p, const BihomPoly& q);
BihomPoly sub(const BihomPoly& p, const BihomPoly& q);
BihomPoly scale(const BihomPoly& p, const GaussRat& c);
// Product V(lambda) x V(alpha) -> V(lambda + alpha); arities must match.
BihomPoly mul(const BihomPoly& p, const BihomPoly& q);

enum class Var { X, Y };

// Partial derivative in the chosen half of pair k; throws on degree underflow.
BihomPoly partial(const BihomPoly& p, std::size_t k, Var which);

// Substitutes (x_k, y_k) <- (a x_k + b y_k, c x_k + d y_k); degree preserved.
BihomPoly pair_substitute(const BihomPoly& p, std::size_t k, const GaussRat& a,
                          const GaussRat& b, const GaussRat& c, const GaussRat& d);

// Degree-lambda homogenization of a sparse multivariate polynomial given as
// mu -> coefficient; requires mu <= lambda for every term.
BihomPoly homogenize(const std::map<DegreeVec, GaussRat, GradedLex>& f,
                     const DegreeVec& lambda);
// Inverse: sets y = 1, returning the sparse coefficient map.
std::map<DegreeVec, GaussRat, GradedLex> dehomogenize(const BihomPoly& p);

// Value at the given representative; scaling coordinate k by c scales the
// result by c^(lambda_k).
GaussRat evaluate(const BihomPoly& p, const ProjPoint& z);

// Evaluate in a single pair, producing a polynomial in the remaining pairs.
BihomPoly evaluate_pair(const BihomPoly& p, std::size_t k, const GaussRat& a,
                        const GaussRat& b);

bool is_top_degree_monic(const BihomPoly& p);

// True iff all coefficients have zero imaginary part.
bool is_real(const BihomPoly& p);
BihomPoly real_part(const BihomPoly& p);
BihomPoly imag_part(const BihomPoly& p);

// p = c*q for some nonzero scalar c (both nonzero), or both zero.
bool proportional(const BihomPoly& p, const BihomPoly& q);

}  // namespace stabkit
