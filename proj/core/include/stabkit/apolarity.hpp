#pragma once

#include <cstddef>
#include <vector>

#include "stabkit/moebius.hpp"
#include "stabkit/poly.hpp"

namespace stabkit {

// Element of V(lambda) (x) V(alpha), represented as a polynomial over the
// concatenated degree vector with the first `split` pairs forming group one.
// Tensors are always plain polynomials in disjoint variable groups, never
// formal sums of simple tensors.
struct TensorPoly {
  BihomPoly poly;
  std::size_t split = 0;

  DegreeVec group1_degree() const {
    return DegreeVec(poly.degree().begin(), poly.degree().begin() + split);
  }
  DegreeVec group2_degree() const {
    return DegreeVec(poly.degree().begin() + split, poly.degree().end());
  }
  bool operator==(const TensorPoly& o) const {
    return split == o.split && poly == o.poly;
  }
};

// p (x) q as a polynomial in disjoint variable groups.
TensorPoly tensor(const BihomPoly& p, const BihomPoly& q);

// The invariant map D = dx (x) dy' - dy (x) dx' applied in pair k of both
// groups. Throws on degree underflow in either group.
TensorPoly d_map(const TensorPoly& t, std::size_t k);

// D applied r_k times in every pair k (r indexed against the common arity).
TensorPoly d_power(const TensorPoly& t, const DegreeVec& r);

// Merges the two groups by multiplication (pair k with pair split+k);
// requires equal group arities.
BihomPoly merge_groups(const TensorPoly& t);

// Drops variable pairs that have degree zero in the polynomial.
BihomPoly drop_zero_pairs(const BihomPoly& p, const std::vector<std::size_t>& pairs);

// r-th transvectant: merge o D^r applied to p (x) q. r per-variable.
BihomPoly transvectant(const BihomPoly& p, const BihomPoly& q, const DegreeVec& r);
BihomPoly transvectant(const BihomPoly& p, const BihomPoly& q, unsigned r);

// The apolarity form of V(lambda): D^lambda followed by V(0^m) ~ C.
GaussRat apolarity_form(const BihomPoly& p, const BihomPoly& q);

// Classical binomial-weighted form <p,q>^lambda. Equals
// (-1)^|lambda| / (lambda!)^2 times apolarity_form; see tests for the probe.
GaussRat classical_apolarity(const BihomPoly& p, const BihomPoly& q);
// Conversion constant c with classical = c * apolarity_form for this degree.
GaussRat classical_form_factor(const DegreeVec& lambda);

// Linear map V(lambda) -> V(alpha) as a dense matrix over graded-lex
// monomial bases; column j holds the coefficients of T(x^mu(j) y^(lambda-mu(j))).
class LinearOp {
 public:
  LinearOp(DegreeVec in_degree, DegreeVec out_degree);

  const DegreeVec& in_degree() const { return in_; }
  const DegreeVec& out_degree() const { return out_; }
  std::size_t cols() const { return in_basis_.size(); }
  std::size_t rows() const { return out_basis_.size(); }
  const std::vector<DegreeVec>& in_basis() const { return in_basis_; }
  const std::vector<DegreeVec>& out_basis() const { return out_basis_; }

  const GaussRat& entry(std::size_t row, std::size_t col) const;
  void set_entry(std::size_t row, std::size_t col, GaussRat v);

  // Sets column col to the coefficient vector of image in V(alpha).
  void set_column(std::size_t col, const BihomPoly& image);
  BihomPoly column(std::size_t col) const;

  BihomPoly apply(const BihomPoly& q) const;

  bool restricts_to_real() const;
  bool operator==(const LinearOp& o) const {
    return in_ == o.in_ && out_ == o.out_ && mat_ == o.mat_;
  }

  static LinearOp identity(const DegreeVec& lambda);
  // Operator defined by its action on basis monomials.
  static LinearOp from_images(const DegreeVec& lambda, const DegreeVec& alpha,
                              const std::vector<BihomPoly>& images);

  friend LinearOp operator+(const LinearOp& s, const LinearOp& t);
  friend LinearOp operator*(const GaussRat& c, const LinearOp& t);
  // Composition s o t.
  friend LinearOp compose(const LinearOp& s, const LinearOp& t);

 private:
  DegreeVec in_, out_;
  std::vector<DegreeVec> in_basis_, out_basis_;
  std::vector<GaussRat> mat_;  // column-major
};

// Symb(T) = T[(zy - xw)^lambda] in V(lambda ++ alpha); the first arity(lambda)
// pairs are the dual (z,w) variables, the rest carry the output of T.
BihomPoly symbol(const LinearOp& T);

// Inverse of the symbol map via the contraction T(q) = (lambda!)^{-2}
// D^lambda(s (x) q) in the first variable group; exact two-sided inverse.
LinearOp operator_from_symbol(const BihomPoly& s, const DegreeVec& lambda,
                              const DegreeVec& alpha);

// Symbol of the evaluation functional at z: prod (b_k x_k - a_k y_k)^lambda_k.
BihomPoly evaluation_symbol(const ProjPoint& z, const DegreeVec& lambda);

// D^lambda(sT (x) q*r) contracting the first group of sT against q*r; the
// result lives in V(alpha ++ alpha) and equals (lambda!)^2 T(q) (x) r.
TensorPoly symbol_lemma_contract(const BihomPoly& sT, const DegreeVec& lambda,
                                 const DegreeVec& alpha, const BihomPoly& q,
                                 const BihomPoly& r);

// Max operator size guard: basis_size(lambda) * basis_size(alpha) <= 10^6.
void check_operator_dims(const DegreeVec& lambda, const DegreeVec& alpha);

}  // namespace stabkit
