#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace stabkit {

// Degree vector / multi-index over a tuple of homogeneous variable pairs.
// Entries are non-negative; componentwise order, sum, concatenation,
// factorial and binomial follow the usual multi-index conventions.
using DegreeVec = std::vector<unsigned>;

bool leq(const DegreeVec& a, const DegreeVec& b);  // componentwise a <= b
DegreeVec add(const DegreeVec& a, const DegreeVec& b);
DegreeVec sub(const DegreeVec& a, const DegreeVec& b);  // requires b <= a
DegreeVec concat(const DegreeVec& a, const DegreeVec& b);
unsigned total(const DegreeVec& a);  // |a|
mpz_class factorial(const DegreeVec& a);
mpz_class binomial(const DegreeVec& n, const DegreeVec& k);

// (1,1,...,1) with |lambda| entries; the degree vector of the polarized space.
DegreeVec ones_of(const DegreeVec& lambda);

// Graded-lex order on multi-indices: first by |mu|, ties by lexicographic.
// This is the canonical basis/serialization order everywhere.
struct GradedLex {
  bool operator()(const DegreeVec& a, const DegreeVec& b) const;
};

// All mu <= lambda in graded-lex order.
std::vector<DegreeVec> monomial_basis(const DegreeVec& lambda);

// Number of mu <= lambda, i.e. prod (lambda_k + 1).
std::size_t basis_size(const DegreeVec& lambda);

// Default desk-scale caps, enforced at the JSON interchange boundary and in
// the random generators (internal tensor intermediates legitimately double
// the variable count and are not subject to them).
struct DegreeCaps {
  unsigned max_total = 24;
  unsigned max_vars = 6;
};
DegreeCaps degree_caps();
void set_degree_caps(DegreeCaps caps);

}  // namespace stabkit
