#pragma once

#include <vector>

#include "stabkit/poly.hpp"

namespace stabkit {

// Invertible 2x2 Gaussian-rational matrix [[a,b],[c,d]] acting on a variable
// pair. det must be nonzero; the unimodular() flag reports det == 1 exactly.
class MoebiusMap {
 public:
  MoebiusMap() : a_(1), b_(0), c_(0), d_(1) {}
  MoebiusMap(GaussRat a, GaussRat b, GaussRat c, GaussRat d);

  const GaussRat& a() const { return a_; }
  const GaussRat& b() const { return b_; }
  const GaussRat& c() const { return c_; }
  const GaussRat& d() const { return d_; }

  GaussRat det() const { return a_ * d_ - b_ * c_; }
  bool unimodular() const { return det().is_one(); }

  MoebiusMap inverse() const;  // adjugate / det, exact
  static MoebiusMap identity() { return MoebiusMap(); }

  friend MoebiusMap operator*(const MoebiusMap& l, const MoebiusMap& r);
  bool operator==(const MoebiusMap& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }

 private:
  GaussRat a_, b_, c_, d_;
};

using MoebiusTuple = std::vector<MoebiusMap>;

// phi . (alpha:beta) by matrix multiplication; never (0,0) since det != 0.
ProjPoint::Coord apply_point(const MoebiusMap& phi, const ProjPoint::Coord& z);
ProjPoint apply_point(const MoebiusTuple& phi, const ProjPoint& z);

// (Phi . p)(x:y) := p(phi_1^{-1}(x_1,y_1), ...); exact group action.
BihomPoly act_poly(const MoebiusTuple& phi, const BihomPoly& p);
BihomPoly act_poly(const MoebiusMap& phi, const BihomPoly& p);

MoebiusTuple inverse(const MoebiusTuple& phi);

// The pole of phi: (-d:c), i.e. phi^{-1} . (-1:0).
ProjPoint::Coord pole(const MoebiusMap& phi);

// d_phi p = (d dx - c dy) p in pair k; the conjugation phi^{-1} dx phi of the
// plain derivative when det(phi) = 1. Throws on degree underflow.
BihomPoly polar_derivative(const MoebiusMap& phi, const BihomPoly& p, std::size_t k);

}  // namespace stabkit
