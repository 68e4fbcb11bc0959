#include "stabkit/moebius.hpp"

#include <stdexcept>

namespace stabkit {

MoebiusMap::MoebiusMap(GaussRat a, GaussRat b, GaussRat c, GaussRat d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det().is_zero()) throw std::invalid_argument("MoebiusMap: singular matrix");
}

MoebiusMap MoebiusMap::inverse() const {
  GaussRat dt = det();
  return MoebiusMap(d_ / dt, -b_ / dt, -c_ / dt, a_ / dt);
}

MoebiusMap operator*(const MoebiusMap& l, const MoebiusMap& r) {
  return MoebiusMap(l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_,
                    l.c_ * r.a_ + l.d_ * r.c_, l.c_ * r.b_ + l.d_ * r.d_);
}

ProjPoint::Coord apply_point(const MoebiusMap& phi, const ProjPoint::Coord& z) {
  return {phi.a() * z.first + phi.b() * z.second,
          phi.c() * z.first + phi.d() * z.second};
}

ProjPoint apply_point(const MoebiusTuple& phi, const ProjPoint& z) {
  if (phi.size() != z.arity()) throw std::invalid_argument("apply_point: arity mismatch");
  std::vector<ProjPoint::Coord> out;
  out.reserve(z.arity());
  for (std::size_t k = 0; k < z.arity(); ++k) out.push_back(apply_point(phi[k], z.coord(k)));
  return ProjPoint(std::move(out));
}

BihomPoly act_poly(const MoebiusTuple& phi, const BihomPoly& p) {
  if (phi.size() != p.arity()) throw std::invalid_argument("act_poly: arity mismatch");
  BihomPoly r = p;
  for (std::size_t k = 0; k < phi.size(); ++k) {
    MoebiusMap inv = phi[k].inverse();
    // p(phi^{-1} (x,y)): substitute the matrix-vector product.
    r = pair_substitute(r, k, inv.a(), inv.b(), inv.c(), inv.d());
  }
  return r;
}

BihomPoly act_poly(const MoebiusMap& phi, const BihomPoly& p) {
  return act_poly(MoebiusTuple(p.arity(), phi), p);
}

MoebiusTuple inverse(const MoebiusTuple& phi) {
  MoebiusTuple out;
  out.reserve(phi.size());
  for (const auto& m : phi) out.push_back(m.inverse());
  return out;
}

ProjPoint::Coord pole(const MoebiusMap& phi) { return {-phi.d(), phi.c()}; }

BihomPoly polar_derivative(const MoebiusMap& phi, const BihomPoly& p, std::size_t k) {
  if (k >= p.arity()) throw std::invalid_argument("polar_derivative: bad variable index");
  if (p.degree()[k] == 0) throw std::invalid_argument("polar_derivative: degree underflow");
  BihomPoly dx = partial(p, k, Var::X);
  BihomPoly dy = partial(p, k, Var::Y);
  return sub(scale(dx, phi.d()), scale(dy, phi.c()));
}

}  // namespace stabkit
