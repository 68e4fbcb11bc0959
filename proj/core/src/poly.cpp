#include "stabkit/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace stabkit {

ProjPoint::ProjPoint(std::vector<Coord> coords) : coords_(std::move(coords)) {
  for (const auto& [a, b] : coords_)
    if (a.is_zero() && b.is_zero())
      throw std::invalid_argument("ProjPoint: coordinate (0,0)");
}

bool coord_eq(const ProjPoint::Coord& a, const ProjPoint::Coord& b) {
  // (a1:a2) == (b1:b2) iff the cross-determinant vanishes.
  return (a.first * b.second - a.second * b.first).is_zero();
}

bool is_infinity(const ProjPoint::Coord& c) { return c.second.is_zero(); }

bool ProjPoint::operator==(const ProjPoint& o) const {
  if (coords_.size() != o.coords_.size()) return false;
  for (std::size_t k = 0; k < coords_.size(); ++k)
    if (!coord_eq(coords_[k], o.coords_[k])) return false;
  return true;
}

BihomPoly::BihomPoly(DegreeVec degree, TermMap terms)
    : degree_(std::move(degree)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (!leq(it->first, degree_))
      throw std::invalid_argument("BihomPoly: term index exceeds degree");
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

GaussRat BihomPoly::coeff(const DegreeVec& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? GaussRat() : it->second;
}

void BihomPoly::add_term(const DegreeVec& mu, const GaussRat& c) {
  if (c.is_zero()) return;
  if (!leq(mu, degree_)) throw std::invalid_argument("BihomPoly: term index exceeds degree");
  auto [it, inserted] = terms_.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BihomPoly BihomPoly::constant(std::size_t m, const GaussRat& c) {
  BihomPoly p(DegreeVec(m, 0));
  p.add_term(DegreeVec(m, 0), c);
  return p;
}

BihomPoly BihomPoly::monomial(DegreeVec degree, DegreeVec mu, GaussRat c) {
  BihomPoly p(std::move(degree));
  p.add_term(mu, c);
  return p;
}

std::string BihomPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (std::size_t k = 0; k < degree_.size(); ++k) {
      if (mu[k] > 0) os << "*x" << k + 1 << "^" << mu[k];
      if (degree_[k] - mu[k] > 0) os << "*y" << k + 1 << "^" << degree_[k] - mu[k];
    }
  }
  return os.str();
}

BihomPoly add(const BihomPoly& p, const BihomPoly& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("add: degree mismatch");
  BihomPoly r = p;
  for (const auto& [mu, c] : q.terms()) r.add_term(mu, c);
  return r;
}

BihomPoly sub(const BihomPoly& p, const BihomPoly& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("sub: degree mismatch");
  BihomPoly r = p;
  for (const auto& [mu, c] : q.terms()) r.add_term(mu, -c);
  return r;
}

BihomPoly scale(const BihomPoly& p, const GaussRat& c) {
  BihomPoly r(p.degree());
  if (c.is_zero()) return r;
  for (const auto& [mu, v] : p.terms()) r.add_term(mu, v * c);
  return r;
}

BihomPoly mul(const BihomPoly& p, const BihomPoly& q) {
  if (p.arity() != q.arity()) throw std::invalid_argument("mul: variable-count mismatch");
  BihomPoly r(add(p.degree(), q.degree()));
  for (const auto& [mu, a] : p.terms())
    for (const auto& [nu, b] : q.terms()) r.add_term(add(mu, nu), a * b);
  return r;
}

BihomPoly partial(const BihomPoly& p, std::size_t k, Var which) {
  if (k >= p.arity()) throw std::invalid_argument("partial: bad variable index");
  if (p.degree()[k] == 0) throw std::invalid_argument("partial: degree underflow");
  DegreeVec d = p.degree();
  --d[k];
  BihomPoly r(d);
  for (const auto& [mu, c] : p.terms()) {
    if (which == Var::X) {
      if (mu[k] == 0) continue;
      DegreeVec nu = mu;
      --nu[k];
      r.add_term(nu, c * GaussRat(static_cast<long>(mu[k])));
    } else {
      unsigned ydeg = p.degree()[k] - mu[k];
      if (ydeg == 0) continue;
      r.add_term(mu, c * GaussRat(static_cast<long>(ydeg)));
    }
  }
  return r;
}

BihomPoly pair_substitute(const BihomPoly& p, std::size_t k, const GaussRat& a,
                          const GaussRat& b, const GaussRat& c, const GaussRat& d) {
  if (k >= p.arity()) throw std::invalid_argument("pair_substitute: bad variable index");
  BihomPoly r(p.degree());
  const unsigned lam = p.degree()[k];
  // Precompute (a x + b y)^i (c x + d y)^(lam-i) coefficient tables.
  std::vector<std::vector<GaussRat>> table(lam + 1);
  for (unsigned i = 0; i <= lam; ++i) {
    // coefficients of x^j y^(lam-j) in (a x + b y)^i (c x + d y)^(lam-i)
    std::vector<GaussRat> first(i + 1), second(lam - i + 1);
    for (unsigned s = 0; s <= i; ++s) {
      GaussRat t(mpq_class(binomial(i, s)));
      for (unsigned u = 0; u < s; ++u) t *= a;
      for (unsigned u = 0; u < i - s; ++u) t *= b;
      first[s] = t;
    }
    for (unsigned s = 0; s <= lam - i; ++s) {
      GaussRat t(mpq_class(binomial(lam - i, s)));
      for (unsigned u = 0; u < s; ++u) t *= c;
      for (unsigned u = 0; u < lam - i - s; ++u) t *= d;
      second[s] = t;
    }
    table[i].assign(lam + 1, GaussRat());
    for (unsigned s = 0; s <= i; ++s)
      for (unsigned t = 0; t <= lam - i; ++t) table[i][s + t] += first[s] * second[t];
  }
  for (const auto& [mu, coef] : p.terms()) {
    const auto& row = table[mu[k]];
    for (unsigned j = 0; j <= lam; ++j) {
      if (row[j].is_zero()) continue;
      DegreeVec nu = mu;
      nu[k] = j;
      r.add_term(nu, coef * row[j]);
    }
  }
  return r;
}

BihomPoly homogenize(const std::map<DegreeVec, GaussRat, GradedLex>& f,
                     const DegreeVec& lambda) {
  BihomPoly r(lambda);
  for (const auto& [mu, c] : f) {
    if (mu.size() != lambda.size() || !leq(mu, lambda))
      throw std::invalid_argument("homogenize: degree overflow");
    r.add_term(mu, c);
  }
  return r;
}

std::map<DegreeVec, GaussRat, GradedLex> dehomogenize(const BihomPoly& p) {
  std::map<DegreeVec, GaussRat, GradedLex> f;
  for (const auto& [mu, c] : p.terms()) f.emplace(mu, c);
  return f;
}

GaussRat evaluate(const BihomPoly& p, const ProjPoint& z) {
  if (z.arity() != p.arity()) throw std::invalid_argument("evaluate: arity mismatch");
  GaussRat acc;
  for (const auto& [mu, c] : p.terms()) {
    GaussRat t = c;
    for (std::size_t k = 0; k < p.arity(); ++k) {
      const auto& [a, b] = z.coord(k);
      for (unsigned u = 0; u < mu[k]; ++u) t *= a;
      for (unsigned u = 0; u < p.degree()[k] - mu[k]; ++u) t *= b;
    }
    acc += t;
  }
  return acc;
}

BihomPoly evaluate_pair(const BihomPoly& p, std::size_t k, const GaussRat& a,
                        const GaussRat& b) {
  if (k >= p.arity()) throw std::invalid_argument("evaluate_pair: bad variable index");
  DegreeVec d = p.degree();
  d.erase(d.begin() + static_cast<std::ptrdiff_t>(k));
  BihomPoly r(d);
  for (const auto& [mu, c] : p.terms()) {
    GaussRat t = c;
    for (unsigned u = 0; u < mu[k]; ++u) t *= a;
    for (unsigned u = 0; u < p.degree()[k] - mu[k]; ++u) t *= b;
    if (t.is_zero()) continue;
    DegreeVec nu = mu;
    nu.erase(nu.begin() + static_cast<std::ptrdiff_t>(k));
    r.add_term(nu, t);
  }
  return r;
}

bool is_top_degree_monic(const BihomPoly& p) { return p.coeff(p.degree()).is_one(); }

bool is_real(const BihomPoly& p) {
  for (const auto& [mu, c] : p.terms())
    if (!c.is_real()) return false;
  return true;
}

BihomPoly real_part(const BihomPoly& p) {
  BihomPoly r(p.degree());
  for (const auto& [mu, c] : p.terms()) r.add_term(mu, GaussRat(c.re()));
  return r;
}

BihomPoly imag_part(const BihomPoly& p) {
  BihomPoly r(p.degree());
  for (const auto& [mu, c] : p.terms()) r.add_term(mu, GaussRat(c.im()));
  return r;
}

bool proportional(const BihomPoly& p, const BihomPoly& q) {
  if (p.degree() != q.degree()) return false;
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  const auto& [mu0, c0] = *p.terms().begin();
  GaussRat d0 = q.coeff(mu0);
  if (d0.is_zero()) return false;
  // q == (d0/c0) * p
  GaussRat ratio = d0 / c0;
  return q == scale(p, ratio);
}

}  // namespace stabkit
