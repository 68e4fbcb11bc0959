#pragma once

#include <utility>
#include <vector>

#include "stabkit/poly.hpp"
#include "stabkit/rational.hpp"

namespace stabkit {

inline bool coeff_is_zero(const mpq_class& v) { return sgn(v) == 0; }
inline bool coeff_is_zero(const GaussRat& v) { return v.is_zero(); }

// Dense univariate polynomial over an exact field (mpq_class or GaussRat).
// coeffs[k] is the coefficient of t^k; trailing zeros are trimmed, the zero
// polynomial has an empty coefficient vector and degree() == -1.
template <typename F>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  const F& operator[](std::size_t k) const { return c_[k]; }
  const F& leading() const { return c_.back(); }

  F eval(const F& t) const {
    F acc{};
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<F> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * F(static_cast<long>(k));
    return UniPoly(std::move(d));
  }

  UniPoly operator-() const {
    std::vector<F> d = c_;
    for (auto& v : d) v = -v;
    return UniPoly(std::move(d));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<F> d(std::max(a.c_.size(), b.c_.size()), F{});
    for (std::size_t k = 0; k < a.c_.size(); ++k) d[k] = d[k] + a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) d[k] = d[k] + b.c_[k];
    return UniPoly(std::move(d));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<F> d(a.c_.size() + b.c_.size() - 1, F{});
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] = d[i + j] + a.c_[i] * b.c_[j];
    return UniPoly(std::move(d));
  }
  friend UniPoly operator*(const F& s, const UniPoly& a) {
    std::vector<F> d = a.c_;
    for (auto& v : d) v = v * s;
    return UniPoly(std::move(d));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // Exact division with remainder over the field; q*b + r == a, deg r < deg b.
  static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

  // Monic gcd via Euclid; gcd(0,0) == 0.
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);

  UniPoly monic() const {
    if (is_zero()) return *this;
    F inv = F(1) / leading();
    return inv * *this;
  }

  // Yun squarefree decomposition: returns g_1, g_2, ... with
  // p = lc * prod g_i^i, each g_i monic squarefree, pairwise coprime.
  static std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

  // Squarefree part p / gcd(p, p'), monic.
  UniPoly squarefree_part() const;

 private:
  void trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

using QPoly = UniPoly<mpq_class>;
using CPoly = UniPoly<GaussRat>;

// Dehomogenization of a univariate bihomogeneous polynomial: f(t) = p(t, 1).
CPoly dehomogenize_uni(const BihomPoly& p);
// The real polynomial when all coefficients are real; throws otherwise.
QPoly dehomogenize_uni_real(const BihomPoly& p);
// Degree-n homogenization back into V(n).
BihomPoly homogenize_uni(const CPoly& f, unsigned n);
BihomPoly homogenize_uni(const QPoly& f, unsigned n);

QPoly real_coeffs(const CPoly& f);
QPoly imag_coeffs(const CPoly& f);
CPoly to_cpoly(const QPoly& f);

// Sturm chain of a real polynomial (standard: p, p', then negated remainders).
std::vector<QPoly> sturm_chain(const QPoly& p);

// Sign variation count at t, or at -inf / +inf.
int sign_variations_at(const std::vector<QPoly>& chain, const mpq_class& t);
int sign_variations_at_neg_inf(const std::vector<QPoly>& chain);
int sign_variations_at_pos_inf(const std::vector<QPoly>& chain);

// Number of distinct real roots of squarefree p in (lo, hi].
int count_roots_half_open(const std::vector<QPoly>& chain, const mpq_class& lo,
                          const mpq_class& hi);
// Number of distinct real roots in all of R.
int count_real_roots(const QPoly& p);

// Isolating interval for one real root of a squarefree polynomial. The root
// lies in (lo, hi] unless exact, in which case value holds it.
struct RootInterval {
  mpq_class lo, hi;
  bool exact = false;
  mpq_class value;
};

// Disjoint isolating intervals for all real roots of squarefree p, sorted.
std::vector<RootInterval> isolate_real_roots(const QPoly& p);

// Halves the interval until hi - lo <= width, snapping to an exact rational
// root when the simplest rational in the interval is one.
void refine_root(const QPoly& p, const std::vector<QPoly>& chain, RootInterval& iv,
                 const mpq_class& width);

// Simplest rational (smallest denominator, then numerator) in [lo, hi].
mpq_class simplest_rational_in(const mpq_class& lo, const mpq_class& hi);

// Cauchy root bound: all complex roots have |z| <= bound.
mpq_class cauchy_root_bound(const QPoly& p);
mpq_class cauchy_root_bound(const CPoly& p);

// True iff p >= 0 everywhere on R (p may be zero).
bool nonnegative_on_reals(const QPoly& p);

}  // namespace stabkit
