#pragma once

#include <gmpxx.h>

#include "stabkit/rational.hpp"

namespace stabkit {

// Closed rational interval [lo, hi]; arithmetic is outward-exact.
struct QIv {
  mpq_class lo, hi;

  QIv() : lo(0), hi(0) {}
  QIv(mpq_class v) : lo(v), hi(std::move(v)) {}  // NOLINT
  QIv(mpq_class l, mpq_class h);

  mpq_class width() const { return hi - lo; }
  mpq_class mid() const { return (lo + hi) / 2; }
  bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool strictly_inside(const QIv& outer) const { return outer.lo < lo && hi < outer.hi; }

  friend QIv operator+(const QIv& a, const QIv& b) { return QIv(a.lo + b.lo, a.hi + b.hi); }
  friend QIv operator-(const QIv& a, const QIv& b) { return QIv(a.lo - b.hi, a.hi - b.lo); }
  friend QIv operator-(const QIv& a) { return QIv(-a.hi, -a.lo); }
  friend QIv operator*(const QIv& a, const QIv& b);

  // Tight enclosure of {x^2 : x in this} (never spuriously negative).
  QIv square() const;

  // Intersection; throws if empty.
  static QIv intersect(const QIv& a, const QIv& b);
  static bool disjoint(const QIv& a, const QIv& b) { return a.hi < b.lo || b.hi < a.lo; }

  // Smallest interval with dyadic endpoints of denominator 2^k containing this.
  QIv outward_round(unsigned k) const;
};

// Axis-aligned complex rational box re + i*im.
struct BoxC {
  QIv re, im;

  BoxC() = default;
  BoxC(QIv r, QIv i) : re(std::move(r)), im(std::move(i)) {}
  explicit BoxC(const GaussRat& z) : re(z.re()), im(z.im()) {}

  GaussRat mid() const { return GaussRat(re.mid(), im.mid()); }
  mpq_class max_width() const {
    mpq_class wr = re.width(), wi = im.width();
    return wr > wi ? wr : wi;
  }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool contains(const GaussRat& z) const {
    return re.contains(z.re()) && im.contains(z.im());
  }
  bool strictly_inside(const BoxC& outer) const {
    return re.strictly_inside(outer.re) && im.strictly_inside(outer.im);
  }

  friend BoxC operator+(const BoxC& a, const BoxC& b) { return {a.re + b.re, a.im + b.im}; }
  friend BoxC operator-(const BoxC& a, const BoxC& b) { return {a.re - b.re, a.im - b.im}; }
  friend BoxC operator*(const BoxC& a, const BoxC& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  // Division; throws if the divisor box contains zero.
  friend BoxC operator/(const BoxC& a, const BoxC& b);

  static bool disjoint(const BoxC& a, const BoxC& b) {
    return QIv::disjoint(a.re, b.re) || QIv::disjoint(a.im, b.im);
  }
  static BoxC intersect(const BoxC& a, const BoxC& b) {
    return {QIv::intersect(a.re, b.re), QIv::intersect(a.im, b.im)};
  }

  BoxC outward_round(unsigned k) const { return {re.outward_round(k), im.outward_round(k)}; }
  // Box centered at z with the given radius in both components.
  static BoxC centered(const GaussRat& z, const mpq_class& radius);
};

}  // namespace stabkit
