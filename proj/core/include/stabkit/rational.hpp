#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace stabkit {

// Exact Gaussian rational: re + im*i with arbitrary-precision rational parts.
// All arithmetic is exact; mpq_class keeps numerator/denominator reduced with
// positive denominators.
class GaussRat {
 public:
  GaussRat() : re_(0), im_(0) {}
  GaussRat(long v) : re_(v), im_(0) {}  // NOLINT: implicit on purpose
  GaussRat(mpq_class re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
  GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static GaussRat i() { return GaussRat(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  // |z|^2 as an exact rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  GaussRat inverse() const;

  // Canonical text form "a/b" or "a/b+c/di" (exact, decimal-free).
  std::string str() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRat& v);

// Parses a canonical rational string "num/den" or plain integer "num".
// Throws std::invalid_argument on malformed input.
mpq_class parse_rat(const std::string& text);
std::string rat_str(const mpq_class& q);

// sign of a rational: -1, 0, +1
inline int sgn_q(const mpq_class& q) { return sgn(q); }

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

}  // namespace stabkit
