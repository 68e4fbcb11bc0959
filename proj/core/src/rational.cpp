#include "stabkit/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace stabkit {

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
  mpq_class n = o.norm();
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw std::domain_error("GaussRat: inverse of zero");
  mpq_class n = norm();
  return GaussRat(re_ / n, -im_ / n);
}

std::string GaussRat::str() const {
  if (im_ == 0) return rat_str(re_);
  std::string s;
  if (re_ != 0) s = rat_str(re_);
  if (im_ > 0 && re_ != 0) s += "+";
  s += rat_str(im_) + "i";
  return s;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& v) { return os << v.str(); }

mpq_class parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string rat_str(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace stabkit
