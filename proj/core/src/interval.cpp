#include "stabkit/interval.hpp"

#include <stdexcept>

namespace stabkit {

QIv::QIv(mpq_class l, mpq_class h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("QIv: inverted interval");
}

QIv operator*(const QIv& a, const QIv& b) {
  mpq_class p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  mpq_class lo = p1, hi = p1;
  for (const mpq_class* p : {&p2, &p3, &p4}) {
    if (*p < lo) lo = *p;
    if (*p > hi) hi = *p;
  }
  return QIv(std::move(lo), std::move(hi));
}

QIv QIv::square() const {
  mpq_class a = lo * lo, b = hi * hi;
  mpq_class big = a > b ? a : b;
  if (contains_zero()) return QIv(mpq_class(0), std::move(big));
  mpq_class small = a < b ? a : b;
  return QIv(std::move(small), std::move(big));
}

QIv QIv::intersect(const QIv& a, const QIv& b) {
  mpq_class lo = a.lo > b.lo ? a.lo : b.lo;
  mpq_class hi = a.hi < b.hi ? a.hi : b.hi;
  if (lo > hi) throw std::domain_error("QIv::intersect: empty");
  return QIv(std::move(lo), std::move(hi));
}

QIv QIv::outward_round(unsigned k) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, k);
  mpq_class s(scale);
  mpz_class nlo, nhi;
  mpq_class slo = lo * s, shi = hi * s;
  mpz_fdiv_q(nlo.get_mpz_t(), slo.get_num().get_mpz_t(), slo.get_den().get_mpz_t());
  mpz_cdiv_q(nhi.get_mpz_t(), shi.get_num().get_mpz_t(), shi.get_den().get_mpz_t());
  return QIv(mpq_class(nlo) / s, mpq_class(nhi) / s);
}

BoxC operator/(const BoxC& a, const BoxC& b) {
  QIv n = b.re.square() + b.im.square();
  if (n.contains_zero()) throw std::domain_error("BoxC: division by box containing zero");
  BoxC conj{b.re, -b.im};
  BoxC num = a * conj;
  // Divide both components by the positive interval n.
  auto divide = [&](const QIv& x) {
    mpq_class c1 = x.lo / n.lo, c2 = x.lo / n.hi, c3 = x.hi / n.lo, c4 = x.hi / n.hi;
    mpq_class lo = c1, hi = c1;
    for (const mpq_class* p : {&c2, &c3, &c4}) {
      if (*p < lo) lo = *p;
      if (*p > hi) hi = *p;
    }
    return QIv(std::move(lo), std::move(hi));
  };
  return {divide(num.re), divide(num.im)};
}

BoxC BoxC::centered(const GaussRat& z, const mpq_class& radius) {
  return {QIv(z.re() - radius, z.re() + radius), QIv(z.im() - radius, z.im() + radius)};
}

}  // namespace stabkit
