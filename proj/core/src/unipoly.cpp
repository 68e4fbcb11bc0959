#include "stabkit/unipoly.hpp"

#include <stdexcept>

namespace stabkit {

template <typename F>
std::pair<UniPoly<F>, UniPoly<F>> UniPoly<F>::divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("UniPoly::divrem: division by zero");
  std::vector<F> rem = a.c_;
  int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<F> quo(a.degree() - db + 1, F{});
  F lead_inv = F(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    F coef = rem[k] * lead_inv;
    if (coeff_is_zero(coef)) continue;
    quo[k - db] = coef;
    for (int j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - coef * b.c_[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

template <typename F>
UniPoly<F> UniPoly<F>::gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = divrem(x, y);
    x = y;
    y = r;
  }
  return x.monic();
}

template <typename F>
std::vector<UniPoly<F>> UniPoly<F>::squarefree_decomposition(const UniPoly& p) {
  std::vector<UniPoly> out;
  if (p.degree() <= 0) return out;
  UniPoly a = p.monic();
  UniPoly d = a.derivative();
  UniPoly g = gcd(a, d);
  if (g.degree() == 0) {
    out.push_back(a);
    return out;
  }
  UniPoly w = divrem(a, g).first;
  UniPoly y = divrem(d, g).first;
  UniPoly z = y - w.derivative();
  while (!w.is_zero() && w.degree() > 0) {
    UniPoly gi = gcd(w, z);
    out.push_back(gi.monic());
    w = divrem(w, gi).first;
    z = divrem(z, gi).first - w.derivative();
  }
  return out;
}

template <typename F>
UniPoly<F> UniPoly<F>::squarefree_part() const {
  if (degree() <= 0) return monic();
  UniPoly g = gcd(*this, derivative());
  return divrem(*this, g).first.monic();
}

template class UniPoly<mpq_class>;
template class UniPoly<GaussRat>;

CPoly dehomogenize_uni(const BihomPoly& p) {
  if (p.arity() != 1) throw std::invalid_argument("dehomogenize_uni: arity must be 1");
  std::vector<GaussRat> c(p.degree()[0] + 1, GaussRat());
  for (const auto& [mu, v] : p.terms()) c[mu[0]] = v;
  return CPoly(std::move(c));
}

QPoly dehomogenize_uni_real(const BihomPoly& p) {
  if (!is_real(p)) throw std::invalid_argument("dehomogenize_uni_real: complex coefficients");
  CPoly f = dehomogenize_uni(p);
  return real_coeffs(f);
}

BihomPoly homogenize_uni(const CPoly& f, unsigned n) {
  if (f.degree() > static_cast<int>(n)) throw std::invalid_argument("homogenize_uni: degree overflow");
  BihomPoly p(DegreeVec{n});
  for (std::size_t k = 0; k < f.coeffs().size(); ++k)
    p.add_term(DegreeVec{static_cast<unsigned>(k)}, f[k]);
  return p;
}

BihomPoly homogenize_uni(const QPoly& f, unsigned n) { return homogenize_uni(to_cpoly(f), n); }

QPoly real_coeffs(const CPoly& f) {
  std::vector<mpq_class> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.push_back(v.re());
  return QPoly(std::move(c));
}

QPoly imag_coeffs(const CPoly& f) {
  std::vector<mpq_class> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.push_back(v.im());
  return QPoly(std::move(c));
}

CPoly to_cpoly(const QPoly& f) {
  std::vector<GaussRat> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.emplace_back(v);
  return CPoly(std::move(c));
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  QPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const QPoly& a = chain[chain.size() - 2];
    const QPoly& b = chain.back();
    QPoly r = QPoly::divrem(a, b).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {
int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}
}  // namespace

int sign_variations_at(const std::vector<QPoly>& chain, const mpq_class& t) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& f : chain) signs.push_back(f.is_zero() ? 0 : sgn(f.eval(t)));
  return count_variations(signs);
}

int sign_variations_at_pos_inf(const std::vector<QPoly>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& f : chain) signs.push_back(f.is_zero() ? 0 : sgn(f.leading()));
  return count_variations(signs);
}

int sign_variations_at_neg_inf(const std::vector<QPoly>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& f : chain) {
    if (f.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = sgn(f.leading());
    if (f.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int count_roots_half_open(const std::vector<QPoly>& chain, const mpq_class& lo,
                          const mpq_class& hi) {
  if (lo >= hi) return 0;
  return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

int count_real_roots(const QPoly& p) {
  QPoly s = p.squarefree_part();
  if (s.degree() <= 0) return 0;
  auto chain = sturm_chain(s);
  return sign_variations_at_neg_inf(chain) - sign_variations_at_pos_inf(chain);
}

std::vector<RootInterval> isolate_real_roots(const QPoly& p) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  auto chain = sturm_chain(p);
  mpq_class bound = cauchy_root_bound(p) + 1;
  mpq_class lo = -bound, hi = bound;
  int n_total = sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
  if (n_total == 0) return out;

  struct Seg {
    mpq_class lo, hi;
    int count;
  };
  std::vector<Seg> stack{{lo, hi, n_total}};
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1) {
      RootInterval iv{s.lo, s.hi, false, 0};
      out.push_back(std::move(iv));
      continue;
    }
    mpq_class mid = (s.lo + s.hi) / 2;
    if (sgn(p.eval(mid)) == 0) {
      // Exact root at the midpoint; peel it off as a degenerate interval.
      out.push_back(RootInterval{mid, mid, true, mid});
      mpq_class eps = (s.hi - s.lo) / 1024;
      while (true) {
        mpq_class a = mid - eps, b = mid + eps;
        if (sgn(p.eval(a)) != 0 && sgn(p.eval(b)) != 0 &&
            count_roots_half_open(chain, a, b) == 1) {
          stack.push_back({s.lo, a, count_roots_half_open(chain, s.lo, a)});
          stack.push_back({b, s.hi, count_roots_half_open(chain, b, s.hi)});
          break;
        }
        eps /= 2;
      }
    } else {
      int left = count_roots_half_open(chain, s.lo, mid);
      stack.push_back({s.lo, mid, left});
      stack.push_back({mid, s.hi, s.count - left});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.hi < b.hi; });
  return out;
}

void refine_root(const QPoly& p, const std::vector<QPoly>& chain, RootInterval& iv,
                 const mpq_class& width) {
  if (iv.exact) return;
  while (iv.hi - iv.lo > width) {
    mpq_class cand = simplest_rational_in(iv.lo, iv.hi);
    if (sgn(p.eval(cand)) == 0) {
      iv.exact = true;
      iv.value = cand;
      iv.lo = iv.hi = cand;
      return;
    }
    mpq_class mid = (iv.lo + iv.hi) / 2;
    if (sgn(p.eval(mid)) == 0) {
      iv.exact = true;
      iv.value = mid;
      iv.lo = iv.hi = mid;
      return;
    }
    if (count_roots_half_open(chain, iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
}

mpq_class simplest_rational_in(const mpq_class& lo, const mpq_class& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
  // Stern-Brocot style walk over the integer shifts.
  mpq_class a = lo, b = hi;
  mpz_class shift = 0;
  // Reduce to a <= b with a floor shift so that 0 <= a.
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  a -= mpq_class(fl);
  b -= mpq_class(fl);
  shift = fl;
  if (sgn(a) == 0) return mpq_class(shift);
  if (b >= 1) return mpq_class(shift + 1);
  // Both in (0,1): recurse via the mediant walk on inverted interval.
  mpq_class inner = simplest_rational_in(1 / b, 1 / a);
  return mpq_class(shift) + 1 / inner;
}

mpq_class cauchy_root_bound(const QPoly& p) {
  if (p.degree() < 0) return 0;
  mpq_class lead = abs(p.leading());
  mpq_class best = 0;
  for (int k = 0; k < p.degree(); ++k) {
    mpq_class r = abs(p[k]) / lead;
    if (r > best) best = r;
  }
  return best + 1;
}

mpq_class cauchy_root_bound(const CPoly& p) {
  if (p.degree() < 0) return 0;
  // Upper bound on |c_k| over a lower bound on |lead|.
  auto upper = [](const GaussRat& v) { return mpq_class(abs(v.re()) + abs(v.im())); };
  auto lower = [](const GaussRat& v) {
    mpq_class ar = abs(v.re()), ai = abs(v.im());
    return ar > ai ? ar : ai;
  };
  mpq_class lead = lower(p.leading());
  mpq_class best = 0;
  for (int k = 0; k < p.degree(); ++k) {
    mpq_class r = upper(p[k]) / lead;
    if (r > best) best = r;
  }
  return best + 1;
}

bool nonnegative_on_reals(const QPoly& p) {
  if (p.is_zero()) return true;
  if (p.degree() % 2 == 1) return false;
  if (sgn(p.leading()) < 0) return false;
  // No sign change anywhere iff no real root of odd multiplicity.
  auto factors = QPoly::squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i % 2 == 0 && count_real_roots(factors[i]) > 0) return false;  // odd power i+1
  }
  return true;
}

}  // namespace stabkit
