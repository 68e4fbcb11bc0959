#include "stabkit/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace stabkit {

BoxC eval_box(const CPoly& f, const BoxC& x) {
  BoxC acc;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) acc = acc * x + BoxC(f[k]);
  return acc;
}

std::optional<BoxC> newton_contract(const CPoly& f, const CPoly& fd, const BoxC& x) {
  GaussRat m = x.mid();
  GaussRat fm = f.eval(m);
  BoxC deriv = eval_box(fd, x);
  if (deriv.contains_zero()) return std::nullopt;
  BoxC n = BoxC(m) - BoxC(fm) / deriv;
  if (!n.strictly_inside(x)) return std::nullopt;
  return BoxC::intersect(n, x);
}

namespace {

double to_double(const mpq_class& q) { return q.get_d(); }

std::complex<double> to_cd(const GaussRat& v) {
  return {to_double(v.re()), to_double(v.im())};
}

// Durand-Kerner seeds for all roots of f (squarefree expected).
std::vector<std::complex<double>> dk_seeds(const CPoly& f) {
  int d = f.degree();
  std::vector<std::complex<double>> c(d + 1);
  // Normalize by the largest coefficient magnitude to keep doubles sane.
  mpq_class big = 0;
  for (const auto& v : f.coeffs()) {
    mpq_class m = abs(v.re()) + abs(v.im());
    if (m > big) big = m;
  }
  GaussRat scale_inv(mpq_class(1) / big);
  for (int k = 0; k <= d; ++k) c[k] = to_cd(f[k] * scale_inv);
  // Monic in double arithmetic.
  std::complex<double> lead = c[d];
  for (auto& v : c) v /= lead;

  double radius = 1.0;
  for (int k = 0; k < d; ++k) radius = std::max(radius, std::abs(c[k]));
  radius = 1.0 + radius;

  std::vector<std::complex<double>> z(d);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> acc(1.0, 0.0);
  for (int i = 0; i < d; ++i) {
    acc *= seed;
    z[i] = 0.7 * radius * acc / std::abs(acc) * std::pow(0.93, i);
  }
  auto eval = [&](std::complex<double> t) {
    std::complex<double> acc2(0.0, 0.0);
    for (int k = d; k >= 0; --k) acc2 = acc2 * t + c[k];
    return acc2;
  };
  for (int iter = 0; iter < 800; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
      std::complex<double> denom(1.0, 0.0);
      for (int j = 0; j < d; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      if (std::abs(denom) < 1e-300) {
        denom = 1e-300;
      }
      std::complex<double> delta = eval(z[i]) / denom;
      z[i] -= delta;
      worst = std::max(worst, std::abs(delta) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

GaussRat rational_of(std::complex<double> z) {
  mpq_class re(z.real()), im(z.imag());
  return GaussRat(std::move(re), std::move(im));
}

// Improve a seed by exact-arithmetic Newton steps with dyadic rounding.
GaussRat polish_seed(const CPoly& f, const CPoly& fd, GaussRat z, unsigned rounds) {
  for (unsigned i = 0; i < rounds; ++i) {
    GaussRat d = fd.eval(z);
    if (d.is_zero()) break;
    z = z - f.eval(z) / d;
    // Keep denominators dyadic and bounded.
    BoxC rounded = BoxC(z).outward_round(96);
    z = GaussRat(rounded.re.lo, rounded.im.lo);
  }
  return z;
}

// Certify one simple root near the seed; returns a box of width <= 2^-bits.
std::optional<BoxC> certify_root(const CPoly& f, const CPoly& fd, const GaussRat& seed,
                                 unsigned bits) {
  mpq_class radius(1, 256);
  for (int attempt = 0; attempt < 10; ++attempt) {
    BoxC x = BoxC::centered(seed, radius).outward_round(bits + 16);
    auto n = newton_contract(f, fd, x);
    if (n) {
      BoxC cur = *n;
      mpq_class target;
      {
        mpz_class denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), 2, bits);
        target = mpq_class(1) / mpq_class(denom);
      }
      for (int step = 0; step < 256 && cur.max_width() > target; ++step) {
        auto next = newton_contract(f, fd, cur.outward_round(bits + 16));
        if (!next) {
          auto rounded = cur.outward_round(bits + 16);
          next = newton_contract(f, fd, rounded);
          if (!next) break;
        }
        if (next->max_width() >= cur.max_width()) break;
        cur = *next;
      }
      if (cur.max_width() <= target) return cur;
    }
    radius /= 16;
  }
  return std::nullopt;
}

// Snap a certified box to an exact rational root if one lies inside.
std::optional<GaussRat> snap_exact(const CPoly& f, const BoxC& box) {
  mpq_class re = simplest_rational_in(box.re.lo, box.re.hi);
  mpq_class im = simplest_rational_in(box.im.lo, box.im.hi);
  GaussRat cand(re, im);
  if (f.eval(cand).is_zero()) return cand;
  return std::nullopt;
}

}  // namespace

std::optional<RootIsolation> isolate_roots(const CPoly& f, unsigned ambient_degree,
                                           unsigned precision_bits) {
  if (f.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  int d = f.degree();
  if (d > static_cast<int>(ambient_degree))
    throw std::invalid_argument("isolate_roots: degree exceeds ambient");
  RootIsolation iso;
  iso.ambient_degree = ambient_degree;
  if (ambient_degree > static_cast<unsigned>(d)) {
    IsolatedRoot inf;
    inf.kind = IsolatedRoot::Kind::Infinity;
    inf.multiplicity = ambient_degree - static_cast<unsigned>(d);
    iso.roots.push_back(inf);
  }
  if (d == 0) return iso;

  auto factors = CPoly::squarefree_decomposition(f);
  mpq_class target;
  {
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, precision_bits);
    target = mpq_class(1) / mpq_class(denom);
  }

  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    const CPoly& g = factors[fi];
    unsigned mult = static_cast<unsigned>(fi + 1);
    if (g.degree() <= 0) continue;

    if (g.degree() == 1) {
      GaussRat root = -g[0] / g[1];
      IsolatedRoot r;
      r.kind = IsolatedRoot::Kind::Exact;
      r.value = root;
      r.multiplicity = mult;
      iso.roots.push_back(std::move(r));
      continue;
    }

    QPoly gim = imag_coeffs(g);
    bool real_poly = gim.is_zero();
    std::vector<IsolatedRoot> found;
    std::vector<BoxC> claimed;  // for pairwise disjointness checks

    if (real_poly) {
      QPoly gr = real_coeffs(g);
      auto chain = sturm_chain(gr);
      auto real_ivs = isolate_real_roots(gr);
      for (auto& iv : real_ivs) {
        refine_root(gr, chain, iv, target);
        IsolatedRoot r;
        r.multiplicity = mult;
        if (iv.exact) {
          r.kind = IsolatedRoot::Kind::Exact;
          r.value = GaussRat(iv.value);
        } else {
          r.kind = IsolatedRoot::Kind::Box;
          r.box = BoxC(QIv(iv.lo, iv.hi), QIv(mpq_class(0)));
        }
        found.push_back(std::move(r));
      }
      int remaining = g.degree() - static_cast<int>(real_ivs.size());
      if (remaining > 0) {
        CPoly fd = g.derivative();
        auto seeds = dk_seeds(g);
        for (const auto& s : seeds) {
          if (static_cast<int>(claimed.size()) == remaining) break;
          if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) continue;
          if (std::abs(s.imag()) < 1e-9) continue;  // real roots already exact
          GaussRat z = polish_seed(g, fd, rational_of(s), 4);
          auto box = certify_root(g, fd, z, precision_bits);
          if (!box) continue;
          if (box->im.contains_zero()) continue;  // must be strictly off-axis
          bool dup = false;
          for (const auto& c : claimed)
            if (!BoxC::disjoint(*box, c)) dup = true;
          if (dup) continue;
          claimed.push_back(*box);
          IsolatedRoot r;
          r.kind = IsolatedRoot::Kind::Box;
          r.box = *box;
          r.multiplicity = mult;
          found.push_back(std::move(r));
        }
        if (static_cast<int>(claimed.size()) != remaining) return std::nullopt;
      }
    } else {
      // Real roots of g = A + iB are the real roots of gcd(A, B); isolating
      // them exactly keeps boundary decisions exact downstream.
      QPoly common = QPoly::gcd(real_coeffs(g), gim);
      int real_count = 0;
      if (common.degree() >= 1) {
        QPoly s = common.squarefree_part();
        auto chain = sturm_chain(s);
        for (auto& iv : isolate_real_roots(s)) {
          refine_root(s, chain, iv, target);
          IsolatedRoot r;
          r.multiplicity = mult;
          if (iv.exact) {
            r.kind = IsolatedRoot::Kind::Exact;
            r.value = GaussRat(iv.value);
          } else {
            r.kind = IsolatedRoot::Kind::Box;
            r.box = BoxC(QIv(iv.lo, iv.hi), QIv(mpq_class(0)));
          }
          found.push_back(std::move(r));
          ++real_count;
        }
      }
      int remaining = g.degree() - real_count;
      CPoly fd = g.derivative();
      auto seeds = dk_seeds(g);
      for (const auto& s : seeds) {
        if (static_cast<int>(claimed.size()) == remaining) break;
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) continue;
        if (std::abs(s.imag()) < 1e-9) continue;  // real roots handled exactly
        GaussRat z = polish_seed(g, fd, rational_of(s), 4);
        auto box = certify_root(g, fd, z, precision_bits);
        if (!box) continue;
        if (box->im.contains_zero()) continue;  // strictly complex roots only
        bool dup = false;
        for (const auto& c : claimed)
          if (!BoxC::disjoint(*box, c)) dup = true;
        if (dup) continue;
        claimed.push_back(*box);
        IsolatedRoot r;
        r.multiplicity = mult;
        if (auto exact = snap_exact(g, *box)) {
          r.kind = IsolatedRoot::Kind::Exact;
          r.value = *exact;
        } else {
          r.kind = IsolatedRoot::Kind::Box;
          r.box = *box;
        }
        found.push_back(std::move(r));
      }
      if (static_cast<int>(claimed.size()) != remaining) return std::nullopt;
    }
    for (auto& r : found) iso.roots.push_back(std::move(r));
  }

  unsigned count = 0;
  for (const auto& r : iso.roots) count += r.multiplicity;
  if (count != ambient_degree) return std::nullopt;
  return iso;
}

std::optional<RootIsolation> isolate_roots(const BihomPoly& p, unsigned precision_bits) {
  if (p.arity() != 1) throw std::invalid_argument("isolate_roots: arity must be 1");
  if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  return isolate_roots(dehomogenize_uni(p), p.degree()[0], precision_bits);
}

}  // namespace stabkit
