#include "stabkit/stability.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabkit {

namespace {

void require_real_univariate(const BihomPoly& p, const char* who) {
  if (p.arity() != 1) throw std::invalid_argument(std::string(who) + ": arity must be 1");
  if (!is_real(p)) throw std::invalid_argument(std::string(who) + ": complex coefficients");
}

}  // namespace

bool qpoly_real_rooted(const QPoly& f) {
  if (f.degree() <= 0) return true;  // constants have no finite roots
  QPoly s = f.squarefree_part();
  return count_real_roots(s) == s.degree();
}

Rootedness real_rooted(const BihomPoly& p) {
  require_real_univariate(p, "real_rooted");
  if (p.is_zero()) return Rootedness::ZeroPoly;
  QPoly f = dehomogenize_uni_real(p);
  return qpoly_real_rooted(f) ? Rootedness::Yes : Rootedness::No;
}

Rootedness roots_in_boundary_set(const BihomPoly& p, const Arc& J) {
  require_real_univariate(p, "roots_in_boundary_set");
  if (p.is_zero()) return Rootedness::ZeroPoly;
  QPoly f = dehomogenize_uni_real(p);
  if (!qpoly_real_rooted(f)) return Rootedness::No;
  unsigned n = p.degree()[0];
  unsigned inf_mult = n - static_cast<unsigned>(std::max(0, f.degree()));
  if (inf_mult > 0 && !J.contains(ExtPt::infinity())) return Rootedness::No;
  if (f.degree() <= 0) return Rootedness::Yes;

  // Every distinct finite root must lie in J.
  auto roots = exact_real_roots(f);
  for (auto& r : roots) {
    if (r.iv.exact) {
      if (!J.contains(ExtPt::finite(r.iv.value))) return Rootedness::No;
      continue;
    }
    // Refine until the whole isolating interval is inside or outside J.
    auto chain = sturm_chain(r.factor);
    while (true) {
      Arc slice = Arc::span(ExtPt::finite(r.iv.lo), ExtPt::finite(r.iv.hi), true, true);
      if (arc_subset(slice, J)) break;
      if (arcs_disjoint(slice, J)) return Rootedness::No;
      mpq_class width = (r.iv.hi - r.iv.lo) / 2;
      refine_root(r.factor, chain, r.iv, width);
      if (r.iv.exact) {
        if (!J.contains(ExtPt::finite(r.iv.value))) return Rootedness::No;
        break;
      }
    }
  }
  return Rootedness::Yes;
}

std::vector<RealRoot> exact_real_roots(const QPoly& f) {
  std::vector<RealRoot> out;
  auto factors = QPoly::squarefree_decomposition(f);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() <= 0) continue;
    for (auto& iv : isolate_real_roots(factors[i]))
      out.push_back(RealRoot{factors[i], iv, static_cast<unsigned>(i + 1)});
  }
  // Refine until intervals of distinct roots are pairwise disjoint (roots of
  // one polynomial are never equal across Yun factors). After separation the
  // interval midpoint orders the roots soundly.
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) compare_roots(out[i], out[j]);
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) {
    mpq_class va = a.iv.exact ? a.iv.value : (a.iv.lo + a.iv.hi) / 2;
    mpq_class vb = b.iv.exact ? b.iv.value : (b.iv.lo + b.iv.hi) / 2;
    return va < vb;
  });
  return out;
}

int compare_roots(RealRoot& a, RealRoot& b) {
  auto chain_a = sturm_chain(a.factor);
  auto chain_b = sturm_chain(b.factor);
  for (int round = 0; round < 4096; ++round) {
    if (a.iv.exact && b.iv.exact)
      return a.iv.value < b.iv.value ? -1 : (a.iv.value == b.iv.value ? 0 : 1);
    if (a.iv.exact) {
      // Root of b lies strictly inside (lo, hi); compare against the value.
      if (sgn(b.factor.eval(a.iv.value)) == 0 && a.iv.value > b.iv.lo &&
          a.iv.value < b.iv.hi)
        return 0;
      if (a.iv.value <= b.iv.lo) return -1;
      if (a.iv.value >= b.iv.hi) return 1;
      refine_root(b.factor, chain_b, b.iv, (b.iv.hi - b.iv.lo) / 2);
      continue;
    }
    if (b.iv.exact) {
      if (sgn(a.factor.eval(b.iv.value)) == 0 && b.iv.value > a.iv.lo &&
          b.iv.value < a.iv.hi)
        return 0;
      if (b.iv.value <= a.iv.lo) return 1;
      if (b.iv.value >= a.iv.hi) return -1;
      refine_root(a.factor, chain_a, a.iv, (a.iv.hi - a.iv.lo) / 2);
      continue;
    }
    // Both are open intervals with non-root endpoints.
    if (a.iv.hi <= b.iv.lo) return -1;
    if (b.iv.hi <= a.iv.lo) return 1;
    if (a.factor == b.factor && a.iv.lo == b.iv.lo && a.iv.hi == b.iv.hi) return 0;
    // Overlapping: equality is possible only through a shared factor root.
    QPoly g = a.factor == b.factor ? a.factor : QPoly::gcd(a.factor, b.factor);
    if (g.degree() >= 1) {
      mpq_class lo = a.iv.lo > b.iv.lo ? a.iv.lo : b.iv.lo;
      mpq_class hi = a.iv.hi < b.iv.hi ? a.iv.hi : b.iv.hi;
      if (lo < hi) {
        auto gchain = sturm_chain(g);
        if (count_roots_half_open(gchain, lo, hi) > 0) return 0;
      }
    }
    refine_root(a.factor, chain_a, a.iv, (a.iv.hi - a.iv.lo) / 2);
    refine_root(b.factor, chain_b, b.iv, (b.iv.hi - b.iv.lo) / 2);
  }
  throw std::logic_error("compare_roots: failed to separate roots");
}

bool interlace(const BihomPoly& p, const BihomPoly& q) {
  require_real_univariate(p, "interlace");
  require_real_univariate(q, "interlace");
  if (p.degree() != q.degree()) throw std::invalid_argument("interlace: degree mismatch");
  if (!is_top_degree_monic(p) || !is_top_degree_monic(q))
    throw std::invalid_argument("interlace: polynomials must be top-degree monic");
  if (real_rooted(p) != Rootedness::Yes || real_rooted(q) != Rootedness::Yes)
    throw std::invalid_argument("interlace: polynomials must be real-rooted");
  unsigned n = p.degree()[0];
  if (n == 0) return true;

  auto expand = [](const QPoly& f) {
    std::vector<RealRoot> flat;
    for (auto& r : exact_real_roots(f))
      for (unsigned c = 0; c < r.multiplicity; ++c) flat.push_back(r);
    return flat;
  };
  auto alphas = expand(dehomogenize_uni_real(p));
  auto betas = expand(dehomogenize_uni_real(q));
  if (alphas.size() != n || betas.size() != n)
    throw std::logic_error("interlace: unexpected root count");
  // alpha_1 <= beta_1 <= alpha_2 <= ... <= alpha_n <= beta_n
  for (unsigned k = 0; k < n; ++k) {
    if (compare_roots(alphas[k], betas[k]) > 0) return false;
    if (k + 1 < n && compare_roots(betas[k], alphas[k + 1]) > 0) return false;
  }
  return true;
}

namespace {

// Real unimodular shift making both polynomials free of roots at infinity.
MoebiusMap infinity_clearing_shift(const BihomPoly& p, const BihomPoly& q) {
  for (long c = 0;; ++c) {
    for (long sign : {1L, -1L}) {
      GaussRat cc(mpq_class(sign * c));
      ProjPoint probe({{GaussRat(-1), cc}});
      if (!evaluate(p, probe).is_zero() && !evaluate(q, probe).is_zero()) {
        // psi = [[1,0],[c,1]] sends the probe point (-1:c) to infinity? No:
        // psi^{-1}(inf) = (-1:c), so act(psi) clears infinity from both.
        return MoebiusMap(GaussRat(1), GaussRat(0), cc, GaussRat(1));
      }
      if (c == 0) break;
    }
  }
}

}  // namespace

Verdict proper_position(const BihomPoly& p, const BihomPoly& q,
                        const StabilityBudget& budget) {
  if (p.degree() != q.degree()) throw std::invalid_argument("proper_position: degree mismatch");
  if (!is_real(p) || !is_real(q))
    throw std::invalid_argument("proper_position: complex coefficients");
  Verdict v;
  if (p.is_zero() && q.is_zero()) {
    v.status = Verdict::Status::WeaklyZero;
    return v;
  }
  if (p.arity() >= 2) {
    BihomPoly r = add(q, scale(p, GaussRat::i()));
    RegionProduct upper;
    for (std::size_t k = 0; k < p.arity(); ++k)
      upper.factors.push_back(Region::upper_half_plane());
    return multivariate_stable(r, upper, budget);
  }

  // Univariate: exact decision.
  if (p.is_zero() || q.is_zero()) {
    const BihomPoly& other = p.is_zero() ? q : p;
    v.status = real_rooted(other) == Rootedness::Yes ? Verdict::Status::Stable
                                                     : Verdict::Status::Unstable;
    v.note = "degenerate: one side zero";
    return v;
  }
  MoebiusMap psi = infinity_clearing_shift(p, q);
  QPoly fp = dehomogenize_uni_real(act_poly(psi, p));
  QPoly fq = dehomogenize_uni_real(act_poly(psi, q));
  QPoly g = QPoly::gcd(fp, fq);
  QPoly ph = QPoly::divrem(fp, g).first;
  QPoly qh = QPoly::divrem(fq, g).first;
  bool ok = qpoly_real_rooted(g) && qpoly_real_rooted(ph) && qpoly_real_rooted(qh);
  if (ok) {
    // q + ip is H+-stable iff additionally p'q - pq' <= 0 on all of R.
    QPoly w = ph.derivative() * qh - ph * qh.derivative();
    ok = nonnegative_on_reals(-w);
  }
  v.status = ok ? Verdict::Status::Stable : Verdict::Status::Unstable;
  v.note = "exact univariate decision";
  return v;
}

namespace {

enum class BoxPlace { Inside, Outside, Straddle };

Arc closed_slice(const QIv& re) {
  return Arc::span(ExtPt::finite(re.lo), ExtPt::finite(re.hi), true, true);
}

// Membership classification of a finite box against the canonical set.
BoxPlace box_in_normal(const Region::Normal& n, const BoxC& box) {
  const Arc& arc = n.arc;
  int lo_sign = sgn(box.im.lo), hi_sign = sgn(box.im.hi);
  bool arc_possible = lo_sign <= 0 && hi_sign >= 0;  // box meets the real axis
  bool slice_in = false, slice_out = true;
  if (arc_possible) {
    Arc slice = closed_slice(box.re);
    slice_in = !arc.is_empty() && arc_subset(slice, arc);
    slice_out = arc.is_empty() || arcs_disjoint(slice, arc);
  }
  switch (n.side) {
    case Region::Side::Plus:
      if (lo_sign > 0) return BoxPlace::Inside;
      if (lo_sign == 0 && slice_in) return BoxPlace::Inside;
      if (hi_sign < 0) return BoxPlace::Outside;
      if (hi_sign == 0 && slice_out) return BoxPlace::Outside;
      return BoxPlace::Straddle;
    case Region::Side::Minus:
      if (hi_sign < 0) return BoxPlace::Inside;
      if (hi_sign == 0 && slice_in) return BoxPlace::Inside;
      if (lo_sign > 0) return BoxPlace::Outside;
      if (lo_sign == 0 && slice_out) return BoxPlace::Outside;
      return BoxPlace::Straddle;
    case Region::Side::None:
      if (!arc_possible) return BoxPlace::Outside;
      if (lo_sign == 0 && hi_sign == 0) {
        if (slice_in) return BoxPlace::Inside;
        if (slice_out) return BoxPlace::Outside;
        return BoxPlace::Straddle;
      }
      if (slice_out) return BoxPlace::Outside;
      return BoxPlace::Straddle;
    case Region::Side::Both:
      if (!arc_possible) return BoxPlace::Inside;
      if (slice_in) return BoxPlace::Inside;
      if (lo_sign == 0 && hi_sign == 0 && slice_out) return BoxPlace::Outside;
      if (lo_sign < 0 && hi_sign > 0 && slice_out) return BoxPlace::Straddle;
      if (slice_out) return BoxPlace::Straddle;
      return BoxPlace::Straddle;
  }
  return BoxPlace::Straddle;
}

bool point_in_normal(const Region::Normal& n, const GaussRat& v) {
  int im_sign = sgn(v.im());
  switch (n.side) {
    case Region::Side::Plus:
      if (im_sign > 0) return true;
      break;
    case Region::Side::Minus:
      if (im_sign < 0) return true;
      break;
    case Region::Side::None:
      break;
    case Region::Side::Both:
      if (im_sign != 0) return true;
      break;
  }
  return im_sign == 0 && n.arc.contains(ExtPt::finite(v.re()));
}

bool infinity_in_normal(const Region::Normal& n) {
  if (n.side == Region::Side::Both && n.arc.is_full()) return true;
  return n.arc.contains(ExtPt::infinity());
}

}  // namespace

Verdict univariate_stable(const BihomPoly& p, const Region& region,
                          unsigned precision_bits) {
  if (p.arity() != 1) throw std::invalid_argument("univariate_stable: arity must be 1");
  Verdict v;
  if (p.is_zero()) {
    v.status = Verdict::Status::WeaklyZero;
    return v;
  }
  // Pull the region back to its canonical chart by acting on p.
  MoebiusMap inv = region.chart().inverse();
  BihomPoly pulled = act_poly(inv, p);
  Region::Normal n = region.normal();

  auto iso = isolate_roots(pulled, precision_bits);
  if (!iso) {
    v.status = Verdict::Status::Indeterminate;
    v.note = "root certification failed";
    return v;
  }

  bool any_straddle = false;
  std::optional<mpq_class> margin;
  auto note_margin = [&](const mpq_class& d) {
    if (sgn(d) <= 0) return;
    if (!margin || d < *margin) margin = d;
  };
  for (const auto& root : iso->roots) {
    bool inside = false;
    bool straddle = false;
    ProjPoint::Coord canonical_witness;
    mpq_class radius = 0;
    switch (root.kind) {
      case IsolatedRoot::Kind::Exact:
        inside = point_in_normal(n, root.value);
        canonical_witness = {root.value, GaussRat(1)};
        break;
      case IsolatedRoot::Kind::Infinity:
        inside = infinity_in_normal(n);
        canonical_witness = ProjPoint::infinity();
        break;
      case IsolatedRoot::Kind::Box: {
        BoxPlace place = box_in_normal(n, root.box);
        inside = place == BoxPlace::Inside;
        straddle = place == BoxPlace::Straddle;
        canonical_witness = {root.box.mid(), GaussRat(1)};
        radius = root.box.max_width();
        if (place == BoxPlace::Outside &&
            (n.side == Region::Side::Plus || n.side == Region::Side::Minus) &&
            n.arc.is_empty()) {
          // distance to the half-plane boundary as a cheap stability margin
          mpq_class d = n.side == Region::Side::Plus ? -root.box.im.hi : root.box.im.lo;
          note_margin(d);
        }
        break;
      }
    }
    if (inside) {
      v.status = Verdict::Status::Unstable;
      ProjPoint::Coord w = apply_point(region.chart(), canonical_witness);
      v.witness = ProjPoint({w});
      v.witness_radius = radius;
      v.note = radius == 0 ? "exact witness" : "certified witness (canonical-frame radius)";
      return v;
    }
    any_straddle |= straddle;
  }
  if (any_straddle) {
    v.status = Verdict::Status::Indeterminate;
    v.note = "root box straddles the region boundary at full precision";
    return v;
  }
  v.status = Verdict::Status::Stable;
  v.margin = margin;
  return v;
}

Verdict multivariate_stable(const BihomPoly& p, const RegionProduct& region,
                            const StabilityBudget& budget) {
  if (p.arity() != region.arity())
    throw std::invalid_argument("multivariate_stable: arity mismatch");
  Verdict v;
  if (p.is_zero()) {
    v.status = Verdict::Status::WeaklyZero;
    return v;
  }
  if (p.arity() == 1) return univariate_stable(p, region.factors[0], budget.precision_bits);

  Rng rng(budget.seed);
  const std::size_t m = p.arity();
  unsigned long used = 0;

  // Deterministic landmark sweep first: combinations of chart images of
  // simple boundary points. Boundary zeros of the worked examples live here.
  {
    const std::vector<ProjPoint::Coord> canon = {
        ProjPoint::infinity(),
        {GaussRat(0), GaussRat(1)},
        {GaussRat(1), GaussRat(1)},
        {GaussRat(-1), GaussRat(1)},
    };
    std::size_t combos = 1;
    for (std::size_t k = 0; k < m && combos <= 4096; ++k) combos *= canon.size();
    combos = std::min<std::size_t>(combos, budget.samples);
    for (std::size_t r = 0; r < combos; ++r) {
      std::vector<ProjPoint::Coord> cs(m);
      std::size_t idx = r;
      bool all_in = true;
      for (std::size_t k = 0; k < m; ++k) {
        cs[k] = apply_point(region.factors[k].chart(), canon[idx % canon.size()]);
        idx /= canon.size();
        if (!contains(region.factors[k], cs[k])) {
          all_in = false;
          break;
        }
      }
      if (!all_in) continue;
      ++used;
      ProjPoint z(std::move(cs));
      if (evaluate(p, z).is_zero()) {
        v.status = Verdict::Status::Unstable;
        v.witness = z;
        v.witness_radius = mpq_class(0);
        v.samples_used = used;
        v.note = "exact zero at landmark point";
        return v;
      }
    }
  }

  for (unsigned long round = 0; round < budget.samples; ++round) {
    ++used;
    // Exact evaluation at a sampled point of the product region.
    ProjPoint z = sample(region, rng);
    if (evaluate(p, z).is_zero()) {
      v.status = Verdict::Status::Unstable;
      v.witness = z;
      v.witness_radius = mpq_class(0);
      v.samples_used = used;
      v.note = "exact zero at sampled point";
      return v;
    }
    // Per-variable section: fix all other pairs, decide the univariate slice.
    std::size_t k = round % m;
    BihomPoly section = p;
    std::vector<ProjPoint::Coord> fixed(m);
    for (std::size_t j = m; j-- > 0;) {
      if (j == k) continue;
      fixed[j] = sample(region.factors[j], rng);
      section = evaluate_pair(section, j, fixed[j].first, fixed[j].second);
    }
    if (section.is_zero()) {
      // The slice vanishes identically; any point of factor k completes a zero.
      fixed[k] = sample(region.factors[k], rng);
      ProjPoint witness{std::vector<ProjPoint::Coord>(fixed.begin(), fixed.end())};
      v.status = Verdict::Status::Unstable;
      v.witness = witness;
      v.witness_radius = mpq_class(0);
      v.samples_used = used;
      v.note = "section vanishes identically";
      return v;
    }
    Verdict sec = univariate_stable(section, region.factors[k], budget.precision_bits);
    if (sec.status == Verdict::Status::Unstable) {
      fixed[k] = sec.witness->coord(0);
      ProjPoint witness{std::vector<ProjPoint::Coord>(fixed.begin(), fixed.end())};
      v.status = Verdict::Status::Unstable;
      v.witness = witness;
      v.witness_radius = sec.witness_radius;
      v.samples_used = used;
      v.note = "section root inside region (" + sec.note + ")";
      return v;
    }
  }
  v.status = Verdict::Status::Indeterminate;
  v.samples_used = used;
  v.note = "no counterexample within budget";
  return v;
}

RootEnclosure minmax_root(const BihomPoly& p, unsigned precision_bits) {
  require_real_univariate(p, "minmax_root");
  if (p.is_zero()) throw std::invalid_argument("minmax_root: zero polynomial");
  if (real_rooted(p) != Rootedness::Yes)
    throw std::invalid_argument("minmax_root: polynomial is not real-rooted");
  QPoly f = dehomogenize_uni_real(p);
  RootEnclosure out;
  out.infinity_multiplicity = p.degree()[0] - static_cast<unsigned>(std::max(0, f.degree()));
  if (f.degree() <= 0) return out;
  auto roots = exact_real_roots(f);
  mpq_class width;
  {
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, precision_bits);
    width = mpq_class(1) / mpq_class(denom);
  }
  auto enclose = [&](RealRoot& r) {
    auto chain = sturm_chain(r.factor);
    refine_root(r.factor, chain, r.iv, width);
    if (r.iv.exact) return QIv(r.iv.value, r.iv.value);
    return QIv(r.iv.lo, r.iv.hi);
  };
  out.min_root = enclose(roots.front());
  out.max_root = enclose(roots.back());
  return out;
}

}  // namespace stabkit
