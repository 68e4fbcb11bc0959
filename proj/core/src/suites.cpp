#include "stabkit/suites.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

#include "stabkit/convolution.hpp"
#include "stabkit/generators.hpp"
#include "stabkit/polarization.hpp"
#include "stabkit/stability.hpp"

namespace stabkit {

Json SuiteReport::to_json() const {
  Json j = to_json_stable();
  j["wall_ms"] = wall_ms;
  return j;
}

Json SuiteReport::to_json_stable() const {
  Json fails = Json::array();
  for (const auto& f : failures) {
    Json jf;
    jf["case_index"] = f.case_index;
    jf["case_seed"] = f.case_seed;
    jf["what"] = f.what;
    jf["inputs"] = f.inputs;
    fails.push_back(std::move(jf));
  }
  Json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["budget"] = budget;
  j["cases_run"] = cases_run;
  j["indeterminates"] = indeterminates;
  j["failures"] = std::move(fails);
  j["wall_ms"] = 0.0;
  return j;
}

namespace {

struct CaseCtx {
  unsigned long index = 0;
  std::uint64_t case_seed = 0;
  SuiteReport* report = nullptr;

  void fail(const std::string& what, Json inputs = Json::object()) {
    CaseFailure f;
    f.case_index = index;
    f.case_seed = case_seed;
    f.what = what;
    f.inputs = std::move(inputs);
    report->failures.push_back(std::move(f));
  }
  void indeterminate() { ++report->indeterminates; }
  void check(bool ok, const std::string& what, const std::function<Json()>& inputs) {
    if (!ok) fail(what, inputs());
  }
};

using CaseFn = std::function<void(Rng&, CaseCtx&, const SuiteParams&)>;

SuiteReport drive(const std::string& name, const SuiteParams& params,
                  unsigned long default_cases, const CaseFn& fn) {
  SuiteReport report;
  report.suite = name;
  report.seed = params.seed;
  report.budget = params.budget;
  unsigned long cases = params.cases ? params.cases : default_cases;
  auto t0 = std::chrono::steady_clock::now();
  Rng master(params.seed);
  for (unsigned long idx = 0; idx < cases; ++idx) {
    Rng rng = master.fork(idx);
    if (params.only_case && *params.only_case != idx) continue;
    CaseCtx ctx;
    ctx.index = idx;
    ctx.case_seed = params.seed ^ idx;
    ctx.report = &report;
    fn(rng, ctx, params);
    ++report.cases_run;
  }
  auto t1 = std::chrono::steady_clock::now();
  report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  // Canonical order for determinism regardless of execution details.
  std::sort(report.failures.begin(), report.failures.end(),
            [](const CaseFailure& a, const CaseFailure& b) {
              return a.case_index < b.case_index;
            });
  return report;
}

// --- shared helpers -------------------------------------------------------

RegionProduct power(const Region& r, std::size_t m) {
  RegionProduct out;
  out.factors.assign(m, r);
  return out;
}

Region upper_with_positive_ray() { return parse_region("H+|arc[0,inf]"); }
Region lower_with_negative_ray() { return parse_region("H-|arc[-inf,0]"); }

DegreeVec random_lambda(Rng& rng, std::size_t m, unsigned per_var_max, unsigned total_max) {
  DegreeVec lam(m, 1);
  for (std::size_t k = 0; k < m; ++k) {
    lam[k] = static_cast<unsigned>(rng.range(1, per_var_max));
    while (total(lam) > total_max) lam[k] = 1;
  }
  return lam;
}

Json point_json(const ProjPoint& z) {
  Json arr = Json::array();
  for (const auto& [a, b] : z.coords())
    arr.push_back(Json{{"a", to_json(a)}, {"b", to_json(b)}});
  return arr;
}

BihomPoly mixed_counterexample_poly() {
  // x1 x2 x3 - y1 y2 y3
  BihomPoly p(DegreeVec{1, 1, 1});
  p.add_term(DegreeVec{1, 1, 1}, GaussRat(1));
  p.add_term(DegreeVec{0, 0, 0}, GaussRat(-1));
  return p;
}

GaussRat eval_at_pair(const BihomPoly& s, const ProjPoint& z) { return evaluate(s, z); }

LinearOp partial_x_op(unsigned n) {
  LinearOp T(DegreeVec{n}, DegreeVec{n - 1});
  for (std::size_t j = 0; j < T.cols(); ++j) {
    BihomPoly mono = BihomPoly::monomial(DegreeVec{n}, T.in_basis()[j], GaussRat(1));
    T.set_column(j, partial(mono, 0, Var::X));
  }
  return T;
}

// (zy - xw)^n in V(n, n) with the (z,w) pair first.
BihomPoly symbol_kernel(unsigned n) {
  BihomPoly base(DegreeVec{1, 1});
  base.add_term(DegreeVec{1, 0}, GaussRat(1));   // z * y
  base.add_term(DegreeVec{0, 1}, GaussRat(-1));  // -x * w
  BihomPoly out = BihomPoly::constant(2, GaussRat(1));
  for (unsigned i = 0; i < n; ++i) out = mul(out, base);
  return out;
}

LinearOp polarize_operator(const LinearOp& T) {
  DegreeVec lam = T.in_degree(), alf = T.out_degree();
  LinearOp P(ones_of(lam), ones_of(alf));
  for (std::size_t j = 0; j < P.cols(); ++j) {
    BihomPoly mono = BihomPoly::monomial(ones_of(lam), P.in_basis()[j], GaussRat(1));
    P.set_column(j, polarize(T.apply(project(mono, lam))));
  }
  return P;
}

LinearOp tensor_op(const LinearOp& T1, const LinearOp& T2) {
  DegreeVec in = concat(T1.in_degree(), T2.in_degree());
  DegreeVec out = concat(T1.out_degree(), T2.out_degree());
  LinearOp T(in, out);
  std::size_t m1 = T1.in_degree().size();
  for (std::size_t j = 0; j < T.cols(); ++j) {
    const DegreeVec& mu = T.in_basis()[j];
    DegreeVec mu1(mu.begin(), mu.begin() + m1), mu2(mu.begin() + m1, mu.end());
    BihomPoly img1 = T1.apply(BihomPoly::monomial(T1.in_degree(), mu1, GaussRat(1)));
    BihomPoly img2 = T2.apply(BihomPoly::monomial(T2.in_degree(), mu2, GaussRat(1)));
    T.set_column(j, tensor(img1, img2).poly);
  }
  return T;
}

// --- grace ----------------------------------------------------------------

void grace_case(Rng& rng, CaseCtx& ctx, const SuiteParams& params) {
  unsigned long variant = ctx.index % 5;
  if (ctx.index == 0) {
    // Regression: the mixed open/closed counterexample.
    BihomPoly p = mixed_counterexample_poly();
    GaussRat form = apolarity_form(p, p);
    ctx.check(form.is_zero(), "mixed counterexample: apolarity form must vanish",
              [&] { return Json{{"p", to_json(p)}, {"form", form.str()}}; });
    RegionProduct mixed{{parse_region("closure(disk)"), parse_region("disk"),
                         parse_region("disk")}};
    RegionProduct mixed2{{parse_region("ext"), parse_region("closure(ext)"),
                          parse_region("closure(ext)")}};
    ctx.check(classify_grace_pair(mixed, mixed2) == GracePairClass::NotCovered,
              "mixed pair must classify as NOT_COVERED", [] { return Json::object(); });
    StabilityBudget b{64, params.precision_bits, ctx.case_seed + 7};
    Verdict v1 = multivariate_stable(p, mixed, b);
    ctx.check(!v1.unstable(), "counterexample polynomial must be stable on the mixed product",
              [&] { return Json{{"p", to_json(p)}, {"verdict", to_json(v1)}}; });
    Verdict v2 = multivariate_stable(p, mixed2, b);
    ctx.check(!v2.unstable(), "counterexample polynomial must be stable on the swapped product",
              [&] { return Json{{"p", to_json(p)}, {"verdict", to_json(v2)}}; });
    return;
  }

  std::size_t m = 1 + rng.below(3);
  DegreeVec lam = random_lambda(rng, m, 2, 6);
  Region C, B;
  GracePairClass expect = GracePairClass::NotCovered;
  switch (variant) {
    case 0:
    case 1: {
      C = upper_with_positive_ray();
      B = lower_with_negative_ray();
      expect = GracePairClass::CaseI;
      break;
    }
    case 2: {
      C = parse_region("closure(disk)");
      B = parse_region("ext");
      expect = GracePairClass::CaseII;
      break;
    }
    case 3: {
      C = parse_region("ext");
      B = parse_region("closure(disk)");
      expect = GracePairClass::CaseIII;
      break;
    }
    case 4: {
      // m = 1 projectively convex pair whose arcs overlap with interior.
      m = 1;
      lam = DegreeVec{static_cast<unsigned>(rng.range(1, 5))};
      long a = rng.range(-4, 0), b = rng.range(1, 4);
      Arc gc = Arc::span(ExtPt::finite(mpq_class(a)), ExtPt::finite(mpq_class(b)), true, true);
      // wrap arc from b - 1/4 through infinity to a + 1/4
      Arc gb = Arc::span(ExtPt::finite(mpq_class(4 * b - 1, 4)),
                         ExtPt::finite(mpq_class(4 * a + 1, 4)), true, true);
      C = Region::upper_with_arc(gc);
      B = Region(Region::lower_half_plane().chart(), Region::Base::OpenHPlus,
                 arc_image(gb, -1, 0, 0, 1));
      expect = GracePairClass::CaseIV;
      break;
    }
  }
  if (variant == 1) {
    MoebiusMap psi = gen_moebius(rng, rng.coin());
    C = mobius_image(psi, C);
    B = mobius_image(psi, B);
  }
  RegionProduct CP = power(C, m), BP = power(B, m);
  GracePairClass got = classify_grace_pair(CP, BP);
  ctx.check(got == expect, "grace pair classification mismatch", [&] {
    return Json{{"C", CP.str()}, {"B", BP.str()}, {"got", static_cast<int>(got)},
                {"expected", static_cast<int>(expect)}};
  });

  BihomPoly p = gen_product_rooted(lam, complement(CP), rng);
  BihomPoly q = gen_product_rooted(lam, complement(BP), rng);
  GaussRat form = apolarity_form(p, q);
  ctx.check(!form.is_zero(), "Grace pair: apolarity form vanished on stable pair", [&] {
    return Json{{"lambda", lam}, {"C", CP.str()}, {"B", BP.str()},
                {"p", to_json(p)},  {"q", to_json(q)}};
  });
}

// --- ev-grace ---------------------------------------------------------------

void ev_grace_case(Rng& rng, CaseCtx& ctx, const SuiteParams&) {
  std::size_t m = 1 + rng.below(2);
  DegreeVec lam = random_lambda(rng, m, 2, 4);
  Region C = upper_with_positive_ray(), B = lower_with_negative_ray();
  RegionProduct CP = power(C, m), BP = power(B, m);

  BihomPoly q = gen_product_rooted(lam, complement(BP), rng);  // B-stable
  mpz_class lf = factorial(lam);
  GaussRat lf2(mpq_class(lf * lf));

  for (int probe = 0; probe < 6; ++probe) {
    ProjPoint pt = sample(BP, rng);
    BihomPoly ev = evaluation_symbol(pt, lam);
    GaussRat form = apolarity_form(ev, q);
    GaussRat expected = lf2 * evaluate(q, pt);
    ctx.check(form == expected, "evaluation symbol lemma mismatch", [&] {
      return Json{{"q", to_json(q)}, {"point", point_json(pt)},
                  {"form", form.str()}, {"expected", expected.str()}};
    });
    ctx.check(!form.is_zero(), "ev-grace: form vanished for B-stable q at B-point", [&] {
      return Json{{"q", to_json(q)}, {"point", point_json(pt)}};
    });
  }

  // Contrapositive: planting a root of q at a B-point makes the form vanish.
  ProjPoint bad = sample(BP, rng);
  BihomPoly planted = BihomPoly::constant(m, GaussRat(1));
  {
    DegreeVec deg(m, 0);
    deg[0] = 1;
    BihomPoly lin(deg);
    DegreeVec e(m, 0);
    e[0] = 1;
    lin.add_term(e, bad.coord(0).second);
    lin.add_term(DegreeVec(m, 0), -bad.coord(0).first);
    DegreeVec rest = lam;
    rest[0] -= 1;
    BihomPoly tail = gen_product_rooted(rest, complement(BP), rng);
    planted = mul(lin, tail);
  }
  BihomPoly ev_bad = evaluation_symbol(bad, lam);
  GaussRat form_bad = apolarity_form(ev_bad, planted);
  ctx.check(form_bad.is_zero(), "planted-root form must vanish", [&] {
    return Json{{"q", to_json(planted)}, {"point", point_json(bad)}, {"form", form_bad.str()}};
  });
}

// --- symbol-lemma -----------------------------------------------------------

void symbol_lemma_case(Rng& rng, CaseCtx& ctx, const SuiteParams&) {
  std::size_t m = 1 + rng.below(2);
  std::size_t l = 1 + rng.below(2);
  DegreeVec lam = random_lambda(rng, m, 2, 4);
  DegreeVec alf = random_lambda(rng, l, 2, 4);
  LinearOp T = gen_random_operator(lam, alf, rng);
  BihomPoly q = gen_random_poly(lam, rng);
  BihomPoly r = gen_random_poly(alf, rng);

  TensorPoly lhs = symbol_lemma_contract(symbol(T), lam, alf, q, r);
  mpz_class lf = factorial(lam);
  TensorPoly rhs = tensor(scale(T.apply(q), GaussRat(mpq_class(lf * lf))), r);
  ctx.check(lhs == rhs, "symbol lemma equality failed", [&] {
    return Json{{"lambda", lam}, {"alpha", alf}, {"T", to_json(T)},
                {"q", to_json(q)}, {"r", to_json(r)}};
  });

  // Evaluation symbol lemma on a random rational point.
  BihomPoly p = gen_random_poly(lam, rng);
  std::vector<ProjPoint::Coord> cs;
  for (std::size_t k = 0; k < m; ++k) {
    if (rng.coin(10))
      cs.push_back(ProjPoint::infinity());
    else
      cs.push_back({GaussRat(rng.rat(5, 3), rng.rat(5, 3)), GaussRat(1)});
  }
  ProjPoint z(std::move(cs));
  GaussRat lhs2 = apolarity_form(evaluation_symbol(z, lam), p);
  GaussRat rhs2 = GaussRat(mpq_class(lf * lf)) * evaluate(p, z);
  ctx.check(lhs2 == rhs2, "evaluation symbol lemma failed", [&] {
    return Json{{"lambda", lam}, {"p", to_json(p)}, {"point", point_json(z)}};
  });

  // D-map conjugation scaling: with S_A the plain substitution by the matrix
  // A, D(S_A a (x) S_A b) = det(A) * S_A(D(a (x) b)); for det 1 this is the
  // conjugation invariance itself.
  bool unimodular = rng.coin();
  MoebiusMap phi = gen_moebius(rng, unimodular);
  DegreeVec pair_deg{1 + static_cast<unsigned>(rng.below(2))};
  BihomPoly a = gen_random_poly(pair_deg, rng);
  BihomPoly b = gen_random_poly(pair_deg, rng);
  auto subst = [&](const BihomPoly& p, std::size_t k) {
    return pair_substitute(p, k, phi.a(), phi.b(), phi.c(), phi.d());
  };
  TensorPoly lhs3 = d_map(tensor(subst(a, 0), subst(b, 0)), 0);
  BihomPoly base = d_map(tensor(a, b), 0).poly;
  BihomPoly rhs3 = scale(subst(subst(base, 0), 1), phi.det());
  ctx.check(lhs3.poly == rhs3, "D-map conjugation scaling failed", [&] {
    return Json{{"phi", to_json(phi)}, {"a", to_json(a)}, {"b", to_json(b)},
                {"det", phi.det().str()}};
  });

  // Symb / operator_from_symbol round-trip.
  LinearOp back = operator_from_symbol(symbol(T), lam, alf);
  ctx.check(back == T, "operator_from_symbol round-trip failed",
            [&] { return Json{{"T", to_json(T)}}; });
}

// --- laguerre ---------------------------------------------------------------

void laguerre_case(Rng& rng, CaseCtx& ctx, const SuiteParams& params) {
  // Projectively convex region from a small catalog.
  Region R;
  switch (rng.below(4)) {
    case 0:
      R = upper_with_positive_ray();
      break;
    case 1:
      R = parse_region("closure(disk)");
      break;
    case 2: {
      long a = rng.range(-3, 1), b = rng.range(2, 5);
      R = Region::upper_with_arc(
          Arc::span(ExtPt::finite(mpq_class(a)), ExtPt::finite(mpq_class(b)), true, false));
      break;
    }
    default:
      R = parse_region("H-");
      break;
  }
  if (rng.coin(30)) R = mobius_image(gen_moebius(rng, true), R);

  unsigned n = static_cast<unsigned>(rng.range(2, 6));
  BihomPoly p = gen_rooted(n, complement(R), rng);  // R-stable by construction

  // phi with pole in R: pole (-d:c) = w.
  ProjPoint::Coord w = sample(R, rng);
  GaussRat c = w.second, d = -w.first;
  MoebiusMap phi = [&] {
    for (int tries = 0;; ++tries) {
      GaussRat a(rng.rat(3, 2), rng.rat(3, 2));
      GaussRat b(rng.rat(3, 2), rng.rat(3, 2));
      if (!(a * d - b * c).is_zero()) return MoebiusMap(a, b, c, d);
      if (tries > 64) throw std::logic_error("laguerre: no invertible phi");
    }
  }();

  BihomPoly dp = polar_derivative(phi, p, 0);
  ctx.check(!dp.is_zero(), "Laguerre: polar derivative must stay nonzero", [&] {
    return Json{{"p", to_json(p)}, {"phi", to_json(phi)}, {"region", R.str()}};
  });
  if (dp.is_zero()) return;
  Verdict v = univariate_stable(dp, R, params.precision_bits);
  if (v.status == Verdict::Status::Indeterminate) {
    ctx.indeterminate();
    return;
  }
  ctx.check(v.stable(), "Laguerre: polar derivative lost region stability", [&] {
    return Json{{"p", to_json(p)}, {"phi", to_json(phi)}, {"region", R.str()},
                {"verdict", to_json(v)}};
  });

  // Multivariate corollary: sections of a product-stable polynomial.
  if (ctx.index % 3 == 0) {
    DegreeVec lam = random_lambda(rng, 2, 2, 4);
    RegionProduct RP = power(R, 2);
    BihomPoly mp = gen_product_rooted(lam, complement(RP), rng);
    BihomPoly mdp = polar_derivative(phi, mp, 0);
    if (mdp.is_zero()) {
      ctx.fail("Laguerre (product): polar derivative vanished",
               Json{{"p", to_json(mp)}, {"phi", to_json(phi)}});
      return;
    }
    StabilityBudget b{24, params.precision_bits, ctx.case_seed + 13};
    Verdict mv = multivariate_stable(mdp, RP, b);
    ctx.check(!mv.unstable(), "Laguerre (product): found zero in region", [&] {
      return Json{{"p", to_json(mp)}, {"phi", to_json(phi)}, {"verdict", to_json(mv)}};
    });
  }
}

// --- hermite-biehler --------------------------------------------------------

void hermite_biehler_case(Rng& rng, CaseCtx& ctx, const SuiteParams&) {
  unsigned n = static_cast<unsigned>(rng.range(2, 6));
  auto [p, q] = gen_interlacing_pair(n, rng);

  bool inter = interlace(p, q);
  ctx.check(inter, "constructed interlacing pair must interlace",
            [&] { return Json{{"p", to_json(p)}, {"q", to_json(q)}}; });
  Verdict pp = proper_position(p, q);
  ctx.check(pp.stable(), "interlacing pair must be in proper position", [&] {
    return Json{{"p", to_json(p)}, {"q", to_json(q)}, {"verdict", to_json(pp)}};
  });

  // Hermite-Biehler: all real combinations stay real-rooted.
  for (int t = 0; t < 12; ++t) {
    GaussRat a(rng.rat(5, 2)), b(rng.rat(5, 2));
    BihomPoly combo = add(scale(p, a), scale(q, b));
    if (combo.is_zero()) continue;
    ctx.check(real_rooted(combo) == Rootedness::Yes,
              "combination of proper pair must be real-rooted", [&] {
                return Json{{"p", to_json(p)}, {"q", to_json(q)},
                            {"a", a.str()}, {"b", b.str()}};
              });
  }

  // Converse direction on a non-interlacing pair.
  BihomPoly r1 = gen_real_rooted_monic(n, rng);
  BihomPoly r2 = gen_real_rooted_monic(n, rng);
  bool forward = proper_position(r1, r2).stable() || proper_position(r2, r1).stable();
  if (!forward) {
    bool found_bad = false;
    for (int t = 0; t < 200 && !found_bad; ++t) {
      GaussRat a(rng.rat(6, 2)), b(rng.rat(6, 2));
      BihomPoly combo = add(scale(r1, a), scale(r2, b));
      if (combo.is_zero()) continue;
      found_bad = real_rooted(combo) == Rootedness::No;
    }
    if (!found_bad)
      ctx.indeterminate();  // theorem guarantees existence; sampling may miss it
  }

  // Total order on the span (monic combinations).
  if (n >= 2) {
    auto monic_mix = [&](long t) {
      // (p + t q) / (1 + t), monic for t >= 0
      GaussRat w{mpq_class(t)};
      BihomPoly mix = add(p, scale(q, w));
      return scale(mix, GaussRat(mpq_class(1, 1 + t)));
    };
    BihomPoly r = monic_mix(1), s = monic_mix(3);
    bool rs = interlace(r, s), sr = interlace(s, r);
    ctx.check(rs || sr, "monic combinations must be comparable", [&] {
      return Json{{"p", to_json(p)}, {"q", to_json(q)}};
    });
    // Order agrees with the k-th root comparison wherever roots differ.
    if (rs) {
      auto ra = exact_real_roots(dehomogenize_uni_real(r));
      auto sa = exact_real_roots(dehomogenize_uni_real(s));
      std::vector<RealRoot> rflat, sflat;
      for (auto& root : ra)
        for (unsigned cnt = 0; cnt < root.multiplicity; ++cnt) rflat.push_back(root);
      for (auto& root : sa)
        for (unsigned cnt = 0; cnt < root.multiplicity; ++cnt) sflat.push_back(root);
      bool ordered = rflat.size() == sflat.size();
      if (ordered)
        for (std::size_t k = 0; k < rflat.size(); ++k)
          ordered &= compare_roots(rflat[k], sflat[k]) <= 0;
      ctx.check(ordered, "interlacing order must match k-th root order", [&] {
        return Json{{"r", to_json(r)}, {"s", to_json(s)}};
      });
    }
  }
}

// --- gws --------------------------------------------------------------------

void gws_case(Rng& rng, CaseCtx& ctx, const SuiteParams&) {
  std::size_t m = 1 + rng.below(2);
  DegreeVec lam = random_lambda(rng, m, 2, 4);
  // alternate between the half-plane-with-ray pair and the closed-disk pair
  Region C = ctx.index % 2 == 0 ? upper_with_positive_ray() : parse_region("closure(disk)");
  RegionProduct CP = power(C, m);
  BihomPoly p = gen_product_rooted(lam, complement(CP), rng);  // C-stable
  BihomPoly up = polarize(p);

  // Sample points of C^lambda and check nonvanishing of the polarization.
  for (int probe = 0; probe < 8; ++probe) {
    std::vector<ProjPoint::Coord> cs;
    for (std::size_t k = 0; k < m; ++k)
      for (unsigned i = 0; i < lam[k]; ++i) cs.push_back(sample(C, rng));
    ProjPoint pts(std::move(cs));
    GaussRat direct = evaluate(up, pts);
    ctx.check(!direct.is_zero(), "GWS: polarization vanished inside C^lambda", [&] {
      return Json{{"p", to_json(p)}, {"points", point_json(pts)}};
    });
    GaussRat via = polarized_evaluation(p, pts);
    ctx.check(via == direct, "polarized evaluation route mismatch", [&] {
      return Json{{"p", to_json(p)}, {"points", point_json(pts)},
                  {"direct", direct.str()}, {"via", via.str()}};
    });
  }

  // Projection is a left inverse of polarization.
  ctx.check(project(up, lam) == p, "project(polarize(p)) != p",
            [&] { return Json{{"p", to_json(p)}}; });

  // Form commutation constant (polarization route).
  BihomPoly a = gen_random_poly(lam, rng);
  BihomPoly b = gen_random_poly(lam, rng);
  GaussRat up_form = apolarity_form(polarize(a), polarize(b));
  GaussRat base_form = apolarity_form(a, b);
  GaussRat c_lam = form_polarization_factor(lam);
  ctx.check(up_form == c_lam * base_form, "form/polarization constant inconsistent", [&] {
    return Json{{"lambda", lam}, {"a", to_json(a)}, {"b", to_json(b)},
                {"c", c_lam.str()}};
  });

  // Symbol of the polarized operator is the polarized symbol (up to the
  // measured constant, which this suite pins to 1 by direct comparison).
  if (total(lam) <= 3) {
    DegreeVec alf = random_lambda(rng, 1, 2, 2);
    LinearOp T = gen_random_operator(lam, alf, rng);
    BihomPoly lhs = symbol(polarize_operator(T));
    BihomPoly rhs = polarize(symbol(T));
    ctx.check(proportional(lhs, rhs), "polarized-operator symbol not proportional", [&] {
      return Json{{"T", to_json(T)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
    });
  }
}

// --- cops -------------------------------------------------------------------

void cops_case(Rng& rng, CaseCtx& ctx, const SuiteParams& params) {
  // Convolution corollaries on every case (the acceptance count lives here).
  unsigned n = static_cast<unsigned>(rng.range(2, 6));
  BihomPoly p = gen_real_rooted_monic(n, rng);
  BihomPoly q = gen_real_rooted_monic(n, rng);
  const unsigned enclosure_bits = 32;  // 2^-32 < 1e-9

  BihomPoly conv = additive_convolution(p, q);
  ctx.check(additive_convolution(q, p) == conv, "additive convolution must be symmetric",
            [&] { return Json{{"p", to_json(p)}, {"q", to_json(q)}}; });
  ctx.check(!conv.is_zero() && real_rooted(conv) == Rootedness::Yes,
            "additive convolution of real-rooted pair must be real-rooted",
            [&] { return Json{{"p", to_json(p)}, {"q", to_json(q)}, {"conv", to_json(conv)}}; });
  if (!conv.is_zero() && real_rooted(conv) == Rootedness::Yes) {
    RootEnclosure ep = minmax_root(p, enclosure_bits);
    RootEnclosure eq = minmax_root(q, enclosure_bits);
    RootEnclosure ec = minmax_root(conv, enclosure_bits);
    // minroot(p)+minroot(q) <= minroot(conv) <= maxroot(conv) <= maxroot(p)+maxroot(q)
    bool min_ok = ep.min_root->lo + eq.min_root->lo <= ec.min_root->hi;
    bool max_ok = ec.max_root->lo <= ep.max_root->hi + eq.max_root->hi;
    ctx.check(min_ok && max_ok, "additive convolution minroot/maxroot sandwich failed", [&] {
      return Json{{"p", to_json(p)}, {"q", to_json(q)}, {"conv", to_json(conv)}};
    });
  }

  // Multiplicative convolution on positive-rooted inputs.
  BihomPoly pp = gen_real_rooted_monic(n, rng, 1, 8);
  BihomPoly qq = gen_real_rooted_monic(n, rng, 1, 8);
  BihomPoly mconv = multiplicative_convolution(pp, qq);
  ctx.check(!mconv.is_zero() && real_rooted(mconv) == Rootedness::Yes,
            "multiplicative convolution of positive-rooted pair must be real-rooted", [&] {
              return Json{{"p", to_json(pp)}, {"q", to_json(qq)}, {"conv", to_json(mconv)}};
            });
  if (!mconv.is_zero() && real_rooted(mconv) == Rootedness::Yes) {
    RootEnclosure ep = minmax_root(pp, enclosure_bits);
    RootEnclosure eq = minmax_root(qq, enclosure_bits);
    RootEnclosure ec = minmax_root(mconv, enclosure_bits);
    bool min_ok = ep.min_root->lo * eq.min_root->lo <= ec.min_root->hi;
    bool max_ok = ec.max_root->lo <= ep.max_root->hi * eq.max_root->hi;
    ctx.check(min_ok && max_ok, "multiplicative convolution sandwich failed", [&] {
      return Json{{"p", to_json(pp)}, {"q", to_json(qq)}, {"conv", to_json(mconv)}};
    });
  }

  // Symbol closed forms for the convolution operators.
  {
    LinearOp Tq = additive_convolution_op(q);
    BihomPoly s = symbol(Tq);
    // prod_j (x w - (z + z_j w) y) over the roots (z_j : 1) of q.
    auto roots = exact_real_roots(dehomogenize_uni_real(q));
    BihomPoly expected = BihomPoly::constant(2, GaussRat(1));
    for (auto& root : roots) {
      if (!root.iv.exact) continue;
      for (unsigned cnt = 0; cnt < root.multiplicity; ++cnt) {
        BihomPoly f(DegreeVec{1, 1});
        f.add_term(DegreeVec{0, 1}, GaussRat(1));                // x * w
        f.add_term(DegreeVec{1, 0}, GaussRat(-1));               // -(z) * y
        f.add_term(DegreeVec{0, 0}, -GaussRat(root.iv.value));   // -(z_j w) * y
        expected = mul(expected, f);
      }
    }
    if (expected.degree() == s.degree()) {
      ctx.check(proportional(s, expected), "additive convolution symbol mismatch", [&] {
        return Json{{"q", to_json(q)}, {"symbol", to_json(s)}, {"expected", to_json(expected)}};
      });
    }
  }

  // Rank-one operators from region-stable symbols map stable to nonzero stable.
  {
    Region C = upper_with_positive_ray(), B = lower_with_negative_ray();
    unsigned nn = static_cast<unsigned>(rng.range(1, 4));
    unsigned ll = static_cast<unsigned>(rng.range(1, 4));
    Region S = Region::upper_half_plane();
    BihomPoly u = gen_rooted(nn, complement(B), rng);   // B-stable
    BihomPoly v = gen_rooted(ll, complement(S), rng);   // S-stable
    BihomPoly s = tensor(u, v).poly;
    LinearOp T = operator_from_symbol(s, DegreeVec{nn}, DegreeVec{ll});
    BihomPoly input = gen_rooted(nn, complement(C), rng);  // C-stable
    BihomPoly out = T.apply(input);
    ctx.check(!out.is_zero(), "operator with stable symbol produced zero", [&] {
      return Json{{"symbol", to_json(s)}, {"input", to_json(input)}};
    });
    if (!out.is_zero()) {
      Verdict vd = univariate_stable(out, S, params.precision_bits);
      if (vd.status == Verdict::Status::Indeterminate)
        ctx.indeterminate();
      else
        ctx.check(vd.stable(), "operator with stable symbol lost output stability", [&] {
          return Json{{"symbol", to_json(s)}, {"input", to_json(input)},
                      {"out", to_json(out)}, {"verdict", to_json(vd)}};
        });
    }
  }

  // Example regression: Symb(d/dx) = -n w (zy - xw)^(n-1), and the weak-only
  // behaviour of d/dx shows up both as a zero output and as a symbol zero at
  // the infinity point of closure(H-).
  if (ctx.index % 8 == 0) {
    unsigned nn = 1 + ctx.index / 8 % 6;
    LinearOp D = partial_x_op(nn);
    BihomPoly s = symbol(D);
    BihomPoly expected(DegreeVec{nn, nn - 1});
    {
      BihomPoly w_mono(DegreeVec{1, 0});
      w_mono.add_term(DegreeVec{0, 0}, GaussRat(1));  // w
      BihomPoly kern = symbol_kernel(nn - 1);
      expected = scale(mul(w_mono, kern), GaussRat(mpq_class(-static_cast<long>(nn))));
    }
    ctx.check(s == expected, "Symb(d/dx) closed form mismatch",
              [&] { return Json{{"n", nn}, {"symbol", to_json(s)}}; });

    BihomPoly killed = BihomPoly::monomial(DegreeVec{nn}, DegreeVec{0}, GaussRat(1));
    ctx.check(D.apply(killed).is_zero(), "d/dx must kill y^n",
              [] { return Json::object(); });
    ProjPoint inf_pt({ProjPoint::infinity(), {GaussRat::i(), GaussRat(1)}});
    ctx.check(eval_at_pair(s, inf_pt).is_zero(),
              "Symb(d/dx) must vanish at the infinity witness",
              [&] { return Json{{"n", nn}}; });
  }
}

// --- rops -------------------------------------------------------------------

void rops_case(Rng& rng, CaseCtx& ctx, const SuiteParams& params) {
  unsigned n = static_cast<unsigned>(rng.range(2, 6));
  // Operators come from generated stable symbols through the inverse symbol
  // map, so the hypothesis holds by construction.
  LinearOp T = [&]() -> LinearOp {
    switch (rng.below(3)) {
      case 0: {
        // symbol prod_j (x w - (z + z_j w) y) for real z_j, which is
        // closure(H-) x H+ stable; its operator is the additive convolution.
        BihomPoly q = gen_real_rooted_monic(n, rng);
        auto roots = exact_real_roots(dehomogenize_uni_real(q));
        BihomPoly s = BihomPoly::constant(2, GaussRat(1));
        bool all_exact = true;
        for (auto& root : roots) {
          if (!root.iv.exact) {
            all_exact = false;
            break;
          }
          for (unsigned cnt = 0; cnt < root.multiplicity; ++cnt) {
            BihomPoly f(DegreeVec{1, 1});
            f.add_term(DegreeVec{0, 1}, GaussRat(1));
            f.add_term(DegreeVec{1, 0}, GaussRat(-1));
            f.add_term(DegreeVec{0, 0}, -GaussRat(root.iv.value));
            s = mul(s, f);
          }
        }
        if (!all_exact) return additive_convolution_op(q);
        LinearOp from_s = operator_from_symbol(s, DegreeVec{n}, DegreeVec{n});
        // the recovered operator is the convolution with q, up to scalar
        LinearOp direct = additive_convolution_op(q);
        bool matched = proportional(symbol(from_s), symbol(direct));
        ctx.check(matched, "rops: symbol route disagrees with the convolution formula",
                  [&] { return Json{{"q", to_json(q)}}; });
        return from_s;
      }
      case 1: {
        std::vector<GaussRat> alphas;
        int cnt = static_cast<int>(rng.range(1, 3));
        for (int i = 0; i < cnt; ++i) {
          long a = rng.range(1, 5);
          alphas.emplace_back(mpq_class(rng.coin() ? a : -a));
        }
        LinearOp direct = diff_composition_op(alphas, n);
        return operator_from_symbol(symbol(direct), DegreeVec{n}, DegreeVec{n});
      }
      default:
        return additive_convolution_op(gen_real_rooted_monic(n, rng));
    }
  }();
  ctx.check(T.restricts_to_real(), "operator must restrict to a real operator",
            [&] { return Json{{"T", to_json(T)}}; });

  // Sampled symbol stability on closure(H-) x H+.
  BihomPoly s = symbol(T);
  Region zr = Region::closed_lower_half_plane(), xr = Region::upper_half_plane();
  for (int probe = 0; probe < 8; ++probe) {
    ProjPoint pt({sample(zr, rng), sample(xr, rng)});
    GaussRat val = evaluate(s, pt);
    ctx.check(!val.is_zero(), "rops: symbol vanished on closure(H-) x H+", [&] {
      return Json{{"T", to_json(T)}, {"point", point_json(pt)}};
    });
  }

  // Operator direction: real stable inputs map to nonzero real stable outputs.
  for (int probe = 0; probe < 4; ++probe) {
    BihomPoly input = gen_real_rooted_monic(n, rng);
    BihomPoly out = T.apply(input);
    ctx.check(!out.is_zero(), "rops: output vanished on a real-rooted input", [&] {
      return Json{{"T", to_json(T)}, {"input", to_json(input)}};
    });
    if (out.is_zero()) continue;
    ctx.check(real_rooted(out) == Rootedness::Yes, "rops: output lost real-rootedness", [&] {
      return Json{{"T", to_json(T)}, {"input", to_json(input)}, {"out", to_json(out)}};
    });
  }

  // Small multivariate tensor operator.
  if (ctx.index % 4 == 0) {
    unsigned n1 = static_cast<unsigned>(rng.range(1, 2));
    unsigned n2 = static_cast<unsigned>(rng.range(1, 2));
    LinearOp T1 = additive_convolution_op(gen_real_rooted_monic(n1, rng));
    LinearOp T2 = additive_convolution_op(gen_real_rooted_monic(n2, rng));
    LinearOp TT = tensor_op(T1, T2);
    // x1 x2 - y1 y2 is real stable; so are products of per-variable factors.
    BihomPoly input(DegreeVec{n1, n2});
    if (n1 == 1 && n2 == 1 && rng.coin()) {
      input.add_term(DegreeVec{1, 1}, GaussRat(1));
      input.add_term(DegreeVec{0, 0}, GaussRat(-1));
    } else {
      RegionProduct upper = power(Region::upper_half_plane(), 2);
      input = gen_product_rooted(DegreeVec{n1, n2}, complement(upper), rng);
    }
    BihomPoly out = TT.apply(input);
    ctx.check(!out.is_zero(), "rops (tensor): output vanished",
              [&] { return Json{{"input", to_json(input)}}; });
    if (!out.is_zero()) {
      StabilityBudget b{24, params.precision_bits, ctx.case_seed + 29};
      RegionProduct upper = power(Region::upper_half_plane(), 2);
      Verdict v = multivariate_stable(out, upper, b);
      ctx.check(!v.unstable(), "rops (tensor): output lost real stability", [&] {
        return Json{{"input", to_json(input)}, {"out", to_json(out)},
                    {"verdict", to_json(v)}};
      });
    }
  }
}

// --- jops -------------------------------------------------------------------

void jops_case(Rng& rng, CaseCtx& ctx, const SuiteParams&) {
  if (ctx.index == 0) {
    // Regression: (y d/dx - 1) applied to (x - 2y)^2 has roots exactly {2, 4}.
    BihomPoly p(DegreeVec{2});
    p.add_term(DegreeVec{2}, GaussRat(1));
    p.add_term(DegreeVec{1}, GaussRat(-4));
    p.add_term(DegreeVec{0}, GaussRat(4));
    LinearOp T = shifted_derivative_op(GaussRat(1), 2);
    BihomPoly out = T.apply(p);
    // (x - 2y)(4y - x) = -x^2 + 6xy - 8y^2
    BihomPoly expected(DegreeVec{2});
    expected.add_term(DegreeVec{2}, GaussRat(-1));
    expected.add_term(DegreeVec{1}, GaussRat(6));
    expected.add_term(DegreeVec{0}, GaussRat(-8));
    ctx.check(out == expected, "f(d/dx) window regression value mismatch",
              [&] { return Json{{"out", to_json(out)}}; });
    RootEnclosure enc = minmax_root(out, 16);
    bool exact_roots = enc.min_root && enc.max_root && enc.min_root->lo == 2 &&
                       enc.min_root->hi == 2 && enc.max_root->lo == 4 && enc.max_root->hi == 4;
    ctx.check(exact_roots, "f(d/dx) window regression roots must be {2, 4}",
              [&] { return Json{{"out", to_json(out)}}; });
    Arc window = Arc::span(ExtPt::finite(2), ExtPt::finite(4), true, true);
    ctx.check(roots_in_boundary_set(out, window) == Rootedness::Yes,
              "window [2,4] must contain the roots", [&] { return Json{{"out", to_json(out)}}; });
    return;
  }
  if (ctx.index == 1) {
    // Regression: the falling-factorial operator T_2.
    // x^k y^(2-k) -> Hmg_2[x(x-1)...(x-k+1)]
    std::vector<BihomPoly> images;
    {
      BihomPoly i0(DegreeVec{2});
      i0.add_term(DegreeVec{0}, GaussRat(1));  // 1 -> y^2
      BihomPoly i1(DegreeVec{2});
      i1.add_term(DegreeVec{1}, GaussRat(1));  // x -> x y
      BihomPoly i2(DegreeVec{2});
      i2.add_term(DegreeVec{2}, GaussRat(1));  // x(x-1) -> x^2 - x y
      i2.add_term(DegreeVec{1}, GaussRat(-1));
      images = {i0, i1, i2};
    }
    LinearOp T2 = LinearOp::from_images(DegreeVec{2}, DegreeVec{2}, images);
    BihomPoly input(DegreeVec{2});
    input.add_term(DegreeVec{2}, GaussRat(1));
    input.add_term(DegreeVec{1}, GaussRat(2));
    input.add_term(DegreeVec{0}, GaussRat(1));
    BihomPoly out = T2.apply(input);
    BihomPoly expected(DegreeVec{2});
    expected.add_term(DegreeVec{2}, GaussRat(1));
    expected.add_term(DegreeVec{1}, GaussRat(1));
    expected.add_term(DegreeVec{0}, GaussRat(1));
    ctx.check(out == expected, "falling-factorial regression: T2(x^2+2xy+y^2) mismatch",
              [&] { return Json{{"out", to_json(out)}}; });
    ctx.check(real_rooted(out) == Rootedness::No,
              "falling-factorial regression: x^2+xy+y^2 must not be real-rooted",
              [&] { return Json{{"out", to_json(out)}}; });

    BihomPoly s = symbol(T2);
    // Hmg[(x - z)^2 - x] = x(x-y) w^2 - 2 x z y w + z^2 y^2
    BihomPoly sexp(DegreeVec{2, 2});
    sexp.add_term(DegreeVec{0, 2}, GaussRat(1));   // w^2 x^2
    sexp.add_term(DegreeVec{0, 1}, GaussRat(-1));  // -w^2 x y
    sexp.add_term(DegreeVec{1, 1}, GaussRat(-2));  // -2 z w x y
    sexp.add_term(DegreeVec{2, 0}, GaussRat(1));   // z^2 y^2
    ctx.check(s == sexp, "falling-factorial regression: Symb(T2) closed form mismatch",
              [&] { return Json{{"symbol", to_json(s)}}; });

    // Witness x = -1: (-1 - z)^2 + 1 is not real rooted, and the exact zero
    // at (z, x) = (-1 - i, -1) lies in both candidate region products.
    BihomPoly section = evaluate_pair(s, 1, GaussRat(-1), GaussRat(1));
    ctx.check(real_rooted(section) == Rootedness::No,
              "falling-factorial witness section must not be real-rooted",
              [&] { return Json{{"section", to_json(section)}}; });
    ProjPoint zero_pt({{GaussRat(mpq_class(-1), mpq_class(-1)), GaussRat(1)},
                       {GaussRat(-1), GaussRat(1)}});
    ctx.check(evaluate(s, zero_pt).is_zero(), "falling-factorial symbol zero must be exact",
              [&] { return Json{{"symbol", to_json(s)}}; });
    Region zr = parse_region("H-");
    Region xr1 = parse_region("compl(arc(0,inf))");  // closure(H+) u closure(H-) minus ray
    ctx.check(contains(zr, zero_pt.coord(0)), "falling-factorial witness z-part must lie in H-",
              [] { return Json::object(); });
    ctx.check(contains(xr1, zero_pt.coord(1)),
              "falling-factorial witness x-part must avoid the positive ray",
              [] { return Json::object(); });
    return;
  }

  // Shifted derivative windows: alpha > 0 adds n/alpha on the right,
  // alpha < 0 adds n/alpha on the left.
  unsigned n = static_cast<unsigned>(rng.range(2, 6));
  long b = rng.range(-4, 2);
  long c = b + rng.range(0, 4);
  BihomPoly p = gen_real_rooted_monic(n, rng, b, c);
  mpq_class lo(b), hi(c);

  int factor_count = static_cast<int>(rng.range(1, 3));
  BihomPoly cur = p;
  for (int i = 0; i < factor_count; ++i) {
    long a = rng.range(1, 4);
    bool negative = rng.coin();
    GaussRat alpha(mpq_class(negative ? -a : a));
    LinearOp T = shifted_derivative_op(alpha, n);
    cur = T.apply(cur);
    if (cur.is_zero()) {
      ctx.fail("jops: shifted derivative with nonzero alpha must be invertible",
               Json{{"alpha", alpha.str()}});
      return;
    }
    mpq_class shift = mpq_class(n) / alpha.re();
    if (negative)
      lo += shift;
    else
      hi += shift;
    // weak real-rootedness is preserved along the way
    ctx.check(real_rooted(cur) == Rootedness::Yes, "jops: output lost real-rootedness", [&] {
      return Json{{"poly", to_json(cur)}, {"alpha", alpha.str()}};
    });
  }
  Arc window = Arc::span(ExtPt::finite(lo), ExtPt::finite(hi), true, true);
  ctx.check(roots_in_boundary_set(cur, window) == Rootedness::Yes,
            "jops: output escaped the predicted window", [&] {
              return Json{{"input", to_json(p)}, {"out", to_json(cur)},
                          {"lo", rat_str(lo)}, {"hi", rat_str(hi)}};
            });

  // Symbol closed form: Symb(y d/dx - alpha) = -(alpha (zy-xw) + n w y)(zy-xw)^(n-1).
  {
    GaussRat alpha(rng.rat(4, 2));
    LinearOp T = shifted_derivative_op(alpha, n);
    BihomPoly base = symbol_kernel(1);
    BihomPoly wy(DegreeVec{1, 1});
    wy.add_term(DegreeVec{0, 0}, GaussRat(1));  // w * y
    BihomPoly factor = add(scale(base, alpha), scale(wy, GaussRat(mpq_class(n))));
    BihomPoly expected = scale(mul(factor, symbol_kernel(n - 1)), GaussRat(-1));
    ctx.check(symbol(T) == expected, "jops: shifted-derivative symbol mismatch", [&] {
      return Json{{"alpha", alpha.str()}, {"n", n}};
    });
    // symbol -> operator direction: the closed form recovers the operator
    ctx.check(operator_from_symbol(expected, DegreeVec{n}, DegreeVec{n}) == T,
              "jops: closed-form symbol must invert to the operator", [&] {
                return Json{{"alpha", alpha.str()}, {"n", n}};
              });
  }

  // Degenerate rank-two branch: T(p) = p(u1) q + p(u2) r for interlacing
  // monic q << r and sample points u_i below the input interval. Both
  // functionals carry the same sign on interval-rooted inputs, so the output
  // is a one-signed combination with roots in [minroot(q), maxroot(r)].
  if (ctx.index % 7 == 2) {
    unsigned dn = static_cast<unsigned>(rng.range(2, 4));
    auto [dq, dr] = gen_interlacing_pair(dn, rng);
    RootEnclosure eq = minmax_root(dq, 16), er = minmax_root(dr, 16);
    Arc window = Arc::span(ExtPt::finite(eq.min_root->lo), ExtPt::finite(er.max_root->hi),
                           true, true);
    long ilo = 0, ihi = 3;
    GaussRat u1{mpq_class(ilo - 1 - rng.range(0, 2))};
    GaussRat u2{mpq_class(ilo - 1 - rng.range(3, 5))};
    for (int probe = 0; probe < 4; ++probe) {
      BihomPoly input = gen_real_rooted_monic(dn, rng, ilo, ihi);
      if (rng.coin()) input = scale(input, GaussRat(mpq_class(-rng.range(1, 3))));
      GaussRat v1 = evaluate(input, ProjPoint({{u1, GaussRat(1)}}));
      GaussRat v2 = evaluate(input, ProjPoint({{u2, GaussRat(1)}}));
      ctx.check(sgn(v1.re()) * sgn(v2.re()) > 0,
                "jops (degenerate): functionals must agree in sign",
                [&] { return Json{{"input", to_json(input)}}; });
      BihomPoly out = add(scale(dq, v1), scale(dr, v2));
      ctx.check(!out.is_zero() && roots_in_boundary_set(out, window) == Rootedness::Yes,
                "jops (degenerate): output escaped [minroot(q), maxroot(r)]", [&] {
                  return Json{{"q", to_json(dq)}, {"r", to_json(dr)},
                              {"input", to_json(input)}, {"out", to_json(out)}};
                });
      // weak real-rootedness holds for arbitrary real-rooted inputs as well
      BihomPoly any = gen_real_rooted_monic(dn, rng, -8, 8);
      GaussRat w1 = evaluate(any, ProjPoint({{u1, GaussRat(1)}}));
      GaussRat w2 = evaluate(any, ProjPoint({{u2, GaussRat(1)}}));
      BihomPoly out2 = add(scale(dq, w1), scale(dr, w2));
      if (!out2.is_zero())
        ctx.check(real_rooted(out2) == Rootedness::Yes,
                  "jops (degenerate): combination lost real-rootedness", [&] {
                    return Json{{"q", to_json(dq)}, {"r", to_json(dr)},
                                {"input", to_json(any)}};
                  });
    }
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"grace", "ev-grace", "symbol-lemma", "laguerre", "hermite-biehler",
          "gws",   "cops",     "rops",         "jops"};
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  if (name == "grace") return drive(name, params, 520, grace_case);
  if (name == "ev-grace") return drive(name, params, 320, ev_grace_case);
  if (name == "symbol-lemma") return drive(name, params, 260, symbol_lemma_case);
  if (name == "laguerre") return drive(name, params, 320, laguerre_case);
  if (name == "hermite-biehler") return drive(name, params, 320, hermite_biehler_case);
  if (name == "gws") return drive(name, params, 320, gws_case);
  if (name == "cops") return drive(name, params, 240, cops_case);
  if (name == "rops") return drive(name, params, 220, rops_case);
  if (name == "jops") return drive(name, params, 220, jops_case);
  throw std::invalid_argument("unknown suite: " + name);
}

std::optional<CaseFailure> replay_case(const std::string& suite, const SuiteParams& params,
                                       unsigned long case_index) {
  SuiteParams p = params;
  p.only_case = case_index;
  SuiteReport rep = run_suite(suite, p);
  for (auto& f : rep.failures)
    if (f.case_index == case_index) return f;
  return std::nullopt;
}

GraceSearchResult search_grace_counterexample(const RegionProduct& A, const RegionProduct& B,
                                              unsigned long budget, std::uint64_t seed) {
  GraceSearchResult result;
  if (A.arity() != B.arity()) throw std::invalid_argument("search: arity mismatch");
  Rng rng(seed);
  const std::size_t m = A.arity();
  StabilityBudget screen{48, 48, seed ^ 0x5bd1e995};

  auto screened_stable = [&](const BihomPoly& p, const RegionProduct& R) {
    return !multivariate_stable(p, R, screen).unstable();
  };

  for (unsigned long round = 0; round < budget; ++round) {
    ++result.tried;
    BihomPoly p, q;
    if (m == 3 && round < 4) {
      // Diagonal family: the degree-(1,1,1) polynomials x1x2x3 - t y1y2y3.
      long t = static_cast<long>(round) + (round == 0 ? 1 : 1 + round);
      if (round == 0) t = 1;
      BihomPoly cand(DegreeVec{1, 1, 1});
      cand.add_term(DegreeVec{1, 1, 1}, GaussRat(1));
      cand.add_term(DegreeVec{0, 0, 0}, GaussRat(mpq_class(-t)));
      p = cand;
      q = cand;
    } else {
      DegreeVec lam = random_lambda(rng, m, 2, 6);
      p = gen_product_rooted(lam, complement(A), rng);
      q = gen_product_rooted(lam, complement(B), rng);
    }
    if (p.degree() != q.degree()) continue;
    GaussRat form = apolarity_form(p, q);
    if (!form.is_zero()) continue;
    if (!screened_stable(p, A) || !screened_stable(q, B)) continue;
    result.found = true;
    result.details = Json{{"p", to_json(p)},
                          {"q", to_json(q)},
                          {"A", A.str()},
                          {"B", B.str()},
                          {"stability", "screened by sampling falsifier, not proven"}};
    return result;
  }
  result.details = Json{{"A", A.str()}, {"B", B.str()}, {"outcome", "budget exhausted"}};
  return result;
}

}  // namespace stabkit
