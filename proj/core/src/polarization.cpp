#include "stabkit/polarization.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "stabkit/apolarity.hpp"

namespace stabkit {

namespace {

// Sum over all size-j subsets S of a block of n pairs of
// prod_{i in S} x_i * prod_{i not in S} y_i, as an element of V(1^n).
BihomPoly block_symmetrizer(unsigned n, unsigned j) {
  BihomPoly out(DegreeVec(n, 1));
  DegreeVec pick(n, 0);
  // iterate over subsets by recursion on positions
  struct Rec {
    unsigned n, j;
    BihomPoly* out;
    DegreeVec* pick;
    void go(unsigned pos, unsigned chosen) {
      if (chosen == j) {
        out->add_term(*pick, GaussRat(1));
        return;
      }
      if (pos == n || n - pos < j - chosen) return;
      (*pick)[pos] = 1;
      go(pos + 1, chosen + 1);
      (*pick)[pos] = 0;
      go(pos + 1, chosen);
    }
  } rec{n, j, &out, &pick};
  rec.go(0, 0);
  return out;
}

}  // namespace

BihomPoly polarize(const BihomPoly& p) {
  const DegreeVec& lam = p.degree();
  unsigned n_out = total(lam);
  BihomPoly out(DegreeVec(n_out, 1));
  for (const auto& [mu, c] : p.terms()) {
    // Image of the monomial: product over blocks of e_{mu_k}/binom(lam_k,mu_k).
    BihomPoly term = BihomPoly::constant(0, GaussRat(1));
    GaussRat w = c;
    for (std::size_t k = 0; k < lam.size(); ++k) {
      if (lam[k] == 0) continue;
      BihomPoly blk = block_symmetrizer(lam[k], mu[k]);
      w = w / GaussRat(mpq_class(binomial(lam[k], mu[k])));
      term = tensor(term, blk).poly;
    }
    for (const auto& [nu, tc] : term.terms()) out.add_term(nu, tc * w);
  }
  return out;
}

BihomPoly project(const BihomPoly& p, const DegreeVec& lambda) {
  if (p.arity() != total(lambda) || p.degree() != DegreeVec(total(lambda), 1))
    throw std::invalid_argument("project: grouping inconsistent with input degrees");
  BihomPoly out(lambda);
  for (const auto& [mu, c] : p.terms()) {
    DegreeVec nu(lambda.size(), 0);
    std::size_t pos = 0;
    for (std::size_t k = 0; k < lambda.size(); ++k)
      for (unsigned i = 0; i < lambda[k]; ++i) nu[k] += mu[pos++];
    out.add_term(nu, c);
  }
  return out;
}

namespace {

std::mutex g_factor_mutex;
std::map<DegreeVec, GaussRat> g_eval_factors;
std::map<DegreeVec, GaussRat> g_form_factors;

ProjPoint diagonal_ones(unsigned n) {
  std::vector<ProjPoint::Coord> cs(n, {GaussRat(1), GaussRat(1)});
  return ProjPoint(std::move(cs));
}

GaussRat contraction_route(const BihomPoly& p, const ProjPoint& pts) {
  const DegreeVec& lam = p.degree();
  BihomPoly ev = evaluation_symbol(pts, ones_of(lam));
  BihomPoly down = project(ev, lam);
  TensorPoly t = d_power(tensor(down, p), lam);
  return t.poly.coeff(DegreeVec(t.poly.arity(), 0));
}

}  // namespace

GaussRat polarized_evaluation_factor(const DegreeVec& lambda) {
  std::lock_guard<std::mutex> lock(g_factor_mutex);
  auto it = g_eval_factors.find(lambda);
  if (it != g_eval_factors.end()) return it->second;
  // Probe with p = x^lambda at the all-ones diagonal: the direct route gives 1.
  BihomPoly probe = BihomPoly::monomial(lambda, lambda, GaussRat(1));
  ProjPoint pts = diagonal_ones(total(lambda));
  GaussRat direct = evaluate(polarize(probe), pts);
  GaussRat via = contraction_route(probe, pts);
  if (direct.is_zero() || via.is_zero())
    throw std::logic_error("polarized_evaluation_factor: degenerate probe");
  GaussRat f = via / direct;
  g_eval_factors.emplace(lambda, f);
  return f;
}

GaussRat polarized_evaluation(const BihomPoly& p, const ProjPoint& pts) {
  if (pts.arity() != total(p.degree()))
    throw std::invalid_argument("polarized_evaluation: arity mismatch");
  GaussRat f = polarized_evaluation_factor(p.degree());
  return contraction_route(p, pts) / f;
}

GaussRat form_polarization_factor(const DegreeVec& lambda) {
  std::lock_guard<std::mutex> lock(g_factor_mutex);
  auto it = g_form_factors.find(lambda);
  if (it != g_form_factors.end()) return it->second;
  // Probe pair (x^lambda, y^lambda): both routes are nonzero there.
  BihomPoly p = BihomPoly::monomial(lambda, lambda, GaussRat(1));
  BihomPoly q = BihomPoly::monomial(lambda, DegreeVec(lambda.size(), 0), GaussRat(1));
  GaussRat base = apolarity_form(p, q);
  GaussRat up = apolarity_form(polarize(p), polarize(q));
  if (base.is_zero() || up.is_zero())
    throw std::logic_error("form_polarization_factor: degenerate probe");
  GaussRat f = up / base;
  g_form_factors.emplace(lambda, f);
  return f;
}

}  // namespace stabkit
