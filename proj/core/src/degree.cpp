#include "stabkit/degree.hpp"

#include <atomic>
#include <stdexcept>

#include "stabkit/rational.hpp"

namespace stabkit {

bool leq(const DegreeVec& a, const DegreeVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

DegreeVec add(const DegreeVec& a, const DegreeVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("degree add: arity mismatch");
  DegreeVec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

DegreeVec sub(const DegreeVec& a, const DegreeVec& b) {
  if (!leq(b, a)) throw std::invalid_argument("degree sub: underflow");
  DegreeVec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

DegreeVec concat(const DegreeVec& a, const DegreeVec& b) {
  DegreeVec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

unsigned total(const DegreeVec& a) {
  unsigned s = 0;
  for (unsigned v : a) s += v;
  return s;
}

mpz_class factorial(const DegreeVec& a) {
  mpz_class r = 1;
  for (unsigned v : a) r *= factorial(v);
  return r;
}

mpz_class binomial(const DegreeVec& n, const DegreeVec& k) {
  if (n.size() != k.size()) throw std::invalid_argument("binomial: arity mismatch");
  mpz_class r = 1;
  for (std::size_t j = 0; j < n.size(); ++j) r *= binomial(n[j], k[j]);
  return r;
}

DegreeVec ones_of(const DegreeVec& lambda) { return DegreeVec(total(lambda), 1); }

bool GradedLex::operator()(const DegreeVec& a, const DegreeVec& b) const {
  unsigned ta = total(a), tb = total(b);
  if (ta != tb) return ta < tb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;  // lexicographic tie-break
}

std::vector<DegreeVec> monomial_basis(const DegreeVec& lambda) {
  std::vector<DegreeVec> out;
  out.reserve(basis_size(lambda));
  DegreeVec mu(lambda.size(), 0);
  while (true) {
    out.push_back(mu);
    std::size_t k = 0;
    while (k < mu.size() && mu[k] == lambda[k]) mu[k++] = 0;
    if (k == mu.size()) break;
    ++mu[k];
  }
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

std::size_t basis_size(const DegreeVec& lambda) {
  std::size_t n = 1;
  for (unsigned v : lambda) n *= (v + 1);
  return n;
}

namespace {
std::atomic<unsigned> g_max_total{24};
std::atomic<unsigned> g_max_vars{6};
}  // namespace

DegreeCaps degree_caps() { return {g_max_total.load(), g_max_vars.load()}; }

void set_degree_caps(DegreeCaps caps) {
  g_max_total.store(caps.max_total);
  g_max_vars.store(caps.max_vars);
}

}  // namespace stabkit
