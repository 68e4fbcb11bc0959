#include "stabkit/apolarity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stabkit {

TensorPoly tensor(const BihomPoly& p, const BihomPoly& q) {
  BihomPoly r(concat(p.degree(), q.degree()));
  for (const auto& [mu, a] : p.terms())
    for (const auto& [nu, b] : q.terms()) r.add_term(concat(mu, nu), a * b);
  return {std::move(r), p.arity()};
}

TensorPoly d_map(const TensorPoly& t, std::size_t k) {
  std::size_t m1 = t.split;
  std::size_t m2 = t.poly.arity() - t.split;
  if (k >= m1 || k >= m2) throw std::invalid_argument("d_map: bad variable index");
  if (t.poly.degree()[k] == 0 || t.poly.degree()[m1 + k] == 0)
    throw std::invalid_argument("d_map: degree underflow");
  BihomPoly lhs = partial(partial(t.poly, k, Var::X), m1 + k, Var::Y);
  BihomPoly rhs = partial(partial(t.poly, k, Var::Y), m1 + k, Var::X);
  return {sub(lhs, rhs), t.split};
}

TensorPoly d_power(const TensorPoly& t, const DegreeVec& r) {
  TensorPoly out = t;
  for (std::size_t k = 0; k < r.size(); ++k)
    for (unsigned i = 0; i < r[k]; ++i) out = d_map(out, k);
  return out;
}

BihomPoly merge_groups(const TensorPoly& t) {
  std::size_t m = t.split;
  if (t.poly.arity() != 2 * m) throw std::invalid_argument("merge_groups: group arity mismatch");
  DegreeVec deg(m);
  for (std::size_t k = 0; k < m; ++k) deg[k] = t.poly.degree()[k] + t.poly.degree()[m + k];
  BihomPoly r(deg);
  for (const auto& [mu, c] : t.poly.terms()) {
    DegreeVec nu(m);
    for (std::size_t k = 0; k < m; ++k) nu[k] = mu[k] + mu[m + k];
    r.add_term(nu, c);
  }
  return r;
}

BihomPoly drop_zero_pairs(const BihomPoly& p, const std::vector<std::size_t>& pairs) {
  std::vector<bool> drop(p.arity(), false);
  for (std::size_t k : pairs) {
    if (p.degree()[k] != 0) throw std::invalid_argument("drop_zero_pairs: nonzero degree");
    drop[k] = true;
  }
  DegreeVec deg;
  for (std::size_t k = 0; k < p.arity(); ++k)
    if (!drop[k]) deg.push_back(p.degree()[k]);
  BihomPoly r(deg);
  for (const auto& [mu, c] : p.terms()) {
    DegreeVec nu;
    for (std::size_t k = 0; k < p.arity(); ++k)
      if (!drop[k]) nu.push_back(mu[k]);
    r.add_term(nu, c);
  }
  return r;
}

BihomPoly transvectant(const BihomPoly& p, const BihomPoly& q, const DegreeVec& r) {
  if (p.arity() != q.arity() || r.size() != p.arity())
    throw std::invalid_argument("transvectant: arity mismatch");
  if (!leq(r, p.degree()) || !leq(r, q.degree()))
    throw std::invalid_argument("transvectant: order exceeds degree");
  return merge_groups(d_power(tensor(p, q), r));
}

BihomPoly transvectant(const BihomPoly& p, const BihomPoly& q, unsigned r) {
  return transvectant(p, q, DegreeVec(p.arity(), r));
}

GaussRat apolarity_form(const BihomPoly& p, const BihomPoly& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("apolarity_form: degree mismatch");
  TensorPoly t = d_power(tensor(p, q), p.degree());
  // t lives in V(0^m (++) 0^m); read off the constant.
  return t.poly.coeff(DegreeVec(t.poly.arity(), 0));
}

GaussRat classical_form_factor(const DegreeVec& lambda) {
  mpq_class inv(1, 1);
  mpz_class f = factorial(lambda);
  mpq_class denom(f * f);
  GaussRat c(inv / denom);
  if (total(lambda) % 2 == 1) c = -c;
  return c;
}

GaussRat classical_apolarity(const BihomPoly& p, const BihomPoly& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("classical_apolarity: degree mismatch");
  const DegreeVec& lam = p.degree();
  GaussRat acc;
  for (const auto& [mu, a] : p.terms()) {
    DegreeVec comp = sub(lam, mu);
    GaussRat b = q.coeff(comp);
    if (b.is_zero()) continue;
    mpq_class w(1);
    w /= mpq_class(binomial(lam, mu));
    GaussRat t = a * b * GaussRat(w);
    if (total(mu) % 2 == 1) t = -t;
    acc += t;
  }
  return acc;
}

LinearOp::LinearOp(DegreeVec in_degree, DegreeVec out_degree)
    : in_(std::move(in_degree)), out_(std::move(out_degree)) {
  check_operator_dims(in_, out_);
  in_basis_ = monomial_basis(in_);
  out_basis_ = monomial_basis(out_);
  mat_.assign(in_basis_.size() * out_basis_.size(), GaussRat());
}

const GaussRat& LinearOp::entry(std::size_t row, std::size_t col) const {
  return mat_[col * rows() + row];
}

void LinearOp::set_entry(std::size_t row, std::size_t col, GaussRat v) {
  mat_[col * rows() + row] = std::move(v);
}

void LinearOp::set_column(std::size_t col, const BihomPoly& image) {
  if (image.degree() != out_) throw std::invalid_argument("set_column: degree mismatch");
  for (std::size_t r = 0; r < rows(); ++r) set_entry(r, col, image.coeff(out_basis_[r]));
}

BihomPoly LinearOp::column(std::size_t col) const {
  BihomPoly img(out_);
  for (std::size_t r = 0; r < rows(); ++r) img.add_term(out_basis_[r], entry(r, col));
  return img;
}

BihomPoly LinearOp::apply(const BihomPoly& q) const {
  if (q.degree() != in_) throw std::invalid_argument("LinearOp::apply: degree mismatch");
  BihomPoly img(out_);
  for (std::size_t c = 0; c < cols(); ++c) {
    GaussRat qc = q.coeff(in_basis_[c]);
    if (qc.is_zero()) continue;
    for (std::size_t r = 0; r < rows(); ++r) {
      const GaussRat& e = entry(r, c);
      if (!e.is_zero()) img.add_term(out_basis_[r], e * qc);
    }
  }
  return img;
}

bool LinearOp::restricts_to_real() const {
  return std::all_of(mat_.begin(), mat_.end(), [](const GaussRat& v) { return v.is_real(); });
}

LinearOp LinearOp::identity(const DegreeVec& lambda) {
  LinearOp T(lambda, lambda);
  for (std::size_t j = 0; j < T.cols(); ++j) T.set_entry(j, j, GaussRat(1));
  return T;
}

LinearOp LinearOp::from_images(const DegreeVec& lambda, const DegreeVec& alpha,
                               const std::vector<BihomPoly>& images) {
  LinearOp T(lambda, alpha);
  if (images.size() != T.cols()) throw std::invalid_argument("from_images: wrong image count");
  for (std::size_t j = 0; j < images.size(); ++j) T.set_column(j, images[j]);
  return T;
}

LinearOp operator+(const LinearOp& s, const LinearOp& t) {
  if (s.in_ != t.in_ || s.out_ != t.out_) throw std::invalid_argument("LinearOp+: shape mismatch");
  LinearOp r = s;
  for (std::size_t i = 0; i < r.mat_.size(); ++i) r.mat_[i] += t.mat_[i];
  return r;
}

LinearOp operator*(const GaussRat& c, const LinearOp& t) {
  LinearOp r = t;
  for (auto& v : r.mat_) v *= c;
  return r;
}

LinearOp compose(const LinearOp& s, const LinearOp& t) {
  if (t.out_ != s.in_) throw std::invalid_argument("compose: shape mismatch");
  LinearOp r(t.in_, s.out_);
  for (std::size_t j = 0; j < t.cols(); ++j) r.set_column(j, s.apply(t.column(j)));
  return r;
}

BihomPoly symbol(const LinearOp& T) {
  const DegreeVec& lam = T.in_degree();
  const DegreeVec& alf = T.out_degree();
  BihomPoly s(concat(lam, alf));
  for (std::size_t j = 0; j < T.cols(); ++j) {
    const DegreeVec& mu = T.in_basis()[j];
    // binom(lambda,mu) z^(lambda-mu) (-w)^mu * T(x^mu y^(lambda-mu))
    GaussRat w(mpq_class(binomial(lam, mu)));
    if (total(mu) % 2 == 1) w = -w;
    BihomPoly img = T.column(j);
    DegreeVec zexp = sub(lam, mu);
    for (const auto& [nu, c] : img.terms()) s.add_term(concat(zexp, nu), w * c);
  }
  return s;
}

LinearOp operator_from_symbol(const BihomPoly& s, const DegreeVec& lambda,
                              const DegreeVec& alpha) {
  if (s.degree() != concat(lambda, alpha))
    throw std::invalid_argument("operator_from_symbol: degree split inconsistent");
  LinearOp T(lambda, alpha);
  mpz_class f = factorial(lambda);
  GaussRat scale_factor(mpq_class(1) / mpq_class(f * f));
  std::size_t m = lambda.size();
  std::vector<std::size_t> first_pairs(m);
  for (std::size_t k = 0; k < m; ++k) first_pairs[k] = k;
  for (std::size_t j = 0; j < T.cols(); ++j) {
    BihomPoly mono = BihomPoly::monomial(lambda, T.in_basis()[j], GaussRat(1));
    TensorPoly contracted = d_power(tensor(s, mono), lambda);
    // Group two is exhausted; group one keeps the alpha pairs.
    std::vector<std::size_t> dead = first_pairs;
    for (std::size_t k = 0; k < m; ++k) dead.push_back(m + alpha.size() + k);
    BihomPoly img = drop_zero_pairs(contracted.poly, dead);
    T.set_column(j, scale(img, scale_factor));
  }
  return T;
}

BihomPoly evaluation_symbol(const ProjPoint& z, const DegreeVec& lambda) {
  if (z.arity() != lambda.size())
    throw std::invalid_argument("evaluation_symbol: arity mismatch");
  BihomPoly out = BihomPoly::constant(lambda.size(), GaussRat(1));
  // out starts in V(0^m); multiply in (b_k x_k - a_k y_k)^lambda_k factors.
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    const auto& [a, b] = z.coord(k);
    DegreeVec unit(lambda.size(), 0);
    unit[k] = 1;
    BihomPoly lin(unit);
    DegreeVec ex(lambda.size(), 0);
    ex[k] = 1;
    lin.add_term(ex, b);
    lin.add_term(DegreeVec(lambda.size(), 0), -a);
    for (unsigned i = 0; i < lambda[k]; ++i) out = mul(out, lin);
  }
  return out;
}

TensorPoly symbol_lemma_contract(const BihomPoly& sT, const DegreeVec& lambda,
                                 const DegreeVec& alpha, const BihomPoly& q,
                                 const BihomPoly& r) {
  if (sT.degree() != concat(lambda, alpha))
    throw std::invalid_argument("symbol_lemma_contract: symbol degree mismatch");
  if (q.degree() != lambda || r.degree() != alpha)
    throw std::invalid_argument("symbol_lemma_contract: argument degree mismatch");
  BihomPoly qr = tensor(q, r).poly;  // element of V(lambda ++ alpha)
  TensorPoly t = tensor(sT, qr);
  t = d_power(t, lambda);
  std::size_t m = lambda.size(), l = alpha.size();
  std::vector<std::size_t> dead;
  for (std::size_t k = 0; k < m; ++k) {
    dead.push_back(k);              // first group lambda pairs
    dead.push_back(m + l + k);      // second group lambda pairs
  }
  BihomPoly out = drop_zero_pairs(t.poly, dead);
  return {std::move(out), l};
}

void check_operator_dims(const DegreeVec& lambda, const DegreeVec& alpha) {
  if (basis_size(lambda) * basis_size(alpha) > 1000000)
    throw std::invalid_argument("operator dimension guard exceeded");
}

}  // namespace stabkit
