#include "stabkit/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace stabkit {

Json to_json(const GaussRat& v) {
  return Json{{"re", rat_str(v.re())}, {"im", rat_str(v.im())}};
}

GaussRat gauss_from_json(const Json& j) {
  mpq_class re = j.contains("re") ? parse_rat(j.at("re").get<std::string>()) : mpq_class(0);
  mpq_class im = j.contains("im") ? parse_rat(j.at("im").get<std::string>()) : mpq_class(0);
  return GaussRat(std::move(re), std::move(im));
}

namespace {

DegreeVec degree_from_json(const Json& j) {
  DegreeVec d;
  for (const auto& v : j) d.push_back(v.get<unsigned>());
  return d;
}

void enforce_caps(const DegreeVec& d) {
  DegreeCaps caps = degree_caps();
  if (d.size() > caps.max_vars)
    throw std::invalid_argument("polynomial exceeds the variable-count cap");
  if (total(d) > caps.max_total)
    throw std::invalid_argument("polynomial exceeds the total-degree cap");
}

}  // namespace

Json to_json(const BihomPoly& p) {
  Json terms = Json::array();
  for (const auto& [mu, c] : p.terms()) {
    Json t;
    t["mu"] = mu;
    t["re"] = rat_str(c.re());
    t["im"] = rat_str(c.im());
    terms.push_back(std::move(t));
  }
  return Json{{"degree", p.degree()}, {"terms", std::move(terms)}};
}

BihomPoly poly_from_json(const Json& j) {
  DegreeVec degree = degree_from_json(j.at("degree"));
  enforce_caps(degree);
  BihomPoly p(degree);
  for (const auto& t : j.at("terms")) {
    DegreeVec mu = degree_from_json(t.at("mu"));
    p.add_term(mu, gauss_from_json(t));
  }
  return p;
}

Json to_json(const MoebiusMap& m) {
  return Json{{"a", to_json(m.a())},
              {"b", to_json(m.b())},
              {"c", to_json(m.c())},
              {"d", to_json(m.d())}};
}

MoebiusMap moebius_from_json(const Json& j) {
  return MoebiusMap(gauss_from_json(j.at("a")), gauss_from_json(j.at("b")),
                    gauss_from_json(j.at("c")), gauss_from_json(j.at("d")));
}

Json to_json(const LinearOp& T) {
  Json entries = Json::array();
  for (std::size_t c = 0; c < T.cols(); ++c)
    for (std::size_t r = 0; r < T.rows(); ++r) entries.push_back(to_json(T.entry(r, c)));
  return Json{{"in_degree", T.in_degree()},
              {"out_degree", T.out_degree()},
              {"entries", std::move(entries)}};
}

LinearOp op_from_json(const Json& j) {
  DegreeVec in = degree_from_json(j.at("in_degree"));
  DegreeVec out = degree_from_json(j.at("out_degree"));
  enforce_caps(in);
  enforce_caps(out);
  LinearOp T(in, out);
  const auto& entries = j.at("entries");
  if (entries.size() != T.rows() * T.cols())
    throw std::invalid_argument("operator entries: wrong count");
  std::size_t i = 0;
  for (std::size_t c = 0; c < T.cols(); ++c)
    for (std::size_t r = 0; r < T.rows(); ++r) T.set_entry(r, c, gauss_from_json(entries[i++]));
  return T;
}

namespace {
const char* status_name(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::Stable:
      return "STABLE";
    case Verdict::Status::Unstable:
      return "UNSTABLE";
    case Verdict::Status::Indeterminate:
      return "INDETERMINATE";
    case Verdict::Status::WeaklyZero:
      return "WEAKLY_ZERO";
  }
  return "?";
}
}  // namespace

Json to_json(const Verdict& v) {
  Json j;
  j["status"] = status_name(v.status);
  if (v.witness) {
    Json w = Json::array();
    for (const auto& [a, b] : v.witness->coords())
      w.push_back(Json{{"a", to_json(a)}, {"b", to_json(b)}});
    j["witness"] = std::move(w);
  }
  if (v.witness_radius) j["witness_radius"] = rat_str(*v.witness_radius);
  if (v.margin) j["margin"] = rat_str(*v.margin);
  j["samples_used"] = v.samples_used;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json poly_json_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace stabkit
