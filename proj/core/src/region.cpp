#include "stabkit/region.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stabkit {

Arc Arc::span(ExtPt from, ExtPt to, bool from_closed, bool to_closed) {
  Arc a;
  if (from == to && from_closed != to_closed) return full();
  a.kind = Kind::Span;
  a.from = std::move(from);
  a.to = std::move(to);
  a.from_closed = from_closed;
  a.to_closed = to_closed;
  return a;
}

bool Arc::is_single_point() const {
  return kind == Kind::Span && from == to && from_closed && to_closed;
}

bool Arc::contains(const ExtPt& t) const {
  switch (kind) {
    case Kind::Empty:
      return false;
    case Kind::Full:
      return true;
    case Kind::Span:
      break;
  }
  if (from == to) {
    if (from_closed && to_closed) return t == from;  // single point
    return !(t == from);                             // punctured circle
  }
  if (from.inf) {  // {inf if closed} u {t <= to}
    if (t.inf) return from_closed;
    return t.v < to.v || (t.v == to.v && to_closed);
  }
  if (to.inf) {  // {t >= from} u {inf if closed}
    if (t.inf) return to_closed;
    return t.v > from.v || (t.v == from.v && from_closed);
  }
  bool above_from = t.inf ? false : (t.v > from.v || (t.v == from.v && from_closed));
  bool below_to = t.inf ? false : (t.v < to.v || (t.v == to.v && to_closed));
  if (from.v < to.v) return !t.inf && above_from && below_to;
  // wrap through infinity
  if (t.inf) return true;
  return above_from || below_to;
}

Arc Arc::complement() const {
  switch (kind) {
    case Kind::Empty:
      return full();
    case Kind::Full:
      return empty();
    case Kind::Span:
      return span(to, from, !to_closed, !from_closed);
  }
  return empty();
}

ExtPt Arc::sample_point() const {
  if (kind == Kind::Empty) throw std::logic_error("Arc::sample_point: empty arc");
  if (kind == Kind::Full) return ExtPt::finite(0);
  if (from == to) {
    if (from_closed) return from;  // single point
    // punctured circle
    if (from.inf) return ExtPt::finite(0);
    return ExtPt::finite(from.v + 1);
  }
  if (from.inf) return ExtPt::finite(to.v - 1);
  if (to.inf) return ExtPt::finite(from.v + 1);
  if (from.v < to.v) return ExtPt::finite((from.v + to.v) / 2);
  return ExtPt::infinity();  // wrap arcs contain infinity
}

namespace {

struct Piece {
  bool has_lo = false, has_hi = false;
  mpq_class lo, hi;
  bool lo_closed = false, hi_closed = false;
};

struct PieceSet {
  std::vector<Piece> pieces;
  bool has_inf = false;
};

PieceSet pieces_of(const Arc& a) {
  PieceSet out;
  switch (a.kind) {
    case Arc::Kind::Empty:
      return out;
    case Arc::Kind::Full:
      out.pieces.push_back({});  // all of R
      out.has_inf = true;
      return out;
    case Arc::Kind::Span:
      break;
  }
  const ExtPt& f = a.from;
  const ExtPt& t = a.to;
  if (f == t) {
    if (a.from_closed && a.to_closed) {
      if (f.inf)
        out.has_inf = true;
      else
        out.pieces.push_back({true, true, f.v, f.v, true, true});
      return out;
    }
    // punctured circle
    if (f.inf) {
      out.pieces.push_back({});  // all of R, infinity removed
    } else {
      out.pieces.push_back({false, true, 0, f.v, false, false});
      out.pieces.push_back({true, false, f.v, 0, false, false});
      out.has_inf = true;
    }
    return out;
  }
  if (f.inf) {
    out.has_inf = a.from_closed;
    out.pieces.push_back({false, true, 0, t.v, false, a.to_closed});
    return out;
  }
  if (t.inf) {
    out.has_inf = a.to_closed;
    out.pieces.push_back({true, false, f.v, 0, a.from_closed, false});
    return out;
  }
  if (f.v < t.v) {
    out.pieces.push_back({true, true, f.v, t.v, a.from_closed, a.to_closed});
    return out;
  }
  // wrap: [from, +inf) u {inf} u (-inf, to]
  out.pieces.push_back({true, false, f.v, 0, a.from_closed, false});
  out.pieces.push_back({false, true, 0, t.v, false, a.to_closed});
  out.has_inf = true;
  return out;
}

// Overlap of two pieces: 0 = disjoint, 1 = single point (stored in pt),
// 2 = has interior.
int piece_overlap(const Piece& x, const Piece& y, mpq_class* pt) {
  bool has_lo = x.has_lo || y.has_lo;
  mpq_class lo;
  bool lo_closed = true;
  if (x.has_lo && y.has_lo) {
    if (x.lo > y.lo) {
      lo = x.lo;
      lo_closed = x.lo_closed;
    } else if (y.lo > x.lo) {
      lo = y.lo;
      lo_closed = y.lo_closed;
    } else {
      lo = x.lo;
      lo_closed = x.lo_closed && y.lo_closed;
    }
  } else if (x.has_lo) {
    lo = x.lo;
    lo_closed = x.lo_closed;
  } else if (y.has_lo) {
    lo = y.lo;
    lo_closed = y.lo_closed;
  }
  bool has_hi = x.has_hi || y.has_hi;
  mpq_class hi;
  bool hi_closed = true;
  if (x.has_hi && y.has_hi) {
    if (x.hi < y.hi) {
      hi = x.hi;
      hi_closed = x.hi_closed;
    } else if (y.hi < x.hi) {
      hi = y.hi;
      hi_closed = y.hi_closed;
    } else {
      hi = x.hi;
      hi_closed = x.hi_closed && y.hi_closed;
    }
  } else if (x.has_hi) {
    hi = x.hi;
    hi_closed = x.hi_closed;
  } else if (y.has_hi) {
    hi = y.hi;
    hi_closed = y.hi_closed;
  }
  if (!has_lo || !has_hi) return 2;  // unbounded overlap
  if (lo > hi) return 0;
  if (lo == hi) {
    if (lo_closed && hi_closed) {
      *pt = lo;
      return 1;
    }
    return 0;
  }
  return 2;
}

}  // namespace

bool arcs_disjoint(const Arc& a, const Arc& b) {
  PieceSet pa = pieces_of(a), pb = pieces_of(b);
  if (pa.has_inf && pb.has_inf) return false;
  mpq_class pt;
  for (const auto& x : pa.pieces)
    for (const auto& y : pb.pieces)
      if (piece_overlap(x, y, &pt) != 0) return false;
  return true;
}

bool arc_subset(const Arc& a, const Arc& b) { return arcs_disjoint(a, b.complement()); }

bool arcs_union_full(const Arc& a, const Arc& b) {
  return arcs_disjoint(a.complement(), b.complement());
}

std::optional<std::vector<ExtPt>> arc_intersection_points(const Arc& a, const Arc& b) {
  PieceSet pa = pieces_of(a), pb = pieces_of(b);
  std::vector<ExtPt> points;
  if (pa.has_inf && pb.has_inf) points.push_back(ExtPt::infinity());
  mpq_class pt;
  for (const auto& x : pa.pieces)
    for (const auto& y : pb.pieces) {
      int r = piece_overlap(x, y, &pt);
      if (r == 2) return std::nullopt;
      if (r == 1) points.push_back(ExtPt::finite(pt));
    }
  std::sort(points.begin(), points.end(), [](const ExtPt& u, const ExtPt& v) {
    if (u.inf != v.inf) return v.inf;
    return u.v < v.v;
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

namespace {

ExtPt apply_real_map(const ExtPt& t, const mpq_class& a, const mpq_class& b,
                     const mpq_class& c, const mpq_class& d) {
  if (t.inf) {
    if (sgn(c) == 0) return ExtPt::infinity();
    return ExtPt::finite(a / c);
  }
  mpq_class denom = c * t.v + d;
  if (sgn(denom) == 0) return ExtPt::infinity();
  return ExtPt::finite((a * t.v + b) / denom);
}

}  // namespace

Arc arc_image(const Arc& arc, const mpq_class& a, const mpq_class& b, const mpq_class& c,
              const mpq_class& d) {
  mpq_class det = a * d - b * c;
  if (sgn(det) == 0) throw std::invalid_argument("arc_image: singular map");
  if (arc.kind != Arc::Kind::Span) return arc;
  ExtPt fi = apply_real_map(arc.from, a, b, c, d);
  ExtPt ti = apply_real_map(arc.to, a, b, c, d);
  if (arc.from == arc.to) {
    // single point or punctured circle: both map in place
    return Arc::span(fi, ti, arc.from_closed, arc.to_closed);
  }
  if (sgn(det) > 0) return Arc::span(fi, ti, arc.from_closed, arc.to_closed);
  return Arc::span(ti, fi, arc.to_closed, arc.from_closed);
}

Region::Region(MoebiusMap chart, Base base, Arc boundary_arc, bool complemented)
    : chart_(std::move(chart)), base_(base), arc_(std::move(boundary_arc)),
      complemented_(complemented) {
  if (base_ == Base::ClosedHPlus) arc_ = Arc::full();
  if (base_ == Base::BoundaryOnly && arc_.is_empty() && !complemented_)
    throw std::invalid_argument("Region: empty boundary-only region");
}

namespace {
MoebiusMap negation_map() {
  return MoebiusMap(GaussRat(-1), GaussRat(0), GaussRat(0), GaussRat(1));
}
MoebiusMap cayley_map() {
  // z -> (z - i) / (z + i): upper half-plane onto the open unit disk
  return MoebiusMap(GaussRat(1), -GaussRat::i(), GaussRat(1), GaussRat::i());
}
}  // namespace

Region Region::lower_half_plane() { return Region(negation_map(), Base::OpenHPlus); }

Region Region::closed_lower_half_plane() {
  return Region(negation_map(), Base::ClosedHPlus);
}

Region Region::open_disk() { return Region(cayley_map(), Base::OpenHPlus); }

Region Region::open_exterior() {
  return Region(cayley_map() * negation_map(), Base::OpenHPlus);
}

Region::Normal Region::normal() const {
  Normal n;
  switch (base_) {
    case Base::OpenHPlus:
      n.side = Side::Plus;
      n.arc = arc_;
      break;
    case Base::ClosedHPlus:
      n.side = Side::Plus;
      n.arc = Arc::full();
      break;
    case Base::BoundaryOnly:
      n.side = Side::None;
      n.arc = arc_;
      break;
  }
  if (complemented_) {
    n.arc = n.arc.complement();
    n.side = n.side == Side::Plus ? Side::Minus : Side::Both;
  }
  return n;
}

bool Region::is_projectively_convex() const {
  Normal n = normal();
  switch (n.side) {
    case Side::Plus:
    case Side::Minus:
      return true;
    case Side::None:
      return n.arc.is_empty() || n.arc.is_single_point();
    case Side::Both:
      return n.arc.is_full() || n.arc.complement().is_single_point();
  }
  return false;
}

bool Region::is_open_circular() const {
  Normal n = normal();
  return (n.side == Side::Plus || n.side == Side::Minus) && n.arc.is_empty();
}

bool Region::is_closed_circular() const {
  Normal n = normal();
  return (n.side == Side::Plus || n.side == Side::Minus) && n.arc.is_full();
}

bool contains(const Region& r, const ProjPoint::Coord& z) {
  if (z.first.is_zero() && z.second.is_zero())
    throw std::invalid_argument("Region contains: invalid point");
  ProjPoint::Coord w = apply_point(r.chart().inverse(), z);
  bool inside = false;
  const bool at_inf = w.second.is_zero();
  // sign of Im(w) for finite w = a/b: sign of Im(a * conj(b))
  int im_sign = 0;
  bool on_boundary = at_inf;
  mpq_class real_value;
  if (!at_inf) {
    GaussRat t = w.first * w.second.conj();
    im_sign = sgn(t.im());
    if (im_sign == 0) {
      on_boundary = true;
      real_value = t.re() / w.second.norm();
    }
  }
  switch (r.base()) {
    case Region::Base::OpenHPlus:
      inside = !at_inf && im_sign > 0;
      break;
    case Region::Base::ClosedHPlus:
      inside = at_inf || im_sign >= 0;
      break;
    case Region::Base::BoundaryOnly:
      inside = false;
      break;
  }
  if (!inside && on_boundary && !r.boundary_arc().is_empty()) {
    ExtPt t = at_inf ? ExtPt::infinity() : ExtPt::finite(real_value);
    inside = r.boundary_arc().contains(t);
  }
  return r.complemented() ? !inside : inside;
}

Region complement(const Region& r) {
  return Region(r.chart(), r.base(), r.boundary_arc(), !r.complemented());
}

Region mobius_image(const MoebiusMap& phi, const Region& r) {
  return Region(phi * r.chart(), r.base(), r.boundary_arc(), r.complemented());
}

namespace {

mpq_class rand_between(Rng& rng, const mpq_class& lo, const mpq_class& hi) {
  long num = rng.range(1, 15);
  long den = rng.range(num + 1, num + 16);
  mpq_class u(num, den);  // in (0,1)
  u.canonicalize();
  return lo + (hi - lo) * u;
}

ExtPt arc_random_point(const Arc& arc, Rng& rng) {
  PieceSet ps = pieces_of(arc);
  if (ps.has_inf && (ps.pieces.empty() || rng.coin(20))) return ExtPt::infinity();
  if (ps.pieces.empty()) throw std::logic_error("arc_random_point: empty arc");
  const Piece& p = ps.pieces[rng.below(ps.pieces.size())];
  if (p.has_lo && p.has_hi) {
    if (p.lo == p.hi) return ExtPt::finite(p.lo);
    if (p.lo_closed && rng.coin(15)) return ExtPt::finite(p.lo);
    if (p.hi_closed && rng.coin(15)) return ExtPt::finite(p.hi);
    return ExtPt::finite(rand_between(rng, p.lo, p.hi));
  }
  if (p.has_lo) {
    if (p.lo_closed && rng.coin(15)) return ExtPt::finite(p.lo);
    return ExtPt::finite(p.lo + rng.pos_rat(8, 4));
  }
  if (p.has_hi) {
    if (p.hi_closed && rng.coin(15)) return ExtPt::finite(p.hi);
    return ExtPt::finite(p.hi - rng.pos_rat(8, 4));
  }
  return ExtPt::finite(rng.rat(6, 3));  // whole line
}

ProjPoint::Coord coord_of_ext(const ExtPt& t) {
  if (t.inf) return ProjPoint::infinity();
  return {GaussRat(t.v), GaussRat(1)};
}

}  // namespace

ProjPoint::Coord sample(const Region& r, Rng& rng) {
  Region::Normal n = r.normal();
  for (int attempt = 0; attempt < 64; ++attempt) {
    ProjPoint::Coord w;
    bool prefer_interior = rng.coin(70);
    bool have = false;
    auto draw_side = [&](bool upper) {
      mpq_class x = rng.rat(6, 3);
      mpq_class y = rng.pos_rat(6, 3);
      if (!upper) y = -y;
      w = {GaussRat(std::move(x), std::move(y)), GaussRat(1)};
      have = true;
    };
    switch (n.side) {
      case Region::Side::Plus:
        if (prefer_interior || n.arc.is_empty())
          draw_side(true);
        else {
          w = coord_of_ext(arc_random_point(n.arc, rng));
          have = true;
        }
        break;
      case Region::Side::Minus:
        if (prefer_interior || n.arc.is_empty())
          draw_side(false);
        else {
          w = coord_of_ext(arc_random_point(n.arc, rng));
          have = true;
        }
        break;
      case Region::Side::None:
        w = coord_of_ext(arc_random_point(n.arc, rng));
        have = true;
        break;
      case Region::Side::Both:
        if (!n.arc.is_empty() && rng.coin(20)) {
          w = coord_of_ext(arc_random_point(n.arc, rng));
          have = true;
        } else {
          draw_side(rng.coin(50));
        }
        break;
    }
    if (!have) continue;
    ProjPoint::Coord z = apply_point(r.chart(), w);
    if (contains(r, z)) return z;
  }
  throw std::runtime_error("Region sample: exhausted retries (region empty?)");
}

bool contains(const RegionProduct& r, const ProjPoint& z) {
  if (r.arity() != z.arity()) throw std::invalid_argument("RegionProduct contains: arity");
  for (std::size_t k = 0; k < r.arity(); ++k)
    if (!contains(r.factors[k], z.coord(k))) return false;
  return true;
}

RegionProduct complement(const RegionProduct& r) {
  RegionProduct out;
  for (const auto& f : r.factors) out.factors.push_back(complement(f));
  return out;
}

ProjPoint sample(const RegionProduct& r, Rng& rng) {
  std::vector<ProjPoint::Coord> cs;
  cs.reserve(r.arity());
  for (const auto& f : r.factors) cs.push_back(sample(f, rng));
  return ProjPoint(std::move(cs));
}

namespace {

// Decomposes psi as s * M with M real when possible.
struct RealProjective {
  bool ok = false;
  mpq_class a, b, c, d;
  int det_sign = 0;
};

RealProjective real_projective_form(const MoebiusMap& psi) {
  RealProjective out;
  const GaussRat* entries[4] = {&psi.a(), &psi.b(), &psi.c(), &psi.d()};
  const GaussRat* pivot = nullptr;
  for (const auto* e : entries)
    if (!e->is_zero()) {
      pivot = e;
      break;
    }
  if (!pivot) return out;
  mpq_class vals[4];
  for (int i = 0; i < 4; ++i) {
    GaussRat q = *entries[i] / *pivot;
    if (!q.is_real()) return out;
    vals[i] = q.re();
  }
  out.a = vals[0];
  out.b = vals[1];
  out.c = vals[2];
  out.d = vals[3];
  mpq_class det = out.a * out.d - out.b * out.c;
  if (sgn(det) == 0) return out;
  out.ok = true;
  out.det_sign = sgn(det);
  return out;
}

struct FrameNormal {
  bool ok = false;
  Region::Side side;
  Arc arc;
};

// Normal form of B expressed in the canonical frame of C's chart.
FrameNormal normal_in_frame(const Region& C, const Region& B) {
  FrameNormal out;
  MoebiusMap psi = C.chart().inverse() * B.chart();
  RealProjective rp = real_projective_form(psi);
  if (!rp.ok) return out;
  Region::Normal nb = B.normal();
  out.ok = true;
  out.arc = arc_image(nb.arc, rp.a, rp.b, rp.c, rp.d);
  out.side = nb.side;
  if (rp.det_sign < 0) {
    if (nb.side == Region::Side::Plus)
      out.side = Region::Side::Minus;
    else if (nb.side == Region::Side::Minus)
      out.side = Region::Side::Plus;
  }
  return out;
}

bool union_is_sphere(Region::Side sc, const Arc& gc, Region::Side sb, const Arc& gb) {
  auto covers_upper = [](Region::Side s) {
    return s == Region::Side::Plus || s == Region::Side::Both;
  };
  auto covers_lower = [](Region::Side s) {
    return s == Region::Side::Minus || s == Region::Side::Both;
  };
  if (!(covers_upper(sc) || covers_upper(sb))) return false;
  if (!(covers_lower(sc) || covers_lower(sb))) return false;
  return arcs_union_full(gc, gb);
}

}  // namespace

GracePairClass classify_grace_pair(const RegionProduct& A, const RegionProduct& B) {
  if (A.arity() != B.arity() || A.arity() == 0) return GracePairClass::NotCovered;
  const std::size_t m = A.arity();

  bool all_case_i = true, all_case_ii = true, all_case_iii = true, all_case_iv = true;
  for (std::size_t k = 0; k < m; ++k) {
    const Region& C = A.factors[k];
    const Region& Bk = B.factors[k];
    Region::Normal nc = C.normal();
    FrameNormal nb = normal_in_frame(C, Bk);
    if (!nb.ok) return GracePairClass::NotCovered;

    bool union_full = union_is_sphere(nc.side, nc.arc, nb.side, nb.arc);
    bool both_convex = C.is_projectively_convex() && Bk.is_projectively_convex();

    bool two_points = false;
    bool opposite_sides =
        (nc.side == Region::Side::Plus && nb.side == Region::Side::Minus) ||
        (nc.side == Region::Side::Minus && nb.side == Region::Side::Plus);
    if (opposite_sides) {
      auto pts = arc_intersection_points(nc.arc, nb.arc);
      two_points = pts.has_value() && pts->size() == 2;
    }

    all_case_i &= both_convex && union_full && two_points;
    all_case_ii &= C.is_closed_circular() && Bk.is_open_circular() && union_full;
    all_case_iii &= C.is_open_circular() && Bk.is_closed_circular() && union_full;
    all_case_iv &= both_convex && union_full;
  }
  if (all_case_i) return GracePairClass::CaseI;
  if (all_case_ii) return GracePairClass::CaseII;
  if (all_case_iii) return GracePairClass::CaseIII;
  if (m == 1 && all_case_iv) return GracePairClass::CaseIV;
  return GracePairClass::NotCovered;
}

// ---------------------------------------------------------------------------
// DSL
// ---------------------------------------------------------------------------

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

GaussRat parse_gauss(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  // Split into real and imaginary summands at a top-level +/- (not leading).
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < text.size(); ++i)
    if (text[i] == '+' || text[i] == '-') split = i;
  auto parse_part = [&](std::string part, bool* imag) {
    *imag = false;
    if (!part.empty() && part.back() == 'i') {
      *imag = true;
      part.pop_back();
      if (part.empty() || part == "+") part = "1";
      if (part == "-") part = "-1";
    }
    if (!part.empty() && part.front() == '+') part.erase(part.begin());
    return parse_rat(part);
  };
  if (split == std::string::npos) {
    bool imag;
    mpq_class v = parse_part(text, &imag);
    return imag ? GaussRat(0, v) : GaussRat(v);
  }
  bool imag1, imag2;
  mpq_class v1 = parse_part(text.substr(0, split), &imag1);
  mpq_class v2 = parse_part(text.substr(split), &imag2);
  if (imag1 == imag2) throw std::invalid_argument("bad scalar: " + text);
  if (imag1) return GaussRat(v2, v1);
  return GaussRat(v1, v2);
}

ExtPt parse_endpoint(const std::string& s) {
  if (s == "inf" || s == "-inf" || s == "+inf") return ExtPt::infinity();
  return ExtPt::finite(parse_rat(s));
}

Arc parse_arc(const std::string& text) {
  if (text == "R") return Arc::full();
  if (text.size() < 6 || text.substr(0, 3) != "arc")
    throw std::invalid_argument("bad arc: " + text);
  char open_c = text[3];
  char close_c = text.back();
  if ((open_c != '[' && open_c != '(') || (close_c != ']' && close_c != ')'))
    throw std::invalid_argument("bad arc brackets: " + text);
  std::string inner = text.substr(4, text.size() - 5);
  std::size_t comma = inner.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("bad arc: " + text);
  ExtPt from = parse_endpoint(inner.substr(0, comma));
  ExtPt to = parse_endpoint(inner.substr(comma + 1));
  bool fc = open_c == '[';
  bool tc = close_c == ']';
  if (from.inf && to.inf) {
    // arc[-inf,inf] reads as all of R plus any closed end at infinity.
    if (fc || tc) return Arc::full();
    return Arc::span(ExtPt::infinity(), ExtPt::infinity(), false, false);  // R
  }
  return Arc::span(from, to, fc, tc);
}

// Splits "a,b,c,d;region" at top level.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Region parse_region_stripped(const std::string& s);

Region attach_arc(Region base, const Arc& literal_arc) {
  if (base.complemented())
    throw std::invalid_argument("region DSL: cannot attach an arc to compl(...)");
  if (base.base() == Region::Base::ClosedHPlus)
    throw std::invalid_argument("region DSL: closure already contains its boundary");
  RealProjective rp = real_projective_form(base.chart());
  Arc pre = literal_arc;
  if (rp.ok) {
    // express the literal arc in the canonical (pre-chart) frame
    MoebiusMap inv = base.chart().inverse();
    RealProjective rpi = real_projective_form(inv);
    pre = arc_image(literal_arc, rpi.a, rpi.b, rpi.c, rpi.d);
  }
  return Region(base.chart(), base.base(), pre, false);
}

Region parse_region_stripped(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty region");
  if (s.rfind("compl(", 0) == 0 && s.back() == ')')
    return complement(parse_region_stripped(s.substr(6, s.size() - 7)));
  if (s.rfind("mobius(", 0) == 0 && s.back() == ')') {
    std::string inner = s.substr(7, s.size() - 8);
    auto halves = split_top(inner, ';');
    if (halves.size() != 2) throw std::invalid_argument("mobius(a,b,c,d;R): " + s);
    auto nums = split_top(halves[0], ',');
    if (nums.size() != 4) throw std::invalid_argument("mobius needs 4 entries: " + s);
    MoebiusMap phi(parse_gauss(nums[0]), parse_gauss(nums[1]), parse_gauss(nums[2]),
                   parse_gauss(nums[3]));
    return mobius_image(phi, parse_region_stripped(halves[1]));
  }
  auto parts = split_top(s, '|');
  if (parts.size() == 2) return attach_arc(parse_region_stripped(parts[0]), parse_arc(parts[1]));
  if (parts.size() != 1) throw std::invalid_argument("bad region: " + s);

  if (s == "H+") return Region::upper_half_plane();
  if (s == "H-") return Region::lower_half_plane();
  if (s == "closure(H+)") return Region::closed_upper_half_plane();
  if (s == "closure(H-)") return Region::closed_lower_half_plane();
  if (s == "disk") return Region::open_disk();
  if (s == "ext") return Region::open_exterior();
  if (s == "closure(disk)")
    return Region(Region::open_disk().chart(), Region::Base::ClosedHPlus);
  if (s == "closure(ext)")
    return Region(Region::open_exterior().chart(), Region::Base::ClosedHPlus);
  // bare arc: a pure boundary set
  return Region::boundary_set(parse_arc(s));
}

std::string ext_str(const ExtPt& p) {
  if (p.inf) return "inf";
  return p.v.get_num().get_str() + "/" + p.v.get_den().get_str();
}

std::string arc_str(const Arc& a) {
  switch (a.kind) {
    case Arc::Kind::Empty:
      return "arc()";
    case Arc::Kind::Full:
      return "R";
    case Arc::Kind::Span:
      break;
  }
  std::string s = "arc";
  s += a.from_closed ? '[' : '(';
  s += ext_str(a.from) + "," + ext_str(a.to);
  s += a.to_closed ? ']' : ')';
  return s;
}

}  // namespace

Region parse_region(const std::string& text) { return parse_region_stripped(strip(text)); }

RegionProduct parse_region_product(const std::string& text) {
  // factors are separated by a standalone " x " token (so that "ext" parses)
  RegionProduct out;
  int depth = 0;
  std::string cur;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && c == 'x' && i > 0 && text[i - 1] == ' ' && i + 1 < text.size() &&
        text[i + 1] == ' ') {
      out.factors.push_back(parse_region(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  out.factors.push_back(parse_region(cur));
  return out;
}

std::string Region::str() const {
  std::string base;
  bool identity_chart = chart_ == MoebiusMap::identity();
  bool neg_chart = chart_ == negation_map();
  bool disk_chart = chart_ == cayley_map();
  bool ext_chart = chart_ == cayley_map() * negation_map();
  std::string base_name;
  switch (base_) {
    case Base::OpenHPlus:
      if (identity_chart) base_name = "H+";
      if (neg_chart) base_name = "H-";
      if (disk_chart) base_name = "disk";
      if (ext_chart) base_name = "ext";
      break;
    case Base::ClosedHPlus:
      if (identity_chart) base_name = "closure(H+)";
      if (neg_chart) base_name = "closure(H-)";
      if (disk_chart) base_name = "closure(disk)";
      if (ext_chart) base_name = "closure(ext)";
      break;
    case Base::BoundaryOnly:
      if (identity_chart) base_name = arc_str(arc_);
      break;
  }
  if (!base_name.empty()) {
    std::string s = base_name;
    if (base_ == Base::OpenHPlus && !arc_.is_empty()) s += "|" + arc_str(arc_);
    return complemented_ ? "compl(" + s + ")" : s;
  }
  // generic printer
  std::ostringstream os;
  os << "mobius(" << chart_.a().str() << "," << chart_.b().str() << "," << chart_.c().str()
     << "," << chart_.d().str() << ";";
  std::string inner;
  switch (base_) {
    case Base::OpenHPlus:
      inner = "H+";
      if (!arc_.is_empty()) inner += "|" + arc_str(arc_);
      break;
    case Base::ClosedHPlus:
      inner = "closure(H+)";
      break;
    case Base::BoundaryOnly:
      inner = arc_str(arc_);
      break;
  }
  os << inner << ")";
  std::string s = os.str();
  return complemented_ ? "compl(" + s + ")" : s;
}

std::string RegionProduct::str() const {
  std::string s;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) s += " x ";
    s += factors[k].str();
  }
  return s;
}

}  // namespace stabkit
