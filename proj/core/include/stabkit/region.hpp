#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabkit/moebius.hpp"
#include "stabkit/poly.hpp"
#include "stabkit/rng.hpp"

namespace stabkit {

// Point of the canonical boundary circle R u {inf}.
struct ExtPt {
  bool inf = false;
  mpq_class v;

  static ExtPt infinity() { return {true, 0}; }
  static ExtPt finite(mpq_class q) { return {false, std::move(q)}; }
  bool operator==(const ExtPt& o) const {
    return inf == o.inf && (inf || v == o.v);
  }
};

// Connected subset of the boundary circle R u {inf}. A span runs from `from`
// to `to` in the increasing direction, wrapping through infinity when needed;
// endpoint membership follows the closed flags. Degenerate spans follow the
// conventions: equal endpoints closed/closed is a single point, open/open is
// the punctured circle, mixed normalizes to Full.
struct Arc {
  enum class Kind { Empty, Full, Span };
  Kind kind = Kind::Empty;
  ExtPt from, to;
  bool from_closed = true, to_closed = true;

  static Arc empty() { return {}; }
  static Arc full() {
    Arc a;
    a.kind = Kind::Full;
    return a;
  }
  static Arc span(ExtPt from, ExtPt to, bool from_closed, bool to_closed);
  static Arc point(ExtPt p) { return span(p, p, true, true); }

  bool is_empty() const { return kind == Kind::Empty; }
  bool is_full() const { return kind == Kind::Full; }
  bool is_single_point() const;

  bool contains(const ExtPt& t) const;
  Arc complement() const;
  // Any point of the arc (arbitrary but deterministic); arc must be nonempty.
  ExtPt sample_point() const;
};

bool arcs_disjoint(const Arc& a, const Arc& b);
bool arc_subset(const Arc& a, const Arc& b);   // a subset of b
bool arcs_union_full(const Arc& a, const Arc& b);
// The points common to both arcs, when the intersection is finite; nullopt if
// the intersection has interior.
std::optional<std::vector<ExtPt>> arc_intersection_points(const Arc& a, const Arc& b);

// Image of the arc under a real-projective Moebius map given as a real matrix
// [[a,b],[c,d]] with rational entries; det sign controls orientation.
Arc arc_image(const Arc& arc, const mpq_class& a, const mpq_class& b,
              const mpq_class& c, const mpq_class& d);

// Circular or projectively convex subset of CP^1: the chart image of a
// canonical base (open/closed upper half-plane, or nothing) together with a
// connected boundary arc, optionally complemented. Membership is exact for
// Gaussian-rational points.
class Region {
 public:
  enum class Base { OpenHPlus, ClosedHPlus, BoundaryOnly };

  Region() : base_(Base::OpenHPlus) {}
  Region(MoebiusMap chart, Base base, Arc boundary_arc = Arc::empty(),
         bool complemented = false);

  const MoebiusMap& chart() const { return chart_; }
  Base base() const { return base_; }
  const Arc& boundary_arc() const { return arc_; }
  bool complemented() const { return complemented_; }

  static Region upper_half_plane() { return Region(); }
  static Region lower_half_plane();
  static Region closed_upper_half_plane() {
    return Region(MoebiusMap::identity(), Base::ClosedHPlus);
  }
  static Region closed_lower_half_plane();
  static Region open_disk();           // |z| < 1
  static Region open_exterior();       // |z| > 1 together with infinity
  static Region boundary_set(Arc arc) {
    return Region(MoebiusMap::identity(), Base::BoundaryOnly, std::move(arc));
  }
  // H+ together with a boundary arc of R u {inf}.
  static Region upper_with_arc(Arc arc) {
    return Region(MoebiusMap::identity(), Base::OpenHPlus, std::move(arc));
  }

  // Canonical description: the region equals chart * (side-part u arc-part),
  // complement already folded in.
  enum class Side { Plus, Minus, None, Both };
  struct Normal {
    Side side;
    Arc arc;
  };
  Normal normal() const;

  bool is_projectively_convex() const;
  bool is_open_circular() const;
  bool is_closed_circular() const;

  std::string str() const;

 private:
  MoebiusMap chart_;
  Base base_;
  Arc arc_;
  bool complemented_ = false;
};

bool contains(const Region& r, const ProjPoint::Coord& z);
Region complement(const Region& r);
Region mobius_image(const MoebiusMap& phi, const Region& r);

// Deterministic sampling of a Gaussian-rational member point; throws after a
// bounded number of rejected draws (emptiness is not detected in general).
ProjPoint::Coord sample(const Region& r, Rng& rng);

struct RegionProduct {
  std::vector<Region> factors;

  std::size_t arity() const { return factors.size(); }
  std::string str() const;
};

bool contains(const RegionProduct& r, const ProjPoint& z);
RegionProduct complement(const RegionProduct& r);
ProjPoint sample(const RegionProduct& r, Rng& rng);

enum class GracePairClass {
  CaseI,         // both projectively convex, union CP^1, two-point intersection
  CaseII,        // closed vs open circular covering CP^1
  CaseIII,       // open vs closed circular covering CP^1
  CaseIV,        // m = 1, both projectively convex, union CP^1
  NotCovered,
};

// Syntactic matcher for the hypothesis sets of the Grace-pair catalog; a
// NotCovered result makes no claim either way.
GracePairClass classify_grace_pair(const RegionProduct& A, const RegionProduct& B);

// Region DSL: H+, H-, closure(H+), disk, ext, closure(disk), closure(ext),
// base|arc[lo,hi], arc(a,b], R, compl(...), mobius(a,b,c,d;...).
Region parse_region(const std::string& text);
RegionProduct parse_region_product(const std::string& text);  // 'x'-separated

}  // namespace stabkit
