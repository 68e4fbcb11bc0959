#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stabkit/region.hpp"

using namespace stabkit;

namespace {

ProjPoint::Coord pt(long re, long im = 0) {
  return {GaussRat(mpq_class(re), mpq_class(im)), GaussRat(1)};
}

mpq_class norm_of(const ProjPoint::Coord& z) {
  // |z|^2 for finite points z = a/b
  return z.first.norm() / z.second.norm();
}

}  // namespace

TEST_CASE("arc membership and complement") {
  Arc a = Arc::span(ExtPt::finite(0), ExtPt::infinity(), true, true);  // [0, inf]
  CHECK(a.contains(ExtPt::finite(0)));
  CHECK(a.contains(ExtPt::finite(5)));
  CHECK(a.contains(ExtPt::infinity()));
  CHECK_FALSE(a.contains(ExtPt::finite(-1)));

  Arc c = a.complement();  // (-inf, 0) without endpoints
  CHECK(c.contains(ExtPt::finite(-1)));
  CHECK_FALSE(c.contains(ExtPt::finite(0)));
  CHECK_FALSE(c.contains(ExtPt::infinity()));
  CHECK(c.complement().contains(ExtPt::finite(0)));

  Arc wrap = Arc::span(ExtPt::finite(2), ExtPt::finite(-2), true, false);
  CHECK(wrap.contains(ExtPt::finite(2)));
  CHECK(wrap.contains(ExtPt::infinity()));
  CHECK(wrap.contains(ExtPt::finite(-5)));
  CHECK_FALSE(wrap.contains(ExtPt::finite(-2)));
  CHECK_FALSE(wrap.contains(ExtPt::finite(0)));

  Arc point = Arc::point(ExtPt::finite(1));
  CHECK(point.contains(ExtPt::finite(1)));
  CHECK_FALSE(point.contains(ExtPt::finite(2)));
  Arc punctured = point.complement();
  CHECK(punctured.contains(ExtPt::finite(2)));
  CHECK(punctured.contains(ExtPt::infinity()));
  CHECK_FALSE(punctured.contains(ExtPt::finite(1)));
}

TEST_CASE("arc set operations") {
  Arc a = Arc::span(ExtPt::finite(0), ExtPt::infinity(), true, true);
  Arc b = Arc::span(ExtPt::infinity(), ExtPt::finite(0), true, true);
  CHECK(arcs_union_full(a, b));
  auto pts = arc_intersection_points(a, b);
  REQUIRE(pts.has_value());
  CHECK(pts->size() == 2);

  Arc c = Arc::span(ExtPt::finite(0), ExtPt::finite(1), true, true);
  Arc d = Arc::span(ExtPt::finite(2), ExtPt::finite(3), false, false);
  CHECK(arcs_disjoint(c, d));
  CHECK_FALSE(arcs_disjoint(c, a));
  CHECK(arc_subset(c, a));
  CHECK_FALSE(arc_subset(a, c));

  Arc e = Arc::span(ExtPt::finite(0), ExtPt::finite(2), false, false);
  Arc f = Arc::span(ExtPt::finite(1), ExtPt::finite(3), false, false);
  CHECK_FALSE(arcs_disjoint(e, f));
  CHECK_FALSE(arc_intersection_points(e, f).has_value());  // interior overlap
}

TEST_CASE("half-plane membership") {
  Region h = Region::upper_half_plane();
  CHECK(contains(h, pt(0, 1)));
  CHECK_FALSE(contains(h, pt(0, -1)));
  CHECK_FALSE(contains(h, pt(3)));
  CHECK_FALSE(contains(h, ProjPoint::infinity()));

  Region hc = Region::closed_upper_half_plane();
  CHECK(contains(hc, pt(3)));
  CHECK(contains(hc, ProjPoint::infinity()));
  CHECK_FALSE(contains(hc, pt(0, -2)));
}

TEST_CASE("the Grace region H+ with the closed positive ray") {
  Region C = parse_region("H+|arc[0,inf]");
  CHECK(contains(C, pt(0, 1)));
  CHECK(contains(C, pt(0)));
  CHECK(contains(C, pt(2)));
  CHECK(contains(C, ProjPoint::infinity()));
  CHECK_FALSE(contains(C, pt(-1)));
  CHECK_FALSE(contains(C, pt(0, -1)));

  Region comp = complement(C);
  CHECK(contains(comp, pt(-1)));
  CHECK(contains(comp, pt(0, -1)));
  CHECK_FALSE(contains(comp, pt(0)));
  CHECK_FALSE(contains(comp, ProjPoint::infinity()));
}

TEST_CASE("unit disk via the Cayley chart") {
  Region disk = parse_region("disk");
  CHECK(contains(disk, pt(0)));
  // (1:1) is on the unit circle: outside the open disk, inside the closure.
  CHECK_FALSE(contains(disk, pt(1)));
  Region cdisk = parse_region("closure(disk)");
  CHECK(contains(cdisk, pt(1)));
  CHECK(contains(cdisk, pt(0, -1)));
  CHECK_FALSE(contains(cdisk, pt(2)));

  Region ext = parse_region("ext");
  CHECK(contains(ext, pt(2)));
  CHECK(contains(ext, ProjPoint::infinity()));
  CHECK_FALSE(contains(ext, pt(1)));
  CHECK_FALSE(contains(ext, pt(0)));

  // membership matches the |z| <= 1 oracle on rational sample points
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    ProjPoint::Coord z{GaussRat(rng.rat(6, 3), rng.rat(6, 3)), GaussRat(1)};
    if (z.first.is_zero() && z.second.is_zero()) continue;
    bool in_open = contains(disk, z);
    bool in_closed = contains(cdisk, z);
    mpq_class n = norm_of(z);
    CHECK(in_open == (n < 1));
    CHECK(in_closed == (n <= 1));
  }
}

TEST_CASE("moebius image coherence") {
  Rng rng(7);
  Region base = parse_region("H+|arc[0,1]");
  int done = 0;
  while (done < 50) {
    GaussRat a(rng.rat(3, 2), rng.rat(3, 2)), b(rng.rat(3, 2), rng.rat(3, 2));
    GaussRat c(rng.rat(3, 2), rng.rat(3, 2)), d(rng.rat(3, 2), rng.rat(3, 2));
    if ((a * d - b * c).is_zero()) continue;
    MoebiusMap psi(a, b, c, d);
    ProjPoint::Coord z{GaussRat(rng.rat(5, 2), rng.rat(5, 2)), GaussRat(1)};
    CHECK(contains(mobius_image(psi, base), apply_point(psi, z)) == contains(base, z));
    ++done;
  }
}

TEST_CASE("translation maps arcs to shifted arcs") {
  Region seg = Region::boundary_set(Arc::span(ExtPt::finite(0), ExtPt::finite(1), true, true));
  MoebiusMap shift(GaussRat(1), GaussRat(1), GaussRat(0), GaussRat(1));  // z -> z + 1
  Region moved = mobius_image(shift, seg);
  CHECK(contains(moved, pt(1)));
  CHECK(contains(moved, pt(2)));
  CHECK_FALSE(contains(moved, pt(0)));
  CHECK_FALSE(contains(moved, pt(3)));
}

TEST_CASE("complement is an involution on membership") {
  Rng rng(11);
  Region r = parse_region("compl(closure(disk))");
  for (int i = 0; i < 100; ++i) {
    ProjPoint::Coord z{GaussRat(rng.rat(5, 3), rng.rat(5, 3)), GaussRat(1)};
    if (z.first.is_zero() && z.second.is_zero()) continue;
    CHECK(contains(complement(complement(r)), z) == contains(r, z));
    CHECK(contains(complement(r), z) == !contains(r, z));
  }
}

TEST_CASE("grace pair classification") {
  Region C = parse_region("H+|arc[0,inf]");
  Region B = parse_region("H-|arc[-inf,0]");
  RegionProduct CP{{C, C, C}}, BP{{B, B, B}};
  CHECK(classify_grace_pair(CP, BP) == GracePairClass::CaseI);

  RegionProduct closed_disk{{parse_region("closure(disk)")}};
  RegionProduct open_ext{{parse_region("ext")}};
  CHECK(classify_grace_pair(closed_disk, open_ext) == GracePairClass::CaseII);
  CHECK(classify_grace_pair(open_ext, closed_disk) == GracePairClass::CaseIII);

  // mixed open/closed products are not covered
  RegionProduct mixed{{parse_region("closure(disk)"), parse_region("disk"),
                       parse_region("disk")}};
  RegionProduct mixed2{{parse_region("ext"), parse_region("closure(ext)"),
                        parse_region("closure(ext)")}};
  CHECK(classify_grace_pair(mixed, mixed2) == GracePairClass::NotCovered);

  // m = 1 projectively convex pair with a fat overlap: case (iv)
  Region C4 = parse_region("H+|arc[-1,1]");
  Region B4 = parse_region("H-|arc[0,0]");  // lower plane plus one point
  // union is not the sphere: the arcs leave gaps
  CHECK(classify_grace_pair(RegionProduct{{C4}}, RegionProduct{{B4}}) ==
        GracePairClass::NotCovered);
  Region B5 = parse_region("H-|arc[1,-1]");  // touches [-1,1] at exactly +-1
  CHECK(classify_grace_pair(RegionProduct{{C4}}, RegionProduct{{B5}}) ==
        GracePairClass::CaseI);
  Region B6 = parse_region("H-|arc[0,-1/2]");  // fat overlap: only case (iv)
  CHECK(classify_grace_pair(RegionProduct{{C4}}, RegionProduct{{B6}}) ==
        GracePairClass::CaseIV);
}

TEST_CASE("sampling lands inside the region") {
  Rng rng(13);
  for (const char* dsl :
       {"H+", "closure(H-)", "disk", "compl(closure(disk))", "H+|arc[0,inf]",
        "arc[0,1]", "compl(arc(0,inf))", "mobius(1,1,0,1;H+)"}) {
    Region r = parse_region(dsl);
    for (int i = 0; i < 150; ++i) {
      ProjPoint::Coord z = sample(r, rng);
      CAPTURE(dsl);
      CHECK(contains(r, z));
    }
  }
  // complement of the closed disk: every sample obeys the |z| > 1 oracle
  Region ext = parse_region("compl(closure(disk))");
  for (int i = 0; i < 300; ++i) {
    ProjPoint::Coord z = sample(ext, rng);
    if (z.second.is_zero()) continue;  // the point at infinity (|z| infinite)
    CHECK(norm_of(z) > 1);
  }
}

TEST_CASE("sampled projective-convexity witness") {
  // For projectively convex R and pole of phi outside R, rational convex
  // combinations inside the chart image stay inside (a sampled check).
  Rng rng(17);
  Region R = parse_region("H+|arc[0,inf]");
  for (int i = 0; i < 40; ++i) {
    // phi with pole not in R: take pole in the complement and build around it
    ProjPoint::Coord w = sample(complement(R), rng);
    GaussRat c = w.second, d = -w.first;
    MoebiusMap phi = [&] {
      for (long t = 1;; ++t) {
        GaussRat a{mpq_class(t)}, b{mpq_class(t - 1)};
        if (!(a * d - b * c).is_zero()) return MoebiusMap(a, b, c, d);
      }
    }();
    Region img = mobius_image(phi, R);
    ProjPoint::Coord z1 = sample(img, rng), z2 = sample(img, rng);
    if (z1.second.is_zero() || z2.second.is_zero()) continue;
    GaussRat v1 = z1.first / z1.second, v2 = z2.first / z2.second;
    for (long num = 1; num <= 3; ++num) {
      GaussRat t(mpq_class(num, 4));
      GaussRat mixv = v1 * t + v2 * (GaussRat(1) - t);
      CHECK(contains(img, {mixv, GaussRat(1)}));
    }
  }
}

TEST_CASE("region DSL round trips") {
  for (const char* dsl :
       {"H+", "H-", "closure(H+)", "closure(H-)", "disk", "ext", "closure(disk)",
        "closure(ext)", "compl(disk)", "H+|arc[0,inf]", "H+|arc(1/2,7/3]",
        "arc[0,1]", "R", "mobius(1,2i,0,1;H+)", "compl(H+|arc[0,1])"}) {
    Region r = parse_region(dsl);
    Region again = parse_region(r.str());
    // membership-identical on a probe set
    Rng rng(19);
    for (int i = 0; i < 60; ++i) {
      ProjPoint::Coord z{GaussRat(rng.rat(5, 3), rng.rat(5, 3)), GaussRat(1)};
      if (z.first.is_zero() && z.second.is_zero()) continue;
      CAPTURE(dsl);
      CHECK(contains(r, z) == contains(again, z));
    }
    CHECK(contains(r, ProjPoint::infinity()) == contains(again, ProjPoint::infinity()));
  }
  CHECK_THROWS(parse_region("garbage"));
  CHECK_THROWS(parse_region("arc[1,0"));
}
