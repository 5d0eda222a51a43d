#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "newton.hpp"
#include "polyalg.hpp"
#include "poset.hpp"
#include "qehrhart.hpp"

using namespace qnewton;
using testutil::antichain;
using testutil::chain;
using testutil::code_of;
using testutil::fan;

namespace {

using Pts = std::vector<GridPoint>;

BivarPoly bp(std::map<int, std::map<int, long>> slices) {
  std::map<int, ZPoly> s;
  for (auto& [xd, qc] : slices) {
    std::map<int, mpz_class> m;
    for (auto [e, v] : qc) m[e] = v;
    s[xd] = ZPoly::from_coeffs(std::move(m));
  }
  return BivarPoly::from_slices(std::move(s));
}

}  // namespace

TEST_SUITE("newton") {

TEST_CASE("hulls of degenerate point sets") {
  LatticePolygon pt = LatticePolygon::hull_of({{2, 3}, {2, 3}});
  CHECK(pt.vertices() == Pts{{2, 3}});
  CHECK(pt.str() == "(2,3)");
  CHECK(pt.contains({2, 3}));
  CHECK(pt.on_boundary({2, 3}));
  CHECK_FALSE(pt.contains({2, 4}));

  LatticePolygon seg = LatticePolygon::hull_of({{2, 2}, {0, 0}, {1, 1}});
  CHECK(seg.vertices() == Pts{{0, 0}, {2, 2}});
  CHECK(seg.contains({1, 1}));
  CHECK(seg.on_boundary({1, 1}));
  CHECK_FALSE(seg.contains({1, 0}));
  CHECK_FALSE(seg.contains({3, 3}));

  CHECK(code_of([] { LatticePolygon::hull_of({}); }) == ErrorCode::EmptySet);
  CHECK(LatticePolygon().empty());
  CHECK_FALSE(seg.empty());
}

TEST_CASE("hulls keep extreme points only, counterclockwise") {
  // A 2x2 square sampled on the full grid: edge midpoints and the center
  // must not appear as vertices.
  Pts grid;
  for (long q = 0; q <= 2; ++q)
    for (long x = 0; x <= 2; ++x) grid.push_back({q, x});
  LatticePolygon sq = LatticePolygon::hull_of(grid);
  CHECK(sq.vertices() == Pts{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  CHECK(sq.contains({1, 1}));
  CHECK_FALSE(sq.on_boundary({1, 1}));
  CHECK(sq.on_boundary({1, 0}));
  CHECK(sq.on_boundary({2, 1}));
  CHECK_FALSE(sq.contains({3, 1}));

  LatticePolygon tri = LatticePolygon::hull_of({{0, 0}, {4, 0}, {0, 4}, {1, 1}, {2, 0}});
  CHECK(tri.vertices() == Pts{{0, 0}, {4, 0}, {0, 4}});
  CHECK(tri.on_boundary({2, 2}));
  CHECK(tri.contains({1, 2}));
  CHECK_FALSE(tri.on_boundary({1, 2}));
}

TEST_CASE("newton polygon of small polynomials") {
  CHECK(newton_polygon(bp({{0, {{0, 1}}}, {1, {{1, 1}}}})).vertices() ==
        Pts{{0, 0}, {1, 1}});
  CHECK(newton_polygon(bp({{0, {{0, 5}}}})).vertices() == Pts{{0, 0}});
  CHECK(code_of([] { newton_polygon(BivarPoly()); }) == ErrorCode::ZeroPolynomial);

  LatticePolygon f2 = newton_polygon(compute_F(antichain(2)));
  CHECK(f2.vertices() == Pts{{0, 0}, {1, 0}, {3, 2}, {2, 2}});
  CHECK(f2.str() == "(0,0) (1,0) (3,2) (2,2)");
  CHECK(f2.on_boundary({1, 1}));
  CHECK(f2.on_boundary({2, 1}));
}

TEST_CASE("staircase shape parameters are validated") {
  ShapeSpec s({1, 2, 2, 3}, 10);
  CHECK(s.a_sum() == 8);
  CHECK(code_of([] { ShapeSpec({2, 1}, 10); }) == ErrorCode::BadShape);
  CHECK(code_of([] { ShapeSpec({0, 1}, 10); }) == ErrorCode::BadShape);
  CHECK(code_of([] { ShapeSpec({1, 2}, 2); }) == ErrorCode::BadShape);
}

TEST_CASE("staircase polygons, including degenerate heights") {
  // The running example with a = (1,2,2,3), h = 10: the staircase point
  // (3,2) is not extreme, it sits on the edge from (1,1) to (5,3).
  LatticePolygon big = shape_polygon(ShapeSpec({1, 2, 2, 3}, 10));
  CHECK(big.vertices() == Pts{{0, 0}, {6, 0}, {10, 4}, {8, 4}, {5, 3}, {1, 1}});
  for (GridPoint p : Pts{{0, 0}, {1, 1}, {3, 2}, {5, 3}, {8, 4}, {10, 4}, {6, 0}})
    CHECK(big.on_boundary(p));
  CHECK(big.contains({5, 2}));
  CHECK_FALSE(big.on_boundary({5, 2}));
  CHECK_FALSE(big.contains({0, 1}));

  CHECK(shape_polygon(ShapeSpec({1, 1}, 3)).vertices() ==
        Pts{{0, 0}, {1, 0}, {3, 2}, {2, 2}});
  // Minimal height collapses the shape to the staircase diagonal.
  CHECK(shape_polygon(ShapeSpec({1, 1}, 2)).vertices() == Pts{{0, 0}, {2, 2}});
  CHECK(shape_polygon(ShapeSpec({1}, 1)).vertices() == Pts{{0, 0}, {1, 1}});
}

TEST_CASE("per-degree q-exponent ranges") {
  std::vector<QRangeEntry> prof = qrange_profile(compute_F(antichain(2)));
  REQUIRE(prof.size() == 3);
  for (int k = 0; k <= 2; ++k) {
    CHECK(prof[k].k == k);
    CHECK(prof[k].q_min == k);
    CHECK(prof[k].q_max == k + 1);
  }

  // A missing slice has no exponents, so both ends stay empty.
  std::vector<QRangeEntry> gap = qrange_profile(bp({{0, {{0, 1}}}, {2, {{5, 1}}}}));
  REQUIRE(gap.size() == 3);
  CHECK_FALSE(gap[1].q_min.has_value());
  CHECK_FALSE(gap[1].q_max.has_value());
  CHECK(gap[2].q_min == 5);
  CHECK(gap[2].q_max == 5);

  CHECK(code_of([] { qrange_profile(BivarPoly()); }) == ErrorCode::ZeroPolynomial);
}

TEST_CASE("polygon checks pass on small posets") {
  for (const Poset& p : {chain(3), fan(), antichain(3), chain(1)}) {
    PolygonReport rf = verify_polygon_F(p);
    CHECK(rf.pass);
    CHECK(rf.got == rf.want);
    PolygonReport rn = verify_polygon_N(p);
    CHECK(rn.pass);
    CHECK(rn.got == rn.want);
  }

  // For the two-element antichain, phi = 1 + q lowers the numerator height
  // to h = 2, collapsing its polygon to a diagonal segment.
  QEhrhartResult r = compute_qehrhart(antichain(2));
  PolygonReport rn = verify_polygon_N(r);
  CHECK(rn.pass);
  CHECK(rn.got.vertices() == Pts{{0, 0}, {2, 2}});
  PolygonReport rf = verify_polygon_F(r);
  CHECK(rf.pass);
  CHECK(rf.got.vertices() == Pts{{0, 0}, {1, 0}, {3, 2}, {2, 2}});

  // The check reports rather than throws when the polygons disagree.
  QEhrhartResult tampered = r;
  tampered.N = bp({{0, {{0, 1}}}, {2, {{5, 1}}}});
  CHECK_FALSE(verify_polygon_N(tampered).pass);
}

TEST_CASE("vertex tsv lines") {
  CHECK(polygon_tsv(newton_polygon(compute_F(antichain(2)))) ==
        "0\t0\n1\t0\n3\t2\n2\t2\n");
  CHECK(polygon_tsv(LatticePolygon::hull_of({{4, 1}})) == "4\t1\n");
}

TEST_CASE("svg rendering mentions its parts") {
  BivarPoly F = compute_F(antichain(2));
  std::string svg = polygon_svg(newton_polygon(F), F.support());
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find(">q<") != std::string::npos);
  CHECK(svg.find(">x<") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);

  // A segment renders as a line, not a polygon.
  std::string seg = polygon_svg(LatticePolygon::hull_of({{0, 0}, {2, 2}}),
                                {{0, 0}, {1, 1}, {2, 2}});
  CHECK(seg.find("<line") != std::string::npos);
  CHECK(seg.find("<svg") != std::string::npos);
}

}  // TEST_SUITE
