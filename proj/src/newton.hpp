#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyalg.hpp"
#include "poset.hpp"
#include "qehrhart.hpp"

namespace qnewton {

// A support monomial's exponent pair, (q exponent, x exponent).
using GridPoint = std::pair<long, long>;

// Convex polygon with integer vertices in the (q, x) plane. Canonical form:
// extreme points only, counterclockwise, starting at the lexicographically
// smallest vertex, so operator== is structural equality of shapes. A segment
// or a single point is a valid (degenerate) polygon.
class LatticePolygon {
 public:
  LatticePolygon() = default;  // empty; only meaningful as a report placeholder

  static LatticePolygon hull_of(std::vector<GridPoint> pts);  // error EmptySet

  const std::vector<GridPoint>& vertices() const { return v_; }
  bool empty() const { return v_.empty(); }

  bool contains(const GridPoint& p) const;     // interior or boundary
  bool on_boundary(const GridPoint& p) const;

  bool operator==(const LatticePolygon& o) const { return v_ == o.v_; }
  bool operator!=(const LatticePolygon& o) const { return !(*this == o); }

  std::string str() const;  // "(0,0) (1,0) (3,2) (2,2)"

 private:
  std::vector<GridPoint> v_;
};

// Convex hull of the support of a nonzero bivariate polynomial.
LatticePolygon newton_polygon(const BivarPoly& f);  // error ZeroPolynomial

// Parameters of the target polygon family: hull of (0,0), the partial-sum
// staircase (a_1+...+a_i, i), (h, m) and (h-m, 0).
struct ShapeSpec {
  std::vector<int> a;  // 1 <= a_1 <= ... <= a_m
  long h;              // h >= a_1 + ... + a_m
  ShapeSpec(std::vector<int> a_, long h_);  // error BadShape
  long a_sum() const;
};

LatticePolygon shape_polygon(const ShapeSpec& s);

// Per-x-degree q-exponent extremes of the slices of f. A zero slice has no
// exponents at all; both optionals are then empty (min would be +inf, max
// -inf under the usual convention).
struct QRangeEntry {
  int k = 0;
  std::optional<long> q_min;
  std::optional<long> q_max;
};
std::vector<QRangeEntry> qrange_profile(const BivarPoly& f);  // error ZeroPolynomial

struct PolygonReport {
  bool pass = false;
  LatticePolygon got;
  LatticePolygon want;
};

// Does newton_polygon(F) equal the staircase polygon with parameters
// (b, m(m+1)/2) read off the naturalized dual?
PolygonReport verify_polygon_F(const QEhrhartResult& r);
PolygonReport verify_polygon_F(const Poset& p, std::uint64_t cap = kExtensionCap);

// Does newton_polygon(N) equal the staircase polygon with h = m(m+1)/2 -
// deg(phi), and is that h at least the staircase height sum?
PolygonReport verify_polygon_N(const QEhrhartResult& r);
PolygonReport verify_polygon_N(const Poset& p, std::uint64_t cap = kExtensionCap);

// One "q<TAB>x" line per vertex, canonical order.
std::string polygon_tsv(const LatticePolygon& poly);

// Standalone SVG: the polygon filled, support points as circles, axes
// labeled q (horizontal) and x (vertical).
std::string polygon_svg(const LatticePolygon& poly, const std::vector<GridPoint>& support);

}  // namespace qnewton
