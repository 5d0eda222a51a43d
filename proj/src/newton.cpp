#include "newton.hpp"

#include <algorithm>
#include <sstream>

namespace qnewton {

namespace {

long long cross(const GridPoint& o, const GridPoint& a, const GridPoint& b) {
  return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
         static_cast<long long>(a.second - o.second) * (b.first - o.first);
}

bool on_segment(const GridPoint& a, const GridPoint& b, const GridPoint& p) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
         std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
}

}  // namespace

LatticePolygon LatticePolygon::hull_of(std::vector<GridPoint> pts) {
  if (pts.empty()) throw Error(ErrorCode::EmptySet, "hull of an empty point set");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  LatticePolygon poly;
  size_t n = pts.size();
  if (n == 1) {
    poly.v_ = std::move(pts);
    return poly;
  }
  // Monotone chain; popping on cross <= 0 keeps extreme points only, and
  // collapses collinear inputs to a two-vertex segment.
  std::vector<GridPoint> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);  // last point repeats the first
  poly.v_ = std::move(h);
  return poly;
}

bool LatticePolygon::contains(const GridPoint& p) const {
  if (v_.empty()) return false;
  if (v_.size() == 1) return v_[0] == p;
  if (v_.size() == 2) return on_segment(v_[0], v_[1], p);
  for (size_t i = 0; i < v_.size(); ++i)
    if (cross(v_[i], v_[(i + 1) % v_.size()], p) < 0) return false;
  return true;
}

bool LatticePolygon::on_boundary(const GridPoint& p) const {
  if (v_.empty()) return false;
  if (v_.size() == 1) return v_[0] == p;
  if (v_.size() == 2) return on_segment(v_[0], v_[1], p);
  for (size_t i = 0; i < v_.size(); ++i)
    if (on_segment(v_[i], v_[(i + 1) % v_.size()], p)) return true;
  return false;
}

std::string LatticePolygon::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < v_.size(); ++i) {
    if (i) os << ' ';
    os << '(' << v_[i].first << ',' << v_[i].second << ')';
  }
  return os.str();
}

LatticePolygon newton_polygon(const BivarPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Newton polygon of the zero polynomial");
  return LatticePolygon::hull_of(f.support());
}

ShapeSpec::ShapeSpec(std::vector<int> a_, long h_) : a(std::move(a_)), h(h_) {
  if (a.empty()) throw Error(ErrorCode::BadShape, "staircase needs at least one step");
  int prev = 1;
  for (int ai : a) {
    if (ai < prev) throw Error(ErrorCode::BadShape, "steps must be nondecreasing and positive");
    prev = ai;
  }
  if (h < a_sum()) throw Error(ErrorCode::BadShape, "height must be at least the step sum");
}

long ShapeSpec::a_sum() const {
  long s = 0;
  for (int ai : a) s += ai;
  return s;
}

LatticePolygon shape_polygon(const ShapeSpec& s) {
  long m = static_cast<long>(s.a.size());
  std::vector<GridPoint> pts{{0, 0}};
  long run = 0;
  for (long i = 0; i < m; ++i) {
    run += s.a[i];
    pts.emplace_back(run, i + 1);
  }
  pts.emplace_back(s.h, m);
  pts.emplace_back(s.h - m, 0);
  return LatticePolygon::hull_of(std::move(pts));
}

std::vector<QRangeEntry> qrange_profile(const BivarPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "profile of the zero polynomial");
  std::vector<QRangeEntry> out;
  for (int k = 0; k <= f.x_degree(); ++k) {
    QRangeEntry e;
    e.k = k;
    ZPoly s = f.slice(k);
    if (!s.is_zero()) {
      e.q_min = s.low_exponent();
      e.q_max = s.degree();
    }
    out.push_back(std::move(e));
  }
  return out;
}

PolygonReport verify_polygon_F(const QEhrhartResult& r) {
  PolygonReport rep;
  rep.got = newton_polygon(r.F);
  rep.want = shape_polygon(ShapeSpec(r.b, static_cast<long>(r.m) * (r.m + 1) / 2));
  rep.pass = rep.got == rep.want;
  return rep;
}

PolygonReport verify_polygon_F(const Poset& p, std::uint64_t cap) {
  return verify_polygon_F(compute_qehrhart(p, cap));
}

PolygonReport verify_polygon_N(const QEhrhartResult& r) {
  PolygonReport rep;
  rep.got = newton_polygon(r.N);
  long h = static_cast<long>(r.m) * (r.m + 1) / 2 - r.phi.degree();
  long a_sum = 0;
  for (int ai : r.b) a_sum += ai;
  if (h < a_sum) return rep;  // pass stays false; no valid target shape exists
  rep.want = shape_polygon(ShapeSpec(r.b, h));
  rep.pass = rep.got == rep.want;
  return rep;
}

PolygonReport verify_polygon_N(const Poset& p, std::uint64_t cap) {
  return verify_polygon_N(compute_qehrhart(p, cap));
}

std::string polygon_tsv(const LatticePolygon& poly) {
  std::ostringstream os;
  for (const auto& [q, x] : poly.vertices()) os << q << '\t' << x << '\n';
  return os.str();
}

std::string polygon_svg(const LatticePolygon& poly, const std::vector<GridPoint>& support) {
  long max_q = 1, max_x = 1;
  for (const auto& [q, x] : poly.vertices()) {
    max_q = std::max(max_q, q);
    max_x = std::max(max_x, x);
  }
  for (const auto& [q, x] : support) {
    max_q = std::max(max_q, q);
    max_x = std::max(max_x, x);
  }
  const long unit = 40, margin = 50;
  const long width = margin * 2 + (max_q + 1) * unit;
  const long height = margin * 2 + (max_x + 1) * unit;
  auto px = [&](long q) { return margin + q * unit; };
  auto py = [&](long x) { return height - margin - x * unit; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  for (long q = 0; q <= max_q + 1; ++q)
    os << "  <line x1=\"" << px(q) << "\" y1=\"" << py(0) << "\" x2=\"" << px(q) << "\" y2=\""
       << py(max_x + 1) << "\" stroke=\"#dddddd\"/>\n";
  for (long x = 0; x <= max_x + 1; ++x)
    os << "  <line x1=\"" << px(0) << "\" y1=\"" << py(x) << "\" x2=\"" << px(max_q + 1)
       << "\" y2=\"" << py(x) << "\" stroke=\"#dddddd\"/>\n";
  os << "  <line x1=\"" << px(0) - 10 << "\" y1=\"" << py(0) << "\" x2=\"" << px(max_q + 1) + 10
     << "\" y2=\"" << py(0) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  os << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) + 10 << "\" x2=\"" << px(0) << "\" y2=\""
     << py(max_x + 1) - 10 << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  os << "  <text x=\"" << px(max_q + 1) + 14 << "\" y=\"" << py(0) + 5
     << "\" font-family=\"serif\" font-style=\"italic\" font-size=\"16\">q</text>\n";
  os << "  <text x=\"" << px(0) - 5 << "\" y=\"" << py(max_x + 1) - 16
     << "\" font-family=\"serif\" font-style=\"italic\" font-size=\"16\">x</text>\n";

  const auto& v = poly.vertices();
  if (v.size() >= 3) {
    os << "  <polygon points=\"";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) os << ' ';
      os << px(v[i].first) << ',' << py(v[i].second);
    }
    os << "\" fill=\"#d3d3d3\" stroke=\"black\" stroke-width=\"2\"/>\n";
  } else if (v.size() == 2) {
    os << "  <line x1=\"" << px(v[0].first) << "\" y1=\"" << py(v[0].second) << "\" x2=\""
       << px(v[1].first) << "\" y2=\"" << py(v[1].second)
       << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (const auto& [q, x] : support)
    os << "  <circle cx=\"" << px(q) << "\" cy=\"" << py(x)
       << "\" r=\"4\" fill=\"#1f6feb\"/>\n";
  for (const auto& [q, x] : v)
    os << "  <circle cx=\"" << px(q) << "\" cy=\"" << py(x)
       << "\" r=\"5\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace qnewton
