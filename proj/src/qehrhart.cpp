#include "qehrhart.hpp"

#include <algorithm>

#include "json.hpp"

namespace qnewton {

BivarPoly compute_F(const Poset& p, std::uint64_t cap) {
  if (!p.is_natural()) throw Error(ErrorCode::NotNatural, "poset must be naturally labeled");
  int m = p.size();
  // The x-linear product depends on pi only through des(pi), so group the
  // extensions by descent count first.
  std::vector<ZPoly> weight(m);  // weight[s] = sum of q^maj over des(pi) == s
  for_each_extension(p, [&](const LinExt& e) {
    weight[e.des] += ZPoly::monomial(1, static_cast<int>(e.maj));
    return true;
  }, cap);
  std::vector<LaurentPoly> total(m + 1);
  for (int s = 0; s < m; ++s) {
    if (weight[s].is_zero()) continue;
    // prod_{i=1..m} ([i-s]_q + q^(i-s) x), coefficients Laurent until summed.
    std::vector<LaurentPoly> prod{LaurentPoly(1)};
    for (int i = 1; i <= m; ++i) {
      LaurentPoly c0 = q_int(i - s);
      std::vector<LaurentPoly> next(prod.size() + 1);
      for (size_t j = 0; j < prod.size(); ++j) {
        next[j] += prod[j] * c0;
        next[j + 1] += prod[j].shifted(i - s);
      }
      prod = std::move(next);
    }
    LaurentPoly w(weight[s]);
    for (int k = 0; k <= m; ++k) total[k] += prod[k] * w;
  }
  std::map<int, ZPoly> slices;
  for (int k = 0; k <= m; ++k) {
    if (total[k].is_zero()) continue;
    if (total[k].min_exponent() < 0)
      throw Error(ErrorCode::Internal, "negative q-exponent survived in F");
    slices[k] = total[k].to_zpoly();
  }
  return BivarPoly::from_slices(std::move(slices));
}

QEhrhartResult compute_qehrhart(const Poset& p, std::uint64_t cap) {
  QEhrhartResult r;
  r.m = p.size();
  r.naturalized_dual = naturalize(dual(p)).first;
  r.b = chain_stats(r.naturalized_dual).b;
  r.F = compute_F(r.naturalized_dual, cap);
  ZPoly mfact = q_factorial(r.m);
  r.phi = gcd_zpoly(content_q(r.F), mfact);
  r.N = exact_div(r.F, r.phi);
  r.D = divexact(mfact, r.phi);
  std::vector<RatFunc> coeffs(static_cast<size_t>(r.m) + 1);
  for (int k = 0; k <= r.m; ++k) coeffs[k] = RatFunc(r.F.slice(k), mfact);
  r.E = XPoly::from_coeffs(std::move(coeffs));
  // Divisors of [m]_q! are monic with constant term 1; the top N slice's top
  // coefficient is the single word of maximal maj. Anything else is a bug.
  if (r.phi.leading_coeff() != 1 || r.phi.coeff(0) != 1)
    throw Error(ErrorCode::Internal, "phi must be monic with constant term 1");
  if (r.N.slice(r.N.x_degree()).leading_coeff() <= 0)
    throw Error(ErrorCode::Internal, "N must have a positive leading coefficient");
  return r;
}

namespace {

void lattice_guard(int m, int n, int max_n) {
  if (n < 0) throw Error(ErrorCode::Range, "dilation factor must be nonnegative");
  if (m > 8 || n > max_n) throw Error(ErrorCode::Size, "lattice enumeration guard exceeded");
}

// Shared depth-first assignment. bounds(v, values) -> [lo, hi] per element in
// the fixed topological order; accumulates q^(sum of values).
struct LatticeWalk {
  int m;
  int n;
  std::vector<int> topo;
  const Poset& p;
  bool strict;
  int lo_base;
  int hi_off;
  std::vector<int> value;
  std::vector<mpz_class> acc;

  LatticeWalk(const Poset& p_, int n_, bool strict_)
      : m(p_.size()), n(n_), p(p_), strict(strict_),
        lo_base(strict_ ? 1 : 0), hi_off(strict_ ? 1 : 0), value(p_.size(), 0),
        acc(static_cast<size_t>(p_.size()) * n_ + 1) {
    topo = naturalize(p).second.perm;  // perm[v] = position; invert below
    std::vector<int> inv(m);
    for (int v = 0; v < m; ++v) inv[topo[v]] = v;
    topo = inv;
  }

  void walk(int idx, long sum) {
    if (idx == m) {
      acc[sum] += 1;
      return;
    }
    int v = topo[idx];
    int lo = lo_base;
    for (int u = 0; u < m; ++u)
      if (p.less(u, v)) lo = std::max(lo, value[u] + (strict ? 1 : 0));
    for (int x = lo; x <= n - hi_off; ++x) {
      value[v] = x;
      walk(idx + 1, sum + x);
    }
  }
};

}  // namespace

WSeries count_lattice_points(const Poset& p, int n, Region region, int max_n) {
  lattice_guard(p.size(), n, max_n);
  WSeries w;
  w.n = n;
  w.region = region;
  LatticeWalk lw(p, n, region == Region::Interior);
  if (!(region == Region::Interior && n == 0)) lw.walk(0, 0);
  std::map<int, mpz_class> coeffs;
  for (size_t e = 0; e < lw.acc.size(); ++e)
    if (lw.acc[e] != 0) coeffs[static_cast<int>(e)] = lw.acc[e];
  w.poly = ZPoly::from_coeffs(std::move(coeffs));
  return w;
}

ZPoly ppartition_series(const Poset& p, int n, int max_n) {
  lattice_guard(p.size(), n, max_n);
  int m = p.size();
  std::vector<int> topo = naturalize(p).second.perm;
  std::vector<int> order(m);
  for (int v = 0; v < m; ++v) order[topo[v]] = v;
  std::vector<int> value(m, 0);
  std::vector<mpz_class> acc(static_cast<size_t>(m) * n + 1);
  // order-reversing: u < v in P forces sigma(u) >= sigma(v)
  std::function<void(int, long)> walk = [&](int idx, long sum) {
    if (idx == m) {
      acc[sum] += 1;
      return;
    }
    int v = order[idx];
    int hi = n;
    for (int u = 0; u < m; ++u)
      if (p.less(u, v)) hi = std::min(hi, value[u]);
    for (int x = 0; x <= hi; ++x) {
      value[v] = x;
      walk(idx + 1, sum + x);
    }
  };
  walk(0, 0);
  std::map<int, mpz_class> coeffs;
  for (size_t e = 0; e < acc.size(); ++e)
    if (acc[e] != 0) coeffs[static_cast<int>(e)] = acc[e];
  return ZPoly::from_coeffs(std::move(coeffs));
}

XPoly oracle_interpolation(const Poset& p, int max_n) {
  std::vector<std::pair<RatFunc, RatFunc>> pts;
  for (int n = 0; n <= p.size(); ++n)
    pts.emplace_back(RatFunc(q_int_poly(n)),
                     RatFunc(count_lattice_points(p, n, Region::Closed, max_n).poly));
  return lagrange_interpolate(pts);
}

bool reciprocity_holds(const XPoly& E, const Poset& p, int n, int max_n) {
  if (n < 1) throw Error(ErrorCode::Range, "reciprocity needs n >= 1");
  RatFunc lhs = E.eval(RatFunc::from_laurent(q_int(-n)));
  ZPoly w = count_lattice_points(p, n, Region::Interior, max_n).poly;
  RatFunc rhs = RatFunc::from_laurent(LaurentPoly(w).mirrored());
  if (p.size() % 2 == 1) rhs = -rhs;
  return lhs == rhs;
}

bool check_reciprocity(const Poset& p, int n, std::uint64_t cap) {
  return reciprocity_holds(compute_qehrhart(p, cap).E, p, n);
}

bool check_lemma_qbinom(const Poset& p, int n, std::uint64_t cap) {
  if (!p.is_natural()) throw Error(ErrorCode::NotNatural, "poset must be naturally labeled");
  if (n < 0) throw Error(ErrorCode::Range, "bound must be nonnegative");
  int m = p.size();
  ZPoly lhs = ppartition_series(p, n, std::max(n, kLatticeGuardN));
  ZPoly rhs;
  for_each_extension(p, [&](const LinExt& e) {
    if (e.des > n) return true;  // the q-binomial vanishes
    rhs += ZPoly::monomial(1, static_cast<int>(e.maj)) * q_binom(n - e.des + m, m);
    return true;
  }, cap);
  return lhs == rhs;
}

std::string result_to_json(const QEhrhartResult& r) {
  nlohmann::ordered_json j;
  j["m"] = r.m;
  j["F"] = r.F.str();
  j["N"] = r.N.str();
  j["phi"] = r.phi.str();
  j["D"] = r.D.str();
  j["E_numerator"] = r.N.str();
  j["E_denominator"] = r.D.str();
  return j.dump();
}

}  // namespace qnewton
