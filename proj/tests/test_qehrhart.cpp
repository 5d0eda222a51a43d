#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "polyalg.hpp"
#include "poset.hpp"
#include "qehrhart.hpp"

using namespace qnewton;
using testutil::antichain;
using testutil::chain;
using testutil::code_of;
using testutil::fan;
using testutil::vee;

namespace {

ZPoly zp(std::map<int, long> c) {
  std::map<int, mpz_class> m;
  for (auto [e, v] : c) m[e] = v;
  return ZPoly::from_coeffs(std::move(m));
}

// E evaluated at the q-integer [n]_q, as a rational function of q.
RatFunc eval_at_qint(const XPoly& E, long n) {
  return E.eval(RatFunc::from_laurent(q_int(n)));
}

}  // namespace

TEST_SUITE("qehrhart") {

TEST_CASE("extension generating function on tiny posets") {
  CHECK(compute_F(chain(1)).str() == "q*x + 1");
  CHECK(compute_F(chain(2)).str() == "q^3*x^2 + (2*q^2+q)*x + (q+1)");
  CHECK(compute_F(antichain(2)).str() == "(q^3+q^2)*x^2 + (2*q^2+2*q)*x + (q+1)");

  // Only naturally labeled posets make sense here.
  Poset down = Poset::from_covers(2, {{2, 1}});
  CHECK(code_of([&] { compute_F(down); }) == ErrorCode::NotNatural);
  // The budget propagates from the extension stream.
  CHECK(code_of([] { compute_F(antichain(4), 10); }) == ErrorCode::Budget);
}

TEST_CASE("full pipeline on the two-element antichain") {
  QEhrhartResult r = compute_qehrhart(antichain(2));
  CHECK(r.m == 2);
  CHECK(r.b == std::vector<int>{1, 1});
  CHECK(r.F.str() == "(q^3+q^2)*x^2 + (2*q^2+2*q)*x + (q+1)");
  CHECK(r.phi.str() == "1 + q");
  CHECK(r.N.str() == "q^2*x^2 + 2*q*x + 1");
  CHECK(r.D.str() == "1");
  CHECK(r.F == r.N * r.phi);

  // E = q^2 x^2 + 2q x + 1 here, and E([n]) counts the points of n*O(P).
  CHECK(r.E.degree() == 2);
  CHECK(r.E.coeff(2) == RatFunc(zp({{2, 1}})));
  CHECK(r.E.coeff(1) == RatFunc(zp({{1, 2}})));
  CHECK(r.E.coeff(0) == RatFunc(1));
  for (int n = 0; n <= 4; ++n)
    CHECK(eval_at_qint(r.E, n) ==
          RatFunc(count_lattice_points(antichain(2), n, Region::Closed).poly));
}

TEST_CASE("full pipeline on chains") {
  QEhrhartResult r = compute_qehrhart(chain(2));
  CHECK(r.b == std::vector<int>{1, 2});
  CHECK(r.F.str() == "q^3*x^2 + (2*q^2+q)*x + (q+1)");
  CHECK(r.phi.str() == "1");
  CHECK(r.N == r.F);
  CHECK(r.D.str() == "1 + q");
  CHECK(r.E.coeff(0) == RatFunc(1));
  // E([1]) = 1 + q + q^2: the three points 00, 01, 11 of the triangle.
  CHECK(eval_at_qint(r.E, 1) == RatFunc(zp({{0, 1}, {1, 1}, {2, 1}})));

  QEhrhartResult r1 = compute_qehrhart(chain(1));
  CHECK(r1.N.str() == "q*x + 1");
  CHECK(r1.D.str() == "1");
}

TEST_CASE("the pipeline is invariant under relabeling") {
  // 3 < 1 < 2 is the three-chain with scrambled labels.
  Poset scrambled = Poset::from_covers(3, {{3, 1}, {1, 2}});
  QEhrhartResult a = compute_qehrhart(scrambled);
  QEhrhartResult b = compute_qehrhart(chain(3));
  CHECK(a.F == b.F);
  CHECK(a.N == b.N);
  CHECK(a.phi == b.phi);
  CHECK(a.D == b.D);
  CHECK(a.E == b.E);
  CHECK(a.b == b.b);

  // The working poset is the naturalized dual of the input.
  QEhrhartResult f = compute_qehrhart(fan());
  CHECK(f.naturalized_dual == vee());
  CHECK(f.naturalized_dual.is_natural());
  CHECK(f.b == std::vector<int>{1, 2, 2});
}

TEST_CASE("invariants of the numerator split") {
  for (int m = 1; m <= 3; ++m)
    enumerate_posets(m, [&](const Poset& p) {
      QEhrhartResult r = compute_qehrhart(p);
      CHECK(r.phi.coeff(0) == 1);
      CHECK(r.phi.leading_coeff() == 1);
      CHECK(r.F == r.N * r.phi);
      CHECK(r.phi * r.D == q_factorial(m));
      for (int k = 0; k <= r.F.x_degree(); ++k)
        CHECK(r.E.coeff(k) == RatFunc(r.F.slice(k), q_factorial(m)));
      return true;
    });
}

TEST_CASE("lattice point counts on dilated order polytopes") {
  CHECK(count_lattice_points(antichain(2), 0, Region::Closed).poly == ZPoly(1));
  CHECK(count_lattice_points(antichain(2), 1, Region::Closed).poly ==
        zp({{0, 1}, {1, 2}, {2, 1}}));
  CHECK(count_lattice_points(antichain(2), 2, Region::Closed).poly ==
        zp({{0, 1}, {1, 2}, {2, 3}, {3, 2}, {4, 1}}));
  CHECK(count_lattice_points(chain(2), 1, Region::Closed).poly ==
        zp({{0, 1}, {1, 1}, {2, 1}}));

  // fan and vee dilate to different weight series: mirrored point sets.
  CHECK(count_lattice_points(fan(), 1, Region::Closed).poly ==
        zp({{0, 1}, {1, 1}, {2, 2}, {3, 1}}));
  CHECK(count_lattice_points(vee(), 1, Region::Closed).poly ==
        zp({{0, 1}, {1, 2}, {2, 1}, {3, 1}}));

  // Interior points keep every inequality strict, including the poset ones,
  // so the fan has none before n = 3, where (1, 1, 2) is the first.
  WSeries w = count_lattice_points(fan(), 3, Region::Interior);
  CHECK(w.n == 3);
  CHECK(w.region == Region::Interior);
  CHECK(w.poly == ZPoly::monomial(1, 4));
  CHECK(count_lattice_points(fan(), 2, Region::Interior).poly.is_zero());
  CHECK(count_lattice_points(antichain(2), 1, Region::Interior).poly.is_zero());
  CHECK(count_lattice_points(antichain(2), 0, Region::Interior).poly.is_zero());
  CHECK(count_lattice_points(antichain(2), 2, Region::Interior).poly ==
        ZPoly::monomial(1, 2));

  CHECK(code_of([] { count_lattice_points(chain(2), -1, Region::Closed); }) ==
        ErrorCode::Range);
  CHECK(code_of([] { count_lattice_points(antichain(9), 1, Region::Closed); }) ==
        ErrorCode::Size);
  CHECK(code_of([] { count_lattice_points(chain(2), 13, Region::Closed); }) ==
        ErrorCode::Size);
  // A raised ceiling admits larger dilations: C(15, 2) = 105 points.
  CHECK(count_lattice_points(chain(2), 13, Region::Closed, 13).poly.eval_at_one() == 105);
}

TEST_CASE("order-reversing maps pair with the dual polytope") {
  CHECK(ppartition_series(antichain(2), 1) == zp({{0, 1}, {1, 2}, {2, 1}}));
  for (int m = 1; m <= 3; ++m)
    enumerate_posets(m, [&](const Poset& p) {
      for (int n = 0; n <= 3; ++n)
        CHECK(ppartition_series(p, n) ==
              count_lattice_points(dual(p), n, Region::Closed).poly);
      return true;
    });
  Poset p4 = naturalize(random_poset(4, 1, 2, 11)).first;
  CHECK(ppartition_series(p4, 4) == count_lattice_points(dual(p4), 4, Region::Closed).poly);
  CHECK(code_of([] { ppartition_series(antichain(9), 1); }) == ErrorCode::Size);
}

TEST_CASE("interpolation through q-integer nodes recovers E") {
  for (int m = 1; m <= 3; ++m)
    enumerate_posets(m, [&](const Poset& p) {
      CHECK(oracle_interpolation(p) == compute_qehrhart(p).E);
      return true;
    });
  for (std::uint64_t seed : {3u, 4u}) {
    Poset p = random_poset(4, 1, 2, seed);
    XPoly E = compute_qehrhart(p).E;
    CHECK(oracle_interpolation(p) == E);
    // Values beyond the interpolation nodes still match the point counts.
    for (int n = 5; n <= 6; ++n)
      CHECK(eval_at_qint(E, n) ==
            RatFunc(count_lattice_points(p, n, Region::Closed).poly));
  }
}

TEST_CASE("reciprocity links negative arguments to interior points") {
  for (int m = 1; m <= 3; ++m)
    enumerate_posets(m, [&](const Poset& p) {
      XPoly E = compute_qehrhart(p).E;
      for (int n = 1; n <= 3; ++n) CHECK(reciprocity_holds(E, p, n));
      return true;
    });
  CHECK(check_reciprocity(fan(), 2));
  CHECK(check_reciprocity(random_poset(4, 1, 3, 7), 3));
  XPoly E = compute_qehrhart(chain(2)).E;
  CHECK(code_of([&] { reciprocity_holds(E, chain(2), 0); }) == ErrorCode::Range);
}

TEST_CASE("descent form of the order-reversing series") {
  for (int m = 1; m <= 3; ++m)
    enumerate_posets(m, [&](const Poset& p) {
      if (!p.is_natural()) return true;
      for (int n = 0; n <= 4; ++n) CHECK(check_lemma_qbinom(p, n));
      return true;
    });
  CHECK(check_lemma_qbinom(naturalize(random_poset(4, 1, 2, 19)).first, 3));
  Poset down = Poset::from_covers(2, {{2, 1}});
  CHECK(code_of([&] { check_lemma_qbinom(down, 1); }) == ErrorCode::NotNatural);
  CHECK(code_of([] { check_lemma_qbinom(chain(2), -1); }) == ErrorCode::Range);
}

TEST_CASE("results serialize with every pipeline component") {
  CHECK(result_to_json(compute_qehrhart(chain(1))) ==
        R"({"m":1,"F":"q*x + 1","N":"q*x + 1","phi":"1","D":"1",)"
        R"("E_numerator":"q*x + 1","E_denominator":"1"})");

  nlohmann::json j = nlohmann::json::parse(result_to_json(compute_qehrhart(antichain(2))));
  CHECK(j["m"] == 2);
  CHECK(j["F"] == "(q^3+q^2)*x^2 + (2*q^2+2*q)*x + (q+1)");
  CHECK(j["N"] == "q^2*x^2 + 2*q*x + 1");
  CHECK(j["phi"] == "1 + q");
  CHECK(j["D"] == "1");
  CHECK(j["E_numerator"] == j["N"]);
  CHECK(j["E_denominator"] == j["D"]);
}

}  // TEST_SUITE
