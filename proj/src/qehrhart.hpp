#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "linext.hpp"
#include "polyalg.hpp"
#include "poset.hpp"

namespace qnewton {

inline constexpr int kLatticeGuardN = 12;

enum class Region { Closed, Interior };

// W(n * O(P), q) = sum over lattice points of q^(coordinate sum).
struct WSeries {
  int n = 0;
  Region region = Region::Closed;
  ZPoly poly;
};

struct QEhrhartResult {
  int m = 0;
  Poset naturalized_dual;  // the naturally labeled poset F was computed on
  std::vector<int> b;      // sorted longest-chain-to-top sizes of naturalized_dual
  BivarPoly F;             // sum over L(naturalized_dual) of q^maj * prod([i-des] + q^(i-des) x)
  BivarPoly N;             // F / phi
  ZPoly phi;               // gcd(content_q(F), [m]_q!)
  ZPoly D;                 // [m]_q! / phi
  XPoly E;                 // F / [m]_q!, the q-Ehrhart polynomial of O(input)

  QEhrhartResult() : naturalized_dual(Poset::from_covers(1, {})) {}
};

// The extension generating function; requires a naturally labeled poset.
BivarPoly compute_F(const Poset& p, std::uint64_t cap = kExtensionCap);

// Full pipeline on an arbitrarily labeled poset: dualize, naturalize,
// compute F, split off phi and reduce.
QEhrhartResult compute_qehrhart(const Poset& p, std::uint64_t cap = kExtensionCap);

// Brute-force oracle 1: direct lattice-point enumeration of n * O(P) with
// bound propagation along a topological order. Interior counts points with
// all inequalities strict. Errors: Range (n < 0), Size (m > 8 or n > max_n).
WSeries count_lattice_points(const Poset& p, int n, Region region, int max_n = kLatticeGuardN);

// Brute-force oracle 2: order-reversing maps P -> {0..n} weighted by q^|sigma|.
ZPoly ppartition_series(const Poset& p, int n, int max_n = kLatticeGuardN);

// Degree-m interpolation of E through the nodes [0]_q .. [m]_q from the
// lattice-point oracle alone; independent of the extension formula.
XPoly oracle_interpolation(const Poset& p, int max_n = kLatticeGuardN);

// E([-n]_q) == (-1)^m W(n * interior(O(P)), 1/q); n >= 1.
bool check_reciprocity(const Poset& p, int n, std::uint64_t cap = kExtensionCap);
bool reciprocity_holds(const XPoly& E, const Poset& p, int n, int max_n = kLatticeGuardN);

// P-partition identity for a naturally labeled poset: the order-reversing-map
// series equals sum over L(P) of q^maj * qbinom(n - des + m, m); n >= 0.
bool check_lemma_qbinom(const Poset& p, int n, std::uint64_t cap = kExtensionCap);

// {"m":.., "F":.., "N":.., "phi":.., "D":.., "E_numerator":.., "E_denominator":..}
std::string result_to_json(const QEhrhartResult& r);

}  // namespace qnewton
