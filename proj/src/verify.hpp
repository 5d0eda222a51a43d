#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "newton.hpp"
#include "qehrhart.hpp"

namespace qnewton {

struct VerifyOptions {
  int max_n = kLatticeGuardN;                    // lattice-point oracle bound
  std::uint64_t max_extensions = kExtensionCap;  // linear-extension budget
  int spot_n = 3;                                // dilations tried per spot check
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double ms = 0.0;
  std::string detail;  // empty on pass; says what went wrong otherwise
};

// Everything needed to understand (and replay) one verification run. When a
// check fails, artifacts carry the counterexample: the poset, the offending
// polynomials and both polygons.
struct RunReport {
  std::string command;
  std::string poset_json;
  bool passed = false;
  std::vector<CheckResult> checks;
  std::map<std::string, std::string> artifacts;
};

// Runs the full predicate battery against one poset:
//   polygon_F            Newton polygon of F vs the staircase at h = m(m+1)/2
//   polygon_N            Newton polygon of N vs the staircase at h - deg(phi)
//   qrange_profile       per-slice q-exponent extremes, cross-checked against
//                        the closed-form minimizer
//   oracle_roundtrip     E vs Lagrange interpolation of lattice-point counts,
//                        and E([n]_q) vs the direct count for small n
//   ppartition_identity  bounded order-reversing maps vs the q-binomial sum
//   reciprocity          E([-n]_q) vs the interior count at 1/q
// Budget and Size errors propagate (the input exceeds configured limits);
// any other error is recorded as a failed check.
RunReport run_verification(const Poset& p, const VerifyOptions& opt = {});

std::string report_to_json(const RunReport& r);

// Listing of L(P) in stream order: word, descent set, maj, des, descent
// blocks. With stats, appends the minima of maj - k*des + C(k+1,2) per k
// (computed on the natural relabeling) with a witness extension each.
std::string extensions_table(const Poset& p, bool with_stats,
                             std::uint64_t cap = kExtensionCap);

}  // namespace qnewton
