#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace qnewton {

struct ChainStats;
struct Relabeling;

// Finite poset on elements 0..m-1 (labels 1..m in all I/O), stored as the
// full strict order relation: lt(a, b) iff a < b in the poset. The matrix is
// always its own transitive closure; irreflexive and antisymmetric.
class Poset {
 public:
  // covers uses 1-indexed labels; any relation pairs are accepted, the
  // transitive closure is applied. Errors: Range (labels), Cycle.
  static Poset from_covers(int m, const std::vector<std::pair<int, int>>& covers);
  // Validates transitivity/antisymmetry/irreflexivity; error Domain.
  static Poset from_relation_matrix(int m, std::vector<std::vector<bool>> lt);

  int size() const { return m_; }
  bool less(int a, int b) const { return lt_[a][b]; }  // 0-indexed, strict
  const std::vector<std::vector<bool>>& relation() const { return lt_; }
  std::vector<std::pair<int, int>> cover_pairs() const;  // 1-indexed, sorted

  // Natural labeling: a < b in the poset implies a < b as integers.
  bool is_natural() const;
  bool is_chain() const;

  bool operator==(const Poset& o) const { return m_ == o.m_ && lt_ == o.lt_; }
  bool operator!=(const Poset& o) const { return !(*this == o); }

 private:
  Poset(int m, std::vector<std::vector<bool>> lt) : m_(m), lt_(std::move(lt)) {}
  int m_ = 0;
  std::vector<std::vector<bool>> lt_;
};

// perm[old] = new, 0-indexed internally; labels() renders it 1-indexed.
struct Relabeling {
  std::vector<int> perm;
  std::vector<int> labels() const;
};

// mc[x]: size of the longest chain ending at x (top). mcbar[x]: the same on
// the dual. b: increasing rearrangement of mc. levels[i]: the set
// C_{i+1} = { x : mc(x) = i+1 }, each sorted.
struct ChainStats {
  std::vector<int> mc;
  std::vector<int> mcbar;
  std::vector<int> b;
  std::vector<std::vector<int>> levels;
};

Poset dual(const Poset& p);
Poset relabel(const Poset& p, const Relabeling& r);

// Relabels along the lexicographically smallest topological order, producing
// a naturally labeled poset isomorphic to the input.
std::pair<Poset, Relabeling> naturalize(const Poset& p);

ChainStats chain_stats(const Poset& p);

// All labeled posets on m elements, in a fixed deterministic order. The
// visitor returns false to stop early. Error Size for m > 5.
void enumerate_posets(int m, const std::function<bool(const Poset&)>& visit);
std::vector<Poset> all_posets(int m);

// Transitive closure of a random DAG drawn on a random topological order.
// Each admissible edge appears with probability prob_num/prob_den; fully
// deterministic for a fixed seed. Errors: Range (m <= 0), Domain (probability
// outside [0, 1]).
Poset random_poset(int m, std::uint64_t prob_num, std::uint64_t prob_den, std::uint64_t seed);

// {"m": 4, "covers": [[1,2],[2,4],[3,4]]}; parse applies the closure.
Poset poset_from_json(const std::string& text);
std::string poset_to_json(const Poset& p);

}  // namespace qnewton
