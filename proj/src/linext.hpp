#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "poset.hpp"

namespace qnewton {

inline constexpr std::uint64_t kExtensionCap = 10'000'000;

// A linear extension as the word pi_1 ... pi_m (0-indexed elements), with its
// descent set (1-based positions i where pi_i > pi_{i+1}), maj and des.
struct LinExt {
  std::vector<int> word;
  std::vector<int> descents;
  long maj = 0;
  int des = 0;

  static LinExt from_word(std::vector<int> w);  // error Domain unless w is a permutation
  std::string word_str() const;                 // 1-indexed, "213" or "2,1,3" for m > 9
};

bool is_extension_of(const Poset& p, const std::vector<int>& word);

// Streams L(P) in lexicographic word order (the backtracking always tries the
// smallest available minimal element first, so a naturally labeled poset
// yields the identity first). The visitor returns false to stop early.
// Error Budget once more than cap extensions would be emitted.
void for_each_extension(const Poset& p, const std::function<bool(const LinExt&)>& visit,
                        std::uint64_t cap = kExtensionCap);
std::vector<LinExt> all_extensions(const Poset& p, std::uint64_t cap = kExtensionCap);
std::uint64_t count_extensions(const Poset& p, std::uint64_t cap = kExtensionCap);

// Maximal decreasing runs of the word, as element sets sorted ascending,
// in word order. 384196725 -> {3},{1,4,8},{6,9},{2,7},{5}.
std::vector<std::vector<int>> descent_blocks(const LinExt& e);

// Keeps the prefix up to the second-largest descent and sorts the rest
// ascending: the result is again in L(P) and loses exactly the top descent.
// Errors: NotNatural, EmptyDescents, Domain (word not in L(P)).
LinExt remove_top_descent(const Poset& p, const LinExt& e);

struct MinMajResult {
  LinExt extension;
  long value;  // maj - k*des + C(k+1, 2)
};

// Closed-form minimizer of maj - k*des + C(k+1,2) over L(P): concatenates the
// chain levels C_1, ..., C_{p-1} each in decreasing order, then the smallest
// k - |C_1| - ... - |C_{p-1}| elements of C_p in decreasing order, then the
// rest ascending. Errors: NotNatural, Range (k outside 0..m).
MinMajResult min_maj_extension(const Poset& p, int k);

// Exhaustive minimum of the same statistic; with require_descents, restricted
// to 1 <= des(pi) <= k. Errors: NotNatural, Range, EmptySet, Budget.
long min_stat_bruteforce(const Poset& p, int k, bool require_descents,
                         std::uint64_t cap = kExtensionCap);

}  // namespace qnewton
