#include "linext.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace qnewton {

LinExt LinExt::from_word(std::vector<int> w) {
  int m = static_cast<int>(w.size());
  std::vector<bool> seen(m, false);
  for (int v : w) {
    if (v < 0 || v >= m || seen[v]) throw Error(ErrorCode::Domain, "word is not a permutation");
    seen[v] = true;
  }
  LinExt e;
  e.word = std::move(w);
  for (int i = 0; i + 1 < m; ++i)
    if (e.word[i] > e.word[i + 1]) {
      e.descents.push_back(i + 1);
      e.maj += i + 1;
    }
  e.des = static_cast<int>(e.descents.size());
  return e;
}

std::string LinExt::word_str() const {
  std::ostringstream out;
  bool wide = word.size() > 9;
  for (size_t i = 0; i < word.size(); ++i) {
    if (wide && i) out << ',';
    out << word[i] + 1;
  }
  return out.str();
}

bool is_extension_of(const Poset& p, const std::vector<int>& word) {
  int m = p.size();
  if (static_cast<int>(word.size()) != m) return false;
  std::vector<int> pos(m, -1);
  for (int i = 0; i < m; ++i) {
    if (word[i] < 0 || word[i] >= m || pos[word[i]] != -1) return false;
    pos[word[i]] = i;
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (p.less(a, b) && pos[a] > pos[b]) return false;
  return true;
}

namespace {

struct ExtensionWalker {
  const Poset& p;
  const std::function<bool(const LinExt&)>& visit;
  std::uint64_t cap;
  std::uint64_t emitted = 0;
  bool stopped = false;
  int m;
  std::vector<std::uint64_t> pred_mask;
  std::uint64_t remaining;
  std::vector<int> word;

  ExtensionWalker(const Poset& p_, const std::function<bool(const LinExt&)>& v, std::uint64_t c)
      : p(p_), visit(v), cap(c), m(p_.size()), pred_mask(p_.size(), 0),
        remaining((p_.size() >= 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << p_.size()) - 1)) {
    if (m >= 64) throw Error(ErrorCode::Size, "extension streaming supports m < 64");
    for (int v2 = 0; v2 < m; ++v2)
      for (int u = 0; u < m; ++u)
        if (p.less(u, v2)) pred_mask[v2] |= std::uint64_t(1) << u;
    word.reserve(m);
  }

  void walk() {
    if (static_cast<int>(word.size()) == m) {
      if (emitted == cap) throw Error(ErrorCode::Budget, "extension cap exceeded");
      ++emitted;
      if (!visit(LinExt::from_word(word))) stopped = true;
      return;
    }
    for (int v = 0; v < m && !stopped; ++v) {
      std::uint64_t bit = std::uint64_t(1) << v;
      if (!(remaining & bit)) continue;
      if (pred_mask[v] & remaining) continue;  // some smaller element still unplaced
      remaining &= ~bit;
      word.push_back(v);
      walk();
      word.pop_back();
      remaining |= bit;
    }
  }
};

}  // namespace

void for_each_extension(const Poset& p, const std::function<bool(const LinExt&)>& visit,
                        std::uint64_t cap) {
  ExtensionWalker w(p, visit, cap);
  w.walk();
}

std::vector<LinExt> all_extensions(const Poset& p, std::uint64_t cap) {
  std::vector<LinExt> out;
  for_each_extension(p, [&](const LinExt& e) {
    out.push_back(e);
    return true;
  }, cap);
  return out;
}

std::uint64_t count_extensions(const Poset& p, std::uint64_t cap) {
  std::uint64_t n = 0;
  for_each_extension(p, [&](const LinExt&) {
    ++n;
    return true;
  }, cap);
  return n;
}

std::vector<std::vector<int>> descent_blocks(const LinExt& e) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  for (size_t i = 0; i < e.word.size(); ++i) {
    cur.push_back(e.word[i]);
    bool descent_here = i + 1 < e.word.size() && e.word[i] > e.word[i + 1];
    if (!descent_here) {
      std::sort(cur.begin(), cur.end());
      blocks.push_back(std::move(cur));
      cur.clear();
    }
  }
  return blocks;
}

LinExt remove_top_descent(const Poset& p, const LinExt& e) {
  if (!p.is_natural()) throw Error(ErrorCode::NotNatural, "poset must be naturally labeled");
  if (!is_extension_of(p, e.word)) throw Error(ErrorCode::Domain, "word is not in L(P)");
  if (e.descents.empty()) throw Error(ErrorCode::EmptyDescents, "word has no descents");
  int j = e.des >= 2 ? e.descents[e.des - 2] : 0;  // second-largest descent, 0 if none
  std::vector<int> w(e.word.begin(), e.word.begin() + j);
  std::vector<int> tail(e.word.begin() + j, e.word.end());
  std::sort(tail.begin(), tail.end());
  w.insert(w.end(), tail.begin(), tail.end());
  LinExt out = LinExt::from_word(std::move(w));
  if (!is_extension_of(p, out.word))
    throw Error(ErrorCode::Internal, "descent removal left L(P)");
  return out;
}

namespace {

long choose2(long n) { return n * (n - 1) / 2; }

}  // namespace

MinMajResult min_maj_extension(const Poset& p, int k) {
  if (!p.is_natural()) throw Error(ErrorCode::NotNatural, "poset must be naturally labeled");
  int m = p.size();
  if (k < 0 || k > m) throw Error(ErrorCode::Range, "k must lie in 0..m");
  std::vector<int> w;
  if (k == 0) {
    for (int v = 0; v < m; ++v) w.push_back(v);
  } else {
    ChainStats st = chain_stats(p);
    int pidx = 0, before = 0;
    while (before + static_cast<int>(st.levels[pidx].size()) < k)
      before += static_cast<int>(st.levels[pidx++].size());
    std::vector<bool> used(m, false);
    for (int i = 0; i < pidx; ++i)
      for (auto it = st.levels[i].rbegin(); it != st.levels[i].rend(); ++it) {
        w.push_back(*it);
        used[*it] = true;
      }
    int t = k - before;  // take the t smallest elements of C_p, in decreasing order
    for (int i = t - 1; i >= 0; --i) {
      w.push_back(st.levels[pidx][i]);
      used[st.levels[pidx][i]] = true;
    }
    for (int v = 0; v < m; ++v)
      if (!used[v]) w.push_back(v);
  }
  MinMajResult res;
  res.extension = LinExt::from_word(std::move(w));
  if (!is_extension_of(p, res.extension.word))
    throw Error(ErrorCode::Internal, "constructed minimizer is not in L(P)");
  res.value = res.extension.maj - static_cast<long>(k) * res.extension.des + choose2(k + 1);
  return res;
}

long min_stat_bruteforce(const Poset& p, int k, bool require_descents, std::uint64_t cap) {
  if (!p.is_natural()) throw Error(ErrorCode::NotNatural, "poset must be naturally labeled");
  if (k < 0 || k > p.size()) throw Error(ErrorCode::Range, "k must lie in 0..m");
  bool any = false;
  long best = std::numeric_limits<long>::max();
  for_each_extension(p, [&](const LinExt& e) {
    if (require_descents && !(1 <= e.des && e.des <= k)) return true;
    long v = e.maj - static_cast<long>(k) * e.des + choose2(k + 1);
    if (!any || v < best) best = v;
    any = true;
    return true;
  }, cap);
  if (!any) throw Error(ErrorCode::EmptySet, "no extension satisfies the descent restriction");
  return best;
}

}  // namespace qnewton
