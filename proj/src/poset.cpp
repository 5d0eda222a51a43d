#include "poset.hpp"

#include <algorithm>
#include <random>

#include "json.hpp"

namespace qnewton {

namespace {

void transitive_close(std::vector<std::vector<bool>>& lt) {
  int m = static_cast<int>(lt.size());
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i) {
      if (!lt[i][k]) continue;
      for (int j = 0; j < m; ++j)
        if (lt[k][j]) lt[i][j] = true;
    }
}

bool is_transitive(const std::vector<std::vector<bool>>& lt) {
  int m = static_cast<int>(lt.size());
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      if (!lt[i][k]) continue;
      for (int j = 0; j < m; ++j)
        if (lt[k][j] && !lt[i][j]) return false;
    }
  return true;
}

}  // namespace

Poset Poset::from_covers(int m, const std::vector<std::pair<int, int>>& covers) {
  if (m <= 0) throw Error(ErrorCode::Range, "poset size must be positive");
  if (m > 4096) throw Error(ErrorCode::Size, "poset size is capped at 4096");
  std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
  for (const auto& [a, b] : covers) {
    if (a < 1 || a > m || b < 1 || b > m)
      throw Error(ErrorCode::Range, "cover label outside 1..m");
    if (a == b) throw Error(ErrorCode::Cycle, "relation a < a is a cycle");
    lt[a - 1][b - 1] = true;
  }
  transitive_close(lt);
  for (int i = 0; i < m; ++i)
    if (lt[i][i]) throw Error(ErrorCode::Cycle, "relation closure contains a cycle");
  return Poset(m, std::move(lt));
}

Poset Poset::from_relation_matrix(int m, std::vector<std::vector<bool>> lt) {
  if (m <= 0 || static_cast<int>(lt.size()) != m)
    throw Error(ErrorCode::Range, "bad relation matrix size");
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(lt[i].size()) != m)
      throw Error(ErrorCode::Range, "bad relation matrix size");
    if (lt[i][i]) throw Error(ErrorCode::Domain, "relation is not irreflexive");
    for (int j = 0; j < m; ++j)
      if (lt[i][j] && lt[j][i]) throw Error(ErrorCode::Domain, "relation is not antisymmetric");
  }
  if (!is_transitive(lt)) throw Error(ErrorCode::Domain, "relation is not transitive");
  return Poset(m, std::move(lt));
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) {
      if (!lt_[i][j]) continue;
      bool covered = false;
      for (int k = 0; k < m_ && !covered; ++k) covered = lt_[i][k] && lt_[k][j];
      if (!covered) out.emplace_back(i + 1, j + 1);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool Poset::is_natural() const {
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < i; ++j)
      if (lt_[i][j]) return false;
  return true;
}

bool Poset::is_chain() const {
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j)
      if (!lt_[i][j] && !lt_[j][i]) return false;
  return true;
}

std::vector<int> Relabeling::labels() const {
  std::vector<int> out(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) out[i] = perm[i] + 1;
  return out;
}

Poset dual(const Poset& p) {
  int m = p.size();
  std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) lt[i][j] = p.less(j, i);
  return Poset::from_relation_matrix(m, std::move(lt));
}

Poset relabel(const Poset& p, const Relabeling& r) {
  int m = p.size();
  if (static_cast<int>(r.perm.size()) != m) throw Error(ErrorCode::Range, "relabeling size mismatch");
  std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (p.less(i, j)) lt[r.perm[i]][r.perm[j]] = true;
  return Poset::from_relation_matrix(m, std::move(lt));
}

std::pair<Poset, Relabeling> naturalize(const Poset& p) {
  int m = p.size();
  std::vector<bool> placed(m, false);
  Relabeling r;
  r.perm.assign(m, -1);
  for (int pos = 0; pos < m; ++pos) {
    int pick = -1;
    for (int v = 0; v < m && pick < 0; ++v) {
      if (placed[v]) continue;
      bool minimal = true;
      for (int u = 0; u < m && minimal; ++u) minimal = placed[u] || !p.less(u, v);
      if (minimal) pick = v;
    }
    if (pick < 0) throw Error(ErrorCode::Internal, "no minimal element in a finite poset");
    placed[pick] = true;
    r.perm[pick] = pos;
  }
  return {relabel(p, r), r};
}

ChainStats chain_stats(const Poset& p) {
  int m = p.size();
  ChainStats st;
  st.mc.assign(m, 1);
  // mc[x] = 1 + max mc over strictly smaller elements; iterate in any
  // topological order (naturalize gives one cheaply via repeated passes).
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < m; ++x)
      for (int u = 0; u < m; ++u)
        if (p.less(u, x) && st.mc[u] + 1 > st.mc[x]) {
          st.mc[x] = st.mc[u] + 1;
          changed = true;
        }
  }
  Poset d = dual(p);
  st.mcbar.assign(m, 1);
  changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < m; ++x)
      for (int u = 0; u < m; ++u)
        if (d.less(u, x) && st.mcbar[u] + 1 > st.mcbar[x]) {
          st.mcbar[x] = st.mcbar[u] + 1;
          changed = true;
        }
  }
  st.b = st.mc;
  std::sort(st.b.begin(), st.b.end());
  int height = *std::max_element(st.mc.begin(), st.mc.end());
  st.levels.assign(height, {});
  for (int x = 0; x < m; ++x) st.levels[st.mc[x] - 1].push_back(x);
  return st;
}

void enumerate_posets(int m, const std::function<bool(const Poset&)>& visit) {
  if (m <= 0) throw Error(ErrorCode::Range, "poset size must be positive");
  if (m > 5) throw Error(ErrorCode::Size, "exhaustive enumeration is guarded at m <= 5");
  // Ordered pairs (i, j), i != j, row-major; one bit per pair.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::uint64_t limit = std::uint64_t(1) << pairs.size();
  std::vector<std::vector<bool>> lt(m, std::vector<bool>(m));
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    for (int i = 0; i < m; ++i) std::fill(lt[i].begin(), lt[i].end(), false);
    for (size_t t = 0; t < pairs.size(); ++t)
      if (mask >> t & 1) lt[pairs[t].first][pairs[t].second] = true;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = i + 1; j < m && ok; ++j) ok = !(lt[i][j] && lt[j][i]);
    if (!ok || !is_transitive(lt)) continue;
    if (!visit(Poset::from_relation_matrix(m, lt))) return;
  }
}

std::vector<Poset> all_posets(int m) {
  std::vector<Poset> out;
  enumerate_posets(m, [&](const Poset& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

namespace {

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
  // Rejection sampling keeps the draw unbiased and pinned to the engine's
  // standardized output sequence.
  std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= lim);
  return r % n;
}

}  // namespace

Poset random_poset(int m, std::uint64_t prob_num, std::uint64_t prob_den, std::uint64_t seed) {
  if (m <= 0) throw Error(ErrorCode::Range, "poset size must be positive");
  if (m > 4096) throw Error(ErrorCode::Size, "poset size is capped at 4096");
  if (prob_den == 0 || prob_num > prob_den)
    throw Error(ErrorCode::Domain, "edge probability must be a rational in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  for (int i = m - 1; i >= 1; --i) {
    int j = static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }
  std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::uint64_t r = rng();
      bool accept = static_cast<unsigned __int128>(r) * prob_den <
                    static_cast<unsigned __int128>(prob_num) << 64;
      if (accept) lt[order[i]][order[j]] = true;
    }
  transitive_close(lt);
  return Poset::from_relation_matrix(m, std::move(lt));
}

Poset poset_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad poset JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer())
    throw Error(ErrorCode::Parse, "poset JSON needs an integer field \"m\"");
  int m = j["m"].get<int>();
  std::vector<std::pair<int, int>> covers;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw Error(ErrorCode::Parse, "\"covers\" must be an array of pairs");
    for (const auto& e : j["covers"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw Error(ErrorCode::Parse, "\"covers\" must be an array of pairs");
      covers.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return Poset::from_covers(m, covers);
}

std::string poset_to_json(const Poset& p) {
  nlohmann::ordered_json j;
  j["m"] = p.size();
  auto covers = nlohmann::ordered_json::array();
  for (const auto& [a, b] : p.cover_pairs()) covers.push_back({a, b});
  j["covers"] = covers;
  return j.dump();
}

}  // namespace qnewton
