#pragma once

#include <utility>
#include <vector>

#include "doctest.h"
#include "error.hpp"
#include "poset.hpp"

namespace testutil {

// Runs f, which must throw, and hands back the error code it threw with.
template <class F>
qnewton::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const qnewton::Error& e) {
    return e.code();
  } catch (...) {
    FAIL("threw something that is not an Error");
  }
  FAIL("expected an Error, got none");
  return qnewton::ErrorCode::Internal;  // unreachable
}

inline qnewton::Poset chain(int m) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i < m; ++i) covers.emplace_back(i, i + 1);
  return qnewton::Poset::from_covers(m, covers);
}

inline qnewton::Poset antichain(int m) {
  return qnewton::Poset::from_covers(m, {});
}

// 1 < 3 and 2 < 3: two minimal elements under a common top.
inline qnewton::Poset fan() {
  return qnewton::Poset::from_covers(3, {{1, 3}, {2, 3}});
}

// 1 < 2 and 1 < 3: one bottom under two maximal elements.
inline qnewton::Poset vee() {
  return qnewton::Poset::from_covers(3, {{1, 2}, {1, 3}});
}

}  // namespace testutil
