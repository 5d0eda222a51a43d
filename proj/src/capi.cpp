#include "qnewton.h"

#include <cstring>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "linext.hpp"
#include "newton.hpp"
#include "polyalg.hpp"
#include "poset.hpp"
#include "qehrhart.hpp"
#include "verify.hpp"

struct qn_poset {
  qnewton::Poset p;
};
struct qn_poset_list {
  std::vector<qn_poset> v;
};
struct qn_result {
  qnewton::QEhrhartResult r;
};
struct qn_report {
  qnewton::RunReport r;
};

namespace {

thread_local std::string g_last_error;

qn_status map_code(qnewton::ErrorCode c) {
  using qnewton::ErrorCode;
  switch (c) {
    case ErrorCode::Cycle: return QN_ERR_CYCLE;
    case ErrorCode::Range: return QN_ERR_RANGE;
    case ErrorCode::Size: return QN_ERR_SIZE;
    case ErrorCode::Budget: return QN_ERR_BUDGET;
    case ErrorCode::Domain: return QN_ERR_DOMAIN;
    case ErrorCode::InexactDivision: return QN_ERR_INEXACT_DIVISION;
    case ErrorCode::ZeroPolynomial: return QN_ERR_ZERO_POLYNOMIAL;
    case ErrorCode::DivisionByZero: return QN_ERR_DIVISION_BY_ZERO;
    case ErrorCode::DuplicateNode: return QN_ERR_DUPLICATE_NODE;
    case ErrorCode::EmptyDescents: return QN_ERR_EMPTY_DESCENTS;
    case ErrorCode::EmptySet: return QN_ERR_EMPTY_SET;
    case ErrorCode::NotNatural: return QN_ERR_NOT_NATURAL;
    case ErrorCode::BadShape: return QN_ERR_BAD_SHAPE;
    case ErrorCode::Parse: return QN_ERR_PARSE;
    case ErrorCode::Io: return QN_ERR_IO;
    case ErrorCode::Internal: return QN_ERR_INTERNAL;
  }
  return QN_ERR_INTERNAL;
}

template <class F>
qn_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return QN_OK;
  } catch (const qnewton::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QN_ERR_INTERNAL;
  }
}

qn_status null_arg(const char* what) {
  g_last_error = std::string(what) + " must not be null";
  return QN_ERR_DOMAIN;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::uint64_t extension_budget(std::uint64_t requested) {
  return requested == 0 ? qnewton::kExtensionCap : requested;
}

}  // namespace

extern "C" {

const char* qn_last_error(void) { return g_last_error.c_str(); }

void qn_string_free(char* s) { delete[] s; }

qn_status qn_poset_parse_json(const char* text, qn_poset** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  return guarded([&] { *out = new qn_poset{qnewton::poset_from_json(text)}; });
}

qn_status qn_poset_from_covers(int m, const int* pairs, int n_pairs, qn_poset** out) {
  if (!out) return null_arg("out");
  if (n_pairs > 0 && !pairs) return null_arg("pairs");
  if (n_pairs < 0) {
    g_last_error = "n_pairs must be nonnegative";
    return QN_ERR_RANGE;
  }
  return guarded([&] {
    std::vector<std::pair<int, int>> covers;
    covers.reserve(n_pairs);
    for (int i = 0; i < n_pairs; ++i) covers.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = new qn_poset{qnewton::Poset::from_covers(m, covers)};
  });
}

qn_status qn_poset_to_json(const qn_poset* p, char** out) {
  if (!p) return null_arg("p");
  if (!out) return null_arg("out");
  return guarded([&] { *out = dup_string(qnewton::poset_to_json(p->p)); });
}

int qn_poset_size(const qn_poset* p) { return p ? p->p.size() : 0; }

qn_status qn_poset_clone(const qn_poset* p, qn_poset** out) {
  if (!p) return null_arg("p");
  if (!out) return null_arg("out");
  return guarded([&] { *out = new qn_poset{p->p}; });
}

void qn_poset_free(qn_poset* p) { delete p; }

qn_status qn_poset_enumerate(int m, qn_poset_list** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    auto list = std::make_unique<qn_poset_list>();
    qnewton::enumerate_posets(m, [&](const qnewton::Poset& p) {
      list->v.push_back(qn_poset{p});
      return true;
    });
    *out = list.release();
  });
}

int qn_poset_list_size(const qn_poset_list* l) {
  return l ? static_cast<int>(l->v.size()) : 0;
}

const qn_poset* qn_poset_list_get(const qn_poset_list* l, int i) {
  if (!l || i < 0 || i >= static_cast<int>(l->v.size())) return nullptr;
  return &l->v[static_cast<size_t>(i)];
}

void qn_poset_list_free(qn_poset_list* l) { delete l; }

qn_status qn_random_poset(int m, uint64_t prob_num, uint64_t prob_den,
                          uint64_t seed, qn_poset** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new qn_poset{qnewton::random_poset(m, prob_num, prob_den, seed)};
  });
}

qn_status qn_ehrhart(const qn_poset* p, uint64_t max_extensions, qn_result** out) {
  if (!p) return null_arg("p");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new qn_result{qnewton::compute_qehrhart(p->p, extension_budget(max_extensions))};
  });
}

qn_status qn_result_to_json(const qn_result* r, char** out) {
  if (!r) return null_arg("r");
  if (!out) return null_arg("out");
  return guarded([&] { *out = dup_string(qnewton::result_to_json(r->r)); });
}

void qn_result_free(qn_result* r) { delete r; }

namespace {

qn_status newton_export(const qn_result* r, char which, char** out, bool svg) {
  if (!r) return null_arg("r");
  if (!out) return null_arg("out");
  if (which != 'F' && which != 'N') {
    g_last_error = "which must be 'F' or 'N'";
    return QN_ERR_DOMAIN;
  }
  return guarded([&] {
    const qnewton::BivarPoly& f = which == 'F' ? r->r.F : r->r.N;
    qnewton::LatticePolygon poly = qnewton::newton_polygon(f);
    *out = dup_string(svg ? qnewton::polygon_svg(poly, f.support())
                          : qnewton::polygon_tsv(poly));
  });
}

}  // namespace

qn_status qn_newton_tsv(const qn_result* r, char which, char** out) {
  return newton_export(r, which, out, false);
}

qn_status qn_newton_svg(const qn_result* r, char which, char** out) {
  return newton_export(r, which, out, true);
}

qn_status qn_extensions_table(const qn_poset* p, int with_stats,
                              uint64_t max_extensions, char** out) {
  if (!p) return null_arg("p");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = dup_string(qnewton::extensions_table(p->p, with_stats != 0,
                                                extension_budget(max_extensions)));
  });
}

qn_status qn_verify(const qn_poset* p, int max_n, uint64_t max_extensions,
                    qn_report** out) {
  if (!p) return null_arg("p");
  if (!out) return null_arg("out");
  return guarded([&] {
    qnewton::VerifyOptions opt;
    if (max_n > 0) opt.max_n = max_n;
    opt.max_extensions = extension_budget(max_extensions);
    *out = new qn_report{qnewton::run_verification(p->p, opt)};
  });
}

int qn_report_passed(const qn_report* r) { return r && r->r.passed ? 1 : 0; }

qn_status qn_report_to_json(const qn_report* r, char** out) {
  if (!r) return null_arg("r");
  if (!out) return null_arg("out");
  return guarded([&] { *out = dup_string(qnewton::report_to_json(r->r)); });
}

void qn_report_free(qn_report* r) { delete r; }

}  // extern "C"
