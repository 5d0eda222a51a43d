// qnewton command line: q-Ehrhart polynomials of order polytopes, Newton
// polygon exports, linear-extension tables, and batch verification of the
// staircase polygon laws against brute-force oracles.
//
// Exit codes: 0 all predicates pass, 1 a predicate failed (a mathematical
// counterexample -- reported in full), 2 usage, input or limit error.

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qnewton.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitError = 2;

struct PosetHandle {
  qn_poset* p = nullptr;
  PosetHandle() = default;
  explicit PosetHandle(qn_poset* raw) : p(raw) {}
  PosetHandle(PosetHandle&& o) noexcept : p(o.p) { o.p = nullptr; }
  PosetHandle& operator=(PosetHandle&& o) noexcept {
    if (this != &o) {
      qn_poset_free(p);
      p = o.p;
      o.p = nullptr;
    }
    return *this;
  }
  PosetHandle(const PosetHandle&) = delete;
  PosetHandle& operator=(const PosetHandle&) = delete;
  ~PosetHandle() { qn_poset_free(p); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { qn_string_free(s); }
};

int fail(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return kExitError;
}

int fail_status(const std::string& context) {
  return fail(context + ": " + qn_last_error());
}

bool read_file(const std::string& path, std::string& out, std::string& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err = "cannot open " + path;
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_file(const std::string& path, const std::string& content, std::string& err) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    err = "cannot open " + path + " for writing";
    return false;
  }
  out << content;
  out.flush();
  if (!out.good()) {
    err = "failed writing " + path;
    return false;
  }
  return true;
}

bool load_poset_file(const std::string& path, PosetHandle& out, std::string& err) {
  std::string text;
  if (!read_file(path, text, err)) return false;
  qn_poset* raw = nullptr;
  if (qn_poset_parse_json(text.c_str(), &raw) != QN_OK) {
    err = path + ": " + qn_last_error();
    return false;
  }
  out = PosetHandle(raw);
  return true;
}

int run_ehrhart(const std::string& input, std::uint64_t max_ext) {
  PosetHandle p;
  std::string err;
  if (!load_poset_file(input, p, err)) return fail(err);
  qn_result* res = nullptr;
  if (qn_ehrhart(p.p, max_ext, &res) != QN_OK) return fail_status("ehrhart");
  std::unique_ptr<qn_result, decltype(&qn_result_free)> res_guard(res, qn_result_free);
  OwnedString json;
  if (qn_result_to_json(res, &json.s) != QN_OK) return fail_status("ehrhart");
  std::cout << json.s << '\n';
  return kExitPass;
}

int run_newton(const std::string& input, const std::string& tsv_stem,
               const std::string& svg_stem, std::uint64_t max_ext) {
  if (tsv_stem.empty() && svg_stem.empty())
    return fail("newton needs --tsv and/or --svg");
  PosetHandle p;
  std::string err;
  if (!load_poset_file(input, p, err)) return fail(err);
  qn_result* res = nullptr;
  if (qn_ehrhart(p.p, max_ext, &res) != QN_OK) return fail_status("newton");
  std::unique_ptr<qn_result, decltype(&qn_result_free)> res_guard(res, qn_result_free);
  for (char which : {'F', 'N'}) {
    if (!tsv_stem.empty()) {
      OwnedString text;
      if (qn_newton_tsv(res, which, &text.s) != QN_OK) return fail_status("newton");
      std::string path = tsv_stem + "." + which + ".tsv";
      if (!write_file(path, text.s, err)) return fail(err);
      std::cout << "wrote " << path << '\n';
    }
    if (!svg_stem.empty()) {
      OwnedString text;
      if (qn_newton_svg(res, which, &text.s) != QN_OK) return fail_status("newton");
      std::string path = svg_stem + "." + which + ".svg";
      if (!write_file(path, text.s, err)) return fail(err);
      std::cout << "wrote " << path << '\n';
    }
  }
  return kExitPass;
}

int run_extensions(const std::string& input, bool stats, std::uint64_t max_ext) {
  PosetHandle p;
  std::string err;
  if (!load_poset_file(input, p, err)) return fail(err);
  OwnedString table;
  if (qn_extensions_table(p.p, stats ? 1 : 0, max_ext, &table.s) != QN_OK)
    return fail_status("extensions");
  std::cout << table.s;
  return kExitPass;
}

struct VerifyOutcome {
  qn_status status = QN_OK;
  std::string error;
  bool passed = false;
  std::string report_json;
};

VerifyOutcome verify_one(const qn_poset* p, int max_n, std::uint64_t max_ext) {
  VerifyOutcome out;
  qn_report* rep = nullptr;
  out.status = qn_verify(p, max_n, max_ext, &rep);
  if (out.status != QN_OK) {
    out.error = qn_last_error();
    return out;
  }
  std::unique_ptr<qn_report, decltype(&qn_report_free)> rep_guard(rep, qn_report_free);
  out.passed = qn_report_passed(rep) != 0;
  OwnedString json;
  if (qn_report_to_json(rep, &json.s) != QN_OK) {
    out.status = QN_ERR_INTERNAL;
    out.error = qn_last_error();
    return out;
  }
  out.report_json = json.s;
  return out;
}

int run_verify(const std::vector<PosetHandle>& posets, int max_n,
               std::uint64_t max_ext, int jobs, const std::string& report_path) {
  std::vector<VerifyOutcome> outcomes(posets.size());
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, static_cast<int>(posets.size() ? posets.size() : 1));
  if (jobs <= 1) {
    for (size_t i = 0; i < posets.size(); ++i)
      outcomes[i] = verify_one(posets[i].p, max_n, max_ext);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < posets.size(); i = next.fetch_add(1))
          outcomes[i] = verify_one(posets[i].p, max_n, max_ext);
      });
    for (auto& t : pool) t.join();
  }

  bool any_fail = false, any_error = false;
  std::string saved_report;
  for (size_t i = 0; i < posets.size(); ++i) {
    const VerifyOutcome& o = outcomes[i];
    OwnedString pj;
    std::string label = qn_poset_to_json(posets[i].p, &pj.s) == QN_OK ? pj.s : "?";
    if (o.status != QN_OK) {
      any_error = true;
      std::cerr << "error: " << label << ": " << o.error << '\n';
      continue;
    }
    std::cout << (o.passed ? "PASS " : "FAIL ") << label << '\n';
    if (!o.passed) {
      any_fail = true;
      std::cout << o.report_json << '\n';
      if (saved_report.empty()) saved_report = o.report_json;
    }
  }
  if (saved_report.empty() && !outcomes.empty() && outcomes.back().status == QN_OK)
    saved_report = outcomes.back().report_json;
  if (!report_path.empty() && !saved_report.empty()) {
    std::string err;
    if (!write_file(report_path, saved_report + "\n", err)) return fail(err);
  }
  if (any_fail) return kExitCounterexample;
  if (any_error) return kExitError;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-Ehrhart polynomials of order polytopes and their Newton polygons"};
  app.require_subcommand(1);

  std::uint64_t max_ext = 0;  // 0 = library default budget
  app.add_option("--max-extensions", max_ext,
                 "linear-extension enumeration budget (default 10^7)")
      ->capture_default_str();

  auto* cmd_ehrhart = app.add_subcommand("ehrhart", "compute F, N, phi, D for a poset file");
  cmd_ehrhart->fallthrough();
  std::string ehrhart_input;
  cmd_ehrhart->add_option("input", ehrhart_input, "poset JSON file")->required();

  auto* cmd_verify = app.add_subcommand(
      "verify", "check the polygon laws and oracle identities; exit 1 on a counterexample");
  cmd_verify->fallthrough();
  std::string verify_input;
  cmd_verify->add_option("input", verify_input, "poset JSON file");
  int all_m = 0;
  cmd_verify->add_option("--all", all_m, "verify every labeled poset on m elements (m <= 5)");
  std::vector<std::uint64_t> random_args;
  cmd_verify
      ->add_option("--random", random_args,
                   "COUNT M SEED: verify COUNT random posets on M elements (edge probability 1/2)")
      ->expected(3);
  std::string replay_path;
  cmd_verify->add_option("--replay", replay_path, "re-run the poset stored in a report JSON");
  std::string report_path;
  cmd_verify->add_option("--report", report_path,
                         "write the first failing (or else last) report to this file");
  int max_n = 0;  // 0 = library default
  cmd_verify->add_option("--max-n", max_n, "brute-force dilation bound (default 12)");
  int jobs = 1;
  cmd_verify->add_option("--jobs", jobs, "worker threads for batch runs")
      ->envname("QNEWTON_JOBS");

  auto* cmd_newton = app.add_subcommand("newton", "export Newton polygons of F and N");
  cmd_newton->fallthrough();
  std::string newton_input, tsv_stem, svg_stem;
  cmd_newton->add_option("input", newton_input, "poset JSON file")->required();
  cmd_newton->add_option("--tsv", tsv_stem, "write STEM.F.tsv and STEM.N.tsv");
  cmd_newton->add_option("--svg", svg_stem, "write STEM.F.svg and STEM.N.svg");

  auto* cmd_extensions = app.add_subcommand("extensions", "list linear extensions with statistics");
  cmd_extensions->fallthrough();
  std::string ext_input;
  bool ext_stats = false;
  cmd_extensions->add_option("input", ext_input, "poset JSON file")->required();
  cmd_extensions->add_flag("--stats", ext_stats, "append the per-k minima table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (cmd_ehrhart->parsed()) return run_ehrhart(ehrhart_input, max_ext);
  if (cmd_newton->parsed()) return run_newton(newton_input, tsv_stem, svg_stem, max_ext);
  if (cmd_extensions->parsed()) return run_extensions(ext_input, ext_stats, max_ext);

  // verify: exactly one input source
  int sources = (!verify_input.empty()) + (all_m > 0) + (!random_args.empty()) +
                (!replay_path.empty());
  if (sources != 1)
    return fail("verify needs exactly one of: an input file, --all, --random, --replay");

  std::vector<PosetHandle> posets;
  std::string err;
  if (!verify_input.empty()) {
    PosetHandle p;
    if (!load_poset_file(verify_input, p, err)) return fail(err);
    posets.push_back(std::move(p));
  } else if (all_m > 0) {
    qn_poset_list* list = nullptr;
    if (qn_poset_enumerate(all_m, &list) != QN_OK) return fail_status("--all");
    std::unique_ptr<qn_poset_list, decltype(&qn_poset_list_free)> guard(list, qn_poset_list_free);
    for (int i = 0; i < qn_poset_list_size(list); ++i) {
      qn_poset* copy = nullptr;
      if (qn_poset_clone(qn_poset_list_get(list, i), &copy) != QN_OK)
        return fail_status("--all");
      posets.emplace_back(copy);
    }
  } else if (!random_args.empty()) {
    std::uint64_t count = random_args[0], m = random_args[1], seed = random_args[2];
    for (std::uint64_t i = 0; i < count; ++i) {
      qn_poset* raw = nullptr;
      if (qn_random_poset(static_cast<int>(m), 1, 2, seed + i, &raw) != QN_OK)
        return fail_status("--random");
      posets.emplace_back(raw);
    }
  } else {
    std::string text;
    if (!read_file(replay_path, text, err)) return fail(err);
    nlohmann::json rep;
    try {
      rep = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      return fail(replay_path + ": " + e.what());
    }
    if (!rep.contains("poset")) return fail(replay_path + ": no poset field to replay");
    qn_poset* raw = nullptr;
    if (qn_poset_parse_json(rep["poset"].dump().c_str(), &raw) != QN_OK)
      return fail_status("--replay");
    posets.emplace_back(raw);
  }

  return run_verify(posets, max_n, max_ext, jobs, report_path);
}
