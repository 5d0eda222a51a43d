#include "verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "linext.hpp"

namespace qnewton {

namespace {

using Clock = std::chrono::steady_clock;

std::string polygon_mismatch(const PolygonReport& pr) {
  if (pr.pass) return {};
  return "got " + pr.got.str() + ", want " + pr.want.str();
}

std::string opt_str(const std::optional<long>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

}  // namespace

RunReport run_verification(const Poset& p, const VerifyOptions& opt) {
  RunReport rep;
  rep.command = "verify";
  rep.poset_json = poset_to_json(p);

  QEhrhartResult r = compute_qehrhart(p, opt.max_extensions);
  rep.artifacts["F"] = r.F.str();
  rep.artifacts["N"] = r.N.str();
  rep.artifacts["phi"] = r.phi.str();
  rep.artifacts["D"] = r.D.str();

  auto run_check = [&](const std::string& name, const std::function<std::string()>& body) {
    CheckResult c;
    c.name = name;
    auto t0 = Clock::now();
    try {
      c.detail = body();
      c.pass = c.detail.empty();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Budget || e.code() == ErrorCode::Size) throw;
      c.detail = e.what();
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    c.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    rep.checks.push_back(std::move(c));
  };

  run_check("polygon_F", [&] {
    PolygonReport pr = verify_polygon_F(r);
    rep.artifacts["polygon_F.got"] = pr.got.str();
    rep.artifacts["polygon_F.want"] = pr.want.str();
    return polygon_mismatch(pr);
  });

  run_check("polygon_N", [&] {
    PolygonReport pr = verify_polygon_N(r);
    rep.artifacts["polygon_N.got"] = pr.got.str();
    rep.artifacts["polygon_N.want"] = pr.want.str();
    return polygon_mismatch(pr);
  });

  run_check("qrange_profile", [&] {
    std::ostringstream bad;
    long choose2 = static_cast<long>(r.m) * (r.m - 1) / 2;
    long b_run = 0;
    auto prof = qrange_profile(r.F);
    for (const auto& e : prof) {
      if (e.k >= 1) b_run += r.b[e.k - 1];
      long want_max = choose2 + e.k;
      if (!e.q_max || *e.q_max != want_max)
        bad << "slice " << e.k << ": q_max " << opt_str(e.q_max) << " != " << want_max << "; ";
      if (!e.q_min || *e.q_min != b_run)
        bad << "slice " << e.k << ": q_min " << opt_str(e.q_min) << " != " << b_run << "; ";
      // the closed-form minimizer must land exactly on the slice floor
      long built = min_maj_extension(r.naturalized_dual, e.k).value;
      if (built != b_run)
        bad << "slice " << e.k << ": minimizer value " << built << " != " << b_run << "; ";
    }
    if (static_cast<int>(prof.size()) != r.m + 1)
      bad << "profile has " << prof.size() << " slices, want " << r.m + 1 << "; ";
    return bad.str();
  });

  run_check("oracle_roundtrip", [&] {
    XPoly oracle = oracle_interpolation(p, opt.max_n);
    if (oracle != r.E) return std::string("E differs from the interpolated oracle");
    int n_hi = std::min(r.m + 2, opt.max_n);
    for (int n = 0; n <= n_hi; ++n) {
      RatFunc lhs = r.E.eval(RatFunc(q_int_poly(n)));
      ZPoly w = count_lattice_points(p, n, Region::Closed, opt.max_n).poly;
      if (lhs != RatFunc(w))
        return "E([" + std::to_string(n) + "]) differs from the lattice-point count";
    }
    return std::string();
  });

  run_check("ppartition_identity", [&] {
    Poset nat = naturalize(p).first;
    int n_hi = std::min(opt.spot_n, opt.max_n);
    for (int n = 0; n <= n_hi; ++n)
      if (!check_lemma_qbinom(nat, n, opt.max_extensions))
        return "identity fails at n = " + std::to_string(n);
    return std::string();
  });

  run_check("reciprocity", [&] {
    int n_hi = std::min(opt.spot_n, opt.max_n);
    for (int n = 1; n <= n_hi; ++n)
      if (!reciprocity_holds(r.E, p, n, opt.max_n))
        return "reciprocity fails at n = " + std::to_string(n);
    return std::string();
  });

  rep.passed = true;
  for (const auto& c : rep.checks) rep.passed = rep.passed && c.pass;
  return rep;
}

std::string report_to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["poset"] = nlohmann::ordered_json::parse(r.poset_json);
  j["passed"] = r.passed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["ms"] = c.ms;
    jc["detail"] = c.detail;
    j["checks"].push_back(std::move(jc));
  }
  j["artifacts"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.artifacts) j["artifacts"][k] = v;
  return j.dump(2);
}

std::string extensions_table(const Poset& p, bool with_stats, std::uint64_t cap) {
  std::ostringstream os;
  os << "word\tDes\tmaj\tdes\tblocks\n";
  for_each_extension(p, [&](const LinExt& e) {
    os << e.word_str() << '\t';
    os << '{';
    for (size_t i = 0; i < e.descents.size(); ++i) {
      if (i) os << ',';
      os << e.descents[i];
    }
    os << "}\t" << e.maj << '\t' << e.des << '\t';
    for (const auto& block : descent_blocks(e)) {
      os << '{';
      for (size_t i = 0; i < block.size(); ++i) {
        if (i) os << ',';
        os << block[i] + 1;
      }
      os << '}';
    }
    os << '\n';
    return true;
  }, cap);
  if (with_stats) {
    auto [nat, rel] = naturalize(p);
    os << "\nmin(maj - k*des) + C(k+1,2) over extensions";
    if (!(nat == p)) {
      os << " of the natural relabeling ";
      auto lab = rel.labels();
      for (size_t i = 0; i < lab.size(); ++i) {
        if (i) os << ',';
        os << i + 1 << "->" << lab[i];
      }
    }
    os << ":\nk\tmin\twitness\n";
    for (int k = 0; k <= p.size(); ++k) {
      MinMajResult mm = min_maj_extension(nat, k);
      os << k << '\t' << mm.value << '\t' << mm.extension.word_str() << '\n';
    }
  }
  return os.str();
}

}  // namespace qnewton
