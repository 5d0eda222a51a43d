#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qnewton.h"

namespace {

// Takes ownership of a C string and hands back a std::string.
std::string take(char* s) {
  std::string out = s ? s : "";
  qn_string_free(s);
  return out;
}

struct PosetGuard {
  qn_poset* p = nullptr;
  ~PosetGuard() { qn_poset_free(p); }
};

struct ResultGuard {
  qn_result* r = nullptr;
  ~ResultGuard() { qn_result_free(r); }
};

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("posets parse, serialize and clone") {
  PosetGuard g;
  REQUIRE(qn_poset_parse_json(R"({"m":3,"covers":[[1,3],[2,3]]})", &g.p) == QN_OK);
  CHECK(qn_poset_size(g.p) == 3);
  char* text = nullptr;
  REQUIRE(qn_poset_to_json(g.p, &text) == QN_OK);
  CHECK(take(text) == R"({"m":3,"covers":[[1,3],[2,3]]})");

  PosetGuard copy;
  REQUIRE(qn_poset_clone(g.p, &copy.p) == QN_OK);
  CHECK(qn_poset_size(copy.p) == 3);

  PosetGuard flat;
  int pairs[] = {1, 2, 2, 3};
  REQUIRE(qn_poset_from_covers(3, pairs, 2, &flat.p) == QN_OK);
  char* flat_text = nullptr;
  REQUIRE(qn_poset_to_json(flat.p, &flat_text) == QN_OK);
  CHECK(take(flat_text) == R"({"m":3,"covers":[[1,2],[2,3]]})");
}

TEST_CASE("failures come back as status codes with messages") {
  qn_poset* p = nullptr;
  CHECK(qn_poset_parse_json("not json", &p) == QN_ERR_PARSE);
  CHECK(p == nullptr);
  CHECK(std::strlen(qn_last_error()) > 0);

  CHECK(qn_poset_parse_json(R"({"m":2,"covers":[[1,2],[2,1]]})", &p) == QN_ERR_CYCLE);
  CHECK(qn_poset_parse_json(nullptr, &p) == QN_ERR_DOMAIN);
  CHECK(qn_poset_parse_json("{}", nullptr) == QN_ERR_DOMAIN);

  int bad_pairs[] = {1, 9};
  CHECK(qn_poset_from_covers(3, bad_pairs, 1, &p) == QN_ERR_RANGE);

  qn_poset_list* l = nullptr;
  CHECK(qn_poset_enumerate(6, &l) == QN_ERR_SIZE);
  CHECK(l == nullptr);

  // A successful call clears the sticky message path for its thread.
  PosetGuard ok;
  REQUIRE(qn_poset_parse_json(R"({"m":1,"covers":[]})", &ok.p) == QN_OK);
  CHECK(qn_last_error()[0] == '\0');
}

TEST_CASE("enumeration lists every labeled poset") {
  qn_poset_list* l = nullptr;
  REQUIRE(qn_poset_enumerate(3, &l) == QN_OK);
  CHECK(qn_poset_list_size(l) == 19);
  const qn_poset* first = qn_poset_list_get(l, 0);
  REQUIRE(first != nullptr);
  CHECK(qn_poset_size(first) == 3);
  CHECK(qn_poset_list_get(l, 19) == nullptr);
  CHECK(qn_poset_list_get(l, -1) == nullptr);
  qn_poset_list_free(l);
}

TEST_CASE("random posets are deterministic") {
  PosetGuard a, b;
  REQUIRE(qn_random_poset(4, 1, 2, 7, &a.p) == QN_OK);
  REQUIRE(qn_random_poset(4, 1, 2, 7, &b.p) == QN_OK);
  char *ta = nullptr, *tb = nullptr;
  REQUIRE(qn_poset_to_json(a.p, &ta) == QN_OK);
  REQUIRE(qn_poset_to_json(b.p, &tb) == QN_OK);
  CHECK(take(ta) == take(tb));

  qn_poset* bad = nullptr;
  CHECK(qn_random_poset(3, 2, 1, 7, &bad) == QN_ERR_DOMAIN);
  CHECK(qn_random_poset(0, 1, 2, 7, &bad) == QN_ERR_RANGE);
}

TEST_CASE("the pipeline and its exports work through the boundary") {
  PosetGuard g;
  REQUIRE(qn_poset_parse_json(R"({"m":1,"covers":[]})", &g.p) == QN_OK);
  ResultGuard res;
  REQUIRE(qn_ehrhart(g.p, 0, &res.r) == QN_OK);
  char* text = nullptr;
  REQUIRE(qn_result_to_json(res.r, &text) == QN_OK);
  nlohmann::json j = nlohmann::json::parse(take(text));
  CHECK(j["m"] == 1);
  CHECK(j["E_numerator"] == "q*x + 1");
  CHECK(j["E_denominator"] == "1");

  PosetGuard anti;
  REQUIRE(qn_poset_parse_json(R"({"m":2,"covers":[]})", &anti.p) == QN_OK);
  ResultGuard res2;
  REQUIRE(qn_ehrhart(anti.p, 0, &res2.r) == QN_OK);
  char* tsv = nullptr;
  REQUIRE(qn_newton_tsv(res2.r, 'F', &tsv) == QN_OK);
  CHECK(take(tsv) == "0\t0\n1\t0\n3\t2\n2\t2\n");
  char* tsv_n = nullptr;
  REQUIRE(qn_newton_tsv(res2.r, 'N', &tsv_n) == QN_OK);
  CHECK(take(tsv_n) == "0\t0\n2\t2\n");
  char* svg = nullptr;
  REQUIRE(qn_newton_svg(res2.r, 'F', &svg) == QN_OK);
  CHECK(take(svg).find("<svg") == 0);
  char* none = nullptr;
  CHECK(qn_newton_tsv(res2.r, 'Z', &none) == QN_ERR_DOMAIN);

  // Exhausted budgets surface as status codes too.
  PosetGuard big;
  REQUIRE(qn_poset_parse_json(R"({"m":4,"covers":[]})", &big.p) == QN_OK);
  qn_result* r = nullptr;
  CHECK(qn_ehrhart(big.p, 3, &r) == QN_ERR_BUDGET);
}

TEST_CASE("extension tables and verification reports") {
  PosetGuard g;
  REQUIRE(qn_poset_parse_json(R"({"m":3,"covers":[[1,3],[2,3]]})", &g.p) == QN_OK);
  char* table = nullptr;
  REQUIRE(qn_extensions_table(g.p, 1, 0, &table) == QN_OK);
  std::string t = take(table);
  CHECK(t.find("word\tDes\tmaj\tdes\tblocks\n") == 0);
  CHECK(t.find("213\t{1}\t1\t1\t{1,2}{3}\n") != std::string::npos);
  CHECK(t.find("k\tmin\twitness\n") != std::string::npos);

  qn_report* rep = nullptr;
  REQUIRE(qn_verify(g.p, 0, 0, &rep) == QN_OK);
  CHECK(qn_report_passed(rep) == 1);
  char* rj = nullptr;
  REQUIRE(qn_report_to_json(rep, &rj) == QN_OK);
  nlohmann::json j = nlohmann::json::parse(take(rj));
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == 6);
  qn_report_free(rep);

  // The brute-force ceiling propagates: m = 9 exceeds the oracle guard.
  PosetGuard wide;
  REQUIRE(qn_poset_parse_json(R"({"m":9,"covers":[]})", &wide.p) == QN_OK);
  qn_report* none = nullptr;
  CHECK(qn_verify(wide.p, 0, 0, &none) == QN_ERR_SIZE);
}

}  // TEST_SUITE
