#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "gts.h"

namespace {
std::string fixture(const std::string& n) { return std::string(GTS_FIXTURES) + "/" + n; }
std::string take(char* s) {
  std::string out = s;
  gts_string_free(s);
  return out;
}
}  // namespace

TEST_CASE("spec handles and error codes") {
  gts_spec* s = nullptr;
  CHECK(gts_spec_load("/nonexistent/file.spec", &s) == GTS_ERR_INVALID_SPEC);
  CHECK(std::string(gts_last_error()).find("cannot read") != std::string::npos);
  CHECK(gts_spec_parse("name: bad\ndegree: 3\nx12: (1,2)\nx23: (2,3)\nx13: ()\nx14: ()\nx24: ()\nx34: ()\n", &s) == GTS_ERR_INVALID_SPEC);
  CHECK(gts_spec_load(nullptr, &s) == GTS_ERR_USAGE);
  REQUIRE(gts_spec_load(fixture("philadelphia.spec").c_str(), &s) == GTS_OK);
  CHECK(std::string(gts_spec_name(s)) == "philadelphia");
  char* text = nullptr;
  REQUIRE(gts_spec_write(s, &text) == GTS_OK);
  gts_spec* again = nullptr;
  REQUIRE(gts_spec_parse(text, &again) == GTS_OK);
  gts_string_free(text);
  int eq = 0;
  CHECK(gts_same_kernel(s, again, &eq) == GTS_OK);
  CHECK(eq == 1);
  gts_spec_free(again);
  gts_spec_free(s);
}

TEST_CASE("quotients, enumeration and reports") {
  gts_spec* s = nullptr;
  REQUIRE(gts_spec_load(fixture("philadelphia.spec").c_str(), &s) == GTS_OK);
  gts_quotients* q = nullptr;
  REQUIRE(gts_quotients_build(s, 0, &q) == GTS_OK);
  gts_info info{};
  REQUIRE(gts_quotients_info(q, &info) == GTS_OK);
  CHECK(info.index_pb4 == 216);
  CHECK(info.index_f2 == 7776);
  CHECK(info.derived_order == 216);
  CHECK(info.n_ord == 6);
  CHECK(info.abelian == 0);
  gts_shadows* l = nullptr;
  CHECK(gts_enumerate(q, "nonsense", 1, &l) == GTS_ERR_USAGE);
  REQUIRE(gts_enumerate(q, "charming", 1, &l) == GTS_OK);
  CHECK(gts_shadows_count(l) == 12);
  int64_t m = -7, id = -7;
  char* w = nullptr;
  REQUIRE(gts_shadows_get(l, 0, &m, &id, &w) == GTS_OK);
  CHECK(m == 0);
  CHECK(id == 0);
  CHECK(take(w) == "e");
  CHECK(gts_shadows_get(l, 12, &m, &id, nullptr) == GTS_ERR_USAGE);
  char* report = nullptr;
  REQUIRE(gts_shadows_group_report(l, &report) == GTS_OK);
  CHECK(take(report).find("kernel_order\t6") != std::string::npos);
  char* tsv = nullptr;
  REQUIRE(gts_shadows_tsv(l, &tsv) == GTS_OK);
  CHECK(take(tsv).rfind("m\tf_coset_id", 0) == 0);
  gts_shadows_free(l);
  int iso = 0;
  CHECK(gts_is_isolated(q, "charming", 1, &iso) == GTS_OK);
  CHECK(iso == 1);
  CHECK(gts_is_isolated(q, "sideways", 1, &iso) == GTS_ERR_USAGE);
  gts_furusho_report fr{};
  REQUIRE(gts_furusho(q, "strong", 1, &fr) == GTS_OK);
  CHECK(fr.pentagon_count == 216);
  CHECK(fr.extendable_count == 36);
  CHECK(fr.holds == 0);
  int surv = 0;
  CHECK(gts_survives(q, "m=0 f=e", q, 1, &surv) == GTS_OK);
  CHECK(surv == 1);
  gts_quotients_free(q);
  gts_spec_free(s);
}

TEST_CASE("cap errors") {
  gts_spec* s = nullptr;
  REQUIRE(gts_spec_load(fixture("philadelphia.spec").c_str(), &s) == GTS_OK);
  gts_quotients* q = nullptr;
  REQUIRE(gts_quotients_build(s, 1000, &q) == GTS_OK);
  gts_shadows* l = nullptr;
  CHECK(gts_enumerate(q, "practical", 1, &l) == GTS_ERR_CAP);
  gts_quotients_free(q);
  gts_spec_free(s);
}

TEST_CASE("groupoid entry points") {
  gts_spec *a = nullptr, *b = nullptr, *c = nullptr, *i = nullptr;
  REQUIRE(gts_spec_cyclic(2, &a) == GTS_OK);
  REQUIRE(gts_spec_cyclic(3, &b) == GTS_OK);
  REQUIRE(gts_spec_cyclic(6, &c) == GTS_OK);
  REQUIRE(gts_intersect(a, b, &i) == GTS_OK);
  int v = 0;
  CHECK(gts_subgroup_leq(i, c, &v) == GTS_OK);
  CHECK(v == 1);
  CHECK(gts_subgroup_leq(c, i, &v) == GTS_OK);
  CHECK(v == 1);
  CHECK(gts_subgroup_leq(a, c, &v) == GTS_OK);
  CHECK(v == 0);
  gts_quotients* q = nullptr;
  REQUIRE(gts_quotients_build(c, 0, &q) == GTS_OK);
  char* comp = nullptr;
  REQUIRE(gts_component_tsv(q, 1, &comp) == GTS_OK);
  CHECK(take(comp) == "object\tdegree\tindex_pb4\tcharming\tsettled\n0\t6\t6\t4\t4\n");
  gts_spec* sharp = nullptr;
  REQUIRE(gts_n_sharp(q, 1, &sharp) == GTS_OK);
  CHECK(gts_same_kernel(sharp, c, &v) == GTS_OK);
  CHECK(v == 1);
  gts_spec_free(sharp);
  gts_quotients_free(q);
  for (gts_spec* s : {a, b, c, i}) gts_spec_free(s);
}
