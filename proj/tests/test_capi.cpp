#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <string>

#include "chevalley.h"

using nlohmann::json;

namespace {

// Takes ownership of the C string.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  chv_string_free(s);
  return out;
}

struct Group {
  chv_group* g = nullptr;
  explicit Group(const char* label) { REQUIRE(chv_group_parse(label, &g) == CHV_OK); }
  ~Group() { chv_group_free(g); }
};

}  // namespace

TEST_CASE("parse, render and free round trip") {
  chv_group* g = nullptr;
  REQUIRE(chv_group_parse("2A3", &g) == CHV_OK);
  char* text = nullptr;
  REQUIRE(chv_group_render(g, &text) == CHV_OK);
  CHECK(take(text) == "2A3");
  chv_group_free(g);
  chv_group_free(nullptr);  // must be a no-op
}

TEST_CASE("status names cover the enum") {
  CHECK(std::string(chv_status_name(CHV_OK)) == "ok");
  CHECK(std::string(chv_status_name(CHV_ERR_PARSE)) == "parse");
  CHECK(std::string(chv_status_name(CHV_ERR_TWIST_FIELD)) == "twist-field-mismatch");
  CHECK(std::string(chv_status_name(CHV_ERR_VERIFY)) == "verification-failed");
}

TEST_CASE("parse failures carry a message and a specific code") {
  chv_group* g = nullptr;
  CHECK(chv_group_parse("H3", &g) == CHV_ERR_PARSE);
  CHECK(std::string(chv_last_error()) != "");
  CHECK(chv_group_parse("T0", &g) == CHV_ERR_INVALID_SPEC);
  CHECK(chv_group_parse("2A1", &g) == CHV_ERR_INVALID_SPEC);
  CHECK(chv_group_parse(nullptr, &g) == CHV_ERR_BAD_ARG);
}

TEST_CASE("group info json") {
  Group g("G2");
  char* out = nullptr;
  REQUIRE(chv_group_info_json(g.g, &out) == CHV_OK);
  json j = json::parse(take(out));
  CHECK(j["spec"] == "G2");
  CHECK(j["dim"] == 14);
  CHECK(j["degrees"] == json({2, 6}));
  CHECK(j["twist"] == "none");
}

TEST_CASE("field checks map onto the status codes") {
  Group tri("3D4");
  CHECK(chv_group_check_field(tri.g, 8) == CHV_OK);
  CHECK(chv_group_check_field(tri.g, 4) == CHV_ERR_TWIST_FIELD);
  CHECK(chv_group_check_field(tri.g, 6) == CHV_ERR_NOT_PRIME_POWER);
  Group a1("A1");
  CHECK(chv_group_check_field(a1.g, 9) == CHV_OK);
  CHECK(chv_group_check_field(a1.g, 0) == CHV_ERR_NOT_PRIME_POWER);
}

TEST_CASE("orders as decimal strings") {
  Group a1("A1");
  char* out = nullptr;
  REQUIRE(chv_group_order(a1.g, 5, 1, &out) == CHV_OK);
  CHECK(take(out) == "120");
  REQUIRE(chv_group_order(a1.g, 2, 2, &out) == CHV_OK);
  CHECK(take(out) == "60");
  Group g2("G2");
  REQUIRE(chv_group_order(g2.g, 2, 1, &out) == CHV_OK);
  CHECK(take(out) == "12096");
  CHECK(chv_group_order(a1.g, 2, 0, &out) == CHV_ERR_BAD_ARG);
}

TEST_CASE("count record") {
  Group a2("A2");
  char* out = nullptr;
  REQUIRE(chv_count_json(a2.g, 3, 1, &out) == CHV_OK);
  json j = json::parse(take(out));
  CHECK(j["group"] == "A2");
  CHECK(j["q"] == 3);
  CHECK(j["i"] == 1);
  CHECK(j["order"] == "5616");
  CHECK(j["bg_count"]["num"] == "1");
  CHECK(j["bg_count"]["den"] == "5616");
}

TEST_CASE("partial sum record stays within its tail bound") {
  Group t1("T1");
  char* out = nullptr;
  REQUIRE(chv_count_series_json(t1.g, 2, 1, 3, &out) == CHV_OK);
  json j = json::parse(take(out));
  CHECK(j["cutoff"] == 3);
  CHECK(j["partial"]["num"] == "15");
  CHECK(j["partial"]["den"] == "16");
  CHECK(j["tail_bound"]["num"] == "1");
  CHECK(j["tail_bound"]["den"] == "16");
  CHECK(j["closed_form"]["num"] == "1");
  CHECK(j["within_tail_bound"] == true);
  CHECK(j["nested_checked"] == true);
  CHECK(chv_count_series_json(t1.g, 2, 1, -1, &out) == CHV_ERR_BAD_ARG);
}

TEST_CASE("betti record") {
  Group a2("A2");
  char* out = nullptr;
  REQUIRE(chv_betti_json(a2.g, 6, &out) == CHV_OK);
  CHECK(json::parse(take(out)) == json({1, 0, 1, 1, 1, 1, 2}));
  Group t1("T1");
  REQUIRE(chv_betti_json(t1.g, 4, &out) == CHV_OK);
  CHECK(json::parse(take(out)) == json({1, 1, 1, 1, 1}));
}

TEST_CASE("zeta records in both modes") {
  Group t1("T1");
  char* out = nullptr;
  REQUIRE(chv_zeta_json(t1.g, 2, 2, &out) == CHV_OK);
  json z = json::parse(take(out));
  CHECK(z["mode"] == "exp");
  CHECK(z["coefficients"][2]["num"] == "2");
  CHECK(z["coefficients"][2]["den"] == "3");

  REQUIRE(chv_zeta_euler_json(t1.g, 2, 1, 10, &out) == CHV_OK);
  json e = json::parse(take(out));
  CHECK(e["mode"] == "euler");
  CHECK(e["W"] == 10);
  CHECK(e["factor_count"] == 10);
  CHECK(e["discrepancies"][0]["num"] == "0");
  CHECK(e["discrepancies"][1]["num"] == "1");
  CHECK(e["discrepancies"][1]["den"] == "1024");
  CHECK(e["tail_majorants"][1]["den"] == "1024");
}

TEST_CASE("euler mode accepts an empty truncation") {
  Group g2("G2");
  char* out = nullptr;
  REQUIRE(chv_zeta_euler_json(g2.g, 2, 2, 0, &out) == CHV_OK);
  json e = json::parse(take(out));
  CHECK(e["factor_count"] == 0);
  CHECK(e["coefficients"][1]["num"] == "0");
}

TEST_CASE("twisted zeta across an incompatible field fails cleanly") {
  Group u3("2A2");
  char* out = nullptr;
  CHECK(chv_zeta_json(u3.g, 2, 2, &out) == CHV_ERR_TWIST_FIELD);
  CHECK(std::string(chv_last_error()).find("even") != std::string::npos);
}

TEST_CASE("oracle counts through the boundary") {
  char* out = nullptr;
  REQUIRE(chv_oracle_json("sl", 2, 3, 1, 0, &out) == CHV_OK);
  json j = json::parse(take(out));
  CHECK(j["order"] == 24);
  CHECK(chv_oracle_json("gl", 2, 3, 1, 0, &out) == CHV_ERR_BAD_ARG);
  CHECK(chv_oracle_json("so", 3, 2, 1, 0, &out) == CHV_ERR_EVEN_CHAR);
  CHECK(chv_oracle_json("sp", 4, 4, 1, 0, &out) == CHV_ERR_BUDGET);
  CHECK(chv_oracle_json("sl", 2, 3, 1, 2, &out) == CHV_ERR_BUDGET);
}

TEST_CASE("verify aggregates suite results") {
  char* out = nullptr;
  REQUIRE(chv_verify_json("oracle", 4, 3, &out) == CHV_OK);
  json arr = json::parse(take(out));
  REQUIRE(arr.is_array());
  CHECK(arr[0]["suite"] == "oracle");
  CHECK(arr[0]["failures"] == 0);
  CHECK(arr[0]["cases"].get<long long>() > 0);
  CHECK(chv_verify_json("no-such-suite", 4, 3, &out) == CHV_ERR_BAD_ARG);
}

TEST_CASE("catalog json is deterministic") {
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(chv_catalog_json(6, &a) == CHV_OK);
  REQUIRE(chv_catalog_json(6, &b) == CHV_OK);
  CHECK(take(a) == take(b));
  chv_string_free(nullptr);  // must be a no-op
}
