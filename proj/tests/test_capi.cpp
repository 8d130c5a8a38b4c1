// The C interface, exercised the way a foreign-language binding would use
// it: statuses on every path, out parameters untouched on failure, strings
// owned and released explicitly, handles freed exactly once.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wzwblocks.h>

#include <cstring>
#include <string>

namespace {

std::string take(char* s) {
  std::string out = s == nullptr ? std::string() : std::string(s);
  wzw_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(wzw_version() != nullptr);
  CHECK(std::strcmp(wzw_status_name(WZW_OK), "ok") == 0);
  CHECK(std::strcmp(wzw_status_name(WZW_ERR_INVALID), "invalid") == 0);
  CHECK(std::strcmp(wzw_status_name(WZW_ERR_PARITY), "parity") == 0);
  CHECK(std::strcmp(wzw_status_name(WZW_ERR_STABILITY), "stability") == 0);
  CHECK(std::strcmp(wzw_status_name(WZW_ERR_INTERNAL), "internal") == 0);
}

TEST_CASE("lattice calls") {
  char* out = nullptr;
  REQUIRE(wzw_intersect(2, 1, 4, 1, 0, &out) == WZW_OK);
  CHECK(take(out) == "2");

  char* ka = nullptr;
  char* kb = nullptr;
  REQUIRE(wzw_canonical_class(3, &ka, &kb) == WZW_OK);
  CHECK(take(ka) == "-2");
  CHECK(take(kb) == "-5");

  char* genus = nullptr;
  REQUIRE(wzw_adjunction_genus(0, 2, 2, &genus) == WZW_OK);
  CHECK(take(genus) == "1");

  int flag = -1;
  REQUIRE(wzw_parity_ok(2, 1, 4, &flag) == WZW_OK);
  CHECK(flag == 1);
  REQUIRE(wzw_parity_ok(2, 1, 1, &flag) == WZW_OK);
  CHECK(flag == 0);

  wzw_hint hint = WZW_HINT_UNKNOWN;
  REQUIRE(wzw_smooth_member_hint(0, 2, 2, &hint) == WZW_OK);
  CHECK(hint == WZW_HINT_YES);
  REQUIRE(wzw_smooth_member_hint(0, -1, 2, &hint) == WZW_OK);
  CHECK(hint == WZW_HINT_NO);

  REQUIRE(wzw_check_stability(0, 1, &flag) == WZW_OK);
  CHECK(flag == 1);
  REQUIRE(wzw_check_stability(0, 0, &flag) == WZW_OK);
  CHECK(flag == 0);
}

TEST_CASE("invalid arguments") {
  char* out = nullptr;
  CHECK(wzw_intersect(-1, 0, 0, 0, 0, &out) == WZW_ERR_INVALID);
  CHECK(out == nullptr);  // out parameters stay untouched on failure
  CHECK(wzw_last_error()[0] != '\0');

  CHECK(wzw_intersect(0, 0, 0, 0, 0, nullptr) == WZW_ERR_INVALID);
  CHECK(wzw_adjunction_genus(0, 1, 1, nullptr) == WZW_ERR_INVALID);
  CHECK(wzw_report_compute(0, 1, 2, 2, nullptr) == WZW_ERR_INVALID);
  CHECK(wzw_report_value(nullptr, WZW_FIELD_DIM, &out) == WZW_ERR_INVALID);
  CHECK(out == nullptr);
}

TEST_CASE("cohomology calls") {
  char* h0 = nullptr;
  char* h1 = nullptr;
  char* h2 = nullptr;
  REQUIRE(wzw_cohomology_table(1, 1, -2, &h0, &h1, &h2) == WZW_OK);
  CHECK(take(h0) == "0");
  CHECK(take(h1) == "3");
  CHECK(take(h2) == "0");

  char* chi = nullptr;
  REQUIRE(wzw_chi_rr(1, 1, -2, &chi) == WZW_OK);
  CHECK(take(chi) == "-3");
}

TEST_CASE("report lifecycle") {
  wzw_report* report = nullptr;
  REQUIRE(wzw_report_compute(0, 1, 2, 2, &report) == WZW_OK);
  REQUIRE(report != nullptr);

  const std::pair<wzw_report_field, const char*> expected[] = {
      {WZW_FIELD_GENUS, "1"},    {WZW_FIELD_N, "1"},        {WZW_FIELD_D1, "0"},
      {WZW_FIELD_D2, "2"},       {WZW_FIELD_ELL, "-1"},     {WZW_FIELD_M_CLOSED, "1"},
      {WZW_FIELD_M_GRR, "1"},    {WZW_FIELD_DIM, "2"},
  };
  for (const auto& [field, value] : expected) {
    char* out = nullptr;
    REQUIRE(wzw_report_value(report, field, &out) == WZW_OK);
    CHECK(take(out) == value);
  }

  wzw_hint hint = WZW_HINT_UNKNOWN;
  REQUIRE(wzw_report_smooth_hint(report, &hint) == WZW_OK);
  CHECK(hint == WZW_HINT_YES);

  wzw_report_free(report);
}

TEST_CASE("report failure statuses") {
  wzw_report* report = reinterpret_cast<wzw_report*>(0x1);  // sentinel
  CHECK(wzw_report_compute(1, 1, 1, 0, &report) == WZW_ERR_PARITY);
  CHECK(report == reinterpret_cast<wzw_report*>(0x1));
  CHECK(wzw_report_compute(0, 0, 2, 2, &report) == WZW_ERR_STABILITY);
  CHECK(wzw_report_compute(-2, 1, 2, 2, &report) == WZW_ERR_INVALID);
  CHECK(std::string(wzw_last_error()).find(">= 0") != std::string::npos);
}

TEST_CASE("huge dimensions cross the boundary as strings") {
  wzw_report* report = nullptr;
  REQUIRE(wzw_report_compute(0, 14, 2, 2, &report) == WZW_OK);
  char* out = nullptr;
  REQUIRE(wzw_report_value(report, WZW_FIELD_DIM, &out) == WZW_OK);
  const std::string dim = take(out);

  // Pascal triangle in 128-bit arithmetic, wide enough for binom(80, 53).
  unsigned __int128 row[81] = {1};
  for (int n = 1; n <= 80; ++n) {
    for (int k = n; k >= 1; --k) row[k] += row[k - 1];
  }
  unsigned __int128 value = row[53];
  std::string expected;
  while (value > 0) {
    expected.insert(expected.begin(), char('0' + int(value % 10)));
    value /= 10;
  }
  CHECK(dim == expected);
  CHECK(dim.size() >= 20);
  wzw_report_free(report);
}

TEST_CASE("selfcheck lifecycle") {
  wzw_selfcheck* sc = nullptr;
  REQUIRE(wzw_selfcheck_run(1, &sc) == WZW_OK);
  REQUIRE(sc != nullptr);
  CHECK(wzw_selfcheck_passed(sc) == 1);
  const int32_t suites = wzw_selfcheck_suite_count(sc);
  CHECK(suites == 7);
  for (int32_t i = 0; i < suites; ++i) {
    CHECK(wzw_selfcheck_suite_name(sc, i) != nullptr);
    CHECK(wzw_selfcheck_suite_cases(sc, i) > 0);
    CHECK(wzw_selfcheck_suite_failures(sc, i) == 0);
    CHECK(wzw_selfcheck_counterexample_count(sc, i) == 0);
  }
  CHECK(wzw_selfcheck_suite_name(sc, suites) == nullptr);  // out of range
  wzw_selfcheck_free(sc);

  CHECK(wzw_selfcheck_run(0, &sc) == WZW_ERR_INVALID);
  CHECK(wzw_selfcheck_run(5, nullptr) == WZW_ERR_INVALID);
}
