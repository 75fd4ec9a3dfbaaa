#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "grdet/grdet.h"

namespace {

// Takes ownership of a library-allocated string.
std::string take(char* s) {
  std::string out = s ? s : "";
  grdet_string_free(s);
  return out;
}

grdet_group group(const char* name) {
  grdet_group g{};
  REQUIRE(grdet_group_parse(name, &g) == GRDET_OK);
  return g;
}

}  // namespace

TEST_CASE("status and version") {
  CHECK(std::string(grdet_version()).size() > 0);
  CHECK(std::string(grdet_status_name(GRDET_ERR_PARSE)) == "parse error");
  grdet_group g{};
  CHECK(grdet_group_parse("q8", &g) == GRDET_ERR_PARSE);
  CHECK(std::string(grdet_last_error()).size() > 0);
  char* name = nullptr;
  REQUIRE(grdet_group_name(group("SD32"), &name) == GRDET_OK);
  CHECK(take(name) == "sd32");
}

TEST_CASE("elements and determinants") {
  grdet_element* e = nullptr;
  REQUIRE(grdet_element_parse("0,1,1,0,0,0,0,0;1,1,1,0,0,0,0,0", &e) == GRDET_OK);
  CHECK(grdet_element_order(e) == 16);

  char* det = nullptr;
  REQUIRE(grdet_determinant(e, group("sd16"), &det) == GRDET_OK);
  CHECK(take(det) == "45");

  grdet_factored* f = nullptr;
  REQUIRE(grdet_factored_compute(e, group("sd16"), &f) == GRDET_OK);
  std::vector<std::string> names, values;
  for (size_t i = 0; i < grdet_factored_count(f); ++i) {
    names.emplace_back(grdet_factored_name(f, i));
    char* v = nullptr;
    REQUIRE(grdet_factored_value(f, i, &v) == GRDET_OK);
    values.push_back(take(v));
  }
  CHECK(names == std::vector<std::string>{"M", "A2", "A3", "U1", "V1", "U2", "V2", "product"});
  CHECK(values == std::vector<std::string>{"5", "1", "3", "0", "-1", "1", "0", "45"});
  grdet_factored_free(f);

  CHECK(grdet_factored_compute(e, group("d8"), &f) == GRDET_ERR_INVALID_ARGUMENT);
  CHECK(grdet_determinant(e, group("sd32"), &det) == GRDET_ERR_INVALID_ARGUMENT);

  grdet_element* sq = nullptr;
  REQUIRE(grdet_element_multiply(e, e, group("sd16"), &sq) == GRDET_OK);
  REQUIRE(grdet_determinant(sq, group("sd16"), &det) == GRDET_OK);
  CHECK(take(det) == "2025");
  grdet_element_free(sq);
  grdet_element_free(e);

  CHECK(grdet_element_parse("1,2,3", &e) == GRDET_ERR_PARSE);
  CHECK(grdet_element_parse(nullptr, &e) == GRDET_ERR_INVALID_ARGUMENT);

  REQUIRE(grdet_element_identity(5, &e) == GRDET_OK);
  char* text = nullptr;
  REQUIRE(grdet_element_format(e, &text) == GRDET_OK);
  CHECK(take(text) == "1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0;0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0");
  REQUIRE(grdet_factored_compute(e, group("m32"), &f) == GRDET_OK);
  CHECK(grdet_factored_count(f) == 3);
  grdet_factored_free(f);
  grdet_element_free(e);
}

TEST_CASE("Cayley table") {
  size_t order = 0;
  CHECK(grdet_cayley_table(group("sd16"), nullptr, 0, &order) == GRDET_OK);
  REQUIRE(order == 16);
  std::vector<uint16_t> table(order * order);
  REQUIRE(grdet_cayley_table(group("sd16"), table.data(), table.size(), &order) == GRDET_OK);
  CHECK(table[1 * 16 + 8] == 11);  // X Y = Y X^3
  CHECK(grdet_cayley_table(group("sd16"), table.data(), 10, &order) == GRDET_ERR_INVALID_ARGUMENT);
}

TEST_CASE("classification and factoring") {
  grdet_verdict* v = nullptr;
  REQUIRE(grdet_classify("45", &v) == GRDET_OK);
  CHECK(grdet_verdict_achievability(v) == GRDET_ACHIEVABLE);
  CHECK(grdet_verdict_reason(v) == GRDET_REASON_ODD_FIVE_WITH_P);
  char* p = nullptr;
  REQUIRE(grdet_verdict_prime(v, &p) == GRDET_OK);
  CHECK(take(p) == "3");
  grdet_verdict_free(v);

  REQUIRE(grdet_classify("512", &v) == GRDET_OK);
  CHECK(grdet_verdict_achievability(v) == GRDET_NOT_ACHIEVABLE);
  REQUIRE(grdet_verdict_prime(v, &p) == GRDET_OK);
  CHECK(p == nullptr);
  CHECK(std::string(grdet_reason_name(grdet_verdict_reason(v))) == "EvenNotMultiple");
  grdet_verdict_free(v);
  CHECK(grdet_classify("4x", &v) == GRDET_ERR_PARSE);

  grdet_factorization* f = nullptr;
  REQUIRE(grdet_factorize("-27", 0, &f) == GRDET_OK);
  CHECK(grdet_factorization_sign(f) == -1);
  CHECK(grdet_factorization_complete(f) == 1);
  REQUIRE(grdet_factorization_count(f) == 1);
  REQUIRE(grdet_factorization_prime(f, 0, &p) == GRDET_OK);
  CHECK(take(p) == "3");
  CHECK(grdet_factorization_exponent(f, 0) == 3);
  CHECK(grdet_factorization_prime(f, 1, &p) == GRDET_ERR_INVALID_ARGUMENT);
  grdet_factorization_free(f);
  CHECK(grdet_factorize("0", 0, &f) == GRDET_ERR_INVALID_ARGUMENT);

  int symbol = 0;
  REQUIRE(grdet_legendre_minus2("5", &symbol) == GRDET_OK);
  CHECK(symbol == -1);
  char *u = nullptr, *w = nullptr;
  REQUIRE(grdet_cornacchia2("19", &u, &w) == GRDET_OK);
  CHECK(take(u) == "1");
  CHECK(take(w) == "3");
  CHECK(grdet_cornacchia2("17", &u, &w) == GRDET_ERR_INVALID_ARGUMENT);
}

TEST_CASE("witnesses") {
  grdet_witness* w = nullptr;
  REQUIRE(grdet_witness_construct("-27", &w, nullptr) == GRDET_OK);
  CHECK(grdet_witness_verified(w) == 1);
  CHECK(std::string(grdet_witness_family(w)) == "(16m-3)*p^2");
  char* text = nullptr;
  REQUIRE(grdet_element_format(grdet_witness_element(w), &text) == GRDET_OK);
  CHECK(take(text) == "1,1,0,0,0,0,0,0;0,1,0,0,0,0,0,0");
  REQUIRE(grdet_witness_param(w, "p", &text) == GRDET_OK);
  CHECK(take(text) == "3");
  CHECK(grdet_witness_param(w, "q", &text) == GRDET_ERR_INVALID_ARGUMENT);
  grdet_witness_free(w);

  grdet_verdict* v = nullptr;
  CHECK(grdet_witness_construct("13", &w, &v) == GRDET_ERR_NOT_ACHIEVABLE);
  REQUIRE(v != nullptr);
  CHECK(grdet_verdict_reason(v) == GRDET_REASON_ODD_FIVE_NO_P);
  grdet_verdict_free(v);
}

TEST_CASE("census") {
  grdet_census_config c;
  grdet_census_config_init(&c);
  CHECK(c.mode == GRDET_CENSUS_ENUMERATE);
  c.lo = -1;
  c.hi = 1;
  c.max_nonzero = 2;
  grdet_census_report* a = nullptr;
  REQUIRE(grdet_census_run(&c, &a) == GRDET_OK);
  CHECK(grdet_census_violation_count(a) == 0);
  CHECK(grdet_census_scanned(a) == 1 + 32 + 120 * 4);

  c.worker_count = 2;
  c.value_bound = "100";
  grdet_census_report* b = nullptr;
  CHECK(grdet_census_merge(a, a, &b) == GRDET_OK);
  grdet_census_free(b);
  REQUIRE(grdet_census_run(&c, &b) == GRDET_OK);
  grdet_census_report* merged = nullptr;
  CHECK(grdet_census_merge(a, b, &merged) == GRDET_ERR_INVALID_ARGUMENT);

  char* out = nullptr;
  REQUIRE(grdet_census_format_report(a, GRDET_CENSUS_ACHIEVED, &out) == GRDET_OK);
  CHECK(take(out).rfind("value\telement\tcount\n", 0) == 0);
  REQUIRE(grdet_census_format_report(a, GRDET_CENSUS_JSON, &out) == GRDET_OK);
  CHECK(take(out).front() == '{');
  grdet_census_free(a);
  grdet_census_free(b);

  c.value_bound = "ten";
  CHECK(grdet_census_run(&c, &a) == GRDET_ERR_PARSE);
  c.value_bound = nullptr;
  c.lo = 3;
  c.hi = 2;
  CHECK(grdet_census_run(&c, &a) == GRDET_ERR_INVALID_ARGUMENT);
}

TEST_CASE("selftest") {
  grdet_selftest* s = nullptr;
  REQUIRE(grdet_selftest_run(0, 0.05, &s) == GRDET_OK);
  REQUIRE(grdet_selftest_count(s) == 6);
  for (size_t i = 0; i < grdet_selftest_count(s); ++i) {
    CAPTURE(grdet_selftest_name(s, i));
    CHECK(grdet_selftest_passed(s, i) == 1);
    CHECK(grdet_selftest_checks(s, i) > 0);
    CHECK(std::string(grdet_selftest_counterexample(s, i)).empty());
  }
  grdet_selftest_free(s);
}
