#include <doctest.h>

#include <json.hpp>
#include <map>

#include "grdet/census.hpp"
#include "grdet/determinants.hpp"
#include "grdet/error.hpp"
#include "grdet/number_theory.hpp"

using namespace grdet;

namespace {

CensusConfig enumeration(int lo, int hi, int max_nonzero) {
  CensusConfig c;
  c.mode = CensusMode::Enumerate;
  c.lo = lo;
  c.hi = hi;
  c.max_nonzero = max_nonzero;
  return c;
}

CensusConfig random_config(std::uint64_t samples, std::uint64_t seed) {
  CensusConfig c;
  c.mode = CensusMode::Random;
  c.lo = -3;
  c.hi = 3;
  c.sample_count = samples;
  c.seed = seed;
  return c;
}

std::map<BigInt, std::uint64_t> counts(const CensusReport& r) {
  std::map<BigInt, std::uint64_t> out;
  for (const auto& a : r.achieved) out[a.value] = a.count;
  return out;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(validate_config(enumeration(0, 1, 16)));
  CHECK_THROWS_AS(validate_config(enumeration(2, 1, 16)), InvalidArgument);
  CHECK_THROWS_AS(validate_config(enumeration(0, 1, 17)), InvalidArgument);
  CHECK_THROWS_AS(validate_config(enumeration(1, 2, 4)), InvalidArgument);
  auto c = random_config(10, 1);
  c.symmetry_reduction = true;
  CHECK_THROWS_AS(validate_config(c), InvalidArgument);
  c = enumeration(0, 1, 16);
  c.worker_count = 0;
  CHECK_THROWS_AS(validate_config(c), InvalidArgument);
  c = enumeration(0, 1, 16);
  c.shard_index = 2;
  c.shard_count = 2;
  CHECK_THROWS_AS(validate_config(c), InvalidArgument);
  c = enumeration(0, 1, 16);
  c.value_bound = -1;
  CHECK_THROWS_AS(run_census(c), InvalidArgument);
}

TEST_CASE("small enumeration matches brute force") {
  // every element with at most 2 nonzero coefficients in {-1, 0, 1}
  std::map<BigInt, std::uint64_t> expected;
  const GroupSpec sd16 = GroupSpec::sd(4);
  std::uint64_t total = 0;
  for (int i = -1; i < 16; ++i) {
    for (int j = i + 1; j < 16; ++j) {
      for (int si : {-1, 1}) {
        for (int sj : {-1, 1}) {
          if (i < 0 && si == -1) continue;  // i = -1 means "only one nonzero"
          std::vector<BigInt> flat(16);
          if (i >= 0) flat[i] = si;
          flat[j] = sj;
          ++expected[regular_determinant(GroupRingElement::from_flat(flat), sd16)];
          ++total;
        }
      }
    }
  }
  ++expected[0];  // the zero element
  ++total;

  const auto report = run_census(enumeration(-1, 1, 2));
  CHECK(report.stats.scanned == total);
  CHECK(counts(report) == expected);
  CHECK(report.violations.empty());
  for (const auto& a : report.achieved) CHECK(regular_determinant(a.example, sd16) == a.value);
}

TEST_CASE("the {0,1} box") {
  const auto report = run_census(enumeration(0, 1, 16));
  CHECK(report.stats.scanned == 65536);
  CHECK(report.violations.empty());
  std::uint64_t sum = 0;
  for (const auto& a : report.achieved) {
    sum += a.count;
    if (mod_nonneg(a.value, 2) == 1)
      CHECK(mod_nonneg(a.value, 4) == 1);
    else
      CHECK(mod_nonneg(a.value, 1024) == 0);
  }
  CHECK(sum + report.stats.over_bound == 65536);
  CHECK(counts(report).count(0) == 1);
  CHECK(counts(report).count(1) == 1);
  CHECK(report.achieved.front().value < report.achieved.back().value);

  SUBCASE("symmetry reduction gives the same counts") {
    auto c = enumeration(0, 1, 16);
    c.symmetry_reduction = true;
    const auto reduced = run_census(c);
    CHECK(reduced.stats.symmetry_order > 1);
    CHECK(reduced.stats.scanned == 65536);
    CHECK(reduced.stats.evaluated < 65536);
    CHECK(counts(reduced) == counts(report));
    CHECK(format_achieved(reduced) == format_achieved(report));
  }
}

TEST_CASE("even values in [-1,1] with four nonzero coefficients") {
  const auto report = run_census(enumeration(-1, 1, 4));
  CHECK(report.violations.empty());
  bool saw_even_nonzero = false;
  for (const auto& a : report.achieved) {
    if (mod_nonneg(a.value, 2) == 0) {
      CHECK(mod_nonneg(a.value, 1024) == 0);
      if (a.value != 0) saw_even_nonzero = true;
    }
  }
  CHECK(saw_even_nonzero);
}

TEST_CASE("determinism across workers and shards") {
  auto base = enumeration(-1, 1, 3);
  const auto single = run_census(base);

  auto threaded = base;
  threaded.worker_count = 3;
  CHECK(format_achieved(run_census(threaded)) == format_achieved(single));

  CensusReport merged = CensusReport::empty(base);
  for (unsigned shard = 0; shard < 4; ++shard) {
    auto c = base;
    c.shard_index = shard;
    c.shard_count = 4;
    merged = merge_reports(merged, run_census(c));
  }
  CHECK(format_achieved(merged) == format_achieved(single));
  CHECK(merged.stats.scanned == single.stats.scanned);

  const auto rnd = run_census(random_config(20000, 7));
  auto rnd_threaded = random_config(20000, 7);
  rnd_threaded.worker_count = 4;
  CHECK(format_achieved(run_census(rnd_threaded)) == format_achieved(rnd));
  CHECK(rnd.stats.scanned == 20000);
  CHECK(format_achieved(run_census(random_config(20000, 8))) != format_achieved(rnd));
}

TEST_CASE("merge") {
  const auto a = run_census(random_config(3000, 1));
  const auto b = run_census(random_config(3000, 2));
  CHECK(format_achieved(merge_reports(a, CensusReport::empty(a.config))) == format_achieved(a));
  CHECK(format_achieved(merge_reports(a, b)) == format_achieved(merge_reports(b, a)));
  const auto ab = merge_reports(a, b);
  for (const auto& entry : ab.achieved) {
    std::uint64_t expect = 0;
    for (const auto* r : {&a, &b})
      for (const auto& e : r->achieved)
        if (e.value == entry.value) expect += e.count;
    CHECK(entry.count == expect);
  }
  CHECK_THROWS_AS(merge_reports(a, run_census(enumeration(0, 1, 2))), InvalidArgument);
}

TEST_CASE("value bound") {
  auto c = random_config(2000, 3);
  c.value_bound = 1000;
  const auto r = run_census(c);
  std::uint64_t recorded = 0;
  for (const auto& a : r.achieved) {
    CHECK(abs(a.value) <= 1000);
    recorded += a.count;
  }
  CHECK(recorded + r.stats.over_bound == 2000);
  CHECK(r.stats.over_bound > 0);
}

TEST_CASE("report formats") {
  const auto r = run_census(enumeration(0, 1, 2));
  const auto text = format_report_text(r);
  CHECK(text.rfind("# grdet census\n", 0) == 0);
  CHECK(text.find("value\telement\tcount\n") != std::string::npos);
  CHECK(text.find("\n1\t") != std::string::npos);

  const auto j = nlohmann::json::parse(format_report_json(r));
  CHECK(j["mode"] == "enumerate");
  CHECK(j["achieved"].size() == r.achieved.size());
  CHECK(j["violations"].empty());
  CHECK(j["stats"]["scanned"] == r.stats.scanned);
  for (std::size_t i = 0; i < r.achieved.size(); ++i) {
    CHECK(j["achieved"][i]["value"] == to_string(r.achieved[i].value));
    CHECK(j["achieved"][i]["element"] == format_element(r.achieved[i].example));
    CHECK(j["achieved"][i]["count"] == r.achieved[i].count);
  }
}

TEST_CASE("determinant-preserving elements") {
  const auto elems = determinant_preserving_elements(42);
  REQUIRE_FALSE(elems.empty());
  CHECK(elems.front() == 0);
  // +-1 times a group element always has determinant +-1; the preserving
  // ones are exactly those with determinant +1 as group-ring elements
  for (auto g : elems) {
    std::vector<BigInt> flat(16);
    flat[g] = 1;
    CHECK(regular_determinant(GroupRingElement::from_flat(flat), GroupSpec::sd(4)) == 1);
  }
}
