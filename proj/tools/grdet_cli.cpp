// Command-line front end. Talks to the library only through grdet.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "grdet/grdet.h"

namespace {

using json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kNo = 1,  // not achievable, census violations
  kUsage = 2,
  kBug = 3,  // formula mismatch, verification failure, selftest failure
  kUnknown = 4,
  kInternal = 5,
};

struct Failure {
  grdet_status status;
};

int exit_code_for(grdet_status status) {
  switch (status) {
    case GRDET_OK: return kOk;
    case GRDET_ERR_INVALID_ARGUMENT:
    case GRDET_ERR_PARSE: return kUsage;
    case GRDET_ERR_NOT_ACHIEVABLE: return kNo;
    case GRDET_ERR_FORMULA_MISMATCH:
    case GRDET_ERR_VERIFICATION_FAILED: return kBug;
    case GRDET_ERR_INTERNAL: break;
  }
  return kInternal;
}

void check(grdet_status status) {
  if (status != GRDET_OK) throw Failure{status};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  grdet_string_free(s);
  return out;
}

template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (ptr) Free(ptr);
  }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};

using Element = Handle<grdet_element, grdet_element_free>;
using Factored = Handle<grdet_factored, grdet_factored_free>;
using VerdictH = Handle<grdet_verdict, grdet_verdict_free>;
using FactorizationH = Handle<grdet_factorization, grdet_factorization_free>;
using WitnessH = Handle<grdet_witness, grdet_witness_free>;
using Report = Handle<grdet_census_report, grdet_census_free>;
using Selftest = Handle<grdet_selftest, grdet_selftest_free>;

grdet_group parse_group(const std::string& name) {
  grdet_group g{};
  check(grdet_group_parse(name.c_str(), &g));
  return g;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---- det ------------------------------------------------------------------

int cmd_det(const std::string& group_name, const std::string& text, bool factored, bool as_json) {
  const grdet_group group = parse_group(group_name);
  Element e;
  check(grdet_element_parse(text.c_str(), e.out()));
  char* raw = nullptr;
  check(grdet_determinant(e.get(), group, &raw));
  const std::string det = take(raw);

  json j;
  j["group"] = group_name;
  j["element"] = text;
  j["D"] = det;
  if (!factored) {
    if (as_json)
      emit(j);
    else
      std::cout << det << '\n';
    return kOk;
  }
  Factored f;
  check(grdet_factored_compute(e.get(), group, f.out()));
  if (!as_json) std::cout << "D=" << det << '\n';
  for (size_t i = 0; i < grdet_factored_count(f.get()); ++i) {
    const std::string name = grdet_factored_name(f.get(), i);
    if (name == "product") continue;
    check(grdet_factored_value(f.get(), i, &raw));
    const std::string value = take(raw);
    if (as_json)
      j[name] = value;
    else
      std::cout << name << '=' << value << '\n';
  }
  if (as_json) emit(j);
  return kOk;
}

// ---- factor ---------------------------------------------------------------

int cmd_factor(const std::string& n, std::uint64_t effort, bool as_json) {
  FactorizationH f;
  check(grdet_factorize(n.c_str(), effort, f.out()));
  const bool complete = grdet_factorization_complete(f.get()) != 0;
  json factors = json::array(), cofactors = json::array();
  std::string line;
  if (grdet_factorization_sign(f.get()) < 0) line = "-1";
  char* raw = nullptr;
  for (size_t i = 0; i < grdet_factorization_count(f.get()); ++i) {
    check(grdet_factorization_prime(f.get(), i, &raw));
    const std::string p = take(raw);
    const unsigned e = grdet_factorization_exponent(f.get(), i);
    factors.push_back({{"prime", p}, {"exponent", e}});
    if (!line.empty()) line += " * ";
    line += p;
    if (e > 1) line += '^' + std::to_string(e);
  }
  for (size_t i = 0; i < grdet_factorization_unfactored_count(f.get()); ++i) {
    check(grdet_factorization_unfactored(f.get(), i, &raw));
    const std::string c = take(raw);
    cofactors.push_back(c);
    if (!line.empty()) line += " * ";
    line += '(' + c + ')';
  }
  if (line.empty()) line = "1";
  if (as_json) {
    emit({{"n", n},
          {"sign", grdet_factorization_sign(f.get())},
          {"factors", factors},
          {"unfactored", cofactors},
          {"complete", complete}});
  } else {
    std::cout << n << " = " << line << '\n';
    if (!complete) std::cout << "incomplete\n";
  }
  return kOk;
}

// ---- classify -------------------------------------------------------------

json verdict_json(const grdet_verdict* v, const std::string& n) {
  json j;
  j["n"] = n;
  j["achievability"] = grdet_achievability_name(grdet_verdict_achievability(v));
  j["reason"] = grdet_reason_name(grdet_verdict_reason(v));
  char* raw = nullptr;
  check(grdet_verdict_prime(v, &raw));
  if (raw) j["p"] = take(raw);
  return j;
}

void print_verdict(const json& j) {
  std::cout << j["achievability"].get<std::string>() << " (" << j["reason"].get<std::string>();
  if (j.contains("p")) std::cout << ", p=" << j["p"].get<std::string>();
  std::cout << ")\n";
}

int cmd_classify(const std::string& n, bool as_json) {
  VerdictH v;
  check(grdet_classify(n.c_str(), v.out()));
  const json j = verdict_json(v.get(), n);
  if (as_json)
    emit(j);
  else
    print_verdict(j);
  switch (grdet_verdict_achievability(v.get())) {
    case GRDET_ACHIEVABLE: return kOk;
    case GRDET_NOT_ACHIEVABLE: return kNo;
    case GRDET_UNKNOWN: return kUnknown;
  }
  return kInternal;
}

// ---- witness --------------------------------------------------------------

// Decimal spelling the library prints for an integer it has already accepted
// (" +0017" -> "17").
std::string canonical_integer(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  const auto last = text.find_last_not_of(" \t\n");
  std::string s = text.substr(first, last - first + 1);
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  s.erase(0, std::min(s.find_first_not_of('0'), s.size() - 1));
  return negative && s != "0" ? "-" + s : s;
}

int cmd_witness(const std::string& n, bool verify, bool as_json) {
  WitnessH w;
  VerdictH v;
  const grdet_status status = grdet_witness_construct(n.c_str(), w.out(), v.out());
  if (status == GRDET_ERR_NOT_ACHIEVABLE && v.get()) {
    const json j = verdict_json(v.get(), n);
    if (as_json)
      emit(j);
    else
      print_verdict(j);
    return kNo;
  }
  check(status);

  char* raw = nullptr;
  check(grdet_element_format(grdet_witness_element(w.get()), &raw));
  const std::string element = take(raw);
  json j;
  j["n"] = n;
  j["element"] = element;
  j["family"] = grdet_witness_family(w.get());
  for (const char* key : {"m", "k", "s", "p"}) {
    check(grdet_witness_param(w.get(), key, &raw));
    j[key] = take(raw);
  }

  bool ok = true;
  if (verify) {
    const grdet_group sd16{GRDET_FAMILY_SD, 4};
    check(grdet_determinant(grdet_witness_element(w.get()), sd16, &raw));
    const std::string det = take(raw);
    ok = det == canonical_integer(n);
    j["oracle"] = det;
    j["verified"] = ok;
  }

  if (as_json) {
    emit(j);
  } else {
    std::cout << element << '\n';
    std::cout << "family " << j["family"].get<std::string>() << " m=" << j["m"].get<std::string>()
              << " k=" << j["k"].get<std::string>() << " s=" << j["s"].get<std::string>()
              << " p=" << j["p"].get<std::string>() << '\n';
    if (verify) std::cout << (ok ? "verified" : "VERIFICATION FAILED") << " (oracle " << j["oracle"].get<std::string>() << ")\n";
  }
  return ok ? kOk : kBug;
}

// ---- census ---------------------------------------------------------------

struct CensusArgs {
  std::string mode = "enumerate";
  int lo = 0;
  int hi = 1;
  int max_nonzero = 16;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  std::string bound = "1000000000000";
  unsigned jobs = 1;
  bool symmetry = false;
  unsigned shard_index = 0;
  unsigned shard_count = 1;
  std::uint64_t spot_check_period = 1000;
  std::string format = "text";
};

int cmd_census(const CensusArgs& a, bool as_json) {
  grdet_census_config c;
  grdet_census_config_init(&c);
  c.mode = a.mode == "random" ? GRDET_CENSUS_RANDOM : GRDET_CENSUS_ENUMERATE;
  c.lo = a.lo;
  c.hi = a.hi;
  c.max_nonzero = a.max_nonzero;
  c.sample_count = a.samples;
  c.seed = a.seed;
  c.value_bound = a.bound.c_str();
  c.worker_count = a.jobs;
  c.symmetry_reduction = a.symmetry ? 1 : 0;
  c.shard_index = a.shard_index;
  c.shard_count = a.shard_count;
  c.spot_check_period = a.spot_check_period;

  Report r;
  check(grdet_census_run(&c, r.out()));
  grdet_census_format fmt = GRDET_CENSUS_TEXT;
  if (as_json || a.format == "json")
    fmt = GRDET_CENSUS_JSON;
  else if (a.format == "achieved")
    fmt = GRDET_CENSUS_ACHIEVED;
  char* raw = nullptr;
  check(grdet_census_format_report(r.get(), fmt, &raw));
  std::cout << take(raw);
  return grdet_census_violation_count(r.get()) == 0 ? kOk : kNo;
}

// ---- selftest -------------------------------------------------------------

int cmd_selftest(std::uint64_t seed, double scale, bool as_json) {
  Selftest s;
  check(grdet_selftest_run(seed, scale, s.out()));
  bool all = true;
  json suites = json::array();
  std::string first_failure;
  for (size_t i = 0; i < grdet_selftest_count(s.get()); ++i) {
    const std::string name = grdet_selftest_name(s.get(), i);
    const bool passed = grdet_selftest_passed(s.get(), i) != 0;
    const auto checks = grdet_selftest_checks(s.get(), i);
    const std::string ce = grdet_selftest_counterexample(s.get(), i);
    suites.push_back({{"name", name}, {"passed", passed}, {"checks", checks}, {"counterexample", ce}});
    if (!passed && all) first_failure = name + ": " + ce;
    all = all && passed;
    if (!as_json) std::cout << (passed ? "PASS " : "FAIL ") << name << " (" << checks << " checks)\n";
  }
  if (as_json)
    emit({{"passed", all}, {"suites", suites}});
  else if (!all)
    std::cout << "first counterexample: " << first_failure << '\n';
  return all ? kOk : kBug;
}

// ---- table ----------------------------------------------------------------

int cmd_table(const std::string& group_name, bool as_json) {
  const grdet_group group = parse_group(group_name);
  size_t order = 0;
  check(grdet_cayley_table(group, nullptr, 0, &order));
  std::vector<uint16_t> table(order * order);
  check(grdet_cayley_table(group, table.data(), table.size(), &order));
  if (as_json) {
    json rows = json::array();
    for (size_t g = 0; g < order; ++g)
      rows.push_back(std::vector<uint16_t>(table.begin() + g * order, table.begin() + (g + 1) * order));
    emit({{"group", group_name}, {"order", order}, {"table", rows}});
    return kOk;
  }
  for (size_t g = 0; g < order; ++g) {
    for (size_t h = 0; h < order; ++h) std::cout << (h ? " " : "") << table[g * order + h];
    std::cout << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer group determinants of SD16 and related 2-groups"};
  app.set_version_flag("--version", std::string(grdet_version()));
  app.require_subcommand(1, 1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string group = "sd16", element, number;
  bool factored = false, verify = false;
  std::uint64_t effort = 0, seed = 20240101;
  double scale = 1.0;
  CensusArgs census;

  auto* det = app.add_subcommand("det", "Group determinant of an element");
  det->add_option("--group", group, "sd16, sd32, sd64, m16, m32, m64 or d8")->capture_default_str();
  det->add_flag("--factored", factored, "Also print the factored form (checked against the determinant)");
  det->add_option("element", element, "a0,...,a{N-1};b0,...,b{N-1}")->required();

  auto* factor = app.add_subcommand("factor", "Factor an integer");
  factor->add_option("n", number)->required();
  factor->add_option("--effort", effort, "Pollard-rho iteration budget (0 = default)");

  auto* classify = app.add_subcommand("classify", "Is n an SD16 integer group determinant?");
  classify->add_option("n", number)->required();

  auto* witness = app.add_subcommand("witness", "SD16 element with determinant n");
  witness->add_option("n", number)->required();
  witness->add_flag("--verify", verify, "Recompute the determinant of the printed element");

  auto* cen = app.add_subcommand("census", "Sweep SD16 elements with small coefficients");
  cen->add_option("--mode", census.mode)->check(CLI::IsMember({"enumerate", "random"}))->capture_default_str();
  cen->add_option("--lo", census.lo)->capture_default_str();
  cen->add_option("--hi", census.hi)->capture_default_str();
  cen->add_option("--max-nonzero", census.max_nonzero)->capture_default_str();
  cen->add_option("--samples", census.samples)->capture_default_str();
  cen->add_option("--seed", census.seed)->capture_default_str();
  cen->add_option("--bound", census.bound, "Record only values with |D| <= bound")->capture_default_str();
  cen->add_option("--jobs", census.jobs)->capture_default_str();
  cen->add_flag("--symmetry", census.symmetry, "Validated orbit reduction (enumerate mode)");
  cen->add_option("--shard-index", census.shard_index)->capture_default_str();
  cen->add_option("--shard-count", census.shard_count)->capture_default_str();
  cen->add_option("--spot-check-period", census.spot_check_period)->capture_default_str();
  cen->add_option("--format", census.format)->check(CLI::IsMember({"text", "json", "achieved"}))->capture_default_str();

  auto* self = app.add_subcommand("selftest", "Reduced-scale invariant sweeps");
  self->add_option("--seed", seed)->capture_default_str();
  self->add_option("--scale", scale, "Sample-count multiplier")->capture_default_str();

  auto* table = app.add_subcommand("table", "Cayley table of a group");
  table->add_option("--group", group)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*det) return cmd_det(group, element, factored, as_json);
    if (*factor) return cmd_factor(number, effort, as_json);
    if (*classify) return cmd_classify(number, as_json);
    if (*witness) return cmd_witness(number, verify, as_json);
    if (*cen) return cmd_census(census, as_json);
    if (*self) return cmd_selftest(seed, scale, as_json);
    if (*table) return cmd_table(group, as_json);
  } catch (const Failure& f) {
    std::cerr << "error: " << grdet_status_name(f.status) << ": " << grdet_last_error() << '\n';
    return exit_code_for(f.status);
  }
  return kInternal;
}
