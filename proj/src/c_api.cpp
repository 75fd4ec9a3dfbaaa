#include "grdet/grdet.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grdet/census.hpp"
#include "grdet/determinants.hpp"
#include "grdet/error.hpp"
#include "grdet/group_ring.hpp"
#include "grdet/number_theory.hpp"
#include "grdet/selftest.hpp"
#include "grdet/witness.hpp"

struct grdet_element {
  grdet::GroupRingElement value;
};

struct grdet_factored {
  std::vector<std::pair<std::string, grdet::BigInt>> fields;
};

struct grdet_verdict {
  grdet::Verdict value;
};

struct grdet_factorization {
  grdet::Factorization value;
};

struct grdet_witness {
  grdet::WitnessResult value;
  grdet_element element;
};

struct grdet_census_report {
  grdet::CensusReport value;
};

struct grdet_selftest {
  std::vector<grdet::SuiteResult> suites;
};

namespace {

thread_local std::string last_error;

class NullArgument : public grdet::InvalidArgument {
 public:
  using grdet::InvalidArgument::InvalidArgument;
};

template <typename T>
void require(const T* pointer, const char* what) {
  if (pointer == nullptr) throw NullArgument(std::string(what) + " must not be null");
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

template <typename Fn>
grdet_status guarded(Fn&& fn) {
  try {
    fn();
    return GRDET_OK;
  } catch (const grdet::NotAchievable& ex) {
    last_error = ex.what();
    return GRDET_ERR_NOT_ACHIEVABLE;
  } catch (const grdet::ParseError& ex) {
    last_error = ex.what();
    return GRDET_ERR_PARSE;
  } catch (const grdet::InvalidArgument& ex) {
    last_error = ex.what();
    return GRDET_ERR_INVALID_ARGUMENT;
  } catch (const grdet::FormulaMismatch& ex) {
    last_error = ex.what();
    return GRDET_ERR_FORMULA_MISMATCH;
  } catch (const grdet::NonScalarProduct& ex) {
    last_error = ex.what();
    return GRDET_ERR_FORMULA_MISMATCH;
  } catch (const grdet::VerificationFailed& ex) {
    last_error = ex.what();
    return GRDET_ERR_VERIFICATION_FAILED;
  } catch (const std::exception& ex) {
    last_error = ex.what();
    return GRDET_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return GRDET_ERR_INTERNAL;
  }
}

grdet::GroupSpec to_spec(grdet_group group) {
  grdet::Family family;
  switch (group.family) {
    case GRDET_FAMILY_SD: family = grdet::Family::SD; break;
    case GRDET_FAMILY_M: family = grdet::Family::M; break;
    case GRDET_FAMILY_D: family = grdet::Family::D; break;
    default: throw grdet::InvalidArgument("unknown group family");
  }
  grdet::GroupSpec spec{family, group.n};
  grdet::check_group_spec(spec);
  return spec;
}

grdet_group from_spec(const grdet::GroupSpec& spec) {
  switch (spec.family) {
    case grdet::Family::SD: return {GRDET_FAMILY_SD, spec.n};
    case grdet::Family::M: return {GRDET_FAMILY_M, spec.n};
    case grdet::Family::D: return {GRDET_FAMILY_D, spec.n};
  }
  return {GRDET_FAMILY_SD, spec.n};
}

grdet::BigInt parse_integer(const char* text) {
  require(text, "integer text");
  return grdet::parse_bigint(text);
}

grdet::CensusConfig to_config(const grdet_census_config& c) {
  grdet::CensusConfig config;
  config.mode = c.mode == GRDET_CENSUS_RANDOM ? grdet::CensusMode::Random : grdet::CensusMode::Enumerate;
  config.lo = c.lo;
  config.hi = c.hi;
  config.max_nonzero = c.max_nonzero;
  config.sample_count = c.sample_count;
  config.seed = c.seed;
  if (c.value_bound != nullptr) config.value_bound = grdet::parse_bigint(c.value_bound);
  config.worker_count = c.worker_count;
  config.symmetry_reduction = c.symmetry_reduction != 0;
  config.shard_index = c.shard_index;
  config.shard_count = c.shard_count;
  config.spot_check_period = c.spot_check_period;
  config.verify_examples = c.verify_examples != 0;
  return config;
}

}  // namespace

extern "C" {

const char* grdet_version(void) { return "0.1.0"; }

const char* grdet_last_error(void) { return last_error.c_str(); }

const char* grdet_status_name(grdet_status status) {
  switch (status) {
    case GRDET_OK: return "ok";
    case GRDET_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GRDET_ERR_PARSE: return "parse error";
    case GRDET_ERR_NOT_ACHIEVABLE: return "not achievable";
    case GRDET_ERR_FORMULA_MISMATCH: return "formula mismatch";
    case GRDET_ERR_VERIFICATION_FAILED: return "verification failed";
    case GRDET_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void grdet_string_free(char* text) { std::free(text); }

grdet_status grdet_group_parse(const char* name, grdet_group* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = from_spec(grdet::parse_group(name));
  });
}

grdet_status grdet_group_name(grdet_group group, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = duplicate(to_spec(group).name());
  });
}

grdet_status grdet_cayley_table(grdet_group group, uint16_t* table, size_t capacity, size_t* order_out) {
  return guarded([&] {
    require(order_out, "order_out");
    const auto& cayley = grdet::cached_cayley_table(to_spec(group));
    const std::size_t order = cayley.order();
    *order_out = order;
    if (table == nullptr) return;
    if (capacity < order * order) throw grdet::InvalidArgument("table buffer too small");
    for (std::size_t g = 0; g < order; ++g)
      for (std::size_t h = 0; h < order; ++h) table[g * order + h] = static_cast<uint16_t>(cayley.product(g, h));
  });
}

grdet_status grdet_element_parse(const char* text, grdet_element** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new grdet_element{grdet::parse_element(text)};
  });
}

grdet_status grdet_element_identity(int n, grdet_element** out) {
  return guarded([&] {
    require(out, "out");
    *out = new grdet_element{grdet::gr_identity(n)};
  });
}

grdet_status grdet_element_multiply(const grdet_element* lhs, const grdet_element* rhs, grdet_group group,
                                    grdet_element** out) {
  return guarded([&] {
    require(lhs, "lhs");
    require(rhs, "rhs");
    require(out, "out");
    *out = new grdet_element{grdet::gr_multiply(lhs->value, rhs->value, to_spec(group).twist())};
  });
}

grdet_status grdet_element_format(const grdet_element* element, char** out) {
  return guarded([&] {
    require(element, "element");
    require(out, "out");
    *out = duplicate(grdet::format_element(element->value));
  });
}

size_t grdet_element_order(const grdet_element* element) { return element ? element->value.order() : 0; }

void grdet_element_free(grdet_element* element) { delete element; }

grdet_status grdet_determinant(const grdet_element* element, grdet_group group, char** out) {
  return guarded([&] {
    require(element, "element");
    require(out, "out");
    *out = duplicate(grdet::to_string(grdet::regular_determinant(element->value, to_spec(group))));
  });
}

grdet_status grdet_factored_compute(const grdet_element* element, grdet_group group, grdet_factored** out) {
  return guarded([&] {
    require(element, "element");
    require(out, "out");
    const grdet::GroupSpec spec = to_spec(group);
    const grdet::BigInt oracle = grdet::regular_determinant(element->value, spec);
    auto result = std::make_unique<grdet_factored>();
    auto& fields = result->fields;
    if (spec.family == grdet::Family::SD && spec.n == 4) {
      const auto f = grdet::sd16_factored(element->value);
      fields = {{"M", f.M},   {"A2", f.A2}, {"A3", f.A3}, {"U1", f.U1},
                {"V1", f.V1}, {"U2", f.U2}, {"V2", f.V2}, {"product", f.product}};
    } else if (spec.family == grdet::Family::SD) {
      const auto f = grdet::sd_general_factored(element->value);
      fields.emplace_back("M", f.M);
      for (std::size_t j = 0; j < f.A.size(); ++j) fields.emplace_back("A" + std::to_string(j + 2), f.A[j]);
      fields.emplace_back("product", f.product);
    } else if (spec.family == grdet::Family::M) {
      const auto f = grdet::m_general_factored(element->value);
      fields = {{"M1", f.M1}, {"A", f.A}, {"product", f.product}};
    } else {
      throw grdet::InvalidArgument("no factored formula for " + spec.name());
    }
    if (fields.back().second != oracle)
      throw grdet::FormulaMismatch("factored product " + grdet::to_string(fields.back().second) +
                                   " != oracle " + grdet::to_string(oracle) + " for " +
                                   grdet::format_element(element->value));
    *out = result.release();
  });
}

size_t grdet_factored_count(const grdet_factored* factored) { return factored ? factored->fields.size() : 0; }

const char* grdet_factored_name(const grdet_factored* factored, size_t index) {
  if (!factored || index >= factored->fields.size()) return nullptr;
  return factored->fields[index].first.c_str();
}

grdet_status grdet_factored_value(const grdet_factored* factored, size_t index, char** out) {
  return guarded([&] {
    require(factored, "factored");
    require(out, "out");
    if (index >= factored->fields.size()) throw grdet::InvalidArgument("field index out of range");
    *out = duplicate(grdet::to_string(factored->fields[index].second));
  });
}

void grdet_factored_free(grdet_factored* factored) { delete factored; }

grdet_status grdet_classify(const char* n, grdet_verdict** out) {
  return guarded([&] {
    require(out, "out");
    *out = new grdet_verdict{grdet::classify(parse_integer(n))};
  });
}

grdet_achievability grdet_verdict_achievability(const grdet_verdict* verdict) {
  if (!verdict) return GRDET_UNKNOWN;
  switch (verdict->value.achievable) {
    case grdet::Achievability::Achievable: return GRDET_ACHIEVABLE;
    case grdet::Achievability::NotAchievable: return GRDET_NOT_ACHIEVABLE;
    case grdet::Achievability::Unknown: return GRDET_UNKNOWN;
  }
  return GRDET_UNKNOWN;
}

grdet_reason grdet_verdict_reason(const grdet_verdict* verdict) {
  if (!verdict) return GRDET_REASON_UNKNOWN_INCOMPLETE_FACTORIZATION;
  return static_cast<grdet_reason>(static_cast<int>(verdict->value.reason));
}

grdet_status grdet_verdict_prime(const grdet_verdict* verdict, char** out) {
  return guarded([&] {
    require(verdict, "verdict");
    require(out, "out");
    *out = verdict->value.p ? duplicate(grdet::to_string(*verdict->value.p)) : nullptr;
  });
}

const char* grdet_reason_name(grdet_reason reason) {
  if (reason < GRDET_REASON_EVEN_MULTIPLE_OF_1024 || reason > GRDET_REASON_UNKNOWN_INCOMPLETE_FACTORIZATION)
    return "?";
  return grdet::reason_name(static_cast<grdet::Reason>(static_cast<int>(reason))).data();
}

const char* grdet_achievability_name(grdet_achievability value) {
  switch (value) {
    case GRDET_ACHIEVABLE: return "achievable";
    case GRDET_NOT_ACHIEVABLE: return "not achievable";
    case GRDET_UNKNOWN: return "unknown";
  }
  return "?";
}

void grdet_verdict_free(grdet_verdict* verdict) { delete verdict; }

grdet_status grdet_factorize(const char* n, uint64_t effort, grdet_factorization** out) {
  return guarded([&] {
    require(out, "out");
    *out = new grdet_factorization{
        grdet::factorize(parse_integer(n), effort == 0 ? grdet::kDefaultFactorEffort : effort)};
  });
}

int grdet_factorization_sign(const grdet_factorization* f) { return f ? f->value.sign : 0; }

int grdet_factorization_complete(const grdet_factorization* f) { return f && f->value.complete ? 1 : 0; }

size_t grdet_factorization_count(const grdet_factorization* f) { return f ? f->value.factors.size() : 0; }

grdet_status grdet_factorization_prime(const grdet_factorization* f, size_t index, char** out) {
  return guarded([&] {
    require(f, "factorization");
    require(out, "out");
    if (index >= f->value.factors.size()) throw grdet::InvalidArgument("factor index out of range");
    *out = duplicate(grdet::to_string(f->value.factors[index].first));
  });
}

unsigned grdet_factorization_exponent(const grdet_factorization* f, size_t index) {
  if (!f || index >= f->value.factors.size()) return 0;
  return f->value.factors[index].second;
}

size_t grdet_factorization_unfactored_count(const grdet_factorization* f) {
  return f ? f->value.unfactored.size() : 0;
}

grdet_status grdet_factorization_unfactored(const grdet_factorization* f, size_t index, char** out) {
  return guarded([&] {
    require(f, "factorization");
    require(out, "out");
    if (index >= f->value.unfactored.size()) throw grdet::InvalidArgument("cofactor index out of range");
    *out = duplicate(grdet::to_string(f->value.unfactored[index]));
  });
}

void grdet_factorization_free(grdet_factorization* f) { delete f; }

grdet_status grdet_legendre_minus2(const char* p, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = grdet::legendre_minus2(parse_integer(p));
  });
}

grdet_status grdet_cornacchia2(const char* p, char** u_out, char** v_out) {
  return guarded([&] {
    require(u_out, "u_out");
    require(v_out, "v_out");
    const auto rep = grdet::cornacchia2(parse_integer(p));
    std::string u = grdet::to_string(rep.U), v = grdet::to_string(rep.V);
    *u_out = duplicate(u);
    *v_out = duplicate(v);
  });
}

grdet_status grdet_witness_construct(const char* n, grdet_witness** out, grdet_verdict** verdict_out) {
  if (verdict_out) *verdict_out = nullptr;
  std::optional<grdet::Verdict> rejected;
  const grdet_status status = guarded([&] {
    require(out, "out");
    try {
      auto result = grdet::witness(parse_integer(n));
      grdet_element element{result.element};
      *out = new grdet_witness{std::move(result), std::move(element)};
    } catch (const grdet::NotAchievable& ex) {
      rejected = ex.verdict();
      throw;
    }
  });
  if (status == GRDET_ERR_NOT_ACHIEVABLE && verdict_out && rejected) *verdict_out = new grdet_verdict{*rejected};
  return status;
}

const grdet_element* grdet_witness_element(const grdet_witness* witness) {
  return witness ? &witness->element : nullptr;
}

const char* grdet_witness_family(const grdet_witness* witness) {
  return witness ? grdet::family_name(witness->value.family).data() : nullptr;
}

int grdet_witness_verified(const grdet_witness* witness) { return witness && witness->value.verified ? 1 : 0; }

grdet_status grdet_witness_param(const grdet_witness* witness, const char* name, char** out) {
  return guarded([&] {
    require(witness, "witness");
    require(name, "name");
    require(out, "out");
    const std::string key = name;
    const auto& w = witness->value;
    if (key == "m")
      *out = duplicate(grdet::to_string(w.params.m));
    else if (key == "k")
      *out = duplicate(grdet::to_string(w.params.k));
    else if (key == "s")
      *out = duplicate(grdet::to_string(w.params.s));
    else if (key == "p")
      *out = duplicate(grdet::to_string(w.p));
    else
      throw grdet::InvalidArgument("unknown witness parameter '" + key + "'");
  });
}

void grdet_witness_free(grdet_witness* witness) { delete witness; }

void grdet_census_config_init(grdet_census_config* config) {
  if (!config) return;
  const grdet::CensusConfig defaults;
  config->mode = GRDET_CENSUS_ENUMERATE;
  config->lo = defaults.lo;
  config->hi = defaults.hi;
  config->max_nonzero = defaults.max_nonzero;
  config->sample_count = defaults.sample_count;
  config->seed = defaults.seed;
  config->value_bound = nullptr;
  config->worker_count = defaults.worker_count;
  config->symmetry_reduction = defaults.symmetry_reduction ? 1 : 0;
  config->shard_index = defaults.shard_index;
  config->shard_count = defaults.shard_count;
  config->spot_check_period = defaults.spot_check_period;
  config->verify_examples = defaults.verify_examples ? 1 : 0;
}

grdet_status grdet_census_run(const grdet_census_config* config, grdet_census_report** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = new grdet_census_report{grdet::run_census(to_config(*config))};
  });
}

grdet_status grdet_census_merge(const grdet_census_report* a, const grdet_census_report* b,
                                grdet_census_report** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new grdet_census_report{grdet::merge_reports(a->value, b->value)};
  });
}

grdet_status grdet_census_format_report(const grdet_census_report* report, grdet_census_format format,
                                        char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    switch (format) {
      case GRDET_CENSUS_TEXT: *out = duplicate(grdet::format_report_text(report->value)); break;
      case GRDET_CENSUS_JSON: *out = duplicate(grdet::format_report_json(report->value)); break;
      case GRDET_CENSUS_ACHIEVED: *out = duplicate(grdet::format_achieved(report->value)); break;
      default: throw grdet::InvalidArgument("unknown census format");
    }
  });
}

size_t grdet_census_achieved_count(const grdet_census_report* report) {
  return report ? report->value.achieved.size() : 0;
}

size_t grdet_census_violation_count(const grdet_census_report* report) {
  return report ? report->value.violations.size() : 0;
}

uint64_t grdet_census_scanned(const grdet_census_report* report) {
  return report ? report->value.stats.scanned : 0;
}

void grdet_census_free(grdet_census_report* report) { delete report; }

grdet_status grdet_selftest_run(uint64_t seed, double scale, grdet_selftest** out) {
  return guarded([&] {
    require(out, "out");
    grdet::SelftestOptions options;
    if (seed != 0) options.seed = seed;
    if (scale > 0) options.scale = scale;
    *out = new grdet_selftest{grdet::run_selftest(options)};
  });
}

size_t grdet_selftest_count(const grdet_selftest* selftest) { return selftest ? selftest->suites.size() : 0; }

const char* grdet_selftest_name(const grdet_selftest* selftest, size_t index) {
  if (!selftest || index >= selftest->suites.size()) return nullptr;
  return selftest->suites[index].name.c_str();
}

int grdet_selftest_passed(const grdet_selftest* selftest, size_t index) {
  if (!selftest || index >= selftest->suites.size()) return 0;
  return selftest->suites[index].passed ? 1 : 0;
}

uint64_t grdet_selftest_checks(const grdet_selftest* selftest, size_t index) {
  if (!selftest || index >= selftest->suites.size()) return 0;
  return selftest->suites[index].checks;
}

const char* grdet_selftest_counterexample(const grdet_selftest* selftest, size_t index) {
  if (!selftest || index >= selftest->suites.size()) return nullptr;
  return selftest->suites[index].counterexample.c_str();
}

void grdet_selftest_free(grdet_selftest* selftest) { delete selftest; }

}  // extern "C"
