#include "grdet/census.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <exception>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "grdet/determinants.hpp"
#include "grdet/error.hpp"
#include "grdet/number_theory.hpp"

namespace grdet {

namespace {

constexpr std::size_t kOrder = 16;
constexpr std::size_t kPrefixLength = 2;
constexpr std::uint64_t kRandomChunk = 4096;
constexpr int kCoefficientLimit = 1000;

using Coeffs = std::array<int, kOrder>;

GroupRingElement to_element(const Coeffs& c) {
  std::vector<BigInt> flat(c.begin(), c.end());
  return GroupRingElement::from_flat(flat);
}

std::uint64_t coefficient_hash(const Coeffs& c) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int v : c) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ULL;
  }
  // final avalanche so that the low bits are usable for sampling
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return h;
}

// Empty optional if D satisfies every necessary condition.
std::optional<std::string> necessity_violation(const FactoredSD16& fac) {
  const BigInt& d = fac.product;
  if (mpz_even_p(d.get_mpz_t())) {
    if (mod_nonneg(d, 1024) != 0) return "even value not divisible by 2^10";
    return std::nullopt;
  }
  if (mod_nonneg(d, 4) != 1) return "odd value not 1 mod 4";
  if (mod_nonneg(d, 8) != 5) return std::nullopt;
  if (mod_nonneg(fac.A3, 8) != 3) return "value 5 mod 8 but A3 not 3 mod 8";
  const Factorization a3 = factorize(fac.A3);
  for (const auto& [p, e] : a3.factors) {
    if (mod_nonneg(p, 8) != 3) continue;
    const BigInt p2 = p * p;
    if (mpz_divisible_p(d.get_mpz_t(), p2.get_mpz_t())) return std::nullopt;
  }
  return "value 5 mod 8 without a prime p = 3 mod 8, p | A3, p^2 | value";
}

struct Partial {
  std::map<BigInt, AchievedValue> achieved;
  std::map<std::pair<BigInt, std::string>, GroupRingElement> violations;
  CensusStats stats;
};

void record_value(std::map<BigInt, AchievedValue>& achieved, const BigInt& value,
                  const GroupRingElement& example, std::uint64_t count) {
  auto it = achieved.find(value);
  if (it == achieved.end()) {
    achieved.emplace(value, AchievedValue{value, example, count});
    return;
  }
  it->second.count += count;
  if (element_less(example, it->second.example)) it->second.example = example;
}

void record_violation(std::map<std::pair<BigInt, std::string>, GroupRingElement>& violations,
                      const BigInt& value, const std::string& reason, const GroupRingElement& element) {
  auto key = std::make_pair(value, reason);
  auto it = violations.find(key);
  if (it == violations.end())
    violations.emplace(std::move(key), element);
  else if (element_less(element, it->second))
    it->second = element;
}

// Left multiplication by group elements as permutations of the flat
// coefficient vector: coefficient of h moves to g*h.
using Permutation = std::array<std::uint8_t, kOrder>;

std::vector<Permutation> symmetry_permutations(const std::vector<std::size_t>& elements) {
  const CayleyTable& table = cached_cayley_table(GroupSpec::sd(4));
  std::vector<Permutation> perms;
  for (std::size_t g : elements) {
    Permutation p{};
    for (std::size_t h = 0; h < kOrder; ++h) p[h] = static_cast<std::uint8_t>(table.product(g, h));
    perms.push_back(p);
  }
  return perms;
}

class Scanner {
 public:
  Scanner(const CensusConfig& config, const std::vector<Permutation>& symmetries)
      : config_(config), symmetries_(symmetries) {}

  void visit(const Coeffs& c) {
    std::uint64_t weight = 1;
    if (!symmetries_.empty()) {
      std::vector<Coeffs> images;
      images.reserve(symmetries_.size());
      for (const auto& perm : symmetries_) {
        Coeffs image{};
        for (std::size_t h = 0; h < kOrder; ++h) image[perm[h]] = c[h];
        if (image < c) return;  // not the orbit's canonical representative
        images.push_back(image);
      }
      std::sort(images.begin(), images.end());
      weight = static_cast<std::uint64_t>(std::unique(images.begin(), images.end()) - images.begin());
    }

    const GroupRingElement element = to_element(c);
    const FactoredSD16 fac = sd16_factored(element);
    partial_.stats.scanned += weight;
    partial_.stats.evaluated += 1;

    if (coefficient_hash(c) % config_.spot_check_period == 0) {
      partial_.stats.spot_checks += 1;
      const BigInt oracle = regular_determinant(element, GroupSpec::sd(4));
      if (oracle != fac.product)
        throw FormulaMismatch("factored determinant " + to_string(fac.product) + " != oracle " +
                              to_string(oracle) + " for " + format_element(element));
    }

    if (auto reason = necessity_violation(fac)) record_violation(partial_.violations, fac.product, *reason, element);

    if (abs(fac.product) <= config_.value_bound)
      record_value(partial_.achieved, fac.product, element, weight);
    else
      partial_.stats.over_bound += weight;
  }

  Partial& partial() { return partial_; }

 private:
  const CensusConfig& config_;
  const std::vector<Permutation>& symmetries_;
  Partial partial_;
};

// Depth-first enumeration of positions [pos, 16) with a nonzero budget.
void enumerate_from(Coeffs& c, std::size_t pos, int budget, const CensusConfig& config, Scanner& scanner) {
  if (pos == kOrder) {
    scanner.visit(c);
    return;
  }
  for (int v = config.lo; v <= config.hi; ++v) {
    if (v != 0 && budget == 0) continue;
    c[pos] = v;
    enumerate_from(c, pos + 1, v != 0 ? budget - 1 : budget, config, scanner);
  }
  c[pos] = 0;
}

// Prefixes of the first kPrefixLength coefficients, in a fixed order; these
// are the static partition units.
std::vector<Coeffs> enumeration_units(const CensusConfig& config) {
  std::vector<Coeffs> units;
  Coeffs c{};
  auto rec = [&](auto&& self, std::size_t pos, int budget) -> void {
    if (pos == kPrefixLength) {
      units.push_back(c);
      return;
    }
    for (int v = config.lo; v <= config.hi; ++v) {
      if (v != 0 && budget == 0) continue;
      c[pos] = v;
      self(self, pos + 1, v != 0 ? budget - 1 : budget);
    }
    c[pos] = 0;
  };
  rec(rec, 0, config.max_nonzero);
  return units;
}

int prefix_nonzero(const Coeffs& c) {
  int count = 0;
  for (std::size_t i = 0; i < kPrefixLength; ++i) count += c[i] != 0;
  return count;
}

void merge_partial(Partial& into, Partial&& from) {
  for (auto& [value, entry] : from.achieved) record_value(into.achieved, value, entry.example, entry.count);
  for (auto& [key, element] : from.violations) record_violation(into.violations, key.first, key.second, element);
  into.stats.scanned += from.stats.scanned;
  into.stats.evaluated += from.stats.evaluated;
  into.stats.spot_checks += from.stats.spot_checks;
  into.stats.over_bound += from.stats.over_bound;
}

void check_compatible(const CensusConfig& a, const CensusConfig& b) {
  const bool same = a.mode == b.mode && a.lo == b.lo && a.hi == b.hi && a.value_bound == b.value_bound &&
                    a.symmetry_reduction == b.symmetry_reduction &&
                    (a.mode == CensusMode::Random || a.max_nonzero == b.max_nonzero);
  if (!same) throw InvalidArgument("census reports come from incompatible configurations");
}

}  // namespace

void validate_config(const CensusConfig& config) {
  if (config.lo > config.hi) throw InvalidArgument("census: lo must not exceed hi");
  if (config.lo < -kCoefficientLimit || config.hi > kCoefficientLimit)
    throw InvalidArgument("census: coefficient range must lie within [-1000, 1000]");
  if (config.max_nonzero < 0 || config.max_nonzero > static_cast<int>(kOrder))
    throw InvalidArgument("census: max_nonzero must be in [0, 16]");
  if (config.mode == CensusMode::Enumerate && config.lo > 0 && config.max_nonzero < static_cast<int>(kOrder))
    throw InvalidArgument("census: a range excluding 0 forces 16 nonzero coefficients");
  if (config.mode == CensusMode::Random && config.symmetry_reduction)
    throw InvalidArgument("census: symmetry reduction applies to enumeration mode only");
  if (config.worker_count == 0) throw InvalidArgument("census: worker_count must be positive");
  if (config.shard_count == 0 || config.shard_index >= config.shard_count)
    throw InvalidArgument("census: shard_index must be below shard_count");
  if (config.spot_check_period == 0) throw InvalidArgument("census: spot_check_period must be positive");
  if (sgn(config.value_bound) < 0) throw InvalidArgument("census: value_bound must be nonnegative");
}

CensusReport CensusReport::empty(const CensusConfig& config) {
  CensusReport report;
  report.config = config;
  return report;
}

std::vector<std::size_t> determinant_preserving_elements(std::uint64_t seed, int trials) {
  const GroupSpec sd16 = GroupSpec::sd(4);
  const CayleyTable& table = cached_cayley_table(sd16);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Coeffs> samples(static_cast<std::size_t>(trials));
  std::vector<BigInt> dets;
  for (auto& s : samples) {
    for (auto& v : s) v = coeff(rng);
    dets.push_back(regular_determinant(to_element(s), sd16));
  }
  std::vector<std::size_t> kept;
  for (std::size_t g = 0; g < kOrder; ++g) {
    bool preserves = true;
    for (std::size_t t = 0; t < samples.size() && preserves; ++t) {
      Coeffs image{};
      for (std::size_t h = 0; h < kOrder; ++h) image[table.product(g, h)] = samples[t][h];
      preserves = regular_determinant(to_element(image), sd16) == dets[t];
    }
    if (preserves) kept.push_back(g);
  }
  // Orbit weights are only exact if the kept set is a subgroup.
  for (std::size_t a : kept)
    for (std::size_t b : kept)
      if (!std::binary_search(kept.begin(), kept.end(), table.product(a, b))) return {CayleyTable::identity()};
  return kept;
}

CensusReport run_census(const CensusConfig& config) {
  validate_config(config);
  const auto start = std::chrono::steady_clock::now();

  std::vector<Permutation> symmetries;
  if (config.symmetry_reduction) symmetries = symmetry_permutations(determinant_preserving_elements(config.seed));

  const unsigned workers = config.worker_count;
  std::vector<Partial> partials(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto run_worker = [&](unsigned worker) {
    try {
      Scanner scanner(config, symmetries);
      if (config.mode == CensusMode::Enumerate) {
        const auto units = enumeration_units(config);
        std::size_t mine = 0;
        for (std::size_t u = 0; u < units.size(); ++u) {
          if (u % config.shard_count != config.shard_index) continue;
          if (mine++ % workers != worker) continue;
          Coeffs c = units[u];
          enumerate_from(c, kPrefixLength, config.max_nonzero - prefix_nonzero(c), config, scanner);
        }
      } else {
        const std::uint64_t chunks = (config.sample_count + kRandomChunk - 1) / kRandomChunk;
        std::uint64_t mine = 0;
        for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) {
          if (chunk % config.shard_count != config.shard_index) continue;
          if (mine++ % workers != worker) continue;
          std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                            static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
          std::mt19937_64 rng(seq);
          std::uniform_int_distribution<int> coeff(config.lo, config.hi);
          const std::uint64_t end = std::min(config.sample_count, (chunk + 1) * kRandomChunk);
          for (std::uint64_t i = chunk * kRandomChunk; i < end; ++i) {
            Coeffs c;
            for (auto& v : c) v = coeff(rng);
            scanner.visit(c);
          }
        }
      }
      partials[worker] = std::move(scanner.partial());
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_worker, w);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  Partial total;
  for (auto& p : partials) merge_partial(total, std::move(p));

  CensusReport report = CensusReport::empty(config);
  report.stats = total.stats;
  report.stats.symmetry_order = std::max<std::size_t>(symmetries.size(), 1);
  for (auto& [value, entry] : total.achieved) {
    const Verdict verdict = classify(value);
    if (verdict.achievable == Achievability::NotAchievable)
      record_violation(total.violations, value, "classifier rejects observed value (" +
                                                    std::string(reason_name(verdict.reason)) + ")",
                       entry.example);
    else if (verdict.achievable == Achievability::Unknown)
      report.stats.unknown_verdicts += 1;
    if (config.verify_examples && regular_determinant(entry.example, GroupSpec::sd(4)) != value)
      throw FormulaMismatch("stored example for " + to_string(value) + " does not re-verify");
    report.achieved.push_back(std::move(entry));
  }
  for (auto& [key, element] : total.violations) report.violations.push_back({key.first, element, key.second});

  report.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CensusReport merge_reports(const CensusReport& a, const CensusReport& b) {
  check_compatible(a.config, b.config);
  Partial total;
  for (const auto* r : {&a, &b}) {
    for (const auto& entry : r->achieved) record_value(total.achieved, entry.value, entry.example, entry.count);
    for (const auto& v : r->violations) record_violation(total.violations, v.value, v.reason, v.element);
  }
  CensusReport out = CensusReport::empty(a.config);
  for (auto& [value, entry] : total.achieved) out.achieved.push_back(std::move(entry));
  for (auto& [key, element] : total.violations) out.violations.push_back({key.first, element, key.second});
  out.stats.scanned = a.stats.scanned + b.stats.scanned;
  out.stats.evaluated = a.stats.evaluated + b.stats.evaluated;
  out.stats.spot_checks = a.stats.spot_checks + b.stats.spot_checks;
  out.stats.over_bound = a.stats.over_bound + b.stats.over_bound;
  out.stats.unknown_verdicts = a.stats.unknown_verdicts + b.stats.unknown_verdicts;
  out.stats.symmetry_order = std::max(a.stats.symmetry_order, b.stats.symmetry_order);
  out.stats.wall_seconds = a.stats.wall_seconds + b.stats.wall_seconds;
  return out;
}

std::string format_achieved(const CensusReport& report) {
  std::ostringstream out;
  out << "value\telement\tcount\n";
  for (const auto& entry : report.achieved)
    out << to_string(entry.value) << '\t' << format_element(entry.example) << '\t' << entry.count << '\n';
  return out.str();
}

std::string format_report_text(const CensusReport& report) {
  const auto& c = report.config;
  const auto& s = report.stats;
  std::ostringstream out;
  out << "# grdet census\n";
  out << "# mode " << (c.mode == CensusMode::Enumerate ? "enumerate" : "random") << " range [" << c.lo << ','
      << c.hi << ']';
  if (c.mode == CensusMode::Enumerate)
    out << " max_nonzero " << c.max_nonzero;
  else
    out << " samples " << c.sample_count << " seed " << c.seed;
  out << " value_bound " << to_string(c.value_bound) << '\n';
  out << "# scanned " << s.scanned << " evaluated " << s.evaluated << " spot_checks " << s.spot_checks
      << " over_bound " << s.over_bound << " unknown_verdicts " << s.unknown_verdicts << " symmetry_order "
      << s.symmetry_order << " wall_seconds " << s.wall_seconds << '\n';
  out << "# achieved " << report.achieved.size() << " violations " << report.violations.size() << '\n';
  out << format_achieved(report);
  for (const auto& v : report.violations)
    out << "violation\t" << to_string(v.value) << '\t' << format_element(v.element) << '\t' << v.reason << '\n';
  return out.str();
}

std::string format_report_json(const CensusReport& report) {
  const auto& c = report.config;
  const auto& s = report.stats;
  nlohmann::ordered_json j;
  j["mode"] = c.mode == CensusMode::Enumerate ? "enumerate" : "random";
  j["range"] = {c.lo, c.hi};
  if (c.mode == CensusMode::Enumerate)
    j["max_nonzero"] = c.max_nonzero;
  else {
    j["samples"] = c.sample_count;
    j["seed"] = c.seed;
  }
  j["value_bound"] = to_string(c.value_bound);
  j["stats"] = {{"scanned", s.scanned},         {"evaluated", s.evaluated},
                {"spot_checks", s.spot_checks}, {"over_bound", s.over_bound},
                {"unknown_verdicts", s.unknown_verdicts}, {"symmetry_order", s.symmetry_order},
                {"wall_seconds", s.wall_seconds}};
  auto& achieved = j["achieved"] = nlohmann::ordered_json::array();
  for (const auto& entry : report.achieved)
    achieved.push_back(
        {{"value", to_string(entry.value)}, {"element", format_element(entry.example)}, {"count", entry.count}});
  auto& violations = j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"value", to_string(v.value)}, {"element", format_element(v.element)}, {"reason", v.reason}});
  return j.dump(2) + "\n";
}

}  // namespace grdet
