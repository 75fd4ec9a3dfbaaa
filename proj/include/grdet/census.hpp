#pragma once

// Exhaustive and random sweeps over SD16 group-ring elements with small
// coefficients. Every observed determinant is checked against the necessary
// conditions of the classification (odd values are 1 mod 4, even values are
// multiples of 2^10, values 5 mod 8 carry p^2 for a prime p = 3 mod 8 dividing
// A3) and recorded values are re-checked with the classifier.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "grdet/bigint.hpp"
#include "grdet/group_ring.hpp"

namespace grdet {

enum class CensusMode { Enumerate, Random };

struct CensusConfig {
  CensusMode mode = CensusMode::Enumerate;
  int lo = 0;
  int hi = 1;
  int max_nonzero = 16;              // enumeration only
  std::uint64_t sample_count = 0;    // random only
  std::uint64_t seed = 42;
  BigInt value_bound = BigInt("1000000000000");  // record only |D| <= bound
  unsigned worker_count = 1;
  bool symmetry_reduction = false;   // enumeration only
  unsigned shard_index = 0;          // this run covers partitions with
  unsigned shard_count = 1;          //   id % shard_count == shard_index
  std::uint64_t spot_check_period = 1000;
  bool verify_examples = true;
};

void validate_config(const CensusConfig& config);

struct AchievedValue {
  BigInt value;
  GroupRingElement example;  // minimal under element_less
  std::uint64_t count;
};

struct Violation {
  BigInt value;
  GroupRingElement element;
  std::string reason;
};

struct CensusStats {
  std::uint64_t scanned = 0;     // elements covered, orbit weights included
  std::uint64_t evaluated = 0;   // determinants actually computed
  std::uint64_t spot_checks = 0;
  std::uint64_t over_bound = 0;  // covered elements whose |D| exceeded the bound
  std::uint64_t unknown_verdicts = 0;
  std::size_t symmetry_order = 1;
  double wall_seconds = 0.0;
};

struct CensusReport {
  CensusConfig config;
  std::vector<AchievedValue> achieved;  // ascending by value
  std::vector<Violation> violations;    // ascending by (value, reason)
  CensusStats stats;

  static CensusReport empty(const CensusConfig& config);
};

CensusReport run_census(const CensusConfig& config);

// Throws InvalidArgument if the reports were produced under different range
// semantics.
CensusReport merge_reports(const CensusReport& a, const CensusReport& b);

// Indices (Cayley-table order) of the SD16 elements g whose left
// multiplication preserved the determinant on `trials` random elements.
std::vector<std::size_t> determinant_preserving_elements(std::uint64_t seed, int trials = 100);

// One "value<TAB>element<TAB>count" line per achieved value, with a header.
std::string format_achieved(const CensusReport& report);
std::string format_report_text(const CensusReport& report);
std::string format_report_json(const CensusReport& report);

}  // namespace grdet
