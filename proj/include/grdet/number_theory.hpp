#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "grdet/bigint.hpp"

namespace grdet {

// Deterministic for |n| < 2^64 (fixed 12-prime base set); above that, 32
// Miller-Rabin rounds with bases from a fixed-seed generator.
bool is_probable_prime(const BigInt& n);

// (-2/p) for an odd prime p: +1 iff p = 1 or 3 mod 8.
int legendre_minus2(const BigInt& p);

struct QuadraticRep {
  BigInt U, V;
};

// U, V > 0 odd with U^2 + 2 V^2 = p, for a prime p = 3 mod 8.
QuadraticRep cornacchia2(const BigInt& p);

struct Factorization {
  BigInt n;
  int sign = 1;
  std::vector<std::pair<BigInt, unsigned>> factors;  // primes strictly increasing
  std::vector<BigInt> unfactored;                    // composite cofactors left over
  bool complete = true;
};

inline constexpr std::uint64_t kDefaultFactorEffort = 2'000'000;

// Trial division by primes below 10^6, then Pollard-rho (Brent) with a
// total iteration budget of `effort`.
Factorization factorize(const BigInt& n, std::uint64_t effort = kDefaultFactorEffort);

enum class Achievability { Achievable, NotAchievable, Unknown };

enum class Reason {
  EvenMultipleOf1024,
  EvenNotMultiple,
  OddOneMod8,
  OddFiveWithP,
  OddFiveNoP,
  OddThreeMod4,
  UnknownIncompleteFactorization,
};

struct Verdict {
  BigInt n;
  Achievability achievable;
  Reason reason;
  std::optional<BigInt> p;  // set for OddFiveWithP
};

// Whether n is an SD16 integer group determinant.
Verdict classify(const BigInt& n, std::uint64_t effort = kDefaultFactorEffort);

std::string_view reason_name(Reason reason);
std::string_view achievability_name(Achievability value);

// Primes below `limit` by a plain sieve.
std::vector<std::uint32_t> primes_below(std::uint32_t limit);

}  // namespace grdet
