#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "grdet/bigint.hpp"
#include "grdet/error.hpp"
#include "grdet/group_ring.hpp"
#include "grdet/number_theory.hpp"

namespace grdet {

// The eight explicit SD16 constructions, named by the value they produce.
enum class WitnessFamily {
  Even4096m,      // 2^12 m
  Even2048Odd,    // 2^11 (2m+1)
  Even1024Minus,  // 2^10 (4m-1)
  Even1024Plus,   // 2^10 (4m+1)
  OddOneMod16,    // 16m + 1
  OddNineMod16,   // 16m - 7
  FiveModSixteen,     // (16m + 5) p^2, U = 4k+1, V = 4s+1
  ThirteenModSixteen  // (16m - 3) p^2, U = 4s+1, V = 4k-1
};

std::string_view family_name(WitnessFamily family);

struct WitnessParams {
  BigInt m = 0;
  BigInt k = 0;
  BigInt s = 0;
};

struct WitnessResult {
  BigInt target;
  GroupRingElement element;
  WitnessFamily family;
  WitnessParams params;
  BigInt p = 1;  // prime for the 5 mod 8 families, 1 otherwise
  bool verified = false;
};

class NotAchievable : public Error {
 public:
  explicit NotAchievable(Verdict verdict);
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

// (x+1)(x^2+1)(x^4+1) = 1 + x + ... + x^7.
std::array<BigInt, 8> h_poly();

// The SD16 element of `family` at the given parameters, straight from the
// coefficient tables.
GroupRingElement build_family_element(WitnessFamily family, const WitnessParams& params);

// The determinant each family is claimed to produce (p = 1 for the
// families that do not involve a prime).
BigInt family_value(WitnessFamily family, const BigInt& m, const BigInt& p = 1);

// All constructors verify against the regular-representation oracle and
// throw VerificationFailed on mismatch.
WitnessResult witness_even(const BigInt& target);
WitnessResult witness_odd_1mod8(const BigInt& target);
WitnessResult witness_odd_5mod8(const BigInt& target, const BigInt& p);

// Dispatches on classify(target); throws NotAchievable when the value is
// not (or not provably) a determinant.
WitnessResult witness(const BigInt& target);

}  // namespace grdet
