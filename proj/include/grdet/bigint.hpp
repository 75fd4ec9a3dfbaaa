#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace grdet {

using BigInt = mpz_class;

// Parses a decimal integer. Surrounding whitespace and a leading '+' are
// accepted; anything else throws ParseError.
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& value);

// Least nonnegative residue of value mod modulus (modulus > 0).
unsigned long mod_nonneg(const BigInt& value, unsigned long modulus);

// 2-adic valuation; v2(0) is reported as UINT32_MAX.
std::uint32_t two_adic_valuation(const BigInt& value);

inline BigInt big(long value) { return BigInt(value); }

}  // namespace grdet
