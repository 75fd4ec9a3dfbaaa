#include "grdet/bigint.hpp"

#include <cctype>

#include "grdet/error.hpp"

namespace grdet {

BigInt parse_bigint(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(begin, end - begin);

  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  BigInt value(std::string(body), 10);
  if (negative) value = -value;
  return value;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

unsigned long mod_nonneg(const BigInt& value, unsigned long modulus) {
  // mpz_fdiv_ui always returns the nonnegative residue.
  return mpz_fdiv_ui(value.get_mpz_t(), modulus);
}

std::uint32_t two_adic_valuation(const BigInt& value) {
  if (sgn(value) == 0) return UINT32_MAX;
  return static_cast<std::uint32_t>(mpz_scan1(value.get_mpz_t(), 0));
}

}  // namespace grdet
