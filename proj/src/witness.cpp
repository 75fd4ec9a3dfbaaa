#include "grdet/witness.hpp"

#include "grdet/determinants.hpp"

namespace grdet {

namespace {

using Row = std::array<int, 8>;

// f and g are each const + m*M + k*K + s*S, coefficient of x^i at index i.
struct FamilyTable {
  Row f_const, f_m, f_k, f_s;
  Row g_const, g_m, g_k, g_s;
};

constexpr Row kZero{0, 0, 0, 0, 0, 0, 0, 0};
constexpr Row kPlusH{1, 1, 1, 1, 1, 1, 1, 1};
constexpr Row kMinusH{-1, -1, -1, -1, -1, -1, -1, -1};
// (1 - x^4) and x^2 (1 - x^4)
constexpr Row kOneMinusX4{1, 0, 0, 0, -1, 0, 0, 0};
constexpr Row kX2OneMinusX4{0, 0, 1, 0, 0, 0, -1, 0};
constexpr Row kNeg(const Row& r) {
  Row out{};
  for (std::size_t i = 0; i < 8; ++i) out[i] = -r[i];
  return out;
}

const FamilyTable& table_for(WitnessFamily family) {
  // (1+x+x^2+x^3-x^6-x^7 - mh) + y(1+x-x^3-x^4-x^5-x^7 - mh)
  static constexpr FamilyTable kEven4096m{
      {1, 1, 1, 1, 0, 0, -1, -1}, kMinusH, kZero, kZero,
      {1, 1, 0, -1, -1, -1, 0, -1}, kMinusH, kZero, kZero};
  // (1+x+x^2+x^3+x^4+x^5+x^6-x^7 + mh) + y(1+x-x^5+x^7 + mh)
  static constexpr FamilyTable kEven2048Odd{
      {1, 1, 1, 1, 1, 1, 1, -1}, kPlusH, kZero, kZero,
      {1, 1, 0, 0, 0, -1, 0, 1}, kPlusH, kZero, kZero};
  // ((1+x)(1+x^2) - mh) + y((1+x+x^2)(1-x^5) - mh)
  static constexpr FamilyTable kEven1024Minus{
      {1, 1, 1, 1, 0, 0, 0, 0}, kMinusH, kZero, kZero,
      {1, 1, 1, 0, 0, -1, -1, -1}, kMinusH, kZero, kZero};
  // (1+x+x^2+x^3+x^4-x^7 + mh) + y(1+x-x^3-x^4-x^5+x^7 + mh)
  static constexpr FamilyTable kEven1024Plus{
      {1, 1, 1, 1, 1, 0, 0, -1}, kPlusH, kZero, kZero,
      {1, 1, 0, -1, -1, -1, 0, 1}, kPlusH, kZero, kZero};
  // (1 + mh) + y mh
  static constexpr FamilyTable kOddOneMod16{
      {1, 0, 0, 0, 0, 0, 0, 0}, kPlusH, kZero, kZero,
      kZero, kPlusH, kZero, kZero};
  // (1+x+x^2+x^3+x^4-x^6 - mh) + y(1+x+x^5 - mh)
  static constexpr FamilyTable kOddNineMod16{
      {1, 1, 1, 1, 1, 0, -1, 0}, kMinusH, kZero, kZero,
      {1, 1, 0, 0, 0, 1, 0, 0}, kMinusH, kZero, kZero};
  // (x+x^2 - (k - s x^2)(1-x^4) + mh) + y(1+x+x^2 + (s + k x^2)(1-x^4) + mh)
  static constexpr FamilyTable kFiveModSixteen{
      {0, 1, 1, 0, 0, 0, 0, 0}, kPlusH, kNeg(kOneMinusX4), kX2OneMinusX4,
      {1, 1, 1, 0, 0, 0, 0, 0}, kPlusH, kX2OneMinusX4, kOneMinusX4};
  // (1+x + (s + k x^2)(1-x^4) - mh) + y(x + (k - s x^2)(1-x^4) - mh)
  static constexpr FamilyTable kThirteenModSixteen{
      {1, 1, 0, 0, 0, 0, 0, 0}, kMinusH, kX2OneMinusX4, kOneMinusX4,
      {0, 1, 0, 0, 0, 0, 0, 0}, kMinusH, kOneMinusX4, kNeg(kX2OneMinusX4)};

  switch (family) {
    case WitnessFamily::Even4096m: return kEven4096m;
    case WitnessFamily::Even2048Odd: return kEven2048Odd;
    case WitnessFamily::Even1024Minus: return kEven1024Minus;
    case WitnessFamily::Even1024Plus: return kEven1024Plus;
    case WitnessFamily::OddOneMod16: return kOddOneMod16;
    case WitnessFamily::OddNineMod16: return kOddNineMod16;
    case WitnessFamily::FiveModSixteen: return kFiveModSixteen;
    case WitnessFamily::ThirteenModSixteen: return kThirteenModSixteen;
  }
  throw InvalidArgument("unknown witness family");
}

BigInt exact_div(const BigInt& value, unsigned long divisor) {
  BigInt out;
  mpz_divexact_ui(out.get_mpz_t(), value.get_mpz_t(), divisor);
  return out;
}

WitnessResult verified_result(const BigInt& target, WitnessFamily family, const WitnessParams& params,
                              const BigInt& p) {
  WitnessResult result{target, build_family_element(family, params), family, params, p, false};
  const BigInt det = regular_determinant(result.element, GroupSpec::sd(4));
  if (det != target)
    throw VerificationFailed("witness for " + to_string(target) + " (family " +
                             std::string(family_name(family)) + ", m=" + to_string(params.m) +
                             ", k=" + to_string(params.k) + ", s=" + to_string(params.s) +
                             ") has determinant " + to_string(det));
  result.verified = true;
  return result;
}

}  // namespace

NotAchievable::NotAchievable(Verdict verdict)
    : Error(to_string(verdict.n) + " is " + std::string(achievability_name(verdict.achievable)) +
            " (" + std::string(reason_name(verdict.reason)) + ")"),
      verdict_(std::move(verdict)) {}

std::string_view family_name(WitnessFamily family) {
  switch (family) {
    case WitnessFamily::Even4096m: return "2^12*m";
    case WitnessFamily::Even2048Odd: return "2^11*(2m+1)";
    case WitnessFamily::Even1024Minus: return "2^10*(4m-1)";
    case WitnessFamily::Even1024Plus: return "2^10*(4m+1)";
    case WitnessFamily::OddOneMod16: return "16m+1";
    case WitnessFamily::OddNineMod16: return "16m-7";
    case WitnessFamily::FiveModSixteen: return "(16m+5)*p^2";
    case WitnessFamily::ThirteenModSixteen: return "(16m-3)*p^2";
  }
  return "?";
}

std::array<BigInt, 8> h_poly() {
  std::array<BigInt, 8> h;
  h.fill(1);
  return h;
}

GroupRingElement build_family_element(WitnessFamily family, const WitnessParams& params) {
  const FamilyTable& t = table_for(family);
  std::vector<BigInt> f(8), g(8);
  for (std::size_t i = 0; i < 8; ++i) {
    f[i] = t.f_const[i] + t.f_m[i] * params.m + t.f_k[i] * params.k + t.f_s[i] * params.s;
    g[i] = t.g_const[i] + t.g_m[i] * params.m + t.g_k[i] * params.k + t.g_s[i] * params.s;
  }
  return GroupRingElement(4, std::move(f), std::move(g));
}

BigInt family_value(WitnessFamily family, const BigInt& m, const BigInt& p) {
  switch (family) {
    case WitnessFamily::Even4096m: return 4096 * m;
    case WitnessFamily::Even2048Odd: return 2048 * (2 * m + 1);
    case WitnessFamily::Even1024Minus: return 1024 * (4 * m - 1);
    case WitnessFamily::Even1024Plus: return 1024 * (4 * m + 1);
    case WitnessFamily::OddOneMod16: return 16 * m + 1;
    case WitnessFamily::OddNineMod16: return 16 * m - 7;
    case WitnessFamily::FiveModSixteen: return (16 * m + 5) * p * p;
    case WitnessFamily::ThirteenModSixteen: return (16 * m - 3) * p * p;
  }
  throw InvalidArgument("unknown witness family");
}

WitnessResult witness_even(const BigInt& target) {
  if (mod_nonneg(target, 1024) != 0)
    throw NotMultipleOf1024(to_string(target) + " is not a multiple of 1024");
  const BigInt q = exact_div(target, 1024);
  WitnessParams params;
  WitnessFamily family;
  switch (mod_nonneg(q, 4)) {
    case 0:
      family = WitnessFamily::Even4096m;
      params.m = exact_div(q, 4);
      break;
    case 2:
      family = WitnessFamily::Even2048Odd;
      params.m = exact_div(BigInt(exact_div(q, 2) - 1), 2);
      break;
    case 1:
      family = WitnessFamily::Even1024Plus;
      params.m = exact_div(BigInt(q - 1), 4);
      break;
    default:
      family = WitnessFamily::Even1024Minus;
      params.m = exact_div(BigInt(q + 1), 4);
      break;
  }
  return verified_result(target, family, params, 1);
}

WitnessResult witness_odd_1mod8(const BigInt& target) {
  if (mod_nonneg(target, 8) != 1) throw BadResidue(to_string(target) + " is not 1 mod 8");
  WitnessParams params;
  if (mod_nonneg(target, 16) == 1) {
    params.m = exact_div(BigInt(target - 1), 16);
    return verified_result(target, WitnessFamily::OddOneMod16, params, 1);
  }
  params.m = exact_div(BigInt(target + 7), 16);
  return verified_result(target, WitnessFamily::OddNineMod16, params, 1);
}

WitnessResult witness_odd_5mod8(const BigInt& target, const BigInt& p) {
  if (!is_probable_prime(p)) throw BadPrime(to_string(p) + " is not prime");
  if (mod_nonneg(p, 8) != 3) throw BadResidue("p = " + to_string(p) + " is not 3 mod 8");
  const BigInt p2 = p * p;
  if (!mpz_divisible_p(target.get_mpz_t(), p2.get_mpz_t()))
    throw BadResidue("p^2 does not divide " + to_string(target));
  BigInt cofactor;
  mpz_divexact(cofactor.get_mpz_t(), target.get_mpz_t(), p2.get_mpz_t());
  if (mod_nonneg(cofactor, 8) != 5) throw BadResidue(to_string(target) + " / p^2 is not 5 mod 8");

  auto [u, v] = cornacchia2(p);
  // Pick the signs of U and V that land in the residue classes each family
  // is written for.
  auto with_residue = [](const BigInt& x, unsigned long r) { return mod_nonneg(x, 4) == r ? x : BigInt(-x); };
  WitnessParams params;
  if (mod_nonneg(cofactor, 16) == 5) {
    u = with_residue(u, 1);
    v = with_residue(v, 1);
    params.k = exact_div(BigInt(u - 1), 4);
    params.s = exact_div(BigInt(v - 1), 4);
    params.m = exact_div(BigInt(cofactor - 5), 16);
    return verified_result(target, WitnessFamily::FiveModSixteen, params, p);
  }
  u = with_residue(u, 1);
  v = with_residue(v, 3);
  params.s = exact_div(BigInt(u - 1), 4);
  params.k = exact_div(BigInt(v + 1), 4);
  params.m = exact_div(BigInt(cofactor + 3), 16);
  return verified_result(target, WitnessFamily::ThirteenModSixteen, params, p);
}

WitnessResult witness(const BigInt& target) {
  Verdict verdict = classify(target);
  if (verdict.achievable != Achievability::Achievable) throw NotAchievable(std::move(verdict));
  switch (verdict.reason) {
    case Reason::EvenMultipleOf1024: return witness_even(target);
    case Reason::OddOneMod8: return witness_odd_1mod8(target);
    case Reason::OddFiveWithP: return witness_odd_5mod8(target, *verdict.p);
    default: break;
  }
  throw VerificationFailed("classifier returned achievable with reason " +
                           std::string(reason_name(verdict.reason)));
}

}  // namespace grdet
