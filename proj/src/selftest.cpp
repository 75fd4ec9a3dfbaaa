#include "grdet/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "grdet/number_theory.hpp"
#include "grdet/witness.hpp"

namespace grdet {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  // Records one check; keeps only the first counterexample.
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (ok || !result_.passed) return;
    result_.passed = false;
    result_.counterexample = describe();
  }

  bool failed() const { return !result_.passed; }
  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::uint64_t scaled(double scale, std::uint64_t base) {
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(scale * static_cast<double>(base))));
}

GroupRingElement random_element(std::mt19937_64& rng, int n, int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  const std::size_t half = std::size_t{1} << (n - 1);
  std::vector<BigInt> a(half), b(half);
  for (auto& v : a) v = coeff(rng);
  for (auto& v : b) v = coeff(rng);
  return GroupRingElement(n, std::move(a), std::move(b));
}

SuiteResult factored_vs_oracle(const SelftestOptions& options) {
  Suite suite("factored-vs-oracle");
  const GroupSpec sd16 = GroupSpec::sd(4);
  auto check = [&](const GroupRingElement& e) {
    const BigInt oracle = regular_determinant(e, sd16);
    const FactoredSD16 fac = options.sd16(e);
    suite.expect(fac.product == oracle, [&] {
      return format_element(e) + ": factored " + to_string(fac.product) + " (M=" + to_string(fac.M) +
             ", A2=" + to_string(fac.A2) + ", A3=" + to_string(fac.A3) + ") != oracle " + to_string(oracle);
    });
  };
  // every 0/1 element with at most three nonzero coefficients
  for (unsigned mask = 0; mask < (1u << 16) && !suite.failed(); ++mask) {
    if (__builtin_popcount(mask) > 3) continue;
    std::vector<BigInt> flat(16);
    for (int i = 0; i < 16; ++i) flat[i] = (mask >> i) & 1u;
    check(GroupRingElement::from_flat(flat));
  }
  std::mt19937_64 rng(options.seed);
  const auto samples = scaled(options.scale, 2000);
  for (std::uint64_t i = 0; i < samples && !suite.failed(); ++i) check(random_element(rng, 4, 9));
  return suite.take();
}

SuiteResult factored_invariants(const SelftestOptions& options) {
  Suite suite("factored-invariants");
  std::mt19937_64 rng(options.seed + 1);
  const auto samples = scaled(options.scale, 5000);
  for (std::uint64_t i = 0; i < samples && !suite.failed(); ++i) {
    const auto e = random_element(rng, 4, 9);
    const auto fac = options.sd16(e);
    const BigInt du = fac.U1 - fac.U2, dv = fac.V1 - fac.V2;
    const BigInt& d = fac.product;
    suite.expect(sgn(fac.A3) >= 0 && fac.A3 == du * du + 2 * dv * dv,
                 [&] { return format_element(e) + ": A3 is not (U1-U2)^2 + 2(V1-V2)^2"; });
    if (mpz_odd_p(d.get_mpz_t())) {
      suite.expect(mod_nonneg(d, 4) == 1, [&] { return format_element(e) + ": odd determinant not 1 mod 4"; });
      if (mod_nonneg(d, 8) == 5)
        suite.expect(mod_nonneg(fac.A3, 8) == 3,
                     [&] { return format_element(e) + ": determinant 5 mod 8 but A3 not 3 mod 8"; });
    } else {
      suite.expect(mod_nonneg(d, 1024) == 0,
                   [&] { return format_element(e) + ": even determinant not divisible by 2^10"; });
    }
  }
  return suite.take();
}

SuiteResult cross_group(const SelftestOptions& options) {
  Suite suite("cross-group");
  std::mt19937_64 rng(options.seed + 2);
  for (std::uint64_t i = 0; i < scaled(options.scale, 200) && !suite.failed(); ++i) {
    const auto e = random_element(rng, 4, 3);
    const auto [factored, oracle] = dihedral_cross_check(e);
    suite.expect(factored == oracle, [&] { return format_element(e) + ": D8 cross-check differs"; });
    const auto m16 = m16_factored(e);
    suite.expect(m16.product == regular_determinant(e, GroupSpec::modular(4)),
                 [&] { return format_element(e) + ": M16 factored != oracle"; });
  }
  for (std::uint64_t i = 0; i < scaled(options.scale, 30) && !suite.failed(); ++i) {
    const auto e = random_element(rng, 5, 3);
    suite.expect(sd_general_factored(e).product == regular_determinant(e, GroupSpec::sd(5)),
                 [&] { return format_element(e) + ": SD32 factored != oracle"; });
  }
  return suite.take();
}

SuiteResult witness_round_trips(const SelftestOptions&) {
  Suite suite("witness-round-trips");
  auto attempt = [&](const BigInt& target) {
    try {
      const auto w = witness(target);
      suite.expect(w.verified && regular_determinant(w.element, GroupSpec::sd(4)) == target,
                   [&] { return "witness for " + to_string(target) + " does not verify"; });
    } catch (const std::exception& ex) {
      suite.expect(false, [&] { return "witness for " + to_string(target) + ": " + ex.what(); });
    }
  };
  for (long m = -3; m <= 3; ++m) {
    for (auto family : {WitnessFamily::Even4096m, WitnessFamily::Even2048Odd, WitnessFamily::Even1024Minus,
                        WitnessFamily::Even1024Plus, WitnessFamily::OddOneMod16, WitnessFamily::OddNineMod16})
      attempt(family_value(family, m));
    for (long p : {3, 11, 19}) {
      attempt(family_value(WitnessFamily::FiveModSixteen, m, p));
      attempt(family_value(WitnessFamily::ThirteenModSixteen, m, p));
    }
  }
  return suite.take();
}

SuiteResult quadratic_forms(const SelftestOptions& options) {
  Suite suite("cornacchia");
  const auto limit = static_cast<std::uint32_t>(scaled(options.scale, 2000));
  for (std::uint32_t p : primes_below(limit)) {
    if (p == 2) continue;
    // Euler's criterion: (-2)^((p-1)/2) mod p.
    BigInt euler;
    const BigInt base = BigInt(p) - 2;
    mpz_powm_ui(euler.get_mpz_t(), base.get_mpz_t(), (p - 1) / 2, BigInt(p).get_mpz_t());
    const int expected = euler == 1 ? 1 : -1;
    suite.expect(legendre_minus2(p) == expected, [&] { return "legendre_minus2(" + std::to_string(p) + ")"; });
    if (p % 8 != 3) continue;
    const auto [u, v] = cornacchia2(p);
    suite.expect(u > 0 && v > 0 && mpz_odd_p(u.get_mpz_t()) && mpz_odd_p(v.get_mpz_t()) && u * u + 2 * v * v == p,
                 [&] { return "cornacchia2(" + std::to_string(p) + ") = (" + to_string(u) + "," + to_string(v) + ")"; });
  }
  return suite.take();
}

SuiteResult classifier(const SelftestOptions& options) {
  Suite suite("classify");
  const auto limit = static_cast<long>(scaled(options.scale, 3000));
  const auto primes = primes_below(static_cast<std::uint32_t>(limit) + 1);
  for (long n = -limit; n <= limit; ++n) {
    if (n % 2 == 0) continue;
    const long r = ((n % 8) + 8) % 8;
    bool expected = r == 1;
    if (r == 5) {
      for (std::uint32_t p : primes) {
        if (static_cast<long>(p) * p > std::labs(n)) break;
        if (p % 8 == 3 && n % (static_cast<long>(p) * p) == 0) expected = true;
      }
    }
    const auto verdict = classify(n);
    suite.expect((verdict.achievable == Achievability::Achievable) == expected,
                 [&] { return "classify(" + std::to_string(n) + ") = " + std::string(reason_name(verdict.reason)); });
  }
  return suite.take();
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
  std::vector<SuiteResult> results;
  results.push_back(factored_vs_oracle(options));
  results.push_back(factored_invariants(options));
  results.push_back(cross_group(options));
  results.push_back(witness_round_trips(options));
  results.push_back(quadratic_forms(options));
  results.push_back(classifier(options));
  return results;
}

}  // namespace grdet
