#include "grdet/number_theory.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "grdet/error.hpp"

namespace grdet {

namespace {

constexpr std::uint32_t kTrialDivisionLimit = 1'000'000;

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = primes_below(kTrialDivisionLimit);
  return primes;
}

bool miller_rabin_round(const BigInt& n, const BigInt& n_minus_1, const BigInt& odd_part,
                        std::uint32_t twos, const BigInt& base) {
  BigInt x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), odd_part.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (std::uint32_t r = 1; r < twos; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0 once the
// iteration budget is spent.
BigInt pollard_brent(const BigInt& n, std::uint64_t& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; budget > 0; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    const std::uint64_t batch = 128;
    std::uint64_t r = 1;
    auto step = [&](BigInt& v) {
      v = (v * v + c) % n;
    };
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        const std::uint64_t limit = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < limit; ++i) {
          step(y);
          q = (q * abs(x - y)) % n;
        }
        budget = budget > limit ? budget - limit : 0;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += limit;
      }
      r *= 2;
    }
    if (g == n) {
      // Batch overshot; replay one step at a time from the saved point.
      do {
        step(ys);
        BigInt diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

}  // namespace

std::vector<std::uint32_t> primes_below(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit <= 2) return primes;
  std::vector<bool> composite(limit);
  for (std::uint32_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j < limit; j += i) composite[j] = true;
  }
  return primes;
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  static const unsigned long kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned long p : kSmall) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  const BigInt n_minus_1 = n - 1;
  BigInt odd_part = n_minus_1;
  const auto twos = static_cast<std::uint32_t>(mpz_scan1(odd_part.get_mpz_t(), 0));
  mpz_fdiv_q_2exp(odd_part.get_mpz_t(), odd_part.get_mpz_t(), twos);

  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    for (unsigned long base : kSmall)
      if (!miller_rabin_round(n, n_minus_1, odd_part, twos, BigInt(base))) return false;
    return true;
  }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (int round = 0; round < 32; ++round) {
    // base in [2, n-2]
    BigInt base = BigInt(static_cast<unsigned long>(rng())) % (n - 3) + 2;
    if (!miller_rabin_round(n, n_minus_1, odd_part, twos, base)) return false;
  }
  return true;
}

int legendre_minus2(const BigInt& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_probable_prime(p))
    throw BadPrime("legendre_minus2 needs an odd prime, got " + to_string(p));
  const unsigned long r = mod_nonneg(p, 8);
  return (r == 1 || r == 3) ? 1 : -1;
}

QuadraticRep cornacchia2(const BigInt& p) {
  if (!is_probable_prime(p)) throw BadPrime("cornacchia2 needs a prime, got " + to_string(p));
  if (mod_nonneg(p, 8) != 3) throw BadResidue("cornacchia2 needs p = 3 mod 8, got " + to_string(p));
  BigInt half_rest, v;
  for (BigInt u = 1; u * u < p; u += 2) {
    half_rest = (p - u * u) / 2;
    if (mpz_perfect_square_p(half_rest.get_mpz_t())) {
      mpz_sqrt(v.get_mpz_t(), half_rest.get_mpz_t());
      return {u, v};
    }
  }
  throw NoRepresentation("no U^2 + 2V^2 representation for " + to_string(p));
}

Factorization factorize(const BigInt& n, std::uint64_t effort) {
  if (sgn(n) == 0) throw InvalidArgument("factorize: n must be nonzero");
  Factorization out;
  out.n = n;
  out.sign = sgn(n) < 0 ? -1 : 1;
  BigInt rest = abs(n);
  std::map<BigInt, unsigned> found;

  for (std::uint32_t p : trial_primes()) {
    if (BigInt(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++found[BigInt(p)];
    }
  }

  std::vector<std::pair<BigInt, unsigned>> pending;
  if (rest > 1) pending.emplace_back(rest, 1);
  std::uint64_t budget = effort;
  while (!pending.empty()) {
    auto [c, mult] = pending.back();
    pending.pop_back();
    if (c == 1) continue;
    if (is_probable_prime(c)) {
      found[c] += mult;
      continue;
    }
    if (mpz_perfect_square_p(c.get_mpz_t())) {
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), c.get_mpz_t());
      pending.emplace_back(root, 2 * mult);
      continue;
    }
    const BigInt d = pollard_brent(c, budget);
    if (sgn(d) == 0) {
      for (unsigned i = 0; i < mult; ++i) out.unfactored.push_back(c);
      out.complete = false;
      continue;
    }
    pending.emplace_back(d, mult);
    pending.emplace_back(BigInt(c / d), mult);
  }

  out.factors.assign(found.begin(), found.end());
  std::sort(out.unfactored.begin(), out.unfactored.end());
  return out;
}

Verdict classify(const BigInt& n, std::uint64_t effort) {
  Verdict verdict{n, Achievability::NotAchievable, Reason::EvenNotMultiple, std::nullopt};
  if (mpz_even_p(n.get_mpz_t())) {
    if (sgn(n) == 0 || two_adic_valuation(n) >= 10) {
      verdict.achievable = Achievability::Achievable;
      verdict.reason = Reason::EvenMultipleOf1024;
    }
    return verdict;
  }
  const unsigned long r = mod_nonneg(n, 8);
  if (r == 1) {
    verdict.achievable = Achievability::Achievable;
    verdict.reason = Reason::OddOneMod8;
    return verdict;
  }
  if (r == 3 || r == 7) {
    verdict.reason = Reason::OddThreeMod4;
    return verdict;
  }

  // n = 5 mod 8: need a prime p = 3 mod 8 with p^2 | n.
  const Factorization fac = factorize(n, effort);
  std::optional<BigInt> best;
  for (const auto& [p, e] : fac.factors) {
    if (e >= 2 && mod_nonneg(p, 8) == 3) {
      best = p;
      break;
    }
  }
  if (best) {
    verdict.achievable = Achievability::Achievable;
    verdict.reason = Reason::OddFiveWithP;
    verdict.p = best;
  } else if (fac.complete) {
    verdict.reason = Reason::OddFiveNoP;
  } else {
    verdict.achievable = Achievability::Unknown;
    verdict.reason = Reason::UnknownIncompleteFactorization;
  }
  return verdict;
}

std::string_view reason_name(Reason reason) {
  switch (reason) {
    case Reason::EvenMultipleOf1024: return "EvenMultipleOf1024";
    case Reason::EvenNotMultiple: return "EvenNotMultiple";
    case Reason::OddOneMod8: return "OddOneMod8";
    case Reason::OddFiveWithP: return "OddFiveWithP";
    case Reason::OddFiveNoP: return "OddFiveNoP";
    case Reason::OddThreeMod4: return "OddThreeMod4";
    case Reason::UnknownIncompleteFactorization: return "UnknownIncompleteFactorization";
  }
  return "?";
}

std::string_view achievability_name(Achievability value) {
  switch (value) {
    case Achievability::Achievable: return "achievable";
    case Achievability::NotAchievable: return "not achievable";
    case Achievability::Unknown: return "unknown";
  }
  return "?";
}

}  // namespace grdet
