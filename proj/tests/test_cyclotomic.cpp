#include <doctest.h>

#include <algorithm>
#include <complex>
#include <random>

#include "grdet/cyclotomic.hpp"
#include "grdet/error.hpp"

using namespace grdet;

namespace {

CyclotomicElement cyc(std::vector<long> c) {
  return CyclotomicElement(c.size(), std::vector<BigInt>(c.begin(), c.end()));
}

CyclotomicElement random_cyc(std::mt19937_64& rng, std::size_t m, int bound = 6) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<BigInt> c(m);
  for (auto& v : c) v = d(rng);
  return CyclotomicElement(m, std::move(c));
}

// Schoolbook product of plain integer polynomials.
std::vector<BigInt> poly_mul(const std::vector<BigInt>& p, const std::vector<BigInt>& q) {
  std::vector<BigInt> out(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

}  // namespace

TEST_CASE("cyc_reduce") {
  const std::vector<BigInt> x4{0, 0, 0, 0, 1};
  CHECK(cyc_reduce(x4, 4) == cyc({-1, 0, 0, 0}));
  // h = (x+1)(x^2+1)(x^4+1) vanishes at every primitive 8th root of unity
  const std::vector<BigInt> h(8, 1);
  CHECK(cyc_reduce(h, 4) == cyc({0, 0, 0, 0}));
  CHECK(cyc_reduce(h, 2) == cyc({0, 0}));
  CHECK(cyc_reduce(h, 1) == cyc({0}));
  // m = 1 is evaluation at -1
  CHECK(cyc_reduce(std::vector<BigInt>{1, 1}, 1) == cyc({0}));
  CHECK(cyc_reduce(std::vector<BigInt>{3, 1, 4, 1, 5}, 1) == cyc({3 - 1 + 4 - 1 + 5}));
  // x^9 = x^8 * x = x in m = 4
  CHECK(cyc_reduce(std::vector<BigInt>{0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, 4) == cyc({0, 1, 0, 0}));
  CHECK_THROWS_AS(cyc_reduce(x4, 3), InvalidArgument);
  CHECK_THROWS_AS(cyc_reduce(x4, 32), InvalidArgument);
}

TEST_CASE("cyc_mul") {
  CHECK(cyc({0, 1, 0, 0}) * cyc({0, 0, 0, 1}) == cyc({-1, 0, 0, 0}));
  CHECK(cyc({1, 1}) * cyc({1, -1}) == cyc({2, 0}));
  // (x + x^2)(x^3 - x^2) = -x - x^3
  CHECK(cyc({0, 1, 1, 0}) * cyc({0, 0, -1, 1}) == cyc({0, -1, 0, -1}));
  CHECK_THROWS_AS(cyc({1, 0}) * cyc({1, 0, 0, 0}), InvalidArgument);

  SUBCASE("m = 2 is Gaussian integer multiplication") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      const auto u = random_cyc(rng, 2, 50), v = random_cyc(rng, 2, 50);
      const std::complex<long> zu(u[0].get_si(), u[1].get_si()), zv(v[0].get_si(), v[1].get_si());
      const auto z = zu * zv;
      CHECK(u * v == cyc({z.real(), z.imag()}));
    }
  }

  SUBCASE("reduction commutes with multiplication") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> d(-5, 5);
    for (std::size_t m : {1u, 2u, 4u, 8u, 16u}) {
      for (int i = 0; i < 20; ++i) {
        std::vector<BigInt> p(17), q(23);
        for (auto& v : p) v = d(rng);
        for (auto& v : q) v = d(rng);
        CHECK(cyc_reduce(poly_mul(p, q), m) == cyc_reduce(p, m) * cyc_reduce(q, m));
      }
    }
  }
}

TEST_CASE("galois_apply") {
  CHECK(galois_apply(cyc({0, 1, 0, 0}), GaloisIndex{-1}) == cyc({0, 0, 0, -1}));
  CHECK(galois_apply(cyc({0, 1, 0, 0}), GaloisIndex{7}) == cyc({0, 0, 0, -1}));
  // sigma_3 (x + x^2) = x^3 - x^2
  CHECK(galois_apply(cyc({0, 1, 1, 0}), GaloisIndex{3}) == cyc({0, 0, -1, 1}));
  CHECK_THROWS_AS(galois_apply(cyc({0, 1, 0, 0}), GaloisIndex{2}), InvalidArgument);

  std::mt19937_64 rng(9);
  for (std::size_t m : {1u, 2u, 4u, 8u, 16u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto u = random_cyc(rng, m), v = random_cyc(rng, m);
      CHECK(galois_apply(u, GaloisIndex{1}) == u);
      for (auto g : unit_group(2 * m)) {
        CHECK(galois_apply(u * v, g) == galois_apply(u, g) * galois_apply(v, g));
        CHECK(galois_apply(u + v, g) == galois_apply(u, g) + galois_apply(v, g));
      }
    }
  }
  // sigma_3 is an involution mod 8
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<long> basis(4, 0);
    basis[k] = 1;
    const auto e = cyc(basis);
    CHECK(galois_apply(galois_apply(e, GaloisIndex{3}), GaloisIndex{3}) == e);
  }
}

TEST_CASE("coset representatives") {
  const std::int64_t inversion[] = {-1};
  const std::int64_t three[] = {3};
  const std::int64_t five[] = {5};
  const std::int64_t seven[] = {7};
  auto values = [](const std::vector<GaloisIndex>& reps) {
    std::vector<std::int64_t> out;
    for (auto r : reps) out.push_back(r.value);
    return out;
  };
  CHECK(values(coset_representatives(4, inversion)) == std::vector<std::int64_t>{1});
  CHECK(values(coset_representatives(8, inversion)) == std::vector<std::int64_t>{1, 3});
  CHECK(values(coset_representatives(8, three)) == std::vector<std::int64_t>{1, 5});
  CHECK(values(coset_representatives(8, five)) == std::vector<std::int64_t>{1, 3});
  CHECK(values(coset_representatives(16, seven)) == std::vector<std::int64_t>{1, 3, 9, 11});
  CHECK(unit_group(16).size() == 8);
}

TEST_CASE("orbit_norm") {
  const GaloisIndex one_three[] = {{1}, {3}};
  CHECK(orbit_norm(CyclotomicElement::constant(4, 3), one_three) == 9);
  CHECK(orbit_norm(cyc({0, 1, 0, 0}), one_three) == -1);

  // k = f sigma_3(f) - g sigma_3(g) for f = x + x^2, g = 1 + x + x^2
  const auto f = cyc({0, 1, 1, 0}), g = cyc({1, 1, 1, 0});
  const auto k = f * galois_apply(f, GaloisIndex{3}) - g * galois_apply(g, GaloisIndex{3});
  const GaloisIndex one_seven[] = {{1}, {7}};
  const GaloisIndex one_five[] = {{1}, {5}};
  CHECK(orbit_norm(k, one_seven) == 3);
  CHECK(orbit_norm(k, one_five) == 3);

  // x alone is not Galois-stable: its {1,5} orbit product is x^6 = -x^2
  CHECK_THROWS_AS(orbit_norm(cyc({0, 1, 0, 0}), one_five), NonScalarProduct);

  SUBCASE("independent of representative order") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
      const auto u = random_cyc(rng, 8);
      auto reps = unit_group(16);
      const BigInt forward = orbit_norm(u, reps);
      std::reverse(reps.begin(), reps.end());
      CHECK(orbit_norm(u, reps) == forward);
      CHECK(full_norm(u) == forward);
    }
  }

  SUBCASE("full norm in m = 2 is a^2 + b^2") {
    CHECK(full_norm(cyc({3, 4})) == 25);
    CHECK(full_norm(cyc({-2, 5})) == 29);
  }
}
