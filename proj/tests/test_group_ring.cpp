#include <doctest.h>

#include "grdet/determinants.hpp"
#include "grdet/error.hpp"
#include "grdet/group_ring.hpp"
#include "test_support.hpp"

using namespace grdet;
using grdet::testing::element;
using grdet::testing::random_element;

TEST_CASE("identity element") {
  const auto one = gr_identity(4);
  CHECK(format_element(one) == "1,0,0,0,0,0,0,0;0,0,0,0,0,0,0,0");
  CHECK(gr_identity(5).order() == 32);
  CHECK(gr_identity(6).order() == 64);
  CHECK_THROWS_AS(gr_identity(2), InvalidArgument);
  CHECK_THROWS_AS(gr_identity(7), InvalidArgument);

  std::mt19937_64 rng(7);
  const TwistMap sd(4, TwistKind::Semidihedral);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_element(rng, 4, -5, 5);
    CHECK(gr_multiply(one, f, sd) == f);
    CHECK(gr_multiply(f, one, sd) == f);
  }
}

TEST_CASE("twist multipliers") {
  CHECK(TwistMap(4, TwistKind::Semidihedral).multiplier() == 3);
  CHECK(TwistMap(4, TwistKind::ModularMaximal).multiplier() == 5);
  CHECK(TwistMap(5, TwistKind::Semidihedral).multiplier() == 7);
  CHECK(TwistMap(5, TwistKind::ModularMaximal).multiplier() == 9);
  CHECK(TwistMap(3, TwistKind::Dihedral).multiplier() == 3);
  CHECK_THROWS_AS(TwistMap(3, TwistKind::Semidihedral), InvalidArgument);

  for (int n = 4; n <= 6; ++n) {
    for (auto kind : {TwistKind::Semidihedral, TwistKind::ModularMaximal, TwistKind::Dihedral}) {
      const TwistMap t(n, kind);
      CHECK(t.multiplier() % 2 == 1);
      for (std::size_t k = 0; k < t.cyclic_order(); ++k) CHECK(t.apply(t.apply(k)) == k);
    }
  }
}

TEST_CASE("multiplication from the presentation") {
  const TwistMap sd(4, TwistKind::Semidihedral);
  // Y * X = Y X (Y-left form), i.e. g = x.
  const auto y = element({0, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0});
  const auto x = element({0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(gr_multiply(y, x, sd) == element({0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0}));
  // X * Y = Y X^3
  CHECK(gr_multiply(x, y, sd) == element({0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0}));

  // (1 + Y)^2 = 2 + 2Y
  const auto one_plus_y = element({1, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(gr_multiply(one_plus_y, one_plus_y, sd) == element({2, 0, 0, 0, 0, 0, 0, 0}, {2, 0, 0, 0, 0, 0, 0, 0}));

  // XY = Y X^3 squares to X^4.
  const auto xy = element({0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0});
  CHECK(gr_multiply(xy, xy, sd) == element({0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0}));

  // In M16, X Y = Y X^5.
  const TwistMap m16(4, TwistKind::ModularMaximal);
  CHECK(gr_multiply(x, y, m16) == element({0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0}));

  CHECK_THROWS_AS(gr_multiply(gr_identity(4), gr_identity(5), sd), InvalidArgument);
}

TEST_CASE("multiplication is associative and agrees with the Cayley table") {
  std::mt19937_64 rng(11);
  for (auto spec : {GroupSpec::sd(4), GroupSpec::modular(4), GroupSpec::sd(5), GroupSpec::d8()}) {
    const TwistMap twist = spec.twist();
    for (int i = 0; i < 30; ++i) {
      const auto a = random_element(rng, spec.n, -4, 4);
      const auto b = random_element(rng, spec.n, -4, 4);
      const auto c = random_element(rng, spec.n, -4, 4);
      CHECK(gr_multiply(gr_multiply(a, b, twist), c, twist) == gr_multiply(a, gr_multiply(b, c, twist), twist));
    }
    // basis elements multiply like the table says
    const auto& table = cached_cayley_table(spec);
    for (std::size_t g = 0; g < spec.order(); ++g) {
      for (std::size_t h = 0; h < spec.order(); ++h) {
        std::vector<BigInt> eg(spec.order()), eh(spec.order()), egh(spec.order());
        eg[g] = 1;
        eh[h] = 1;
        egh[table.product(g, h)] = 1;
        REQUIRE(gr_multiply(GroupRingElement::from_flat(eg), GroupRingElement::from_flat(eh), twist) ==
                GroupRingElement::from_flat(egh));
      }
    }
  }
}

TEST_CASE("fold to D8") {
  CHECK(fold_to_d8(element({1, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0})) ==
        element({2, 0, 0, 0}, {0, 0, 0, 0}));
  CHECK(fold_to_d8(element({0, 1, 1, 0, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0, 0, 0})) ==
        element({0, 1, 1, 0}, {1, 1, 1, 0}));
  CHECK_THROWS_AS(fold_to_d8(gr_identity(5)), InvalidArgument);
}

TEST_CASE("element text format") {
  const auto e = parse_element(" 0, +1 ,1,0,0,0,0,0 ; 1,1,1,0,0,0,0,-12345678901234567890 ");
  CHECK(e.n() == 4);
  CHECK(e.b()[7] == BigInt("-12345678901234567890"));
  CHECK(format_element(e) == "0,1,1,0,0,0,0,0;1,1,1,0,0,0,0,-12345678901234567890");
  // flat form without ';'
  CHECK(parse_element("0,1,1,0,0,0,0,0,1,1,1,0,0,0,0,0") == parse_element("0,1,1,0,0,0,0,0;1,1,1,0,0,0,0,0"));

  CHECK_THROWS_AS(parse_element("1,2,3;4,5,6"), ParseError);
  CHECK_THROWS_AS(parse_element("1,0,0,0;0,0,0"), ParseError);
  CHECK_THROWS_AS(parse_element("1,0,0,0,0,0,0,x;0,0,0,0,0,0,0,0"), ParseError);
  CHECK_THROWS_AS(parse_element("1,,0,0,0,0,0,0;0,0,0,0,0,0,0,0"), ParseError);
  CHECK_THROWS_AS(parse_element("1;2;3"), ParseError);

  // printed form always parses back
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto r = random_element(rng, 4 + i % 3, -1000, 1000);
    CHECK(parse_element(format_element(r)) == r);
  }
}

TEST_CASE("element_less orders by L1 norm first") {
  const auto small = element({0, 0, 0, 0, 0, 0, 0, 5}, {0, 0, 0, 0, 0, 0, 0, 0});
  const auto large = element({1, 1, 1, 1, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(element_less(small, large));
  CHECK_FALSE(element_less(large, small));
  CHECK_FALSE(element_less(small, small));
  CHECK(element_less(element({-1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0}),
                     element({1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0})));
}
