#pragma once

// Group-ring elements f(X) + Y*g(X) for the metacyclic 2-groups
//
//   <X, Y | X^N = Y^2 = 1, Y X Y = X^t>,   N = 2^(n-1),
//
// where the twist multiplier t selects the family: t = N/2 - 1 gives the
// semidihedral group SD_{2^n}, t = N/2 + 1 the modular group M_{2^n}, and
// t = N - 1 the dihedral group of order 2N.
//
// Canonical form keeps Y on the left: b[i] is the coefficient of Y*X^i. The
// flat coefficient index of X^i is i and of Y*X^i is N + i.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grdet/bigint.hpp"

namespace grdet {

inline constexpr int kMinTowerExponent = 3;
inline constexpr int kMaxTowerExponent = 6;

enum class TwistKind { Semidihedral, ModularMaximal, Dihedral };

class TwistMap {
 public:
  TwistMap(int n, TwistKind kind);

  int n() const { return n_; }
  TwistKind kind() const { return kind_; }
  std::size_t cyclic_order() const { return cyclic_order_; }
  std::size_t multiplier() const { return multiplier_; }

  // k -> k*t mod N.
  std::size_t apply(std::size_t exponent) const { return (exponent * multiplier_) % cyclic_order_; }

  // p(X) -> p(X^t) on a length-N coefficient vector.
  std::vector<BigInt> permute(std::span<const BigInt> poly) const;

 private:
  int n_;
  TwistKind kind_;
  std::size_t cyclic_order_;
  std::size_t multiplier_;
};

class GroupRingElement {
 public:
  GroupRingElement(int n, std::vector<BigInt> a, std::vector<BigInt> b);

  static GroupRingElement identity(int n);
  // Builds from 2^n coefficients, a first then b.
  static GroupRingElement from_flat(std::span<const BigInt> flat);
  template <typename Int>
  static GroupRingElement from_ints(int n, std::span<const Int> a, std::span<const Int> b) {
    std::vector<BigInt> av(a.begin(), a.end()), bv(b.begin(), b.end());
    return GroupRingElement(n, std::move(av), std::move(bv));
  }

  int n() const { return n_; }
  std::size_t half() const { return a_.size(); }
  std::size_t order() const { return 2 * a_.size(); }
  const std::vector<BigInt>& a() const { return a_; }
  const std::vector<BigInt>& b() const { return b_; }
  const BigInt& coefficient(std::size_t flat_index) const;
  std::vector<BigInt> flat() const;

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  int n_;
  std::vector<BigInt> a_;
  std::vector<BigInt> b_;
};

void check_tower_exponent(int n);

GroupRingElement gr_identity(int n);
GroupRingElement gr_multiply(const GroupRingElement& lhs, const GroupRingElement& rhs,
                             const TwistMap& twist);

// Image in the dihedral quotient of order 8 (X^4 = 1): coefficients of
// X^i and X^(i+4) are added. Requires n = 4; the result has n = 3.
GroupRingElement fold_to_d8(const GroupRingElement& element);

// Total order used to pick canonical/minimal elements: L1 norm first,
// then lexicographic on the flat coefficient vector.
bool element_less(const GroupRingElement& lhs, const GroupRingElement& rhs);

// Text form "a0,...,a_{N-1};b0,...,b_{N-1}". A flat list of 2^n integers
// without ';' is also accepted on input.
GroupRingElement parse_element(std::string_view text);
std::string format_element(const GroupRingElement& element);

}  // namespace grdet
