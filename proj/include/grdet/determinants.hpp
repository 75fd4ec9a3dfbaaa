#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grdet/bigint.hpp"
#include "grdet/group_ring.hpp"

namespace grdet {

enum class Family { SD, M, D };

struct GroupSpec {
  Family family;
  int n;

  static GroupSpec sd(int n) { return {Family::SD, n}; }
  static GroupSpec modular(int n) { return {Family::M, n}; }
  static GroupSpec d8() { return {Family::D, 3}; }

  std::size_t order() const { return std::size_t{1} << n; }
  TwistMap twist() const;
  std::string name() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Throws InvalidArgument for anything other than SD/M with 4 <= n <= 6, or D8.
void check_group_spec(const GroupSpec& spec);

// "sd16", "sd32", "sd64", "m16", "m32", "m64", "d8" (case-insensitive).
GroupSpec parse_group(std::string_view name);

// Multiplication table of a group with elements indexed e(i, j) = i + N*j
// for the Y-left word Y^j X^i.
class CayleyTable {
 public:
  explicit CayleyTable(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  std::size_t order() const { return order_; }
  std::size_t product(std::size_t g, std::size_t h) const { return table_[g * order_ + h]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  static constexpr std::size_t identity() { return 0; }

 private:
  GroupSpec spec_;
  std::size_t order_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
};

CayleyTable cayley_table(const GroupSpec& spec);

// Tables are built and validated once per group and shared afterwards.
const CayleyTable& cached_cayley_table(const GroupSpec& spec);

// Fraction-free Gaussian elimination over exact integers. `matrix` is
// row-major dim x dim and is consumed.
BigInt bareiss_determinant(std::vector<BigInt> matrix, std::size_t dim);

// det(a_{g h^-1}) from the Cayley table. This is the oracle every factored
// formula is checked against.
BigInt regular_determinant(const GroupRingElement& element, const GroupSpec& spec);

struct FactoredSD16 {
  BigInt M, A2, A3;
  BigInt U1, V1, U2, V2;
  BigInt product;
};

struct FactoredGeneral {
  BigInt M;
  std::vector<BigInt> A;  // A[0] = A_2, ..., A.back() = A_{n-1}
  BigInt product;
};

struct FactoredModular {
  BigInt M1, A;
  BigInt product;
};

// Closed-form SD16 factorization M * A2^2 * A3^2 with
// A3 = (U1 - U2)^2 + 2 (V1 - V2)^2.
FactoredSD16 sd16_factored(const GroupRingElement& element);

// Same factorization for SD_{2^n} (n in 4..6) through exact Galois orbit
// products in the negacyclic rings.
FactoredGeneral sd_general_factored(const GroupRingElement& element);

// M_{2^n} factorization M1 * A^2.
FactoredModular m_general_factored(const GroupRingElement& element);
FactoredModular m16_factored(const GroupRingElement& element);

// (M * A2^2 of the SD16 element, D8 oracle determinant of its fold).
std::pair<BigInt, BigInt> dihedral_cross_check(const GroupRingElement& element);

// The four one-dimensional characters: (f(1)^2 - g(1)^2)(f(-1)^2 - g(-1)^2).
BigInt four_character_product(const GroupRingElement& element);

}  // namespace grdet
