#pragma once

// Exact arithmetic in the negacyclic rings Z[x]/(x^m + 1), m a power of two
// up to 16. For m >= 1 this is the ring of integers of the 2m-th cyclotomic
// field, with x standing for a primitive 2m-th root of unity: evaluating an
// integer polynomial at such a root is the same as reducing it into this ring.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "grdet/bigint.hpp"

namespace grdet {

inline constexpr std::size_t kMaxRingDegree = 16;

bool is_supported_ring_degree(std::size_t m);

class CyclotomicElement {
 public:
  explicit CyclotomicElement(std::size_t m);
  CyclotomicElement(std::size_t m, std::vector<BigInt> coeffs);

  static CyclotomicElement constant(std::size_t m, const BigInt& value);

  std::size_t degree() const { return coeffs_.size(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_scalar() const;

  CyclotomicElement& operator+=(const CyclotomicElement& rhs);
  CyclotomicElement& operator-=(const CyclotomicElement& rhs);

  friend CyclotomicElement operator+(CyclotomicElement lhs, const CyclotomicElement& rhs) {
    return lhs += rhs;
  }
  friend CyclotomicElement operator-(CyclotomicElement lhs, const CyclotomicElement& rhs) {
    return lhs -= rhs;
  }
  friend CyclotomicElement operator*(const CyclotomicElement& lhs, const CyclotomicElement& rhs);
  friend bool operator==(const CyclotomicElement&, const CyclotomicElement&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

// The automorphism x -> x^i of Z[x]/(x^m+1); i must be odd.
struct GaloisIndex {
  std::int64_t value;
};

// x^k -> (-1)^floor((k mod 2m)/m) x^(k mod m).
CyclotomicElement cyc_reduce(std::span<const BigInt> poly, std::size_t m);
CyclotomicElement cyc_mul(const CyclotomicElement& u, const CyclotomicElement& v);
CyclotomicElement galois_apply(const CyclotomicElement& u, GaloisIndex index);

// Product of sigma_i(u) over i in reps. The product must be a rational
// integer; otherwise NonScalarProduct is thrown.
BigInt orbit_norm(const CyclotomicElement& u, std::span<const GaloisIndex> reps);

// Sorted odd residues in [1, modulus).
std::vector<GaloisIndex> unit_group(std::size_t modulus);

// Smallest representative of each coset of the subgroup generated by
// `generators` in (Z/modulus)^x, sorted ascending.
std::vector<GaloisIndex> coset_representatives(std::size_t modulus,
                                               std::span<const std::int64_t> generators);

// Norm from Q(zeta_2m) down to Q: product over the full unit group.
BigInt full_norm(const CyclotomicElement& u);

}  // namespace grdet
