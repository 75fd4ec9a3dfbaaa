#include "grdet/cyclotomic.hpp"

#include <algorithm>
#include <set>

#include "grdet/error.hpp"

namespace grdet {

namespace {

void require_degree(std::size_t m) {
  if (!is_supported_ring_degree(m))
    throw InvalidArgument("unsupported negacyclic ring degree m=" + std::to_string(m));
}

void require_same_degree(const CyclotomicElement& u, const CyclotomicElement& v) {
  if (u.degree() != v.degree())
    throw InvalidArgument("cyclotomic degree mismatch: " + std::to_string(u.degree()) + " vs " +
                          std::to_string(v.degree()));
}

std::size_t positive_mod(std::int64_t value, std::size_t modulus) {
  const auto m = static_cast<std::int64_t>(modulus);
  return static_cast<std::size_t>(((value % m) + m) % m);
}

}  // namespace

bool is_supported_ring_degree(std::size_t m) {
  return m >= 1 && m <= kMaxRingDegree && (m & (m - 1)) == 0;
}

CyclotomicElement::CyclotomicElement(std::size_t m) : coeffs_(m) { require_degree(m); }

CyclotomicElement::CyclotomicElement(std::size_t m, std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  require_degree(m);
  if (coeffs_.size() != m)
    throw InvalidArgument("cyclotomic element needs exactly m coefficients");
}

CyclotomicElement CyclotomicElement::constant(std::size_t m, const BigInt& value) {
  CyclotomicElement out(m);
  out.coeffs_[0] = value;
  return out;
}

bool CyclotomicElement::is_scalar() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const BigInt& c) { return sgn(c) == 0; });
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& rhs) {
  require_same_degree(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& rhs) {
  require_same_degree(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CyclotomicElement operator*(const CyclotomicElement& lhs, const CyclotomicElement& rhs) {
  require_same_degree(lhs, rhs);
  const std::size_t m = lhs.degree();
  CyclotomicElement out(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t k = i + j;
      if (k < m)
        mpz_addmul(out.coeffs_[k].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
      else
        mpz_submul(out.coeffs_[k - m].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  return out;
}

CyclotomicElement cyc_reduce(std::span<const BigInt> poly, std::size_t m) {
  require_degree(m);
  std::vector<BigInt> coeffs(m);
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const std::size_t r = k % (2 * m);
    if (r < m)
      coeffs[r] += poly[k];
    else
      coeffs[r - m] -= poly[k];
  }
  return CyclotomicElement(m, std::move(coeffs));
}

CyclotomicElement cyc_mul(const CyclotomicElement& u, const CyclotomicElement& v) { return u * v; }

CyclotomicElement galois_apply(const CyclotomicElement& u, GaloisIndex index) {
  const std::size_t m = u.degree();
  const std::size_t i = positive_mod(index.value, 2 * m);
  if (i % 2 == 0) throw InvalidArgument("Galois index must be odd, got " + std::to_string(index.value));
  std::vector<BigInt> coeffs(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (sgn(u[k]) == 0) continue;
    const std::size_t e = (k * i) % (2 * m);
    if (e < m)
      coeffs[e] += u[k];
    else
      coeffs[e - m] -= u[k];
  }
  return CyclotomicElement(m, std::move(coeffs));
}

BigInt orbit_norm(const CyclotomicElement& u, std::span<const GaloisIndex> reps) {
  auto product = CyclotomicElement::constant(u.degree(), 1);
  for (const auto& g : reps) product = product * galois_apply(u, g);
  if (!product.is_scalar()) {
    std::string coords;
    for (std::size_t i = 0; i < product.degree(); ++i) {
      if (i) coords += ',';
      coords += to_string(product[i]);
    }
    throw NonScalarProduct("orbit product is not a rational integer: (" + coords + ")");
  }
  return product[0];
}

std::vector<GaloisIndex> unit_group(std::size_t modulus) {
  std::vector<GaloisIndex> units;
  for (std::size_t i = 1; i < std::max<std::size_t>(modulus, 2); i += 2)
    units.push_back(GaloisIndex{static_cast<std::int64_t>(i)});
  return units;
}

std::vector<GaloisIndex> coset_representatives(std::size_t modulus,
                                               std::span<const std::int64_t> generators) {
  // Close the generators under multiplication.
  std::set<std::size_t> subgroup{1 % modulus};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t h : std::vector<std::size_t>(subgroup.begin(), subgroup.end())) {
      for (auto gen : generators) {
        const std::size_t next = (h * positive_mod(gen, modulus)) % modulus;
        if (subgroup.insert(next).second) grew = true;
      }
    }
  }
  std::set<std::size_t> covered;
  std::vector<GaloisIndex> reps;
  for (auto unit : unit_group(modulus)) {
    const auto i = static_cast<std::size_t>(unit.value);
    if (covered.count(i)) continue;
    reps.push_back(unit);
    for (std::size_t h : subgroup) covered.insert((i * h) % modulus);
  }
  return reps;
}

BigInt full_norm(const CyclotomicElement& u) {
  const auto reps = unit_group(2 * u.degree());
  return orbit_norm(u, reps);
}

}  // namespace grdet
