#include "grdet/determinants.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>

#include "grdet/cyclotomic.hpp"
#include "grdet/error.hpp"

namespace grdet {

namespace {

TwistKind twist_kind(Family family) {
  switch (family) {
    case Family::SD: return TwistKind::Semidihedral;
    case Family::M: return TwistKind::ModularMaximal;
    case Family::D: return TwistKind::Dihedral;
  }
  throw InvalidArgument("unknown group family");
}

BigInt eval_at_one(const std::vector<BigInt>& poly) {
  BigInt sum = 0;
  for (const auto& c : poly) sum += c;
  return sum;
}

BigInt eval_at_minus_one(const std::vector<BigInt>& poly) {
  BigInt sum = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i % 2 == 0)
      sum += poly[i];
    else
      sum -= poly[i];
  }
  return sum;
}

// f * sigma(f) - g * sigma(g) in Z[x]/(x^m+1).
CyclotomicElement twisted_norm_form(const GroupRingElement& element, std::size_t m,
                                    GaloisIndex twist) {
  const auto f = cyc_reduce(element.a(), m);
  const auto g = cyc_reduce(element.b(), m);
  return f * galois_apply(f, twist) - g * galois_apply(g, twist);
}

}  // namespace

TwistMap GroupSpec::twist() const { return TwistMap(n, twist_kind(family)); }

std::string GroupSpec::name() const {
  switch (family) {
    case Family::SD: return "sd" + std::to_string(order());
    case Family::M: return "m" + std::to_string(order());
    case Family::D: return "d" + std::to_string(order());
  }
  return "?";
}

void check_group_spec(const GroupSpec& spec) {
  const bool ok = spec.family == Family::D ? spec.n == 3 : (spec.n >= 4 && spec.n <= kMaxTowerExponent);
  if (!ok) throw InvalidArgument("unsupported group (family/n combination)");
}

GroupSpec parse_group(std::string_view name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (int n = 4; n <= kMaxTowerExponent; ++n) {
    if (lower == GroupSpec::sd(n).name()) return GroupSpec::sd(n);
    if (lower == GroupSpec::modular(n).name()) return GroupSpec::modular(n);
  }
  if (lower == "d8") return GroupSpec::d8();
  throw ParseError("unknown group '" + std::string(name) + "' (expected sd16, sd32, sd64, m16, m32, m64 or d8)");
}

CayleyTable::CayleyTable(const GroupSpec& spec) : spec_(spec) {
  check_group_spec(spec);
  const TwistMap twist = spec.twist();
  const std::size_t half = twist.cyclic_order();
  order_ = 2 * half;
  table_.resize(order_ * order_);
  inverse_.resize(order_);

  // (Y^j1 X^i1)(Y^j2 X^i2) = Y^(j1+j2) X^(t^j2 * i1 + i2).
  for (std::size_t g = 0; g < order_; ++g) {
    const std::size_t i1 = g % half, j1 = g / half;
    for (std::size_t h = 0; h < order_; ++h) {
      const std::size_t i2 = h % half, j2 = h / half;
      const std::size_t i = ((j2 ? twist.apply(i1) : i1) + i2) % half;
      const std::size_t j = j1 ^ j2;
      table_[g * order_ + h] = static_cast<std::uint16_t>(i + half * j);
    }
  }

  for (std::size_t g = 0; g < order_; ++g) {
    std::vector<bool> row_seen(order_), col_seen(order_);
    for (std::size_t h = 0; h < order_; ++h) {
      row_seen[product(g, h)] = true;
      col_seen[product(h, g)] = true;
      if (product(g, h) == identity()) inverse_[g] = static_cast<std::uint16_t>(h);
    }
    if (std::count(row_seen.begin(), row_seen.end(), true) != static_cast<long>(order_) ||
        std::count(col_seen.begin(), col_seen.end(), true) != static_cast<long>(order_))
      throw Error("Cayley table row/column is not a permutation");
  }
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      for (std::size_t c = 0; c < order_; ++c)
        if (product(product(a, b), c) != product(a, product(b, c)))
          throw Error("Cayley table is not associative");
}

CayleyTable cayley_table(const GroupSpec& spec) { return CayleyTable(spec); }

const CayleyTable& cached_cayley_table(const GroupSpec& spec) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<CayleyTable>> cache;
  check_group_spec(spec);
  std::lock_guard lock(mutex);
  auto& slot = cache[{static_cast<int>(spec.family), spec.n}];
  if (!slot) slot = std::make_unique<CayleyTable>(spec);
  return *slot;
}

BigInt bareiss_determinant(std::vector<BigInt> matrix, std::size_t dim) {
  if (matrix.size() != dim * dim) throw InvalidArgument("bareiss: matrix is not dim x dim");
  if (dim == 0) return 1;
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return matrix[r * dim + c]; };

  int sign = 1;
  BigInt previous = 1;
  BigInt scratch;
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    if (sgn(at(k, k)) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < dim && sgn(at(pivot, k)) == 0) ++pivot;
      if (pivot == dim) return 0;
      for (std::size_t c = 0; c < dim; ++c) swap(at(k, c), at(pivot, c));
      sign = -sign;
    }
    mpz_srcptr pivot_value = at(k, k).get_mpz_t();
    for (std::size_t i = k + 1; i < dim; ++i) {
      mpz_srcptr lead = at(i, k).get_mpz_t();
      for (std::size_t j = k + 1; j < dim; ++j) {
        mpz_mul(scratch.get_mpz_t(), at(i, j).get_mpz_t(), pivot_value);
        mpz_submul(scratch.get_mpz_t(), lead, at(k, j).get_mpz_t());
        mpz_divexact(at(i, j).get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = at(k, k);
  }
  BigInt det = at(dim - 1, dim - 1);
  if (sign < 0) det = -det;
  return det;
}

BigInt regular_determinant(const GroupRingElement& element, const GroupSpec& spec) {
  check_group_spec(spec);
  if (element.n() != spec.n)
    throw InvalidArgument("element has order " + std::to_string(element.order()) + " but group " +
                          spec.name() + " has order " + std::to_string(spec.order()));
  const CayleyTable& table = cached_cayley_table(spec);
  const std::size_t dim = table.order();
  const auto coeffs = element.flat();
  std::vector<BigInt> matrix(dim * dim);
  for (std::size_t g = 0; g < dim; ++g)
    for (std::size_t h = 0; h < dim; ++h)
      matrix[g * dim + h] = coeffs[table.product(g, table.inverse(h))];
  return bareiss_determinant(std::move(matrix), dim);
}

BigInt four_character_product(const GroupRingElement& element) {
  const BigInt f1 = eval_at_one(element.a()), g1 = eval_at_one(element.b());
  const BigInt fm = eval_at_minus_one(element.a()), gm = eval_at_minus_one(element.b());
  return BigInt((f1 * f1 - g1 * g1) * (fm * fm - gm * gm));
}

FactoredSD16 sd16_factored(const GroupRingElement& element) {
  if (element.n() != 4) throw InvalidArgument("sd16_factored requires n = 4");
  const auto& a = element.a();
  const auto& b = element.b();

  FactoredSD16 out;
  out.M = four_character_product(element);

  // f(i) = (a0 - a2 + a4 - a6) + i (a1 - a3 + a5 - a7).
  const BigInt fr = a[0] - a[2] + a[4] - a[6], fi = a[1] - a[3] + a[5] - a[7];
  const BigInt gr = b[0] - b[2] + b[4] - b[6], gi = b[1] - b[3] + b[5] - b[7];
  out.A2 = fr * fr + fi * fi - gr * gr - gi * gi;

  // f(w) f(-conj w) = U + sqrt(2) i V for w a primitive 8th root of unity,
  // written in terms of the differences c_i - c_{i+4}.
  auto bilinear = [](const std::vector<BigInt>& c, BigInt& u, BigInt& v) {
    const BigInt d0 = c[0] - c[4], d1 = c[1] - c[5], d2 = c[2] - c[6], d3 = c[3] - c[7];
    u = d0 * d0 - d1 * d1 + d2 * d2 - d3 * d3;
    v = d0 * d1 + d0 * d3 - d1 * d2 + d2 * d3;
  };
  bilinear(a, out.U1, out.V1);
  bilinear(b, out.U2, out.V2);
  const BigInt du = out.U1 - out.U2, dv = out.V1 - out.V2;
  out.A3 = du * du + 2 * dv * dv;

  out.product = out.M * out.A2 * out.A2 * out.A3 * out.A3;
  return out;
}

FactoredGeneral sd_general_factored(const GroupRingElement& element) {
  const int n = element.n();
  if (n < 4) throw InvalidArgument("sd_general_factored requires n >= 4");
  const TwistMap twist(n, TwistKind::Semidihedral);
  const std::size_t cyclic = twist.cyclic_order();

  FactoredGeneral out;
  out.M = four_character_product(element);

  // Roots of order 2^j, 2 <= j <= n-2: the twist acts as inversion.
  for (int j = 2; j <= n - 2; ++j) {
    const std::size_t order = std::size_t{1} << j;
    const std::int64_t inversion[] = {-1};
    const auto k = twisted_norm_form(element, order / 2, GaloisIndex{-1});
    out.A.push_back(orbit_norm(k, coset_representatives(order, inversion)));
  }
  // Primitive 2^(n-1)-th roots: lambda -> lambda^t pairs them up.
  const std::int64_t t[] = {static_cast<std::int64_t>(twist.multiplier())};
  const auto k = twisted_norm_form(element, cyclic / 2, GaloisIndex{t[0]});
  out.A.push_back(orbit_norm(k, coset_representatives(cyclic, t)));

  out.product = out.M;
  for (const auto& value : out.A) out.product *= value * value;
  return out;
}

FactoredModular m_general_factored(const GroupRingElement& element) {
  const int n = element.n();
  if (n < 4) throw InvalidArgument("m_general_factored requires n >= 4");
  const TwistMap twist(n, TwistKind::ModularMaximal);
  const std::size_t cyclic = twist.cyclic_order();

  FactoredModular out;
  // Linear characters: chi(X) runs over the (N/2)-th roots of unity.
  {
    const BigInt f1 = eval_at_one(element.a()), g1 = eval_at_one(element.b());
    out.M1 = f1 * f1 - g1 * g1;
  }
  for (std::size_t m = 1; 2 * m <= cyclic / 2; m *= 2) {
    const auto f = cyc_reduce(element.a(), m);
    const auto g = cyc_reduce(element.b(), m);
    out.M1 *= full_norm(f * f - g * g);
  }

  const std::int64_t t[] = {static_cast<std::int64_t>(twist.multiplier())};
  const auto k = twisted_norm_form(element, cyclic / 2, GaloisIndex{t[0]});
  out.A = orbit_norm(k, coset_representatives(cyclic, t));
  out.product = out.M1 * out.A * out.A;
  return out;
}

FactoredModular m16_factored(const GroupRingElement& element) {
  if (element.n() != 4) throw InvalidArgument("m16_factored requires n = 4");
  return m_general_factored(element);
}

std::pair<BigInt, BigInt> dihedral_cross_check(const GroupRingElement& element) {
  const auto factored = sd16_factored(element);
  return {factored.M * factored.A2 * factored.A2,
          regular_determinant(fold_to_d8(element), GroupSpec::d8())};
}

}  // namespace grdet
