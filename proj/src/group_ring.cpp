#include "grdet/group_ring.hpp"

#include <algorithm>

#include "grdet/error.hpp"

namespace grdet {

namespace {

// Product in Z[X]/(X^N - 1).
std::vector<BigInt> cyclic_convolution(std::span<const BigInt> p, std::span<const BigInt> q) {
  const std::size_t size = p.size();
  std::vector<BigInt> out(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (sgn(p[i]) == 0) continue;
    for (std::size_t j = 0; j < size; ++j) {
      if (sgn(q[j]) == 0) continue;
      out[(i + j) % size] += p[i] * q[j];
    }
  }
  return out;
}

void add_into(std::vector<BigInt>& acc, const std::vector<BigInt>& term) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<BigInt> parse_list(std::string_view text) {
  std::vector<BigInt> values;
  for (auto field : split(text, ',')) values.push_back(parse_bigint(field));
  return values;
}

int exponent_for_order(std::size_t order) {
  for (int n = kMinTowerExponent; n <= kMaxTowerExponent; ++n)
    if (order == (std::size_t{1} << n)) return n;
  throw ParseError("element has " + std::to_string(order) +
                   " coefficients; expected 2^n with 3 <= n <= 6");
}

}  // namespace

void check_tower_exponent(int n) {
  if (n < kMinTowerExponent || n > kMaxTowerExponent)
    throw InvalidArgument("unsupported tower exponent n=" + std::to_string(n));
}

TwistMap::TwistMap(int n, TwistKind kind) : n_(n), kind_(kind) {
  check_tower_exponent(n);
  cyclic_order_ = std::size_t{1} << (n - 1);
  switch (kind) {
    case TwistKind::Semidihedral:
      if (n < 4) throw InvalidArgument("semidihedral groups need n >= 4");
      multiplier_ = cyclic_order_ / 2 - 1;
      break;
    case TwistKind::ModularMaximal:
      if (n < 4) throw InvalidArgument("modular groups need n >= 4");
      multiplier_ = cyclic_order_ / 2 + 1;
      break;
    case TwistKind::Dihedral:
      multiplier_ = cyclic_order_ - 1;
      break;
  }
}

std::vector<BigInt> TwistMap::permute(std::span<const BigInt> poly) const {
  if (poly.size() != cyclic_order_) throw InvalidArgument("twist: polynomial length mismatch");
  std::vector<BigInt> out(cyclic_order_);
  for (std::size_t k = 0; k < cyclic_order_; ++k) out[apply(k)] = poly[k];
  return out;
}

GroupRingElement::GroupRingElement(int n, std::vector<BigInt> a, std::vector<BigInt> b)
    : n_(n), a_(std::move(a)), b_(std::move(b)) {
  check_tower_exponent(n);
  const std::size_t half = std::size_t{1} << (n - 1);
  if (a_.size() != half || b_.size() != half)
    throw InvalidArgument("group ring element for n=" + std::to_string(n) + " needs " +
                          std::to_string(half) + " coefficients in each of f and g");
}

GroupRingElement GroupRingElement::identity(int n) {
  check_tower_exponent(n);
  const std::size_t half = std::size_t{1} << (n - 1);
  std::vector<BigInt> a(half), b(half);
  a[0] = 1;
  return GroupRingElement(n, std::move(a), std::move(b));
}

GroupRingElement GroupRingElement::from_flat(std::span<const BigInt> flat) {
  const int n = exponent_for_order(flat.size());
  const std::size_t half = flat.size() / 2;
  return GroupRingElement(n, std::vector<BigInt>(flat.begin(), flat.begin() + half),
                          std::vector<BigInt>(flat.begin() + half, flat.end()));
}

const BigInt& GroupRingElement::coefficient(std::size_t flat_index) const {
  if (flat_index >= order()) throw InvalidArgument("coefficient index out of range");
  return flat_index < half() ? a_[flat_index] : b_[flat_index - half()];
}

std::vector<BigInt> GroupRingElement::flat() const {
  std::vector<BigInt> out(a_);
  out.insert(out.end(), b_.begin(), b_.end());
  return out;
}

GroupRingElement gr_identity(int n) { return GroupRingElement::identity(n); }

GroupRingElement gr_multiply(const GroupRingElement& lhs, const GroupRingElement& rhs,
                             const TwistMap& twist) {
  if (lhs.n() != rhs.n() || lhs.n() != twist.n())
    throw InvalidArgument("gr_multiply: operands and twist must share n");
  // (f1 + Y g1)(f2 + Y g2) = (f1 f2 + g1^t g2) + Y (f1^t g2 + g1 f2),
  // using X^i Y = Y X^(t i) and Y^2 = 1.
  const auto f1_twisted = twist.permute(lhs.a());
  const auto g1_twisted = twist.permute(lhs.b());

  auto f = cyclic_convolution(lhs.a(), rhs.a());
  add_into(f, cyclic_convolution(g1_twisted, rhs.b()));
  auto g = cyclic_convolution(f1_twisted, rhs.b());
  add_into(g, cyclic_convolution(lhs.b(), rhs.a()));
  return GroupRingElement(lhs.n(), std::move(f), std::move(g));
}

GroupRingElement fold_to_d8(const GroupRingElement& element) {
  if (element.n() != 4) throw InvalidArgument("fold_to_d8 requires n = 4");
  std::vector<BigInt> gamma(4), delta(4);
  for (std::size_t i = 0; i < 4; ++i) {
    gamma[i] = element.a()[i] + element.a()[i + 4];
    delta[i] = element.b()[i] + element.b()[i + 4];
  }
  return GroupRingElement(3, std::move(gamma), std::move(delta));
}

bool element_less(const GroupRingElement& lhs, const GroupRingElement& rhs) {
  if (lhs.order() != rhs.order()) return lhs.order() < rhs.order();
  BigInt norm_l = 0, norm_r = 0;
  for (std::size_t i = 0; i < lhs.order(); ++i) {
    norm_l += abs(lhs.coefficient(i));
    norm_r += abs(rhs.coefficient(i));
  }
  if (norm_l != norm_r) return norm_l < norm_r;
  for (std::size_t i = 0; i < lhs.order(); ++i) {
    const int c = cmp(lhs.coefficient(i), rhs.coefficient(i));
    if (c != 0) return c < 0;
  }
  return false;
}

GroupRingElement parse_element(std::string_view text) {
  const auto halves = split(text, ';');
  if (halves.size() > 2) throw ParseError("element text has more than one ';'");
  if (halves.size() == 1) {
    auto flat = parse_list(halves[0]);
    exponent_for_order(flat.size());
    return GroupRingElement::from_flat(flat);
  }
  auto a = parse_list(halves[0]);
  auto b = parse_list(halves[1]);
  if (a.size() != b.size())
    throw ParseError("f and g parts have different lengths (" + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()) + ")");
  const int n = exponent_for_order(2 * a.size());
  return GroupRingElement(n, std::move(a), std::move(b));
}

std::string format_element(const GroupRingElement& element) {
  std::string out;
  auto append = [&out](const std::vector<BigInt>& part) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (i) out += ',';
      out += to_string(part[i]);
    }
  };
  append(element.a());
  out += ';';
  append(element.b());
  return out;
}

}  // namespace grdet
