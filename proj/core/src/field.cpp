#include "cherednik/field.hpp"

#include <array>
#include <bit>
#include <sstream>

namespace cherednik {

void CoeffDomain::validate() const {
  if (!modp::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
}

std::string CoeffDomain::c_mode_string() const {
  switch (mode) {
    case CMode::generic:
      return "generic";
    case CMode::value:
      return "value:" + std::to_string(value);
    case CMode::random_extension:
      return "random:" + std::to_string(seed);
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

PrimeField::PrimeField(std::uint32_t p, std::uint32_t c_value) : p_(p), c_value_(c_value % p) {
  if (!modp::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
}

std::string PrimeField::describe() const {
  return "F_" + std::to_string(p_) + " (c=" + std::to_string(c_value_) + ")";
}

// ---------------------------------------------------------------------------

RationalFunctionField::RationalFunctionField(std::uint32_t p) : p_(p) {
  if (!modp::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
}

RationalFunctionField::Element RationalFunctionField::from_int(std::int64_t v) const {
  return {UPoly::constant(p_, modp::reduce(v, p_)), UPoly::constant(p_, 1)};
}

RationalFunctionField::Element RationalFunctionField::normalize(UPoly num, UPoly den) const {
  if (den.is_zero()) throw std::domain_error("division by zero in F_" + std::to_string(p_) + "(c)");
  if (num.is_zero()) return zero();
  if (den.degree() > 0) {
    UPoly g = UPoly::gcd(num, den);
    if (g.degree() > 0) {
      num = num.exact_div(g);
      den = den.exact_div(g);
    }
  }
  if (den.leading() != 1) {
    std::uint32_t s = modp::inv(den.leading(), p_);
    num = num.scaled(s);
    den = den.scaled(s);
  }
  return {std::move(num), std::move(den)};
}

RationalFunctionField::Element RationalFunctionField::add(const Element& a, const Element& b) const {
  if (a.num.is_zero()) return b;
  if (b.num.is_zero()) return a;
  if (a.den == b.den) {
    if (a.den.degree() == 0) return {a.num + b.num, a.den};
    return normalize(a.num + b.num, a.den);
  }
  return normalize(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalFunctionField::Element RationalFunctionField::sub(const Element& a, const Element& b) const {
  return add(a, neg(b));
}

RationalFunctionField::Element RationalFunctionField::mul(const Element& a, const Element& b) const {
  if (a.num.is_zero() || b.num.is_zero()) return zero();
  if (a.den.degree() == 0 && b.den.degree() == 0) return {a.num * b.num, a.den};
  // Cross-cancel before multiplying to keep degrees small.
  UPoly g1 = UPoly::gcd(a.num, b.den);
  UPoly g2 = UPoly::gcd(b.num, a.den);
  UPoly n1 = a.num.exact_div(g1), d2 = b.den.exact_div(g1);
  UPoly n2 = b.num.exact_div(g2), d1 = a.den.exact_div(g2);
  return normalize(n1 * n2, d1 * d2);
}

RationalFunctionField::Element RationalFunctionField::inv(const Element& a) const {
  if (a.num.is_zero()) throw std::domain_error("division by zero in F_" + std::to_string(p_) + "(c)");
  return normalize(a.den, a.num);
}

RationalFunctionField::Element RationalFunctionField::random(std::mt19937_64& rng) const {
  auto draw = [&](int max_degree) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(max_degree + 1) + 1));
    for (auto& x : c) x = static_cast<std::uint32_t>(rng() % p_);
    return UPoly(p_, std::move(c));
  };
  UPoly den;
  do {
    den = draw(2);
  } while (den.is_zero());
  return normalize(draw(3), den);
}

std::string RationalFunctionField::format(const Element& a) const {
  if (a.num.degree() <= 0 && a.den.degree() == 0) return std::to_string(a.num[0]);
  std::string s = "(" + a.num.to_string() + ")";
  if (a.den.degree() > 0) s += "/(" + a.den.to_string() + ")";
  return s;
}

std::string RationalFunctionField::describe() const { return "F_" + std::to_string(p_) + "(c)"; }

// ---------------------------------------------------------------------------

namespace {

__extension__ using u128 = unsigned __int128;

// Extended Euclid: inverse of a modulo m over F_p, both as UPoly.
UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  const std::uint32_t p = m.modulus();
  UPoly r0 = m, r1 = a % m;
  UPoly s0(p), s1 = UPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("element not invertible in extension field");
  return s0.scaled(modp::inv(r0[0], p));
}

}  // namespace

ExtensionField::ExtensionField(std::uint32_t p, std::uint64_t seed) : p_(p), seed_(seed) {
  if (!modp::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  // Smallest k with p^k >= 2^40.
  long double size = 1;
  while (size < 1099511627776.0L) {
    size *= p;
    ++k_;
  }
  width_ = static_cast<unsigned>(std::bit_width(p - 1));
  if (width_ * k_ > 64) throw std::invalid_argument("extension field does not fit a machine word");
  digit_mask_ = width_ == 64 ? ~0ULL : ((1ULL << width_) - 1);

  // Lexicographically first monic irreducible of degree k, enumerating the
  // lower coefficients as a base-p counter.
  std::vector<std::uint32_t> lower(k_, 0);
  lower[0] = 1;
  for (;;) {
    std::vector<std::uint32_t> c = lower;
    c.push_back(1);
    UPoly candidate(p_, c);
    if (candidate.is_irreducible()) {
      modulus_ = candidate;
      break;
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (++lower[i] < p_) break;
      lower[i] = 0;
    }
  }
  if (p_ == 2)
    for (unsigned i = 0; i < k_; ++i)
      if (modulus_[i]) modulus_low_bits_ |= 1ULL << i;

  std::mt19937_64 rng(seed);
  c_image_ = random(rng);
}

ExtensionField::Element ExtensionField::add(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  Element r = 0;
  for (unsigned i = 0; i < k_; ++i)
    r |= std::uint64_t{modp::add(digit(a, i), digit(b, i), p_)} << (i * width_);
  return r;
}

ExtensionField::Element ExtensionField::neg(Element a) const {
  if (p_ == 2) return a;
  Element r = 0;
  for (unsigned i = 0; i < k_; ++i) r |= std::uint64_t{modp::neg(digit(a, i), p_)} << (i * width_);
  return r;
}

ExtensionField::Element ExtensionField::sub(Element a, Element b) const { return add(a, neg(b)); }

ExtensionField::Element ExtensionField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  if (p_ == 2) {
    u128 prod = 0;
    for (Element bb = b; bb != 0; bb &= bb - 1) prod ^= static_cast<u128>(a) << std::countr_zero(bb);
    for (int i = 2 * static_cast<int>(k_) - 2; i >= static_cast<int>(k_); --i) {
      if ((prod >> i) & 1U) {
        prod ^= static_cast<u128>(1) << i;
        prod ^= static_cast<u128>(modulus_low_bits_) << (i - static_cast<int>(k_));
      }
    }
    return static_cast<Element>(prod);
  }
  std::array<std::uint64_t, 128> acc{};
  std::array<std::uint32_t, 64> da{}, db{};
  for (unsigned i = 0; i < k_; ++i) {
    da[i] = digit(a, i);
    db[i] = digit(b, i);
  }
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) acc[i + j] = (acc[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  }
  for (int i = 2 * static_cast<int>(k_) - 2; i >= static_cast<int>(k_); --i) {
    std::uint64_t f = acc[static_cast<std::size_t>(i)];
    if (f == 0) continue;
    acc[static_cast<std::size_t>(i)] = 0;
    for (unsigned j = 0; j < k_; ++j) {
      std::size_t slot = static_cast<std::size_t>(i) - k_ + j;
      acc[slot] = (acc[slot] + (p_ - f) * modulus_[j]) % p_;
    }
  }
  Element r = 0;
  for (unsigned i = 0; i < k_; ++i) r |= acc[i] << (i * width_);
  return r;
}

UPoly ExtensionField::to_upoly(Element a) const {
  std::vector<std::uint32_t> c(k_);
  for (unsigned i = 0; i < k_; ++i) c[i] = digit(a, i);
  return UPoly(p_, std::move(c));
}

ExtensionField::Element ExtensionField::from_upoly(const UPoly& f) const {
  UPoly r = f % modulus_;
  Element e = 0;
  for (unsigned i = 0; i < k_; ++i) e |= std::uint64_t{r[i]} << (i * width_);
  return e;
}

ExtensionField::Element ExtensionField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in extension field");
  return from_upoly(inverse_mod(to_upoly(a), modulus_));
}

ExtensionField::Element ExtensionField::embed(const UPoly& f) const {
  // Horner in the extension.
  Element acc = 0;
  for (int i = f.degree(); i >= 0; --i) acc = add(mul(acc, c_image_), from_int(f[static_cast<std::size_t>(i)]));
  return acc;
}

ExtensionField::Element ExtensionField::random(std::mt19937_64& rng) const {
  Element r = 0;
  for (unsigned i = 0; i < k_; ++i) r |= (rng() % p_) << (i * width_);
  return r;
}

std::string ExtensionField::format(Element a) const {
  if (a < p_) return std::to_string(a);
  return "[" + to_upoly(a).to_string("g") + "]";
}

std::string ExtensionField::describe() const {
  return "F_" + std::to_string(p_) + "^" + std::to_string(k_) + " (c=" + format(c_image_) + ", seed " +
         std::to_string(seed_) + ")";
}

}  // namespace cherednik
