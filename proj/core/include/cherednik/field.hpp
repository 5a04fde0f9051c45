#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "cherednik/upoly.hpp"

namespace cherednik {

/// How the deformation parameter c is realized in the coefficient field.
enum class CMode {
  generic,           // c transcendental: scalars live in F_p(c)
  value,             // c specialized to an element of F_p
  random_extension,  // c a random element of F_{p^k}; non-certifying
};

/// Coefficient-domain descriptor: characteristic plus the realization of c.
struct CoeffDomain {
  std::uint32_t p = 2;
  CMode mode = CMode::generic;
  std::uint32_t value = 1;  // used in value mode, reduced mod p
  std::uint64_t seed = 1;   // used in random_extension mode

  static CoeffDomain generic(std::uint32_t p) { return {p, CMode::generic, 0, 0}; }
  static CoeffDomain at_value(std::uint32_t p, std::int64_t v) {
    return {p, CMode::value, modp::reduce(v, p), 0};
  }
  static CoeffDomain random_extension(std::uint32_t p, std::uint64_t seed) {
    return {p, CMode::random_extension, 0, seed};
  }

  /// Throws std::invalid_argument unless p is prime.
  void validate() const;
  /// "generic", "value:<v>" or "random:<seed>".
  std::string c_mode_string() const;

  friend bool operator==(const CoeffDomain&, const CoeffDomain&) = default;
};

/// Raised when operands come from different coefficient domains.
class DomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------

/// F_p with c specialized to a fixed residue.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p, std::uint32_t c_value = 1);

  std::uint32_t characteristic() const { return p_; }
  CoeffDomain domain() const { return CoeffDomain::at_value(p_, c_value_); }

  Element zero() const { return 0; }
  Element one() const { return 1 % p_; }
  Element from_int(std::int64_t v) const { return modp::reduce(v, p_); }
  Element add(Element a, Element b) const { return modp::add(a, b, p_); }
  Element sub(Element a, Element b) const { return modp::sub(a, b, p_); }
  Element neg(Element a) const { return modp::neg(a, p_); }
  Element mul(Element a, Element b) const { return modp::mul(a, b, p_); }
  Element inv(Element a) const { return modp::inv(a, p_); }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }

  Element c() const { return c_value_; }
  /// Image of a polynomial in c.
  Element embed(const UPoly& f) const { return f.evaluate(c_value_); }
  Element random(std::mt19937_64& rng) const { return static_cast<Element>(rng() % p_); }
  std::string format(Element a) const { return std::to_string(a); }
  std::string describe() const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
  std::uint32_t c_value_;
};

// ---------------------------------------------------------------------------

/// Reduced fraction num/den over F_p[c] with monic denominator; zero is 0/1.
struct RationalFunction {
  UPoly num;
  UPoly den;

  bool is_polynomial() const { return den.degree() == 0; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

/// The rational-function field F_p(c) with c transcendental.
class RationalFunctionField {
 public:
  using Element = RationalFunction;

  explicit RationalFunctionField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  CoeffDomain domain() const { return CoeffDomain::generic(p_); }

  Element zero() const { return {UPoly(p_), UPoly::constant(p_, 1)}; }
  Element one() const { return {UPoly::constant(p_, 1), UPoly::constant(p_, 1)}; }
  Element from_int(std::int64_t v) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const { return {-a.num, a.den}; }
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  bool is_zero(const Element& a) const { return a.num.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element c() const { return {UPoly::monomial(p_, 1, 1), UPoly::constant(p_, 1)}; }
  Element embed(const UPoly& f) const { return {f, UPoly::constant(p_, 1)}; }
  /// Canonicalizes num/den: cancels the gcd and makes den monic.
  Element normalize(UPoly num, UPoly den) const;
  Element random(std::mt19937_64& rng) const;
  /// "(c+1)" for polynomials, "(c)/(c+1)" for proper fractions, plain
  /// integers for constants.
  std::string format(const Element& a) const;
  std::string describe() const;

  friend bool operator==(const RationalFunctionField&, const RationalFunctionField&) = default;

 private:
  std::uint32_t p_;
};

// ---------------------------------------------------------------------------

/// F_{p^k} with p^k >= 2^40, used to evaluate c at a random point.
/// Elements are packed base-p digit vectors in a single 64-bit word.
class ExtensionField {
 public:
  using Element = std::uint64_t;

  /// Chooses the smallest k with p^k >= 2^40, the lexicographically first
  /// irreducible modulus of that degree, and a seeded random image for c.
  ExtensionField(std::uint32_t p, std::uint64_t seed);

  std::uint32_t characteristic() const { return p_; }
  CoeffDomain domain() const { return CoeffDomain::random_extension(p_, seed_); }
  unsigned degree() const { return k_; }
  const UPoly& modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const { return modp::reduce(v, p_); }
  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }

  Element c() const { return c_image_; }
  Element embed(const UPoly& f) const;
  Element random(std::mt19937_64& rng) const;
  std::string format(Element a) const;
  std::string describe() const;

  UPoly to_upoly(Element a) const;
  Element from_upoly(const UPoly& f) const;

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
    return a.p_ == b.p_ && a.seed_ == b.seed_;
  }

 private:
  std::uint32_t digit(Element a, unsigned i) const {
    return static_cast<std::uint32_t>((a >> (i * width_)) & digit_mask_);
  }

  std::uint32_t p_;
  std::uint64_t seed_;
  unsigned k_ = 0;
  unsigned width_ = 0;
  std::uint64_t digit_mask_ = 0;
  UPoly modulus_;
  std::uint64_t modulus_low_bits_ = 0;  // p = 2: modulus minus the leading term
  Element c_image_ = 0;
};

// ---------------------------------------------------------------------------

/// Value-semantic scalar bound to its field. Arithmetic between scalars from
/// different fields throws DomainMismatch; division by zero throws
/// std::domain_error.
template <class Field>
class Scalar {
 public:
  using Element = typename Field::Element;

  Scalar(std::shared_ptr<const Field> field, Element value) : field_(std::move(field)), value_(std::move(value)) {}

  const Element& value() const { return value_; }
  const Field& field() const { return *field_; }
  bool is_zero() const { return field_->is_zero(value_); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return {a.check(b), a.field_->add(a.value_, b.value_)}; }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return {a.check(b), a.field_->sub(a.value_, b.value_)}; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return {a.check(b), a.field_->mul(a.value_, b.value_)}; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return {a.check(b), a.field_->div(a.value_, b.value_)}; }
  Scalar operator-() const { return {field_, field_->neg(value_)}; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    a.check(b);
    return a.field_->equal(a.value_, b.value_);
  }

  std::string to_string() const { return field_->format(value_); }

 private:
  const std::shared_ptr<const Field>& check(const Scalar& other) const {
    if (field_ != other.field_ && !(*field_ == *other.field_))
      throw DomainMismatch("scalar operands belong to different coefficient domains");
    return field_;
  }

  std::shared_ptr<const Field> field_;
  Element value_;
};

/// Builds the field described by `domain` and invokes `fn(std::shared_ptr<const Field>)`.
template <class Fn>
decltype(auto) with_field(const CoeffDomain& domain, Fn&& fn) {
  domain.validate();
  switch (domain.mode) {
    case CMode::value:
      return fn(std::make_shared<const PrimeField>(domain.p, domain.value));
    case CMode::random_extension:
      return fn(std::make_shared<const ExtensionField>(domain.p, domain.seed));
    case CMode::generic:
    default:
      return fn(std::make_shared<const RationalFunctionField>(domain.p));
  }
}

}  // namespace cherednik
