#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cherednik/field.hpp"
#include "cherednik/monomial.hpp"

namespace cherednik {

/// Sparse multivariate polynomial over `Field` in a fixed number of slots.
/// Terms are kept in graded-lex descending order with no stored zeros.
template <class Field>
class Poly {
 public:
  using Element = typename Field::Element;
  using FieldPtr = std::shared_ptr<const Field>;
  using Terms = std::map<Monomial, Element, GrlexDescending>;

  Poly(FieldPtr field, std::size_t slots) : field_(std::move(field)), slots_(slots) {
    if (slots_ > Monomial::kMaxSlots) throw std::invalid_argument("too many variables: " + std::to_string(slots));
  }

  static Poly constant(FieldPtr field, std::size_t slots, const Element& value) {
    Poly r(std::move(field), slots);
    r.add_term(Monomial(slots), value);
    return r;
  }

  /// The variable x_index (1-based).
  static Poly variable(FieldPtr field, std::size_t slots, std::size_t index) {
    if (index == 0 || index > slots) throw std::out_of_range("variable index out of range");
    Poly r(field, slots);
    Monomial m(slots);
    m.set(index - 1, 1);
    r.add_term(m, field->one());
    return r;
  }

  static Poly monomial(FieldPtr field, const Monomial& m, const Element& coeff) {
    Poly r(field, m.size());
    r.add_term(m, coeff);
    return r;
  }

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t slots() const { return slots_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  /// Common degree of a nonzero homogeneous polynomial.
  std::optional<unsigned> degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.begin()->first.degree();
  }

  /// Largest total degree of any term (0 for the zero polynomial).
  unsigned max_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

  Element coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_->zero() : it->second;
  }

  /// Accumulates coeff * m, pruning cancellations.
  Poly& add_term(const Monomial& m, const Element& coeff) {
    if (m.size() != slots_) throw std::invalid_argument("slot-count mismatch");
    if (field_->is_zero(coeff)) return *this;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second = field_->add(it->second, coeff);
      if (field_->is_zero(it->second)) terms_.erase(it);
    }
    return *this;
  }

  /// this += s * other
  Poly& add_scaled(const Poly& other, const Element& s) {
    check_compatible(other);
    if (field_->is_zero(s)) return *this;
    for (const auto& [m, c] : other.terms_) add_term(m, field_->mul(s, c));
    return *this;
  }

  Poly& operator+=(const Poly& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }

  Poly& operator-=(const Poly& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, field_->neg(c));
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  Poly operator-() const {
    Poly r(field_, slots_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field_->neg(c));
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r(a.field_, a.slots_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, a.field_->mul(ca, cb));
    return r;
  }

  Poly scaled(const Element& s) const {
    Poly r(field_, slots_);
    if (field_->is_zero(s)) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field_->mul(s, c));
    return r;
  }

  Poly times_monomial(const Monomial& mono) const {
    Poly r(field_, slots_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, c);
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(field_, slots_, field_->one());
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Homogeneous part of degree d.
  Poly part_of_degree(unsigned d) const {
    Poly r(field_, slots_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.slots_ != b.slots_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
      if (!(ia->first == ib->first) || !a.field_->equal(ia->second, ib->second)) return false;
    return true;
  }

  /// Canonical text: graded-lex descending terms, coefficient one omitted.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) out << '+';
      first = false;
      const bool unit = field_->equal(c, field_->one());
      const bool is_const = m.degree() == 0;
      if (is_const) {
        out << field_->format(c);
      } else if (unit) {
        out << m.to_string();
      } else {
        out << field_->format(c) << '*' << m.to_string();
      }
    }
    return out.str();
  }

  void check_compatible(const Poly& other) const {
    if (slots_ != other.slots_) throw std::invalid_argument("slot-count mismatch between polynomials");
    if (field_ != other.field_ && !(*field_ == *other.field_))
      throw DomainMismatch("polynomials belong to different coefficient domains");
  }

 private:
  FieldPtr field_;
  std::size_t slots_;
  Terms terms_;
};

/// Partial derivative with respect to x_index (1-based slot).
template <class Field>
Poly<Field> derivative(const Poly<Field>& f, std::size_t index) {
  if (index == 0 || index > f.slots()) throw std::out_of_range("variable index out of range");
  const Field& F = f.field();
  Poly<Field> out(f.field_ptr(), f.slots());
  for (const auto& [m, c] : f.terms()) {
    const unsigned e = m[index - 1];
    if (e == 0) continue;
    Monomial d = m;
    d.set(index - 1, e - 1);
    out.add_term(d, F.mul(F.from_int(e), c));
  }
  return out;
}

/// Random homogeneous polynomial of degree d with up to `terms` terms.
template <class Field>
Poly<Field> random_homogeneous(std::shared_ptr<const Field> field, std::size_t slots, unsigned d, std::size_t terms,
                               std::mt19937_64& rng) {
  Poly<Field> f(field, slots);
  if (slots == 0) return d == 0 ? Poly<Field>::constant(field, 0, field->random(rng)) : f;
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m(slots);
    for (unsigned u = 0; u < d; ++u) {
      const std::size_t s = static_cast<std::size_t>(rng() % slots);
      m.set(s, m[s] + 1);
    }
    f.add_term(m, field->random(rng));
  }
  return f;
}

/// Splits f = sum_k c^k f^(k) for f over F_p(c) with polynomial coefficients.
/// Throws std::invalid_argument if some coefficient has a nonconstant
/// denominator. Trailing zero components are trimmed; the zero polynomial
/// gives an empty list.
std::vector<Poly<PrimeField>> c_components(const Poly<RationalFunctionField>& f);

/// Inverse of c_components.
Poly<RationalFunctionField> from_c_components(const std::vector<Poly<PrimeField>>& parts,
                                              std::shared_ptr<const RationalFunctionField> field);

/// One parsed term: sign-adjusted coefficient num/den over F_p[c] and its monomial.
struct ParsedTerm {
  UPoly num;
  UPoly den;
  Monomial monomial;
};

/// Parses the polynomial text grammar into raw terms over F_p[c]:
///   poly  := ["+"|"-"] term (("+"|"-") term)*
///   term  := coeff ["*" mono] | mono
///   coeff := integer | "(" cpoly ")" ["/" "(" cpoly ")"]
///   mono  := "x"<i>["^"<e>] ("*" "x"<i>["^"<e>])*
/// where cpoly is a polynomial in c with integer coefficients. Indices must
/// lie in 1..slots. Throws std::invalid_argument on malformed input.
std::vector<ParsedTerm> parse_terms(std::string_view text, std::size_t slots, std::uint32_t p);

/// Parses a polynomial in c alone (e.g. "c^2+2*c+1").
UPoly parse_c_polynomial(std::string_view text, std::uint32_t p);

/// Parses text into a polynomial over `field`, mapping c to the field's c.
template <class Field>
Poly<Field> parse_poly(std::string_view text, std::size_t slots, std::shared_ptr<const Field> field) {
  Poly<Field> r(field, slots);
  for (const auto& t : parse_terms(text, slots, field->characteristic())) {
    auto den = field->embed(t.den);
    if (field->is_zero(den))
      throw std::invalid_argument("coefficient denominator vanishes in " + field->describe());
    r.add_term(t.monomial, field->div(field->embed(t.num), den));
  }
  return r;
}

template <class Field>
std::string format_poly(const Poly<Field>& f) {
  return f.to_string();
}

}  // namespace cherednik
