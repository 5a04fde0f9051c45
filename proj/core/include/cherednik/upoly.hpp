#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cherednik {

/// Modular helpers for word-size primes.
namespace modp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);

/// Inverse of a nonzero residue; throws std::domain_error on zero.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

/// Reduces a signed integer into [0, p).
std::uint32_t reduce(std::int64_t v, std::uint32_t p);

bool is_prime(std::uint64_t n);

}  // namespace modp

/// Dense univariate polynomial over F_p in the indeterminate c.
/// Coefficients are stored low degree first with no trailing zeros, so the
/// zero polynomial has an empty coefficient vector.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::uint32_t p) : p_(p) {}
  UPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);
  UPoly(std::uint32_t p, std::initializer_list<std::int64_t> coeffs);

  static UPoly constant(std::uint32_t p, std::uint32_t value);
  static UPoly monomial(std::uint32_t p, std::uint32_t coeff, std::size_t degree);

  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::uint32_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::uint32_t operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(std::uint32_t s) const;
  UPoly shifted(std::size_t k) const;  // multiply by c^k

  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  /// Euclidean division; throws std::domain_error if divisor is zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  UPoly operator/(const UPoly& divisor) const { return divmod(divisor).first; }
  UPoly operator%(const UPoly& divisor) const { return divmod(divisor).second; }

  /// Exact quotient; throws std::logic_error if the remainder is nonzero.
  UPoly exact_div(const UPoly& divisor) const;

  UPoly monic() const;
  std::uint32_t evaluate(std::uint32_t x) const;

  /// Monic gcd (zero if both inputs are zero).
  static UPoly gcd(UPoly a, UPoly b);

  /// (base^e) mod m.
  static UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& m);

  /// Rabin irreducibility test.
  bool is_irreducible() const;

  /// Formats with the given variable name, e.g. "c^2+2*c+1".
  std::string to_string(const std::string& var = "c") const;

 private:
  void trim();

  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> coeffs_;
};

}  // namespace cherednik
