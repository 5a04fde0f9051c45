#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cherednik {

/// Polynomial in z with integer coefficients (slot d = coefficient of z^d),
/// trailing zeros trimmed.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<std::int64_t> c);
  explicit IntPoly(std::vector<std::int64_t> c);

  static IntPoly monomial(std::int64_t coeff, std::size_t degree);

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t operator[](std::size_t d) const { return d < c_.size() ? c_[d] : 0; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  IntPoly pow(unsigned e) const;
  /// f(z^k).
  IntPoly dilate(unsigned k) const;
  /// Quotient and remainder by a divisor with leading coefficient +-1.
  std::pair<IntPoly, IntPoly> divmod(const IntPoly& divisor) const;
  /// Throws std::logic_error when the division leaves a remainder.
  IntPoly exact_div(const IntPoly& divisor) const;
  std::int64_t sum() const;

  /// "1+3z+z^2" style.
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

/// [k]_z = 1 + z + ... + z^{k-1}; [0]_z = 0.
IntPoly q_bracket(unsigned k);
/// [k]_z! = [k]_z [k-1]_z ... [1]_z; [0]_z! = 1.
IntPoly q_factorial(unsigned k);

/// C(a, i) for i >= 0 as the polynomial a(a-1)...(a-i+1)/i! in a (so
/// negative a is allowed); C(a, i) = 0 for i < 0.
std::int64_t binomial(std::int64_t a, std::int64_t i);

/// n = kp + r with 0 <= r < p.
struct CongruenceData {
  std::uint64_t n = 0;
  std::uint32_t p = 2;
  std::uint64_t k = 0;
  std::uint32_t r = 0;

  static CongruenceData of(std::uint64_t n, std::uint32_t p);
};

/// Q_r(n, z) = C(n-1, r-1) z^{r+1} + sum_{i=0}^{r} C(n-r-2+i, i) z^i.
IntPoly q_r_polynomial(const CongruenceData& cong);

enum class Provenance { computed, conjecture_as_printed, conjecture_remark_consistent, theorem, baby_verma };
std::string to_string(Provenance p);

enum class ConjectureVariant { as_printed, remark_consistent };
std::string to_string(ConjectureVariant v);

/// Hilbert series with its origin.
struct Series {
  IntPoly poly;
  Provenance provenance = Provenance::computed;

  bool nonnegative() const;
  std::vector<std::int64_t> coefficients() const { return poly.coeffs(); }
};

Series computed_series(const std::vector<std::uint64_t>& dims);

/// Conjectured h_L for t in {0,1}. At t = 0 both variants coincide.
///   t=1, as_printed:        [p]_z^{n-1} [r]_{z^p}! [p]_{z^p}! Q_r(n, z^p)
///   t=1, remark_consistent: [p]_z^{n-1} h_0(z^p)
Series conjectured_hilbert(const CongruenceData& cong, int t,
                           ConjectureVariant variant = ConjectureVariant::remark_consistent);

/// prod_{i=2}^{n} (1 - z^{ip'}) / (1 - z)^{n-1} with p' = p at t = 1 and
/// p' = 1 at t = 0.
Series baby_verma_series(std::uint64_t n, std::uint32_t p, int t);

/// Closed forms proved for particular regimes:
///   t=0, r=1:        [p]_z (1 + (n-2) z + z^2)
///   t=1, p=2, r=1:   (1+z^2)(1+z)^{n-1}(1 + (n-2) z^2 + z^4)
///   t=1, r=0:        [p]_z^{n-1}
/// Returns nullopt outside these regimes.
std::optional<Series> theorem_hilbert(const CongruenceData& cong, int t);
/// Human-readable name of the regime used by theorem_hilbert, empty if none.
std::string theorem_regime(const CongruenceData& cong, int t);

struct ShapeReport {
  bool ok = false;
  std::string message;
  IntPoly inner;  // h with h_L(z) = [p]_z^{n-1} h(z^p)
};

/// Divides by [p]_z^{n-1} and checks the quotient is a nonnegative
/// polynomial in z^p.
ShapeReport shape_check_t1(const Series& h, std::uint64_t n, std::uint32_t p);

struct Comparison {
  bool equal = false;
  std::optional<std::size_t> first_mismatch;
  std::int64_t computed_value = 0;
  std::int64_t predicted_value = 0;

  std::string to_string() const;
};

Comparison compare(const Series& computed, const Series& predicted);

/// Coefficientwise a <= b.
bool dominated_by(const Series& a, const Series& b);

/// Product of cyclotomic factors and a cofactor, e.g. "(1+z)^4*(1+z^2)*(1+3z^2+z^4)".
std::string factored(const IntPoly& f);

/// Cyclotomic polynomial Phi_m.
IntPoly cyclotomic(unsigned m);

}  // namespace cherednik
