#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace cherednik {

/// Exponent vector over a fixed number of variable slots (at most kMaxSlots,
/// exponents below 256). Slot i holds the exponent of x_{i+1}.
class Monomial {
 public:
  static constexpr std::size_t kMaxSlots = 16;

  Monomial() = default;
  explicit Monomial(std::size_t slots);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(const std::vector<unsigned>& exponents);

  std::size_t size() const { return slots_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  /// Number of slots with a nonzero exponent.
  std::size_t support_size() const;
  unsigned max_exponent() const;

  Monomial operator*(const Monomial& other) const;
  /// The same exponents with one more trailing slot (exponent zero) or with
  /// the trailing slot removed (it must be zero).
  Monomial with_slots(std::size_t slots) const;

  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.slots_ == b.slots_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxSlots> exps_{};
  std::uint8_t slots_ = 0;
  std::uint16_t degree_ = 0;
};

/// Graded lexicographic order with x1 > x2 > ...; `operator()` is "a comes
/// before b" in descending order, i.e. a > b.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of total degree d in `slots` variables, graded-lex
/// descending (x1^d first).
std::vector<Monomial> monomials_of_degree(std::size_t slots, unsigned d);

/// Number of monomials of degree d in `slots` variables, C(d+slots-1, slots-1).
std::uint64_t count_monomials(std::size_t slots, unsigned d);

}  // namespace cherednik
