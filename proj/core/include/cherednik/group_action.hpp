#pragma once

#include <cstddef>
#include <memory>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "cherednik/poly.hpp"

namespace cherednik {

/// Transposition (i j) of S_n, 1-based; either index may equal n.
struct Transposition {
  std::size_t i = 1;
  std::size_t j = 2;

  void validate(std::size_t n) const {
    if (i == 0 || j == 0 || i > n || j > n)
      throw std::out_of_range("transposition (" + std::to_string(i) + " " + std::to_string(j) +
                              ") outside 1.." + std::to_string(n));
    if (i == j) throw std::invalid_argument("transposition needs distinct indices");
  }
};

/// Powers of x_n = -(x_1+...+x_{n-1}) in the reduced ring, computed on
/// demand and shared between calls. Thread-safe.
template <class Field>
class Substitution {
 public:
  using P = Poly<Field>;

  Substitution(std::shared_ptr<const Field> field, std::size_t n) : field_(std::move(field)), n_(n) {
    if (n_ < 2) throw std::invalid_argument("need n >= 2");
    powers_.push_back(P::constant(field_, n_ - 1, field_->one()));
    P xn(field_, n_ - 1);
    for (std::size_t s = 1; s < n_; ++s) xn.add_term(unit(s - 1), field_->neg(field_->one()));
    powers_.push_back(xn);
  }

  std::size_t n() const { return n_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }

  /// (x_n)^m expressed in x_1..x_{n-1}.
  const P& power(unsigned m) const {
    std::lock_guard<std::mutex> lock(mutex_);
    while (powers_.size() <= m) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[m];
  }

  /// Maps a polynomial in x_1..x_n to reduced form.
  P reduce(const P& lifted) const {
    if (lifted.slots() != n_) throw std::invalid_argument("reduce expects n slots");
    P out(field_, n_ - 1);
    for (const auto& [m, coeff] : lifted.terms()) {
      const unsigned a = m[n_ - 1];
      Monomial rest = m;
      rest.set(n_ - 1, 0);
      rest = rest.with_slots(n_ - 1);
      if (a == 0) {
        out.add_term(rest, coeff);
      } else {
        for (const auto& [pm, pc] : power(a).terms()) out.add_term(pm * rest, field_->mul(coeff, pc));
      }
    }
    return out;
  }

 private:
  Monomial unit(std::size_t slot) const {
    Monomial m(n_ - 1);
    m.set(slot, 1);
    return m;
  }

  std::shared_ptr<const Field> field_;
  std::size_t n_;
  mutable std::mutex mutex_;
  mutable std::deque<P> powers_;
};

/// Embeds a reduced polynomial (n-1 slots) into x_1..x_n.
template <class Field>
Poly<Field> lift(const Poly<Field>& f) {
  Poly<Field> out(f.field_ptr(), f.slots() + 1);
  for (const auto& [m, c] : f.terms()) out.add_term(m.with_slots(f.slots() + 1), c);
  return out;
}

/// Swaps variables x_i and x_k (1-based) of a polynomial, no substitution.
template <class Field>
Poly<Field> swap_variables(const Poly<Field>& f, std::size_t i, std::size_t k) {
  if (i == 0 || k == 0 || i > f.slots() || k > f.slots()) throw std::out_of_range("variable index out of range");
  Poly<Field> out(f.field_ptr(), f.slots());
  for (const auto& [m, c] : f.terms()) {
    Monomial s = m;
    s.set(i - 1, m[k - 1]);
    s.set(k - 1, m[i - 1]);
    out.add_term(s, c);
  }
  return out;
}

/// sigma_{ij} acting on a reduced polynomial of S_n.
template <class Field>
Poly<Field> apply_transposition(const Poly<Field>& f, Transposition s, const Substitution<Field>& sub) {
  const std::size_t n = sub.n();
  s.validate(n);
  if (f.slots() != n - 1) throw std::invalid_argument("polynomial must have n-1 slots");
  if (s.i < n && s.j < n) return swap_variables(f, s.i, s.j);
  const std::size_t i = s.i == n ? s.j : s.i;
  return sub.reduce(swap_variables(lift(f), i, n));
}

template <class Field>
Poly<Field> apply_transposition(const Poly<Field>& f, Transposition s, std::size_t n) {
  return apply_transposition(f, s, Substitution<Field>(f.field_ptr(), n));
}

/// Applies the permutation i -> perm[i-1] (1-based images) as a product of
/// transpositions.
template <class Field>
Poly<Field> apply_permutation(const Poly<Field>& f, const std::vector<std::size_t>& perm,
                              const Substitution<Field>& sub) {
  const std::size_t n = sub.n();
  if (perm.size() != n) throw std::invalid_argument("permutation length must equal n");
  std::vector<bool> seen(n + 1, false);
  for (std::size_t v : perm) {
    if (v == 0 || v > n || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  // Decompose into transpositions acting on positions: w = t_1 t_2 ... t_m.
  std::vector<std::size_t> cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = i + 1;
  std::vector<Transposition> word;
  for (std::size_t i = 0; i < n; ++i) {
    if (cur[i] == perm[i]) continue;
    std::size_t j = i + 1;
    while (cur[j] != perm[i]) ++j;
    std::swap(cur[i], cur[j]);
    word.push_back({i + 1, j + 1});
  }
  // x_a -> x_{perm(a)} equals applying the swaps last-to-first.
  Poly<Field> out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_transposition(out, *it, sub);
  return out;
}

/// (m - sigma_{ik} m)/(x_i - x_k) for a monomial with both variables present
/// as slots, as a geometric sum. Calls emit(monomial, sign) with sign +-1.
template <class Emit>
void monomial_divided_difference(const Monomial& m, std::size_t i, std::size_t k, Emit&& emit) {
  const unsigned a = m[i - 1], b = m[k - 1];
  if (a == b) return;
  const unsigned lo = a < b ? a : b, hi = a < b ? b : a;
  const std::size_t top = a > b ? i : k, bottom = a > b ? k : i;
  const int sign = a > b ? 1 : -1;
  // x_i^b x_k^b (x_top^{d} - x_bottom^{d}) / (x_top - x_bottom), d = hi - lo.
  Monomial base = m;
  base.set(i - 1, lo);
  base.set(k - 1, lo);
  const unsigned d = hi - lo;
  for (unsigned s = 0; s < d; ++s) {
    Monomial t = base;
    t.set(top - 1, lo + s);
    t.set(bottom - 1, lo + d - 1 - s);
    emit(t, sign);
  }
}

/// Divided difference in a ring where x_i, x_k are both actual slots.
template <class Field>
Poly<Field> divided_difference_full(const Poly<Field>& f, std::size_t i, std::size_t k) {
  if (i == 0 || k == 0 || i > f.slots() || k > f.slots()) throw std::out_of_range("variable index out of range");
  if (i == k) throw std::invalid_argument("divided difference needs distinct indices");
  const Field& F = f.field();
  Poly<Field> out(f.field_ptr(), f.slots());
  for (const auto& [m, c] : f.terms())
    monomial_divided_difference(m, i, k, [&](const Monomial& t, int sign) { out.add_term(t, sign > 0 ? c : F.neg(c)); });
  return out;
}

/// Exact quotient g/(x_i - x_k) by synthetic division in x_i; throws
/// std::logic_error if the remainder is nonzero.
template <class Field>
Poly<Field> divide_by_difference(const Poly<Field>& g, std::size_t i, std::size_t k) {
  const Field& F = g.field();
  // Group terms by the exponent vector with x_i removed; each group is a
  // univariate polynomial in x_i whose coefficients are multiples of
  // powers of x_k. Divide term by term from the top: q_{e-1} = g_e + x_k q_e.
  Poly<Field> rem = g;
  Poly<Field> quotient(g.field_ptr(), g.slots());
  while (!rem.is_zero()) {
    // Pick a term with maximal x_i exponent.
    auto best = rem.terms().begin();
    for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it)
      if (it->first[i - 1] > best->first[i - 1]) best = it;
    const Monomial m = best->first;
    const auto c = best->second;
    if (m[i - 1] == 0) throw std::logic_error("divided difference left a nonzero remainder");
    Monomial q = m;
    q.set(i - 1, m[i - 1] - 1);
    quotient.add_term(q, c);
    // rem -= c * q * (x_i - x_k)
    Monomial qk = q;
    qk.set(k - 1, q[k - 1] + 1);
    rem.add_term(m, F.neg(c));
    rem.add_term(qk, c);
  }
  return quotient;
}

/// (f - sigma_{ik} f)/(x_i - x_k) on a reduced polynomial of S_n, by the
/// geometric-sum closed form. Degree-0 input gives 0.
template <class Field>
Poly<Field> divided_difference(const Poly<Field>& f, std::size_t i, std::size_t k, const Substitution<Field>& sub) {
  const std::size_t n = sub.n();
  Transposition{i, k}.validate(n);
  if (f.slots() != n - 1) throw std::invalid_argument("polynomial must have n-1 slots");
  if (i < n && k < n) return divided_difference_full(f, i, k);
  const Field& F = f.field();
  // (f - sigma_{in} f)/(x_i - x_n) = sum over terms rest * sum_s x_i^s x_n^{a-1-s}.
  const std::size_t a_idx = i == n ? k : i;
  const bool flip = i == n;  // (f - sigma f)/(x_n - x_i) = -(...)/(x_i - x_n)
  Poly<Field> out(f.field_ptr(), f.slots());
  for (const auto& [m, c] : f.terms()) {
    const unsigned a = m[a_idx - 1];
    if (a == 0) continue;
    Monomial rest = m;
    rest.set(a_idx - 1, 0);
    const auto coeff = flip ? F.neg(c) : c;
    for (unsigned s = 0; s < a; ++s) {
      Monomial base = rest;
      base.set(a_idx - 1, s);
      for (const auto& [pm, pc] : sub.power(a - 1 - s).terms()) out.add_term(pm * base, F.mul(coeff, pc));
    }
  }
  return out;
}

template <class Field>
Poly<Field> divided_difference(const Poly<Field>& f, std::size_t i, std::size_t k, std::size_t n) {
  return divided_difference(f, i, k, Substitution<Field>(f.field_ptr(), n));
}

/// Independent path: lift to x_1..x_n, subtract sigma_{ik}, divide by
/// (x_i - x_k) synthetically, reduce.
template <class Field>
Poly<Field> divided_difference_lifted(const Poly<Field>& f, std::size_t i, std::size_t k,
                                      const Substitution<Field>& sub) {
  Transposition{i, k}.validate(sub.n());
  Poly<Field> up = lift(f);
  Poly<Field> diff = up - swap_variables(up, i, k);
  return sub.reduce(divide_by_difference(diff, i, k));
}

}  // namespace cherednik
