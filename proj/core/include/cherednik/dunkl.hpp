#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cherednik/group_action.hpp"

namespace cherednik {

/// Parameters of the polynomial representation of H_{t,c}(S_n, h): the
/// rank n, t in {0,1}, and the coefficient field (which fixes p and c).
template <class Field>
class DunklContext {
 public:
  using P = Poly<Field>;
  using FieldPtr = std::shared_ptr<const Field>;

  DunklContext(std::size_t n, int t, FieldPtr field)
      : n_(n), t_(t), field_(field), sub_(std::make_shared<Substitution<Field>>(field, n)) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (n > Monomial::kMaxSlots) throw std::invalid_argument("n exceeds the supported maximum of 16");
    if (t != 0 && t != 1) throw std::invalid_argument("t must be 0 or 1");
  }

  std::size_t n() const { return n_; }
  int t() const { return t_; }
  std::uint32_t p() const { return field_->characteristic(); }
  /// n mod p.
  std::size_t r() const { return n_ % p(); }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Substitution<Field>& substitution() const { return *sub_; }
  std::size_t slots() const { return n_ - 1; }

  /// Fault injection for self-tests: D_{y_i} silently drops the reflection
  /// term with the largest k.
  void set_mutation(bool drop_reflection) { mutated_ = drop_reflection; }
  bool mutated() const { return mutated_; }

  P zero() const { return P(field_, slots()); }

  /// x_a as a reduced polynomial (x_n = -(x_1+...+x_{n-1})).
  P x(std::size_t a) const {
    check_index(a);
    if (a < n_) return P::variable(field_, slots(), a);
    return sub_->power(1);
  }

  P sigma(const P& f, std::size_t i, std::size_t j) const { return apply_transposition(f, {i, j}, *sub_); }

  /// D_{y_i} f = t d_i f - c sum_{k != i} (f - sigma_{ik} f)/(x_i - x_k).
  P dunkl(const P& f, std::size_t i) const {
    check_index(i);
    check_poly(f);
    P out = t_ == 1 ? partial(f, i) : zero();
    out.add_scaled(reflection_sum(f, i), field_->neg(field_->c()));
    return out;
  }

  /// D_{y_i - y_j} f.
  P dunkl_difference(const P& f, std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    if (i == j) return zero();
    return dunkl(f, i) - dunkl(f, j);
  }

  /// (alpha, beta) with D_{y_i - y_j} f = alpha + c * beta, where
  /// alpha = (d_i - d_j) f and beta collects the reflection terms.
  std::pair<P, P> dunkl_parts(const P& f, std::size_t i, std::size_t j) const {
    if (t_ != 1) throw std::logic_error("alpha/beta decomposition requires t = 1");
    return parts_unchecked(f, i, j);
  }

  /// Same as dunkl_parts but without the t = 1 guard; alpha is the
  /// derivative part before multiplication by t.
  std::pair<P, P> parts_unchecked(const P& f, std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    check_poly(f);
    if (i == j) return {zero(), zero()};
    P alpha = partial(f, i) - partial(f, j);
    P beta = reflection_sum(f, j) - reflection_sum(f, i);
    return {std::move(alpha), std::move(beta)};
  }

  /// D_{y_i - y_j} on a polynomial in x_1..x_n (no substitution). The
  /// operator preserves the ideal (x_1+...+x_n).
  P dunkl_lifted(const P& f, std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    if (f.slots() != n_) throw std::invalid_argument("lifted polynomial must have n slots");
    P out(field_, n_);
    if (i == j) return out;
    if (t_ == 1) {
      out += derivative(f, i);
      out -= derivative(f, j);
    }
    P refl(field_, n_);
    for (std::size_t k = 1; k <= n_; ++k) {
      if (k != i) refl -= divided_difference_full(f, i, k);
      if (k != j) refl += divided_difference_full(f, j, k);
    }
    out.add_scaled(refl, field_->c());
    return out;
  }

  /// D_{y_i} on a polynomial in x_1..x_n (no substitution).
  P dunkl_single_lifted(const P& f, std::size_t i) const {
    check_index(i);
    if (f.slots() != n_) throw std::invalid_argument("lifted polynomial must have n slots");
    const Field& F = *field_;
    std::unordered_map<Monomial, typename Field::Element, MonomialHash> acc;
    acc.reserve(f.size() * n_);
    for (const auto& [m, coef] : f.terms()) {
      const auto minus = F.neg(coef);
      for (std::size_t k = 1; k <= n_; ++k) {
        if (k == i) continue;
        monomial_divided_difference(m, i, k, [&](const Monomial& t, int sign) {
          auto [it, fresh] = acc.try_emplace(t, sign > 0 ? coef : minus);
          if (!fresh) it->second = F.add(it->second, sign > 0 ? coef : minus);
        });
      }
    }
    P refl(field_, n_);
    for (const auto& [m, v] : acc) refl.add_term(m, v);
    P out = t_ == 1 ? derivative(f, i) : P(field_, n_);
    out.add_scaled(refl, F.neg(F.c()));
    return out;
  }

  /// Applies D_{y_i - y_j} to every polynomial, splitting the batch over
  /// `threads` workers.
  std::vector<P> apply_batch(const std::vector<P>& fs, std::size_t i, std::size_t j, unsigned threads = 1) const {
    std::vector<std::optional<P>> out(fs.size());
    auto work = [&](std::size_t begin, std::size_t step) {
      for (std::size_t k = begin; k < fs.size(); k += step) out[k] = dunkl_difference(fs[k], i, j);
    };
    if (threads <= 1 || fs.size() < 2) {
      work(0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
    }
    std::vector<P> result;
    result.reserve(fs.size());
    for (auto& o : out) result.push_back(std::move(*o));
    return result;
  }

 private:
  void check_index(std::size_t i) const {
    if (i == 0 || i > n_)
      throw std::out_of_range("Dunkl index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  }
  void check_poly(const P& f) const {
    if (f.slots() != slots()) throw std::invalid_argument("polynomial must have n-1 slots");
  }

  /// d_i on reduced representatives; d_n acts as zero.
  P partial(const P& f, std::size_t i) const { return i == n_ ? zero() : derivative(f, i); }

  /// sum_{k != i} (f - sigma_{ik} f)/(x_i - x_k).
  P reflection_sum(const P& f, std::size_t i) const {
    P out = zero();
    std::size_t last = i == n_ ? n_ - 1 : n_;
    for (std::size_t k = 1; k <= n_; ++k) {
      if (k == i || (mutated_ && k == last)) continue;
      out += divided_difference(f, i, k, *sub_);
    }
    return out;
  }

  std::size_t n_;
  int t_;
  FieldPtr field_;
  std::shared_ptr<Substitution<Field>> sub_;
  bool mutated_ = false;
};

/// One term of a Dunkl image of a monomial: D m = sum (alpha + c*beta) mono,
/// with alpha, beta in F_p.
struct ImageTerm {
  Monomial monomial;
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
};

/// D_{y_i - y_j} on single reduced monomials with F_p coefficients, split into
/// the derivative part alpha (before multiplication by t) and the reflection
/// part beta. Computed in x_1..x_n and reduced once at the end. Thread-safe.
class MonomialDunkl {
 public:
  MonomialDunkl(std::size_t n, std::uint32_t p)
      : n_(n), field_(std::make_shared<const PrimeField>(p, 0)), sub_(field_, n) {}

  std::size_t n() const { return n_; }
  std::uint32_t p() const { return field_->characteristic(); }

  /// Terms in graded-lex descending order.
  std::vector<ImageTerm> image(const Monomial& m, std::size_t i, std::size_t j) const {
    if (m.size() != n_ - 1) throw std::invalid_argument("monomial must have n-1 slots");
    if (i == 0 || j == 0 || i > n_ || j > n_) throw std::out_of_range("Dunkl index out of range");
    std::vector<ImageTerm> out;
    if (i == j) return out;
    const PrimeField& F = *field_;
    const Monomial up = m.with_slots(n_);
    Poly<PrimeField> alpha(field_, n_ - 1), beta_lifted(field_, n_);
    auto add_partial = [&](std::size_t a, std::uint32_t sign) {
      if (a == n_ || m[a - 1] == 0) return;
      Monomial d = m;
      d.set(a - 1, m[a - 1] - 1);
      alpha.add_term(d, F.mul(sign, F.from_int(m[a - 1])));
    };
    add_partial(i, 1);
    add_partial(j, F.neg(1));
    const std::uint32_t minus = F.neg(1);
    for (std::size_t k = 1; k <= n_; ++k) {
      if (k != i)
        monomial_divided_difference(up, i, k, [&](const Monomial& t, int s) { beta_lifted.add_term(t, s > 0 ? minus : 1); });
      if (k != j)
        monomial_divided_difference(up, j, k, [&](const Monomial& t, int s) { beta_lifted.add_term(t, s > 0 ? 1 : minus); });
    }
    const Poly<PrimeField> beta = sub_.reduce(beta_lifted);
    auto ia = alpha.terms().begin(), ib = beta.terms().begin();
    GrlexDescending before;
    while (ia != alpha.terms().end() || ib != beta.terms().end()) {
      if (ib == beta.terms().end() || (ia != alpha.terms().end() && before(ia->first, ib->first))) {
        out.push_back({ia->first, ia->second, 0});
        ++ia;
      } else if (ia == alpha.terms().end() || before(ib->first, ia->first)) {
        out.push_back({ib->first, 0, ib->second});
        ++ib;
      } else {
        out.push_back({ia->first, ia->second, ib->second});
        ++ia;
        ++ib;
      }
    }
    return out;
  }

 private:
  std::size_t n_;
  std::shared_ptr<const PrimeField> field_;
  Substitution<PrimeField> sub_;
};

/// Outcome of a commutator self-test.
struct CommutatorReport {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string counterexample;  // empty when all checks pass

  bool passed() const { return failures == 0; }
};

/// Checks [D_{y_i - y_j}, x_a] against the defining relations of H_{t,c} on
/// random homogeneous polynomials of degree 0..max_degree. Each trial picks
/// a random f, a random pair i != j and tests every a in 1..n.
template <class Field>
CommutatorReport check_commutators(const DunklContext<Field>& ctx, unsigned max_degree, std::size_t trials,
                                   std::uint64_t seed = 1) {
  using P = Poly<Field>;
  const Field& F = ctx.field();
  const std::size_t n = ctx.n();
  const auto c = F.c();
  const auto t = F.from_int(ctx.t());
  std::mt19937_64 rng(seed);
  CommutatorReport report;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const unsigned d = static_cast<unsigned>(rng() % (max_degree + 1));
    const P f = random_homogeneous(ctx.field_ptr(), ctx.slots(), d, 1 + rng() % 4, rng);
    const std::size_t i = 1 + rng() % n;
    std::size_t j = 1 + rng() % (n - 1);
    if (j >= i) ++j;
    const P dif = ctx.dunkl_difference(f, i, j);
    for (std::size_t a = 1; a <= n; ++a) {
      const P xa = ctx.x(a);
      const P lhs = ctx.dunkl_difference(xa * f, i, j) - xa * dif;
      P rhs = ctx.zero();
      auto refl_sum = [&](std::size_t u) {
        P s = ctx.zero();
        for (std::size_t k = 1; k <= n; ++k)
          if (k != u) s += ctx.sigma(f, u, k);
        return s;
      };
      if (a == i) {
        rhs = f.scaled(t);
        rhs.add_scaled(ctx.sigma(f, i, j), F.neg(c));
        rhs.add_scaled(refl_sum(i), F.neg(c));
      } else if (a == j) {
        rhs = f.scaled(F.neg(t));
        rhs.add_scaled(ctx.sigma(f, i, j), c);
        rhs.add_scaled(refl_sum(j), c);
      } else {
        rhs.add_scaled(ctx.sigma(f, i, a), c);
        rhs.add_scaled(ctx.sigma(f, j, a), F.neg(c));
      }
      ++report.checks;
      if (!(lhs == rhs)) {
        ++report.failures;
        if (report.counterexample.empty())
          report.counterexample = "n=" + std::to_string(n) + " t=" + std::to_string(ctx.t()) + " (i,j,a)=(" +
                                  std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(a) +
                                  ") f=" + f.to_string() + " lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
      }
    }
  }
  return report;
}

}  // namespace cherednik
