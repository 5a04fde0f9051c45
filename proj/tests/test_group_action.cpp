#include <gtest/gtest.h>

#include <random>

#include "cherednik/group_action.hpp"

using namespace cherednik;

namespace {

std::shared_ptr<const PrimeField> fp(std::uint32_t p) { return std::make_shared<const PrimeField>(p, 1); }

// Evaluates a lifted polynomial at a point of F_p^n.
std::uint32_t eval(const Poly<PrimeField>& f, const std::vector<std::uint32_t>& x) {
  const auto& F = f.field();
  std::uint32_t acc = 0;
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t v = c;
    for (std::size_t s = 0; s < m.size(); ++s) v = F.mul(v, modp::pow(x[s], m[s], F.characteristic()));
    acc = F.add(acc, v);
  }
  return acc;
}

}  // namespace

TEST(Transposition, SlotSwap) {
  auto F = fp(2);
  Substitution<PrimeField> sub(F, 3);
  EXPECT_EQ(apply_transposition(parse_poly("x1^2*x2", 2, F), {1, 2}, sub).to_string(), "x1*x2^2");
}

TEST(Transposition, SubstitutesLastVariable) {
  auto F = fp(2);
  Substitution<PrimeField> sub(F, 3);
  EXPECT_EQ(apply_transposition(parse_poly("x1", 2, F), {1, 3}, sub).to_string(), "x1+x2");
  EXPECT_THROW(apply_transposition(parse_poly("x1", 2, F), {1, 4}, sub), std::out_of_range);
  EXPECT_THROW(apply_transposition(parse_poly("x1", 2, F), {2, 2}, sub), std::invalid_argument);
}

TEST(Transposition, InvolutionAndHomomorphism) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto F = fp(p);
    std::mt19937_64 rng(p);
    for (std::size_t n : {3u, 4u, 6u}) {
      Substitution<PrimeField> sub(F, n);
      for (int trial = 0; trial < 200 / 3; ++trial) {
        auto f = random_homogeneous(F, n - 1, rng() % 5, 5, rng);
        auto g = random_homogeneous(F, n - 1, rng() % 3, 3, rng);
        std::size_t i = 1 + rng() % n, j = 1 + rng() % (n - 1);
        if (j >= i) ++j;
        auto sf = apply_transposition(f, {i, j}, sub);
        EXPECT_EQ(apply_transposition(sf, {i, j}, sub), f);
        EXPECT_EQ(apply_transposition(f * g, {i, j}, sub), sf * apply_transposition(g, {i, j}, sub));
      }
    }
  }
}

TEST(Transposition, ReductionMatchesQuotientEvaluation) {
  // The reduced form agrees with the lifted polynomial on points with
  // x_1 + ... + x_n = 0.
  auto F = fp(5);
  std::mt19937_64 rng(9);
  const std::size_t n = 4;
  Substitution<PrimeField> sub(F, n);
  for (int trial = 0; trial < 100; ++trial) {
    auto lifted = random_homogeneous(F, n, rng() % 5, 6, rng);
    auto red = sub.reduce(lifted);
    std::vector<std::uint32_t> x(n);
    std::uint32_t s = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      x[k] = rng() % 5;
      s = F->add(s, x[k]);
    }
    x[n - 1] = F->neg(s);
    std::vector<std::uint32_t> xr(x.begin(), x.end() - 1);
    EXPECT_EQ(eval(lifted, x), eval(red, xr));
  }
}

TEST(Permutation, MatchesDirectRelabelling) {
  auto F = fp(3);
  std::mt19937_64 rng(3);
  const std::size_t n = 5;
  Substitution<PrimeField> sub(F, n);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    auto f = random_homogeneous(F, n - 1, rng() % 4, 4, rng);
    // Direct: relabel x_a -> x_{perm(a)} in the lifted ring, then reduce.
    Poly<PrimeField> direct(F, n);
    const auto up = lift(f);
    for (const auto& [m, c] : up.terms()) {
      Monomial r(n);
      for (std::size_t a = 0; a < n; ++a) r.set(perm[a] - 1, m[a]);
      direct.add_term(r, c);
    }
    EXPECT_EQ(apply_permutation(f, perm, sub), sub.reduce(direct));
  }
}

TEST(DividedDifference, GeometricSum) {
  auto F = fp(2);
  Substitution<PrimeField> sub(F, 3);
  EXPECT_EQ(divided_difference(parse_poly("x1^3", 2, F), 1, 2, sub).to_string(), "x1^2+x1*x2+x2^2");
  EXPECT_TRUE(divided_difference(parse_poly("x1*x2", 2, F), 1, 2, sub).is_zero());
  EXPECT_TRUE(divided_difference(parse_poly("1", 2, F), 1, 3, sub).is_zero());
}

TEST(DividedDifference, LastIndexByHand) {
  // (x1^2 - x3^2)/(x1 - x3) = x1 + x3 = x1 + (x1 + x2) = x2 in characteristic 2.
  auto F = fp(2);
  Substitution<PrimeField> sub(F, 3);
  auto f = parse_poly("x1^2", 2, F);
  EXPECT_EQ(divided_difference(f, 1, 3, sub).to_string(), "x2");
  EXPECT_EQ(divided_difference_lifted(f, 1, 3, sub).to_string(), "x2");
}

TEST(DividedDifference, ProductIdentityInLiftedRing) {
  for (std::uint32_t p : {2u, 3u, 7u}) {
    auto F = fp(p);
    std::mt19937_64 rng(100 + p);
    for (std::size_t n : {3u, 5u}) {
      Substitution<PrimeField> sub(F, n);
      for (int trial = 0; trial < 84; ++trial) {
        auto f = random_homogeneous(F, n - 1, 1 + rng() % 5, 5, rng);
        std::size_t i = 1 + rng() % n, k = 1 + rng() % (n - 1);
        if (k >= i) ++k;
        auto q = divided_difference(f, i, k, sub);
        // (x_i - x_k) * lift(q) must equal lift(f) - sigma lift(f) modulo e_1,
        // i.e. after reduction.
        auto xi = Poly<PrimeField>::variable(F, n, i), xk = Poly<PrimeField>::variable(F, n, k);
        auto lhs = sub.reduce((xi - xk) * lift(q));
        auto rhs = sub.reduce(lift(f) - swap_variables(lift(f), i, k));
        EXPECT_EQ(lhs, rhs);
        EXPECT_EQ(q, divided_difference_lifted(f, i, k, sub));
        if (!q.is_zero()) EXPECT_EQ(*q.degree(), *f.degree() - 1);
      }
    }
  }
}

TEST(DividedDifference, PathsAgreeAwayFromLastIndex) {
  auto F = fp(3);
  std::mt19937_64 rng(77);
  Substitution<PrimeField> sub(F, 5);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_homogeneous(F, 4, rng() % 6, 6, rng);
    std::size_t i = 1 + rng() % 4, k = 1 + rng() % 3;
    if (k >= i) ++k;
    EXPECT_EQ(divided_difference(f, i, k, sub), divided_difference_lifted(f, i, k, sub));
  }
}

TEST(DividedDifference, RemainderIsAnError) {
  auto F = fp(3);
  EXPECT_THROW(divide_by_difference(parse_poly("x1^2", 2, F), 1, 2), std::logic_error);
}
