#include <gtest/gtest.h>

#include "cherednik/hilbert.hpp"

using namespace cherednik;

namespace {

IntPoly I(std::initializer_list<std::int64_t> c) { return IntPoly(c); }

}  // namespace

TEST(IntPoly, ArithmeticAndFormatting) {
  EXPECT_EQ(I({1, 1}) * I({1, -1}), I({1, 0, -1}));
  EXPECT_EQ(I({1, 2, 0, 0}).coeffs().size(), 2u);
  EXPECT_EQ(I({1, 1}).pow(3), I({1, 3, 3, 1}));
  EXPECT_EQ(I({1, 2}).dilate(3), I({1, 0, 0, 2}));
  EXPECT_EQ(I({1, 0, -1}).exact_div(I({1, -1})), I({1, 1}));
  EXPECT_THROW(I({1, 0, 1}).exact_div(I({1, 1})), std::logic_error);
  EXPECT_THROW(I({1}).divmod(I({1, 2})), std::invalid_argument);
  EXPECT_EQ(I({1, 3, 1}).to_string(), "1+3z+z^2");
  EXPECT_EQ(I({0, -1, 0, 2}).to_string(), "-z+2z^3");
  EXPECT_EQ(IntPoly{}.to_string(), "0");
}

TEST(QBracket, Examples) {
  EXPECT_EQ(q_bracket(3), I({1, 1, 1}));
  EXPECT_EQ(q_bracket(0), IntPoly{});
  EXPECT_EQ(q_factorial(0), I({1}));
  EXPECT_EQ(q_factorial(3), I({1, 2, 2, 1}));
}

TEST(Binomial, Conventions) {
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(-3, 0), 1);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(-1, 3), -1);
  EXPECT_EQ(binomial(-2, 2), 3);
  EXPECT_EQ(binomial(2, 5), 0);
}

TEST(QrPolynomial, Examples) {
  EXPECT_EQ(q_r_polynomial(CongruenceData::of(5, 2)), I({1, 3, 1}));
  for (std::uint64_t n : {3u, 6u, 9u}) EXPECT_EQ(q_r_polynomial(CongruenceData::of(n, 3)), I({1}));
  for (std::uint64_t n : {4u, 7u, 10u, 13u})
    EXPECT_EQ(q_r_polynomial(CongruenceData::of(n, 3)), I({1, static_cast<std::int64_t>(n) - 2, 1}));
}

TEST(Congruence, Decomposition) {
  auto c = CongruenceData::of(17, 5);
  EXPECT_EQ(c.k, 3u);
  EXPECT_EQ(c.r, 2u);
  EXPECT_EQ(c.k * c.p + c.r, c.n);
  EXPECT_THROW(CongruenceData::of(4, 1), std::invalid_argument);
}

TEST(Conjecture, TZeroP2N5) {
  const auto s = conjectured_hilbert(CongruenceData::of(5, 2), 0);
  EXPECT_EQ(s.poly, I({1, 4, 4, 1}));
  EXPECT_EQ(conjectured_hilbert(CongruenceData::of(5, 2), 0, ConjectureVariant::as_printed).poly, s.poly);
}

TEST(Conjecture, TZeroShape) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::uint64_t n = 2; n <= 20; ++n) {
      const auto cong = CongruenceData::of(n, p);
      const auto s = conjectured_hilbert(cong, 0);
      if (cong.r == 1) {
        EXPECT_EQ(s.poly.degree(), static_cast<int>(p) + 1);
        EXPECT_EQ(s.poly.sum(), static_cast<std::int64_t>(p * n));
        EXPECT_EQ(s.poly.coeffs().back(), 1);
      }
      // Leading coefficient C(n-1, r-1) comes from Q_r.
      EXPECT_EQ(s.poly.coeffs().back(), cong.r == 0 ? 1 : binomial(static_cast<std::int64_t>(n) - 1, cong.r - 1))
          << "p=" << p << " n=" << n;
    }
}

TEST(Conjecture, VariantsCoincideForP2R1) {
  for (std::uint64_t n : {3u, 5u, 7u, 9u}) {
    const auto cong = CongruenceData::of(n, 2);
    const auto a = conjectured_hilbert(cong, 1, ConjectureVariant::as_printed);
    const auto b = conjectured_hilbert(cong, 1, ConjectureVariant::remark_consistent);
    EXPECT_EQ(a.poly, b.poly);
    EXPECT_EQ(a.provenance, Provenance::conjecture_as_printed);
    EXPECT_EQ(b.provenance, Provenance::conjecture_remark_consistent);
    EXPECT_EQ(a.poly, theorem_hilbert(cong, 1)->poly);
  }
}

TEST(Conjecture, VariantsDifferByBracketForP3R1) {
  const auto cong = CongruenceData::of(4, 3);
  const auto a = conjectured_hilbert(cong, 1, ConjectureVariant::as_printed);
  const auto b = conjectured_hilbert(cong, 1, ConjectureVariant::remark_consistent);
  EXPECT_NE(a.poly, b.poly);
  EXPECT_EQ(a.poly, b.poly * I({1, 0, 0, 1}));
}

TEST(Conjecture, RZeroRemarkVariant) {
  // [p]_z^{n-1} [p]_{z^p}.
  const auto cong = CongruenceData::of(4, 2);
  const auto b = conjectured_hilbert(cong, 1);
  EXPECT_EQ(b.poly, I({1, 1}).pow(3) * I({1, 0, 1}));
  EXPECT_NE(b.poly, theorem_hilbert(cong, 1)->poly);
}

TEST(Theorems, ClosedForms) {
  EXPECT_EQ(theorem_hilbert(CongruenceData::of(5, 2), 0)->poly, I({1, 4, 4, 1}));
  EXPECT_EQ(theorem_hilbert(CongruenceData::of(7, 3), 0)->poly, I({1, 1, 1}) * I({1, 5, 1}));
  EXPECT_EQ(theorem_hilbert(CongruenceData::of(3, 2), 1)->poly,
            I({1, 1}).pow(2) * I({1, 0, 2, 0, 2, 0, 1}));
  EXPECT_EQ(theorem_hilbert(CongruenceData::of(4, 2), 1)->poly, I({1, 1}).pow(3));
  EXPECT_FALSE(theorem_hilbert(CongruenceData::of(5, 3), 0).has_value());
  EXPECT_FALSE(theorem_hilbert(CongruenceData::of(4, 3), 1).has_value());
  EXPECT_EQ(theorem_regime(CongruenceData::of(5, 3), 0), "");
}

TEST(BabyVerma, Examples) {
  EXPECT_EQ(baby_verma_series(3, 2, 0).poly, I({1, 1}) * I({1, 1, 1}));
  EXPECT_EQ(baby_verma_series(2, 5, 0).poly, I({1, 1}));
  for (std::uint64_t n = 2; n <= 8; ++n)
    for (int t : {0, 1}) EXPECT_EQ(baby_verma_series(n, 3, t).poly[0], 1);
  // Total dimension n! p^{n-1} at t=1.
  EXPECT_EQ(baby_verma_series(4, 2, 1).poly.sum(), 24 * 8);
}

TEST(Shape, InnerPolynomial) {
  const Series n5 = computed_series({1, 4, 10, 20, 29, 32, 29, 20, 10, 4, 1});
  auto rep = shape_check_t1(n5, 5, 2);
  ASSERT_TRUE(rep.ok) << rep.message;
  EXPECT_EQ(rep.inner, I({1, 4, 4, 1}));
  auto rep3 = shape_check_t1(Series{I({1, 1}).pow(2) * I({1, 0, 2, 0, 2, 0, 1})}, 3, 2);
  ASSERT_TRUE(rep3.ok);
  EXPECT_EQ(rep3.inner, I({1, 2, 2, 1}));
  auto ds = shape_check_t1(Series{q_bracket(3).pow(5)}, 6, 3);
  ASSERT_TRUE(ds.ok);
  EXPECT_EQ(ds.inner, I({1}));
}

TEST(Shape, Failures) {
  EXPECT_FALSE(shape_check_t1(Series{I({1, 2})}, 3, 2).ok);
  EXPECT_FALSE(shape_check_t1(Series{I({1, 1}) * I({1, 1, 1})}, 2, 2).ok);
  EXPECT_FALSE(shape_check_t1(Series{I({1, 1}) * I({1, 0, -1})}, 2, 2).ok);
}

TEST(Compare, Verdicts) {
  const Series a = computed_series({1, 4, 4, 1});
  EXPECT_TRUE(compare(a, a).equal);
  EXPECT_EQ(compare(a, a).to_string(), "equal");
  const auto c = compare(a, Series{I({1, 4, 5, 1})});
  EXPECT_FALSE(c.equal);
  EXPECT_EQ(*c.first_mismatch, 2u);
  EXPECT_EQ(c.to_string(), "mismatch at degree 2: computed 4, predicted 5");
  EXPECT_FALSE(compare(a, Series{I({1, 4, 4, 1, 1})}).equal);
}

TEST(Compare, Dominance) {
  EXPECT_TRUE(dominated_by(computed_series({1, 4, 4, 1}), baby_verma_series(5, 2, 0)));
  EXPECT_FALSE(dominated_by(computed_series({1, 9}), baby_verma_series(3, 2, 0)));
}

TEST(Factored, CyclotomicSplitting) {
  EXPECT_EQ(cyclotomic(1), I({-1, 1}));
  EXPECT_EQ(cyclotomic(6), I({1, -1, 1}));
  EXPECT_EQ(factored(I({1, 1}).pow(4) * I({1, 0, 4, 0, 4, 0, 1})), "(1+z)^4*(1+z^2)*(1+3z^2+z^4)");
  EXPECT_EQ(factored(I({1, 4, 4, 1})), "(1+z)*(1+3z+z^2)");
  EXPECT_EQ(factored(I({1})), "1");
  EXPECT_EQ(factored(I({1, 1, 1}) * I({1, 5, 1})), "(1+z+z^2)*(1+5z+z^2)");
  EXPECT_EQ(factored(I({2, 2})), "(1+z)*(2)");
}
