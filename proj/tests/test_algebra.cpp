#include <gtest/gtest.h>

#include <random>

#include "cherednik/field.hpp"
#include "cherednik/poly.hpp"

using namespace cherednik;

namespace {

std::shared_ptr<const RationalFunctionField> fc(std::uint32_t p) {
  return std::make_shared<const RationalFunctionField>(p);
}
std::shared_ptr<const PrimeField> fp(std::uint32_t p) { return std::make_shared<const PrimeField>(p, 1); }

template <class Field>
void field_axioms(std::shared_ptr<const Field> F, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = F->random(rng), b = F->random(rng), c = F->random(rng);
    EXPECT_TRUE(F->equal(F->add(F->add(a, b), c), F->add(a, F->add(b, c))));
    EXPECT_TRUE(F->equal(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c))));
    EXPECT_TRUE(F->equal(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c))));
    EXPECT_TRUE(F->equal(F->add(a, F->neg(a)), F->zero()));
    EXPECT_TRUE(F->equal(F->mul(a, b), F->mul(b, a)));
    if (!F->is_zero(a)) {
      EXPECT_TRUE(F->equal(F->mul(a, F->inv(a)), F->one()));
    }
  }
}

}  // namespace

TEST(UPoly, GcdAndDivision) {
  UPoly a(3, {-1, 0, 1});  // c^2 - 1
  UPoly b(3, {1, 1});      // c + 1
  auto [q, r] = a.divmod(b);
  EXPECT_EQ(q, UPoly(3, {-1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(UPoly::gcd(a, UPoly(3, {1, 2, 1})), b);
  EXPECT_THROW(a.exact_div(UPoly(3, {1, 0, 0, 1})), std::logic_error);
  EXPECT_THROW(a.divmod(UPoly(3)), std::domain_error);
}

TEST(UPoly, Irreducibility) {
  EXPECT_TRUE(UPoly(2, {1, 1, 1}).is_irreducible());
  EXPECT_FALSE(UPoly(2, {1, 0, 1}).is_irreducible());
  EXPECT_TRUE(UPoly(3, {1, 0, 1}).is_irreducible());
  EXPECT_FALSE(UPoly(5, {1, 0, 1}).is_irreducible());
}

TEST(Scalar, PrimeFieldCharacteristicTwo) {
  auto F = fp(2);
  Scalar<PrimeField> one(F, F->one());
  EXPECT_TRUE((one + one).is_zero());
}

TEST(Scalar, GenericInversePair) {
  auto F = fc(2);
  auto c = F->c();
  auto c1 = F->add(c, F->one());
  Scalar<RationalFunctionField> a(F, F->div(c, c1)), b(F, F->div(c1, c));
  EXPECT_EQ((a * b).to_string(), "1");
}

TEST(Scalar, GenericReducesByGcd) {
  auto F = fc(3);
  auto v = F->normalize(UPoly(3, {-1, 0, 1}), UPoly(3, {1, 1}));
  EXPECT_EQ(v.num, UPoly(3, {2, 1}));
  EXPECT_TRUE(v.den.is_one());
  EXPECT_EQ(F->format(v), "(c+2)");
}

TEST(Scalar, Errors) {
  auto F = fc(2);
  EXPECT_THROW(F->inv(F->zero()), std::domain_error);
  auto G = fc(3);
  Scalar<RationalFunctionField> a(F, F->one()), b(G, G->one());
  EXPECT_THROW(a + b, DomainMismatch);
  EXPECT_THROW(PrimeField(4), std::invalid_argument);
  EXPECT_THROW(CoeffDomain::generic(9).validate(), std::invalid_argument);
}

TEST(Scalar, FieldAxioms) {
  field_axioms(fp(2), 1);
  field_axioms(fp(7), 2);
  field_axioms(fc(2), 3);
  field_axioms(fc(3), 4);
  field_axioms(std::make_shared<const ExtensionField>(2, 5), 5);
  field_axioms(std::make_shared<const ExtensionField>(3, 6), 6);
}

TEST(Scalar, CanonicalFormUnderCommonFactor) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto F = fc(p);
    std::mt19937_64 rng(p);
    for (int trial = 0; trial < 300; ++trial) {
      auto x = F->random(rng);
      UPoly g;
      do {
        g = UPoly(p, {static_cast<std::int64_t>(rng() % p), static_cast<std::int64_t>(rng() % p),
                      static_cast<std::int64_t>(rng() % p)});
      } while (g.is_zero());
      EXPECT_EQ(F->normalize(x.num * g, x.den * g), x);
    }
  }
}

TEST(ExtensionField, SizeAndModulus) {
  ExtensionField F2(2, 1);
  EXPECT_EQ(F2.degree(), 40u);
  EXPECT_TRUE(F2.modulus().is_irreducible());
  ExtensionField F3(3, 1);
  EXPECT_EQ(F3.degree(), 26u);  // 3^25 < 2^40 <= 3^26
  // c is embedded consistently: embed(c^2 + 1) = c*c + 1.
  auto v = F3.embed(UPoly(3, {1, 0, 1}));
  EXPECT_EQ(v, F3.add(F3.mul(F3.c(), F3.c()), F3.one()));
}

TEST(Monomial, OrderAndEnumeration) {
  auto ms = monomials_of_degree(3, 2);
  ASSERT_EQ(ms.size(), 6u);
  EXPECT_EQ(ms.front().to_string(), "x1^2");
  EXPECT_EQ(ms[1].to_string(), "x1*x2");
  EXPECT_EQ(ms.back().to_string(), "x3^2");
  for (std::size_t i = 0; i + 1 < ms.size(); ++i) EXPECT_TRUE(GrlexDescending{}(ms[i], ms[i + 1]));
  EXPECT_EQ(count_monomials(4, 13), 560u);
  EXPECT_THROW(Monomial(17), std::invalid_argument);
}

TEST(Poly, ProductAtTwo) {
  auto F = fp(2);
  auto a = parse_poly("x1+x2", 4, F);
  auto b = parse_poly("x1^2+x1*x2+x2^2", 4, F);
  EXPECT_EQ((a * b).to_string(), "x1^3+x2^3");
  EXPECT_EQ((a + Poly<PrimeField>(F, 4)), a);
}

TEST(Poly, DifferenceOfSquaresAtThree) {
  auto F = fp(3);
  auto a = parse_poly("x1-x2", 2, F);
  auto b = parse_poly("x1+x2", 2, F);
  EXPECT_EQ((a * b).to_string(), "x1^2+2*x2^2");
}

TEST(Poly, SlotMismatch) {
  auto F = fp(2);
  EXPECT_THROW(parse_poly("x1", 2, F) + parse_poly("x1", 3, F), std::invalid_argument);
}

TEST(Poly, Parse) {
  auto F = fc(2);
  auto f = parse_poly("(c+1)*x1", 3, F);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.to_string(), "(c+1)*x1");
  EXPECT_THROW(parse_poly("x5", 3, F), std::invalid_argument);
  EXPECT_THROW(parse_poly("x0", 3, F), std::invalid_argument);
  EXPECT_THROW(parse_poly("(c+*x1", 3, F), std::invalid_argument);
  EXPECT_THROW(parse_poly("(1)/(0)*x1", 3, F), std::invalid_argument);
  EXPECT_THROW(parse_poly("", 3, F), std::invalid_argument);
  EXPECT_EQ(parse_poly("(c)/(c+1)*x1^2*x2 - x3", 3, F).to_string(), "(c)/(c+1)*x1^2*x2+x3");
  EXPECT_EQ(parse_poly("x1*x1", 3, F).to_string(), "x1^2");
  EXPECT_EQ(parse_poly("3", 3, fp(5)).to_string(), "3");
}

TEST(Poly, ParseFormatRoundTrip) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto F = fc(p);
    std::mt19937_64 rng(17 + p);
    for (int trial = 0; trial < 500; ++trial) {
      std::size_t slots = 1 + rng() % 5;
      auto f = random_homogeneous(F, slots, static_cast<unsigned>(rng() % 5), 1 + rng() % 6, rng);
      if (f.is_zero()) continue;
      auto text = f.to_string();
      EXPECT_EQ(parse_poly(text, slots, F), f) << text;
      EXPECT_EQ(parse_poly(text, slots, F).to_string(), text);
    }
  }
}

TEST(Poly, HomogeneityPreserved) {
  auto F = fc(3);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned d1 = rng() % 4, d2 = rng() % 4;
    auto f = random_homogeneous(F, 3, d1, 4, rng), g = random_homogeneous(F, 3, d1, 4, rng);
    auto h = random_homogeneous(F, 3, d2, 4, rng);
    EXPECT_TRUE((f + g).is_homogeneous());
    auto prod = f * h;
    EXPECT_TRUE(prod.is_homogeneous());
    if (!prod.is_zero()) EXPECT_EQ(*prod.degree(), d1 + d2);
  }
}

TEST(Poly, CComponents) {
  auto F = fc(2);
  auto parts = c_components(parse_poly("x1^2+(c)*x2^2", 2, F));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].to_string(), "x1^2");
  EXPECT_EQ(parts[1].to_string(), "x2^2");
  auto one = c_components(Poly<RationalFunctionField>::constant(F, 2, F->one()));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].to_string(), "1");
  EXPECT_THROW(c_components(parse_poly("(1)/(c)*x1", 2, F)), std::invalid_argument);
  auto f = parse_poly("(c^2+1)*x1*x2+(c)*x2^2", 2, F);
  EXPECT_EQ(from_c_components(c_components(f), F), f);
}
