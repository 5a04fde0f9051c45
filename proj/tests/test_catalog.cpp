#include <gtest/gtest.h>

#include "cherednik/catalog.hpp"

using namespace cherednik;

namespace {

std::shared_ptr<const PrimeField> fp(std::uint32_t p) { return std::make_shared<const PrimeField>(p, 1); }
std::shared_ptr<const RationalFunctionField> fc(std::uint32_t p) {
  return std::make_shared<const RationalFunctionField>(p);
}

}  // namespace

TEST(Catalog, QuadraticMember) {
  DunklContext<PrimeField> ctx(5, 0, fp(2));
  EXPECT_EQ(singular_catalog(Family::quadratic, {1, 2}, ctx).to_string(), "x1^2+x1*x2+x2^2");
  for (std::size_t n : {5u, 7u}) {
    DunklContext<PrimeField> c(n, 0, fp(2));
    EXPECT_TRUE(certify_family(Family::quadratic, {1, 2}, c).certified);
    EXPECT_TRUE(certify_family(Family::quadratic, {2, n}, c).certified);
  }
}

TEST(Catalog, ProductMember) {
  struct Cell {
    std::uint32_t p;
    std::size_t n;
  };
  for (auto [p, n] : {Cell{3, 4}, Cell{3, 7}, Cell{5, 6}}) {
    DunklContext<PrimeField> ctx(n, 0, fp(p));
    EXPECT_TRUE(certify_family(Family::product, {1, 2, 3}, ctx).certified) << p << " " << n;
    EXPECT_TRUE(certify_family(Family::product, {n, 1, 2}, ctx).certified) << p << " " << n;
  }
}

TEST(Catalog, CubicAndDegreePAreKernelMembers) {
  DunklContext<PrimeField> c3(4, 0, fp(3));
  auto cubic = certify_family(Family::cubic, {1, 2}, c3);
  EXPECT_EQ(cubic.certificate, Certificate::kernel);
  EXPECT_TRUE(cubic.certified);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::size_t>>{{3, 4}, {5, 6}, {3, 7}}) {
    DunklContext<PrimeField> ctx(n, 0, fp(p));
    auto r = certify_family(Family::degree_p, {1, 2}, ctx);
    EXPECT_TRUE(r.certified) << p << " " << n;
    EXPECT_EQ(*r.polynomial.degree(), p);
  }
}

TEST(Catalog, QuarticMember) {
  DunklContext<RationalFunctionField> ctx(5, 1, fc(2));
  auto f = singular_catalog(Family::quartic, {1, 2}, ctx);
  // The c-free part is x1^4 + x1^2 x2^2 + x2^4.
  auto parts = c_components(f);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].to_string(), "x1^4+x1^2*x2^2+x2^4");
  EXPECT_TRUE(certify_family(Family::quartic, {1, 2}, ctx).certified);
  EXPECT_TRUE(certify_family(Family::quartic, {3, 5}, ctx).certified);
}

TEST(Catalog, DevadasSunMembers) {
  DunklContext<RationalFunctionField> ctx(4, 1, fc(2));
  for (std::size_t i = 1; i <= 3; ++i) {
    auto r = certify_family(Family::devadas_sun, {i}, ctx);
    EXPECT_TRUE(r.certified) << i;
    EXPECT_EQ(*r.polynomial.degree(), 2u);
  }
  DunklContext<RationalFunctionField> c3(3, 1, fc(3));
  EXPECT_TRUE(certify_family(Family::devadas_sun, {1}, c3).certified);
}

TEST(Catalog, DevadasSunAtP2N4ByHand) {
  // p=2: F(z) = 1 + c(g(z)-1), so f_i = [z^2](1 + c(g-1))/(1 - x_i z)
  //      = x_i^2 + c(e2 - e1 x_i) with e1 = 0 in reduced coordinates.
  auto F = fc(2);
  DunklContext<RationalFunctionField> ctx(4, 1, F);
  Poly<RationalFunctionField> e2(F, 3);
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = a + 1; b <= 4; ++b) e2 += ctx.x(a) * ctx.x(b);
  auto expect = ctx.x(1) * ctx.x(1);
  expect.add_scaled(e2, F->c());
  EXPECT_EQ(singular_catalog(Family::devadas_sun, {1}, ctx), expect);
}

TEST(Catalog, RegimeErrors) {
  DunklContext<PrimeField> t0p3(4, 0, fp(3));
  EXPECT_THROW(singular_catalog(Family::quadratic, {1, 2}, t0p3), RegimeError);
  EXPECT_THROW(singular_catalog(Family::quartic, {1, 2}, t0p3), RegimeError);
  EXPECT_THROW(singular_catalog(Family::devadas_sun, {1}, t0p3), RegimeError);
  EXPECT_THROW(singular_catalog(Family::product, {1, 1, 2}, t0p3), RegimeError);
  EXPECT_THROW(singular_catalog(Family::product, {1, 2, 5}, t0p3), RegimeError);
  DunklContext<RationalFunctionField> t1(5, 1, fc(2));
  EXPECT_THROW(singular_catalog(Family::devadas_sun, {1}, t1), RegimeError);
  DunklContext<RationalFunctionField> t1n4(4, 1, fc(2));
  EXPECT_THROW(singular_catalog(Family::devadas_sun, {4}, t1n4), RegimeError);
  try {
    singular_catalog(Family::cubic, {1, 2}, DunklContext<PrimeField>(4, 0, fp(2)));
    FAIL();
  } catch (const RegimeError& e) {
    EXPECT_NE(std::string(e.what()).find("p=3"), std::string::npos);
  }
}

TEST(Catalog, Names) {
  for (const auto& info : families()) EXPECT_EQ(parse_family(info.name), info.family);
  EXPECT_THROW(parse_family("nope"), std::invalid_argument);
}

TEST(Catalog, DegreePReportsRawSingularity) {
  // Kernel membership holds, raw singularity is reported separately.
  DunklContext<PrimeField> ctx(4, 0, fp(3));
  auto r = certify_family(Family::degree_p, {1, 2}, ctx);
  EXPECT_TRUE(r.certified);
  RecordProperty("raw_singular", r.raw_singular ? "true" : "false");
}
