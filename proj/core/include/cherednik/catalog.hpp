#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cherednik/kernel.hpp"

namespace cherednik {

/// Known singular / kernel families.
enum class Family {
  quadratic,    // x_i^2 + x_i x_j + x_j^2                    t=0, p=2
  product,      // (x_j - x_k)(x_i - x_j - x_k)                t=0
  cubic,        // x_i^3 - x_i^2 x_j + x_j^3                   t=0, p=3 (kernel)
  degree_p,     // x_1^p - x_1 x_2^{p-1} + x_2^p               t=0 (kernel)
  quartic,      // c R_ij                                       t=1, p=2
  devadas_sun,  // [z^p] F(z)/(1 - x_i z)                       t=1, p | n
};

/// How a family member is certified.
enum class Certificate { singular, kernel };

struct FamilyInfo {
  Family family;
  const char* name;
  Certificate certificate;
  const char* formula;
};

const std::vector<FamilyInfo>& families();
const FamilyInfo& family_info(Family f);
/// Accepts the names listed in families(); throws std::invalid_argument.
Family parse_family(const std::string& name);

/// 1-based indices; unused ones are ignored.
struct FamilyParams {
  std::size_t i = 1;
  std::size_t j = 2;
  std::size_t k = 3;
};

class RegimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw RegimeError(what);
}

template <class Field>
void check_regime(Family f, const FamilyParams& a, const DunklContext<Field>& ctx) {
  const std::string name = family_info(f).name;
  const std::size_t n = ctx.n();
  const std::uint32_t p = ctx.p();
  auto in_range = [&](std::size_t v) { return v >= 1 && v <= n; };
  switch (f) {
    case Family::quadratic:
      require(ctx.t() == 0 && p == 2, name + " requires t=0, p=2");
      break;
    case Family::product:
      require(ctx.t() == 0, name + " requires t=0");
      require(n >= 3 && in_range(a.k) && a.k != a.i && a.k != a.j, name + " requires distinct i, j, k in 1..n");
      break;
    case Family::cubic:
      require(ctx.t() == 0 && p == 3, name + " requires t=0, p=3");
      break;
    case Family::degree_p:
      require(ctx.t() == 0 && p >= 3, name + " requires t=0 and odd p");
      break;
    case Family::quartic:
      require(ctx.t() == 1 && p == 2, name + " requires t=1, p=2");
      break;
    case Family::devadas_sun:
      require(ctx.t() == 1 && n % p == 0, name + " requires t=1 and p | n");
      require(a.i >= 1 && a.i < n, name + " requires 1 <= i <= n-1");
      return;
  }
  require(in_range(a.i) && in_range(a.j) && a.i != a.j, name + " requires distinct indices in 1..n");
}

/// binom(c, m) = c(c-1)...(c-m+1)/m! in the coefficient field, m < p.
template <class Field>
typename Field::Element binom_c(const Field& F, unsigned m) {
  auto num = F.one();
  auto den = F.one();
  for (unsigned s = 0; s < m; ++s) {
    num = F.mul(num, F.sub(F.c(), F.from_int(s)));
    den = F.mul(den, F.from_int(s + 1));
  }
  return F.div(num, den);
}

}  // namespace detail

/// Builds the family member in reduced coordinates.
template <class Field>
Poly<Field> singular_catalog(Family f, const FamilyParams& a, const DunklContext<Field>& ctx) {
  using P = Poly<Field>;
  detail::check_regime(f, a, ctx);
  const Field& F = ctx.field();
  auto x = [&](std::size_t v) { return ctx.x(v); };
  switch (f) {
    case Family::quadratic:
      return x(a.i) * x(a.i) + x(a.i) * x(a.j) + x(a.j) * x(a.j);
    case Family::product:
      return (x(a.j) - x(a.k)) * (x(a.i) - x(a.j) - x(a.k));
    case Family::cubic:
      return x(a.i).pow(3) - x(a.i).pow(2) * x(a.j) + x(a.j).pow(3);
    case Family::degree_p: {
      const unsigned p = ctx.p();
      return x(a.i).pow(p) - x(a.i) * x(a.j).pow(p - 1) + x(a.j).pow(p);
    }
    case Family::quartic: {
      P lead = x(a.i).pow(4) + x(a.i).pow(2) * x(a.j).pow(2) + x(a.j).pow(4);
      P rest = x(a.i).pow(2) * x(a.j).pow(2);
      P cubes = ctx.zero();
      for (std::size_t k = 1; k <= ctx.n(); ++k)
        if (k != a.i && k != a.j) cubes += x(k).pow(3);
      rest += (x(a.i) + x(a.j)) * cubes;
      lead.add_scaled(rest, F.c());
      return lead;
    }
    case Family::devadas_sun: {
      const unsigned p = ctx.p();
      // g(z) - 1 = prod_j (1 - x_j z) - 1, coefficients of z^0..z^p.
      std::vector<P> g(p + 1, ctx.zero());
      g[0] = P::constant(ctx.field_ptr(), ctx.slots(), F.one());
      for (std::size_t j = 1; j <= ctx.n(); ++j) {
        const P xj = x(j);
        for (unsigned s = p; s >= 1; --s) g[s] -= xj * g[s - 1];
      }
      g[0] = ctx.zero();
      auto times = [&](const std::vector<P>& u, const std::vector<P>& v) {
        std::vector<P> out(p + 1, ctx.zero());
        for (unsigned s = 0; s <= p; ++s)
          for (unsigned r = 0; r + s <= p; ++r)
            if (!u[s].is_zero() && !v[r].is_zero()) out[s + r] += u[s] * v[r];
        return out;
      };
      std::vector<P> Fz(p + 1, ctx.zero()), power(p + 1, ctx.zero());
      power[0] = P::constant(ctx.field_ptr(), ctx.slots(), F.one());
      for (unsigned m = 0; m < p; ++m) {
        const auto b = detail::binom_c(F, m);
        for (unsigned s = 0; s <= p; ++s) Fz[s].add_scaled(power[s], b);
        power = times(power, g);
      }
      P out = ctx.zero();
      const P xi = x(a.i);
      for (unsigned s = 0; s <= p; ++s) out += Fz[p - s] * xi.pow(s);
      return out;
    }
  }
  throw std::logic_error("unknown family");
}

template <class Field>
struct CatalogCheck {
  Poly<Field> polynomial;
  Certificate certificate;
  bool certified = false;
  bool raw_singular = false;
};

/// Builds the member and runs its certificate (raw singularity is always
/// reported as well).
template <class Field>
CatalogCheck<Field> certify_family(Family f, const FamilyParams& a, const DunklContext<Field>& ctx) {
  CatalogCheck<Field> out{singular_catalog(f, a, ctx), family_info(f).certificate};
  out.raw_singular = is_singular(out.polynomial, ctx);
  out.certified = out.certificate == Certificate::singular ? out.raw_singular
                                                           : is_in_kernel(out.polynomial, ctx).in_kernel;
  return out;
}

}  // namespace cherednik
