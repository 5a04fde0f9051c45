#include "cherednik/poly.hpp"

namespace cherednik {

std::vector<Poly<PrimeField>> c_components(const Poly<RationalFunctionField>& f) {
  const std::uint32_t p = f.field().characteristic();
  auto base = std::make_shared<const PrimeField>(p, 0);
  std::vector<Poly<PrimeField>> parts;
  for (const auto& [m, coeff] : f.terms()) {
    if (!coeff.is_polynomial())
      throw std::invalid_argument("coefficient " + f.field().format(coeff) +
                                  " is not a polynomial in c; clear denominators first");
    const std::uint32_t scale = modp::inv(coeff.den[0], p);
    for (int k = 0; k <= coeff.num.degree(); ++k) {
      const std::uint32_t v = modp::mul(coeff.num[static_cast<std::size_t>(k)], scale, p);
      if (v == 0) continue;
      while (parts.size() <= static_cast<std::size_t>(k)) parts.emplace_back(base, f.slots());
      parts[static_cast<std::size_t>(k)].add_term(m, v);
    }
  }
  while (!parts.empty() && parts.back().is_zero()) parts.pop_back();
  return parts;
}

Poly<RationalFunctionField> from_c_components(const std::vector<Poly<PrimeField>>& parts,
                                              std::shared_ptr<const RationalFunctionField> field) {
  if (parts.empty()) throw std::invalid_argument("need at least one component to fix the slot count");
  Poly<RationalFunctionField> out(field, parts.front().slots());
  const std::uint32_t p = field->characteristic();
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (const auto& [m, v] : parts[k].terms()) out.add_term(m, field->embed(UPoly::monomial(p, v, k)));
  return out;
}

}  // namespace cherednik
