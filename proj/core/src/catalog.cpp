#include "cherednik/catalog.hpp"

namespace cherednik {

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> table{
      {Family::quadratic, "quadratic", Certificate::singular, "x_i^2+x_i*x_j+x_j^2"},
      {Family::product, "product", Certificate::singular, "(x_j-x_k)*(x_i-x_j-x_k)"},
      {Family::cubic, "cubic", Certificate::kernel, "x_i^3-x_i^2*x_j+x_j^3"},
      {Family::degree_p, "degree-p", Certificate::kernel, "x_i^p-x_i*x_j^(p-1)+x_j^p"},
      {Family::quartic, "quartic", Certificate::singular,
       "x_i^4+x_i^2*x_j^2+x_j^4+c*(x_i^2*x_j^2+(x_i+x_j)*sum_{k!=i,j} x_k^3)"},
      {Family::devadas_sun, "devadas-sun", Certificate::singular, "[z^p] F(z)/(1-x_i*z)"},
  };
  return table;
}

const FamilyInfo& family_info(Family f) {
  for (const auto& info : families())
    if (info.family == f) return info;
  throw std::logic_error("unknown family");
}

Family parse_family(const std::string& name) {
  for (const auto& info : families())
    if (name == info.name) return info.family;
  std::string known;
  for (const auto& info : families()) known += std::string(known.empty() ? "" : ", ") + info.name;
  throw std::invalid_argument("unknown family '" + name + "' (known: " + known + ")");
}

}  // namespace cherednik
