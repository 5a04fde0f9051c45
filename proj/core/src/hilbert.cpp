#include "cherednik/hilbert.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace cherednik {

IntPoly::IntPoly(std::initializer_list<std::int64_t> c) : c_(c) { trim(); }
IntPoly::IntPoly(std::vector<std::int64_t> c) : c_(std::move(c)) { trim(); }

IntPoly IntPoly::monomial(std::int64_t coeff, std::size_t degree) {
  std::vector<std::int64_t> c(degree + 1, 0);
  c[degree] = coeff;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly r{1};
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

IntPoly IntPoly::dilate(unsigned k) const {
  if (is_zero()) return {};
  std::vector<std::int64_t> c((c_.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
  return IntPoly(std::move(c));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  const std::int64_t lead = divisor.c_.back();
  if (lead != 1 && lead != -1) throw std::invalid_argument("divisor must have leading coefficient +-1");
  std::vector<std::int64_t> rem = c_;
  const std::size_t dd = divisor.c_.size() - 1;
  if (rem.size() <= dd) return {IntPoly{}, *this};
  std::vector<std::int64_t> q(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const std::int64_t f = rem[i] * lead;
    q[i - dd] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.c_[j];
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(rem))};
}

IntPoly IntPoly::exact_div(const IntPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division: remainder " + r.to_string());
  return q;
}

std::int64_t IntPoly::sum() const {
  std::int64_t s = 0;
  for (auto v : c_) s += v;
  return s;
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < c_.size(); ++d) {
    std::int64_t v = c_[d];
    if (v == 0) continue;
    if (v < 0) {
      out << '-';
      v = -v;
    } else if (!first) {
      out << '+';
    }
    first = false;
    if (d == 0 || v != 1) out << v;
    if (d >= 1) out << 'z';
    if (d >= 2) out << '^' << d;
  }
  return out.str();
}

IntPoly q_bracket(unsigned k) { return IntPoly(std::vector<std::int64_t>(k, 1)); }

IntPoly q_factorial(unsigned k) {
  IntPoly r{1};
  for (unsigned i = 1; i <= k; ++i) r = r * q_bracket(i);
  return r;
}

std::int64_t binomial(std::int64_t a, std::int64_t i) {
  if (i < 0) return 0;
  // Exact: the running product of i consecutive integers over i! stays integral.
  std::int64_t r = 1;
  for (std::int64_t s = 1; s <= i; ++s) r = r * (a - s + 1) / s;
  return r;
}

CongruenceData CongruenceData::of(std::uint64_t n, std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  return {n, p, n / p, static_cast<std::uint32_t>(n % p)};
}

IntPoly q_r_polynomial(const CongruenceData& cong) {
  const auto n = static_cast<std::int64_t>(cong.n);
  const auto r = static_cast<std::int64_t>(cong.r);
  IntPoly q = IntPoly::monomial(binomial(n - 1, r - 1), static_cast<std::size_t>(r + 1));
  for (std::int64_t i = 0; i <= r; ++i) q = q + IntPoly::monomial(binomial(n - r - 2 + i, i), static_cast<std::size_t>(i));
  return q;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::computed: return "computed";
    case Provenance::conjecture_as_printed: return "conjecture_as_printed";
    case Provenance::conjecture_remark_consistent: return "conjecture_remark_consistent";
    case Provenance::theorem: return "theorem";
    case Provenance::baby_verma: return "baby_verma";
  }
  return "unknown";
}

std::string to_string(ConjectureVariant v) {
  return v == ConjectureVariant::as_printed ? "as_printed" : "remark_consistent";
}

bool Series::nonnegative() const {
  for (auto v : poly.coeffs())
    if (v < 0) return false;
  return true;
}

Series computed_series(const std::vector<std::uint64_t>& dims) {
  std::vector<std::int64_t> c(dims.begin(), dims.end());
  return {IntPoly(std::move(c)), Provenance::computed};
}

namespace {

IntPoly conjecture_t0(const CongruenceData& cong) {
  return q_factorial(cong.r) * q_bracket(cong.p) * q_r_polynomial(cong);
}

}  // namespace

Series conjectured_hilbert(const CongruenceData& cong, int t, ConjectureVariant variant) {
  if (t != 0 && t != 1) throw std::invalid_argument("t must be 0 or 1");
  const Provenance prov = variant == ConjectureVariant::as_printed ? Provenance::conjecture_as_printed
                                                                   : Provenance::conjecture_remark_consistent;
  if (t == 0) return {conjecture_t0(cong), prov};
  const unsigned p = cong.p;
  const IntPoly outer = q_bracket(p).pow(static_cast<unsigned>(cong.n - 1));
  if (variant == ConjectureVariant::remark_consistent) return {outer * conjecture_t0(cong).dilate(p), prov};
  return {outer * q_factorial(cong.r).dilate(p) * q_factorial(p).dilate(p) * q_r_polynomial(cong).dilate(p), prov};
}

Series baby_verma_series(std::uint64_t n, std::uint32_t p, int t) {
  if (t != 0 && t != 1) throw std::invalid_argument("t must be 0 or 1");
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const std::uint64_t step = t == 1 ? p : 1;
  IntPoly num{1};
  for (std::uint64_t i = 2; i <= n; ++i) num = num * (IntPoly{1} - IntPoly::monomial(1, i * step));
  const IntPoly den = IntPoly{1, -1}.pow(static_cast<unsigned>(n - 1));
  return {num.exact_div(den), Provenance::baby_verma};
}

std::string theorem_regime(const CongruenceData& cong, int t) {
  if (t == 0 && cong.r == 1) return "t=0, n = 1 mod p";
  if (t == 1 && cong.p == 2 && cong.r == 1) return "t=1, p=2, n odd";
  if (t == 1 && cong.r == 0) return "t=1, p | n";
  return "";
}

std::optional<Series> theorem_hilbert(const CongruenceData& cong, int t) {
  const auto n = static_cast<std::int64_t>(cong.n);
  if (t == 0 && cong.r == 1) return Series{q_bracket(cong.p) * IntPoly{1, n - 2, 1}, Provenance::theorem};
  if (t == 1 && cong.p == 2 && cong.r == 1)
    return Series{IntPoly{1, 0, 1} * IntPoly{1, 1}.pow(static_cast<unsigned>(n - 1)) * IntPoly{1, 0, n - 2, 0, 1},
                  Provenance::theorem};
  if (t == 1 && cong.r == 0)
    return Series{q_bracket(cong.p).pow(static_cast<unsigned>(n - 1)), Provenance::theorem};
  return std::nullopt;
}

ShapeReport shape_check_t1(const Series& h, std::uint64_t n, std::uint32_t p) {
  ShapeReport rep;
  auto [q, r] = h.poly.divmod(q_bracket(p).pow(static_cast<unsigned>(n - 1)));
  if (!r.is_zero()) {
    rep.message = "not divisible by [p]_z^(n-1); remainder " + r.to_string();
    return rep;
  }
  std::vector<std::int64_t> inner;
  for (std::size_t d = 0; d < q.coeffs().size(); ++d) {
    const auto v = q.coeffs()[d];
    if (d % p != 0 && v != 0) {
      rep.message = "quotient has z^" + std::to_string(d) + " with p not dividing the exponent";
      return rep;
    }
    if (v < 0) {
      rep.message = "quotient has negative coefficient at z^" + std::to_string(d);
      return rep;
    }
    if (d % p == 0) inner.push_back(v);
  }
  rep.inner = IntPoly(std::move(inner));
  rep.ok = true;
  rep.message = "h(z) = " + rep.inner.to_string();
  return rep;
}

std::string Comparison::to_string() const {
  if (equal) return "equal";
  return "mismatch at degree " + std::to_string(*first_mismatch) + ": computed " + std::to_string(computed_value) +
         ", predicted " + std::to_string(predicted_value);
}

Comparison compare(const Series& computed, const Series& predicted) {
  Comparison c;
  const auto& a = computed.poly.coeffs();
  const auto& b = predicted.poly.coeffs();
  const std::size_t top = std::max(a.size(), b.size());
  for (std::size_t d = 0; d < top; ++d) {
    if (computed.poly[d] != predicted.poly[d]) {
      c.first_mismatch = d;
      c.computed_value = computed.poly[d];
      c.predicted_value = predicted.poly[d];
      return c;
    }
  }
  c.equal = true;
  return c;
}

bool dominated_by(const Series& a, const Series& b) {
  for (std::size_t d = 0; d < a.poly.coeffs().size(); ++d)
    if (a.poly[d] > b.poly[d]) return false;
  return true;
}

IntPoly cyclotomic(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic index must be positive");
  IntPoly f = IntPoly::monomial(1, m) - IntPoly{1};
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) f = f.exact_div(cyclotomic(d));
  return f;
}

std::string factored(const IntPoly& f) {
  if (f.is_zero()) return "0";
  IntPoly rest = f;
  std::ostringstream out;
  bool first = true;
  // Phi_1 = z - 1 has no nonnegative-series meaning; start at Phi_2 = 1 + z.
  const unsigned top = static_cast<unsigned>(2 * std::max(1, f.degree()));
  for (unsigned m = 2; m <= top && rest.degree() > 0; ++m) {
    const IntPoly phi = cyclotomic(m);
    if (phi.degree() > rest.degree()) continue;
    unsigned mult = 0;
    for (;;) {
      auto [q, r] = rest.divmod(phi);
      if (!r.is_zero()) break;
      rest = q;
      ++mult;
    }
    if (mult == 0) continue;
    if (!first) out << '*';
    first = false;
    out << '(' << phi.to_string() << ')';
    if (mult > 1) out << '^' << mult;
  }
  if (first && rest.degree() == 0) return rest.to_string();
  if (rest.degree() > 0 || rest[0] != 1) {
    if (!first) out << '*';
    out << '(' << rest.to_string() << ')';
  }
  return out.str();
}

}  // namespace cherednik
