#include "cherednik/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace cherednik {

namespace modp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  std::uint32_t base = a % p;
  while (e > 0) {
    if (e & 1U) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1U;
  }
  return result;
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("division by zero in F_" + std::to_string(p));
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace modp

UPoly::UPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= p_;
  trim();
}

UPoly::UPoly(std::uint32_t p, std::initializer_list<std::int64_t> coeffs) : p_(p) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.push_back(modp::reduce(c, p));
  trim();
}

UPoly UPoly::constant(std::uint32_t p, std::uint32_t value) { return UPoly(p, std::vector<std::uint32_t>{value}); }

UPoly UPoly::monomial(std::uint32_t p, std::uint32_t coeff, std::size_t degree) {
  std::vector<std::uint32_t> c(degree + 1, 0);
  c[degree] = coeff;
  return UPoly(p, std::move(c));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = modp::neg(c, p_);
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  const std::uint32_t p = a.p_;
  UPoly r;
  r.p_ = p;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = modp::add(a[i], b[i], p);
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  const std::uint32_t p = a.p_;
  UPoly r;
  r.p_ = p;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = modp::sub(a[i], b[i], p);
  r.trim();
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.p_ = a.p_;
  if (a.is_zero() || b.is_zero()) return r;
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  // Accumulate in 64 bits and reduce lazily; safe while products stay below 2^63.
  const bool lazy = p < (1ULL << 16);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] += std::uint64_t{a.coeffs_[i]} * b.coeffs_[j];
      if (!lazy) acc[i + j] %= p;
    }
  }
  r.coeffs_.resize(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r.coeffs_[i] = static_cast<std::uint32_t>(acc[i] % p);
  r.trim();
  return r;
}

UPoly UPoly::scaled(std::uint32_t s) const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = modp::mul(c, s, p_);
  r.trim();
  return r;
}

UPoly UPoly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  UPoly r = *this;
  r.coeffs_.insert(r.coeffs_.begin(), k, 0);
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  UPoly q, r = *this;
  q.p_ = p_;
  if (r.degree() < divisor.degree()) return {q, r};
  const std::uint32_t lead_inv = modp::inv(divisor.leading(), p_);
  const int dd = divisor.degree();
  q.coeffs_.assign(static_cast<std::size_t>(r.degree() - dd + 1), 0);
  for (int i = r.degree(); i >= dd; --i) {
    std::uint32_t coef = r.coeffs_[static_cast<std::size_t>(i)];
    if (coef == 0) continue;
    std::uint32_t f = modp::mul(coef, lead_inv, p_);
    q.coeffs_[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = r.coeffs_[static_cast<std::size_t>(i - dd + j)];
      slot = modp::sub(slot, modp::mul(f, divisor.coeffs_[static_cast<std::size_t>(j)], p_), p_);
    }
  }
  q.trim();
  r.trim();
  return {q, r};
}

UPoly UPoly::exact_div(const UPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(modp::inv(leading(), p_));
}

std::uint32_t UPoly::evaluate(std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = modp::add(modp::mul(acc, x, p_), *it, p_);
  return acc;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly UPoly::powmod(const UPoly& base, std::uint64_t e, const UPoly& m) {
  UPoly result = UPoly::constant(m.p_, 1) % m;
  UPoly b = base % m;
  while (e > 0) {
    if (e & 1U) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1U;
  }
  return result;
}

bool UPoly::is_irreducible() const {
  const int k = degree();
  if (k < 1) return false;
  if (k == 1) return true;
  const UPoly x = UPoly::monomial(p_, 1, 1);
  // x^(p^k) = x mod f, and gcd(x^(p^(k/q)) - x, f) = 1 for prime q | k.
  auto frobenius_power = [&](int times) {
    UPoly r = x;
    for (int i = 0; i < times; ++i) r = powmod(r, p_, *this);
    return r;
  };
  if (!((frobenius_power(k) - x) % *this).is_zero()) return false;
  for (int q = 2; q <= k; ++q) {
    if (k % q != 0 || !modp::is_prime(static_cast<std::uint64_t>(q))) continue;
    UPoly g = gcd(frobenius_power(k / q) - x, *this);
    if (g.degree() > 0) return false;
  }
  return true;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    std::uint32_t c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << '*';
    out << var;
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

}  // namespace cherednik
