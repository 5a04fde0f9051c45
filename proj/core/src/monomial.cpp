#include "cherednik/monomial.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace cherednik {

Monomial::Monomial(std::size_t slots) {
  if (slots > kMaxSlots) throw std::invalid_argument("too many variables: " + std::to_string(slots));
  slots_ = static_cast<std::uint8_t>(slots);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (unsigned e : exponents) set(i++, e);
}

Monomial::Monomial(const std::vector<unsigned>& exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= slots_) throw std::out_of_range("monomial slot out of range");
  if (e > 255) throw std::overflow_error("exponent exceeds 255");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
  exps_[i] = static_cast<std::uint8_t>(e);
}

std::size_t Monomial::support_size() const {
  return static_cast<std::size_t>(std::count_if(exps_.begin(), exps_.begin() + slots_, [](auto e) { return e != 0; }));
}

unsigned Monomial::max_exponent() const {
  return slots_ == 0 ? 0U : *std::max_element(exps_.begin(), exps_.begin() + slots_);
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (slots_ != other.slots_) throw std::invalid_argument("monomial slot-count mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < slots_; ++i) {
    unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > 255) throw std::overflow_error("exponent exceeds 255");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

Monomial Monomial::with_slots(std::size_t slots) const {
  Monomial r(slots);
  for (std::size_t i = 0; i < std::max<std::size_t>(slots, slots_); ++i) {
    unsigned e = i < slots_ ? exps_[i] : 0U;
    if (i >= slots) {
      if (e != 0) throw std::invalid_argument("cannot drop a slot with a nonzero exponent");
      continue;
    }
    r.set(i, e);
  }
  return r;
}

std::string Monomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < slots_; ++i) {
    if (exps_[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << 'x' << (i + 1);
    if (exps_[i] > 1) out << '^' << unsigned{exps_[i]};
  }
  if (first) return "1";
  return out.str();
}

std::size_t Monomial::hash() const {
  std::uint64_t w[2];
  std::memcpy(w, exps_.data(), sizeof w);
  std::uint64_t h = w[0] * 0x9E3779B97F4A7C15ULL ^ (w[1] + 0x632BE59BD9B4E019ULL + (w[0] << 6) + (w[0] >> 2));
  h ^= slots_;
  return static_cast<std::size_t>(h ^ (h >> 29));
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return a.size() > b.size();
}

namespace {

void enumerate(std::size_t slot, unsigned remaining, Monomial& current, std::vector<Monomial>& out) {
  if (slot + 1 == current.size()) {
    current.set(slot, remaining);
    out.push_back(current);
    current.set(slot, 0);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current.set(slot, e);
    enumerate(slot + 1, remaining - e, current, out);
  }
  current.set(slot, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t slots, unsigned d) {
  std::vector<Monomial> out;
  if (slots == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  out.reserve(static_cast<std::size_t>(count_monomials(slots, d)));
  Monomial current(slots);
  enumerate(0, d, current, out);
  return out;
}

std::uint64_t count_monomials(std::size_t slots, unsigned d) {
  if (slots == 0) return d == 0 ? 1 : 0;
  // C(d + slots - 1, slots - 1), computed incrementally.
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i < slots; ++i) r = r * (d + i) / i;
  return r;
}

}  // namespace cherednik
