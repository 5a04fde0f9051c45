#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cherednik/dunkl.hpp"
#include "cherednik/linalg.hpp"

namespace cherednik {

/// Thrown when a computation would exceed its configured resource budget.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KernelOptions {
  unsigned max_degree = 0;     // 0: default_degree_cap
  unsigned extra_degrees = 2;  // degrees computed after the first dim L = 0
  unsigned threads = 1;
};

/// max(n + 10, deg h_N + 1), where h_N is the baby Verma series with
/// p' = p (t != 0) or 1 (t = 0); dim L[d] = 0 above deg h_N.
inline unsigned default_degree_cap(std::size_t n, std::uint32_t p, int t) {
  const std::uint64_t pp = t == 0 ? 1 : p;
  const std::uint64_t top = pp * (n * (n + 1) / 2 - 1) - (n - 1);
  return static_cast<unsigned>(std::max<std::uint64_t>(n + 10, top + 1));
}

namespace detail {

/// t*alpha + c*beta as a row entry of `red`.
template <class Field>
typename RowReducer<Field>::Entry dunkl_entry(const RowReducer<Field>& red, int t, std::uint32_t alpha,
                                              std::uint32_t beta) {
  const Field& F = red.field();
  if constexpr (std::is_same_v<Field, RationalFunctionField>) {
    const std::uint32_t p = F.characteristic();
    return UPoly(p, std::vector<std::uint32_t>{t == 1 ? alpha : 0u, beta});
  } else {
    auto e = F.mul(F.c(), F.from_int(beta));
    if (t == 1) e = F.add(e, F.from_int(alpha));
    return e;
  }
}

template <class Field>
typename Field::Element dunkl_element(const Field& F, int t, std::uint32_t alpha, std::uint32_t beta) {
  auto e = F.mul(F.c(), F.from_int(beta));
  if (t == 1) e = F.add(e, F.from_int(alpha));
  return e;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < count; k += threads) fn(k);
    });
}

}  // namespace detail

/// ker B degree by degree. Degree d stores a row basis R_d of the map
/// M[d] -> (+)_{i<n} M[d-1]/ker B[d-1], f -> (R_{d-1} D_{y_i-y_n} f)_i, so
/// ker B[d] = ker R_d and dim L[d] = rank R_d.
template <class Field>
class GradedKernel {
 public:
  using Element = typename Field::Element;
  using Entry = typename RowReducer<Field>::Entry;
  using P = Poly<Field>;

  struct Degree {
    unsigned d;
    std::vector<Monomial> monomials;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    RowReducer<Field> quotient;

    std::size_t dim_M() const { return monomials.size(); }
    std::size_t dim_L() const { return quotient.rank(); }
    std::size_t dim_ker() const { return dim_M() - dim_L(); }
    /// ker B[d] = M[d].
    bool complete() const { return dim_L() == 0; }
  };

  GradedKernel(const DunklContext<Field>& ctx, KernelOptions opts = {})
      : ctx_(ctx), opts_(opts), images_(ctx.n(), ctx.p()) {
    if (opts_.max_degree == 0) opts_.max_degree = default_degree_cap(ctx.n(), ctx.p(), ctx.t());
    Degree zero{0, monomials_of_degree(ctx.slots(), 0), {}, RowReducer<Field>(ctx.field_ptr(), 1)};
    zero.index.emplace(zero.monomials[0], 0);
    std::vector<Entry> one{zero.quotient.zero()};
    if constexpr (std::is_same_v<Field, RationalFunctionField>)
      one[0] = UPoly::constant(ctx.p(), 1);
    else
      one[0] = ctx.field().one();
    zero.quotient.insert(std::move(one));
    degrees_.push_back(std::move(zero));
  }

  const DunklContext<Field>& context() const { return ctx_; }
  const KernelOptions& options() const { return opts_; }
  std::size_t computed() const { return degrees_.size(); }
  unsigned top_degree() const { return degrees_.back().d; }
  const Degree& degree(unsigned d) const {
    if (d >= degrees_.size()) throw std::out_of_range("degree " + std::to_string(d) + " not computed");
    return degrees_[d];
  }

  /// Computes the next degree from the previous one.
  const Degree& extend() {
    const Degree& prev = degrees_.back();
    const unsigned d = prev.d + 1;
    Degree next{d, monomials_of_degree(ctx_.slots(), d), {}, RowReducer<Field>(ctx_.field_ptr(), 0)};
    for (std::size_t k = 0; k < next.monomials.size(); ++k) next.index.emplace(next.monomials[k], k);
    const std::size_t cols = next.monomials.size();
    next.quotient = RowReducer<Field>(ctx_.field_ptr(), cols);
    const std::size_t r = prev.dim_L();
    if (r > 0) {
      const std::size_t n = ctx_.n();
      const auto& R = prev.quotient.rows();
      const RowReducer<Field>& red = next.quotient;
      std::vector<std::vector<Entry>> A((n - 1) * r, std::vector<Entry>(cols, red.zero()));
      detail::parallel_for(cols, opts_.threads, [&](std::size_t col) {
        for (std::size_t i = 1; i < n; ++i) {
          const auto img = images_.image(next.monomials[col], i, n);
          for (std::size_t q = 0; q < r; ++q) {
            Entry acc = red.zero();
            for (const auto& term : img) {
              const Entry& rq = R[q][prev.index.at(term.monomial)];
              if (red.is_zero(rq)) continue;
              acc = red.add(acc, red.mul(rq, detail::dunkl_entry(red, ctx_.t(), term.alpha, term.beta)));
            }
            A[(i - 1) * r + q][col] = std::move(acc);
          }
        }
      });
      for (auto& row : A) {
        if (next.quotient.rank() == cols) break;
        next.quotient.insert(std::move(row));
      }
    }
    degrees_.push_back(std::move(next));
    return degrees_.back();
  }

  /// Extends until dim L = 0 has been seen and confirmed for
  /// extra_degrees further degrees, or the degree cap is reached.
  GradedKernel& run() {
    while (!finished() && top_degree() < opts_.max_degree) extend();
    return *this;
  }

  /// Extends to degree d (bounded by the cap).
  GradedKernel& run_to(unsigned d) {
    if (d > opts_.max_degree) throw std::invalid_argument("degree beyond the configured cap");
    while (top_degree() < d) extend();
    return *this;
  }

  /// First degree with dim L = 0, if computed.
  std::optional<unsigned> first_vanishing() const {
    for (const auto& deg : degrees_)
      if (deg.complete()) return deg.d;
    return std::nullopt;
  }

  bool finished() const {
    auto z = first_vanishing();
    return z && top_degree() >= *z + opts_.extra_degrees;
  }

  /// dim L[0..top].
  std::vector<std::uint64_t> series() const {
    std::vector<std::uint64_t> out;
    for (const auto& deg : degrees_) out.push_back(deg.dim_L());
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
  }

  /// Canonical RREF basis of ker B[d] (columns = monomials of M[d]).
  Echelon<Field> kernel_rref(unsigned d) const {
    return nullspace_rref(degree(d).quotient.echelon(), ctx_.field_ptr());
  }

  /// Canonical RREF of the row space complementary to ker B[d].
  Echelon<Field> quotient_rref(unsigned d) const { return degree(d).quotient.echelon(); }

  std::vector<P> kernel_basis(unsigned d) const {
    const Degree& deg = degree(d);
    const auto e = kernel_rref(d);
    std::vector<P> out;
    for (const auto& row : e.rows) {
      P f(ctx_.field_ptr(), ctx_.slots());
      for (std::size_t c = 0; c < row.size(); ++c) f.add_term(deg.monomials[c], row[c]);
      out.push_back(std::move(f));
    }
    return out;
  }

  std::vector<Monomial> pivot_monomials(unsigned d) const {
    const Degree& deg = degree(d);
    std::vector<Monomial> out;
    for (auto c : kernel_rref(d).pivots) out.push_back(deg.monomials[c]);
    return out;
  }

  /// Membership of a homogeneous polynomial of a computed degree.
  bool contains(const P& f) const {
    if (f.is_zero()) return true;
    auto d = f.degree();
    if (!d) throw std::invalid_argument("polynomial is not homogeneous");
    const Degree& deg = degree(*d);
    const Field& F = ctx_.field();
    for (const auto& row : deg.quotient.rows()) {
      Element acc = F.zero();
      for (const auto& [m, c] : f.terms()) {
        const Entry& e = row[deg.index.at(m)];
        if (!deg.quotient.is_zero(e)) acc = F.add(acc, F.mul(deg.quotient.to_element(e), c));
      }
      if (!F.is_zero(acc)) return false;
    }
    return true;
  }

 private:
  DunklContext<Field> ctx_;
  KernelOptions opts_;
  MonomialDunkl images_;
  std::vector<Degree> degrees_;
};

// ---------------------------------------------------------------------------

/// B((y_1-y_n)^{a_1}...(y_{n-1}-y_n)^{a_{n-1}}, f).
template <class Field>
typename Field::Element contravariant_pairing(const std::vector<unsigned>& a, const Poly<Field>& f,
                                              const DunklContext<Field>& ctx) {
  if (a.size() != ctx.slots()) throw std::invalid_argument("y-monomial must have n-1 exponents");
  unsigned total = 0;
  for (auto e : a) total += e;
  if (f.slots() != ctx.slots()) throw std::invalid_argument("polynomial must have n-1 slots");
  if (f.is_zero()) return ctx.field().zero();
  if (!f.degree() || *f.degree() != total)
    throw std::invalid_argument("degree mismatch: |a| = " + std::to_string(total) + ", deg f = " +
                                std::to_string(f.max_degree()));
  Poly<Field> g = lift(f);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (unsigned k = 0; k < a[i]; ++k) g = ctx.dunkl_lifted(g, i + 1, ctx.n());
  return g.coefficient(Monomial(ctx.n()));
}

/// Row space of the degree-d Gram matrix B(y^a, x^m), rows indexed by the
/// y-monomials (y_i - y_n)^a, built by direct pairing. Throws ResourceLimit
/// when dim M[d]^2 exceeds `max_pairings`.
template <class Field>
RowReducer<Field> gram_oracle_rowspace(const DunklContext<Field>& ctx, unsigned d,
                                       std::uint64_t max_pairings = 4'000'000) {
  using Element = typename Field::Element;
  const std::size_t slots = ctx.slots();
  const std::uint64_t dim = count_monomials(slots, d);
  if (dim * dim > max_pairings)
    throw ResourceLimit("Gram oracle at degree " + std::to_string(d) + " needs " + std::to_string(dim * dim) +
                        " pairings (limit " + std::to_string(max_pairings) + "); use the recursive method");
  const Field& F = ctx.field();
  MonomialDunkl images(ctx.n(), ctx.p());
  // phi[a][m] = B(y^a, x^m) at the current level.
  std::vector<Monomial> prev_monos = monomials_of_degree(slots, 0);
  std::unordered_map<Monomial, std::size_t, MonomialHash> prev_index{{prev_monos[0], 0}};
  std::vector<std::vector<Element>> phi{{F.one()}};
  for (unsigned e = 1; e <= d; ++e) {
    auto monos = monomials_of_degree(slots, e);
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);
    // Dunkl images of the x-monomials, lazily per operator.
    std::vector<std::vector<std::vector<std::pair<std::size_t, Element>>>> img(slots);
    auto image = [&](std::size_t i) -> const std::vector<std::vector<std::pair<std::size_t, Element>>>& {
      auto& slot = img[i - 1];
      if (slot.empty()) {
        slot.resize(monos.size());
        for (std::size_t k = 0; k < monos.size(); ++k)
          for (const auto& t : images.image(monos[k], i, ctx.n()))
            slot[k].emplace_back(prev_index.at(t.monomial), detail::dunkl_element(F, ctx.t(), t.alpha, t.beta));
      }
      return slot;
    };
    std::vector<std::vector<Element>> next(monos.size(), std::vector<Element>(monos.size(), F.zero()));
    for (std::size_t ai = 0; ai < monos.size(); ++ai) {
      const Monomial& a = monos[ai];
      std::size_t i = 0;
      while (a[i] == 0) ++i;
      Monomial parent = a;
      parent.set(i, a[i] - 1);
      const auto& row = phi[prev_index.at(parent)];
      const auto& im = image(i + 1);
      for (std::size_t m = 0; m < monos.size(); ++m) {
        Element acc = F.zero();
        for (const auto& [k, coef] : im[m])
          if (!F.is_zero(row[k])) acc = F.add(acc, F.mul(coef, row[k]));
        next[ai][m] = std::move(acc);
      }
    }
    phi = std::move(next);
    prev_monos = std::move(monos);
    prev_index = std::move(index);
  }
  RowReducer<Field> red(ctx.field_ptr(), prev_monos.size());
  for (const auto& row : phi) red.insert_field_row(row);
  return red;
}

/// Canonical RREF basis of ker B[d] from the full Gram matrix.
template <class Field>
Echelon<Field> gram_oracle_kernel(const DunklContext<Field>& ctx, unsigned d,
                                  std::uint64_t max_pairings = 4'000'000) {
  return nullspace_rref(gram_oracle_rowspace(ctx, d, max_pairings).echelon(), ctx.field_ptr());
}

// ---------------------------------------------------------------------------

/// Certificate that f is not in ker B: B(y, f) = value != 0 for
/// y = prod_k (y_{i_k} - y_{j_k}) given by `word`. When available,
/// `y_exponents` is a monomial (y_1-y_n)^{a_1}...(y_{n-1}-y_n)^{a_{n-1}} with
/// nonzero pairing `monomial_value`.
template <class Field>
struct KernelWitness {
  std::vector<std::pair<std::size_t, std::size_t>> word;
  typename Field::Element value;
  std::optional<std::vector<unsigned>> y_exponents;
  std::optional<typename Field::Element> monomial_value;
};

enum class MembershipRoute { automatic, engine, descent };

template <class Field>
struct MembershipResult {
  bool in_kernel = false;
  std::optional<KernelWitness<Field>> witness;
  MembershipRoute route = MembershipRoute::automatic;
  std::size_t span_dimension = 0;  // descent: largest intermediate span
};

std::string format_y_word(const std::vector<std::pair<std::size_t, std::size_t>>& word);
std::string format_y_monomial(const std::vector<unsigned>& a, std::size_t n);

namespace detail {

/// Span of polynomials under top reduction: each basis element has a distinct
/// leading monomial with coefficient one.
template <class Field>
class SparseSpan {
 public:
  using P = Poly<Field>;

  /// Top-reduces g; returns true if g is not in the span (and adds it).
  bool insert(P g) {
    const Field& F = g.field();
    if constexpr (std::is_same_v<Field, RationalFunctionField>) g = primitive(g);
    while (!g.is_zero()) {
      const auto& [lead, coeff] = *g.terms().begin();
      auto it = leads_.find(lead);
      if (it == leads_.end()) {
        leads_.emplace(lead, basis_.size());
        if constexpr (std::is_same_v<Field, RationalFunctionField>) basis_.push_back(std::move(g));
        else basis_.push_back(g.scaled(F.inv(coeff)));
        return true;
      }
      const P& b = basis_[it->second];
      if constexpr (std::is_same_v<Field, RationalFunctionField>) {
        const auto lg = F.neg(coeff);
        g = g.scaled(b.terms().begin()->second);
        g.add_scaled(b, lg);
        g = primitive(g);
      } else {
        g.add_scaled(b, F.neg(coeff));
      }
    }
    return false;
  }
  std::size_t size() const { return basis_.size(); }

 private:
  /// Clears denominators and divides by the gcd of the coefficients.
  static P primitive(const P& g) {
    if (g.is_zero()) return g;
    const auto p = g.field().characteristic();
    UPoly lcm = UPoly::constant(p, 1);
    for (const auto& [m, c] : g.terms())
      if (c.den.degree() > 0) lcm = (lcm * c.den).exact_div(UPoly::gcd(lcm, c.den));
    std::vector<UPoly> nums;
    nums.reserve(g.terms().size());
    UPoly content;
    for (const auto& [m, c] : g.terms()) {
      nums.push_back(lcm.is_one() ? c.num : c.num * lcm.exact_div(c.den));
      if (!content.is_zero() && content.degree() == 0) continue;
      content = content.is_zero() ? nums.back() : UPoly::gcd(content, nums.back());
    }
    const bool divide = content.degree() > 0;
    if (!divide && lcm.is_one()) return g;
    P out(g.field_ptr(), g.slots());
    std::size_t idx = 0;
    for (const auto& [m, c] : g.terms()) {
      UPoly num = divide ? nums[idx].exact_div(content) : nums[idx];
      ++idx;
      out.add_term(m, RationalFunction{std::move(num), UPoly::constant(p, 1)});
    }
    return out;
  }

  std::map<Monomial, std::size_t, GrlexDescending> leads_;
  std::vector<P> basis_;
};

/// Expands prod (y_{i_k} - y_1) in the basis e_a = y_a - y_n.
inline std::map<std::vector<unsigned>, std::int64_t> expand_word(
    const std::vector<std::pair<std::size_t, std::size_t>>& word, std::size_t n, std::uint32_t p) {
  std::map<std::vector<unsigned>, std::int64_t> acc{{std::vector<unsigned>(n - 1, 0), 1}};
  for (const auto& [i, j] : word) {
    std::map<std::vector<unsigned>, std::int64_t> next;
    auto add = [&](std::size_t idx, std::int64_t sign) {
      if (idx == n) return;
      for (const auto& [a, coef] : acc) {
        auto b = a;
        ++b[idx - 1];
        auto& slot = next[b];
        slot = (slot + sign * coef) % static_cast<std::int64_t>(p);
      }
    };
    add(i, 1);
    add(j, -1);
    for (auto it = next.begin(); it != next.end();) it = it->second == 0 ? next.erase(it) : std::next(it);
    acc = std::move(next);
  }
  return acc;
}

}  // namespace detail

/// Descent membership test in x_1..x_n with operators D_{y_i - y_1}. If f
/// only involves x_1..x_k, every intermediate image is symmetric in the
/// untouched variables, so step s only needs i <= k + s.
template <class Field>
MembershipResult<Field> kernel_membership_descent(const Poly<Field>& f, const DunklContext<Field>& ctx,
                                                  std::size_t max_witness_pairings = 64) {
  using P = Poly<Field>;
  MembershipResult<Field> out;
  out.route = MembershipRoute::descent;
  if (f.slots() != ctx.slots()) throw std::invalid_argument("polynomial must have n-1 slots");
  if (f.is_zero()) {
    out.in_kernel = true;
    return out;
  }
  const auto deg = f.degree();
  if (!deg) throw std::invalid_argument("polynomial is not homogeneous");
  const std::size_t n = ctx.n();
  std::size_t k = 1;
  for (const auto& [m, c] : f.terms())
    for (std::size_t s = 0; s < m.size(); ++s)
      if (m[s] > 0) k = std::max(k, s + 1);

  struct Item {
    std::vector<std::pair<std::size_t, std::size_t>> word;
    P raw;
  };
  std::vector<Item> level{{{}, lift(f)}};
  for (unsigned s = 1; s <= *deg && !level.empty(); ++s) {
    const std::size_t top = std::min(k + s, n);
    detail::SparseSpan<Field> span;
    std::vector<Item> next;
    for (const auto& item : level) {
      const P base = ctx.dunkl_single_lifted(item.raw, 1);
      for (std::size_t i = 2; i <= top; ++i) {
        P g = ctx.dunkl_single_lifted(item.raw, i) - base;
        if (g.is_zero()) continue;
        if (span.insert(g)) {
          auto w = item.word;
          w.emplace_back(i, 1);
          next.push_back({std::move(w), std::move(g)});
        }
      }
    }
    out.span_dimension = std::max(out.span_dimension, next.size());
    level = std::move(next);
  }
  if (level.empty()) {
    out.in_kernel = true;
    return out;
  }
  const Field& F = ctx.field();
  KernelWitness<Field> w{level.front().word, level.front().raw.coefficient(Monomial(n)), std::nullopt, std::nullopt};
  const auto expansion = detail::expand_word(w.word, n, ctx.p());
  if (expansion.size() <= max_witness_pairings) {
    for (const auto& [a, coef] : expansion) {
      auto v = contravariant_pairing(a, f, ctx);
      if (!F.is_zero(v)) {
        w.y_exponents = a;
        w.monomial_value = v;
        break;
      }
    }
  }
  out.witness = std::move(w);
  return out;
}

/// Membership through a computed GradedKernel, with a y-monomial witness.
template <class Field>
MembershipResult<Field> kernel_membership_engine(const Poly<Field>& f, GradedKernel<Field>& kernel) {
  MembershipResult<Field> out;
  out.route = MembershipRoute::engine;
  const auto& ctx = kernel.context();
  if (f.slots() != ctx.slots()) throw std::invalid_argument("polynomial must have n-1 slots");
  if (f.is_zero()) {
    out.in_kernel = true;
    return out;
  }
  const auto deg = f.degree();
  if (!deg) throw std::invalid_argument("polynomial is not homogeneous");
  kernel.run_to(*deg);
  if (kernel.contains(f)) {
    out.in_kernel = true;
    return out;
  }
  const std::size_t n = ctx.n();
  std::vector<unsigned> a(n - 1, 0);
  Poly<Field> g = f;
  std::vector<std::pair<std::size_t, std::size_t>> word;
  for (unsigned d = *deg; d > 0; --d) {
    bool moved = false;
    for (std::size_t i = 1; i < n && !moved; ++i) {
      Poly<Field> h = ctx.dunkl_difference(g, i, n);
      if (!kernel.contains(h)) {
        ++a[i - 1];
        word.emplace_back(i, n);
        g = std::move(h);
        moved = true;
      }
    }
    if (!moved) throw std::logic_error("kernel descent found no operator leaving the kernel");
  }
  const auto value = g.coefficient(Monomial(ctx.slots()));
  out.witness = KernelWitness<Field>{word, value, a, value};
  return out;
}

/// f in ker B[deg f]. The automatic route uses the graded engine when all
/// degrees up to deg f are small and the descent otherwise.
template <class Field>
MembershipResult<Field> is_in_kernel(const Poly<Field>& f, const DunklContext<Field>& ctx,
                                     MembershipRoute route = MembershipRoute::automatic) {
  if (route == MembershipRoute::automatic) {
    std::uint64_t total = 0;
    const unsigned d = f.max_degree();
    for (unsigned e = 0; e <= d; ++e) total += count_monomials(ctx.slots(), e);
    route = total <= 2000 ? MembershipRoute::engine : MembershipRoute::descent;
  }
  if (route == MembershipRoute::engine) {
    KernelOptions opts;
    opts.max_degree = std::max<unsigned>(f.max_degree(), default_degree_cap(ctx.n(), ctx.p(), ctx.t()));
    GradedKernel<Field> kernel(ctx, opts);
    return kernel_membership_engine(f, kernel);
  }
  return kernel_membership_descent(f, ctx);
}

/// D_{y_i - y_n} f = 0 for all i < n.
template <class Field>
bool is_singular(const Poly<Field>& f, const DunklContext<Field>& ctx) {
  if (!f.is_zero()) {
    const auto d = f.degree();
    if (!d) throw std::invalid_argument("polynomial is not homogeneous");
    if (*d == 0) throw std::invalid_argument("singularity is defined for degree >= 1");
  }
  for (std::size_t i = 1; i < ctx.n(); ++i)
    if (!ctx.dunkl_difference(f, i, ctx.n()).is_zero()) return false;
  return true;
}

}  // namespace cherednik
