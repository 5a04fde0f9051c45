#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cherednik/catalog.hpp"
#include "cherednik/kernel.hpp"

namespace cherednik {

/// A polynomial in x_1..x_k, independent of n, with the parameters of the
/// finite stability check.
template <class Field>
struct StabilityInstance {
  Poly<Field> f;   // k slots after canonical renaming
  std::size_t k = 0;
  unsigned G = 0;  // degree
  unsigned S = 0;  // largest single-variable exponent

  /// Canonically renames the variables that occur to x_1..x_k (keeping their
  /// order). Requires a nonzero homogeneous polynomial.
  static StabilityInstance from(const Poly<Field>& g) {
    if (g.is_zero()) throw std::invalid_argument("stability instance needs a nonzero polynomial");
    const auto d = g.degree();
    if (!d) throw std::invalid_argument("polynomial is not homogeneous");
    std::vector<std::size_t> used;
    unsigned S = 0;
    for (std::size_t s = 0; s < g.slots(); ++s) {
      bool occurs = false;
      for (const auto& [m, c] : g.terms()) {
        occurs |= m[s] > 0;
        S = std::max(S, m[s]);
      }
      if (occurs) used.push_back(s);
    }
    const std::size_t k = std::max<std::size_t>(used.size(), 1);
    Poly<Field> f(g.field_ptr(), k);
    for (const auto& [m, c] : g.terms()) {
      Monomial r(k);
      for (std::size_t v = 0; v < used.size(); ++v) r.set(v, m[used[v]]);
      f.add_term(r, c);
    }
    return {std::move(f), used.size(), *d, S};
  }

  /// S + k + G - 2.
  unsigned bound() const { return S + static_cast<unsigned>(k) + G - 2; }
  /// k + G + S - 3, the threshold used inside the argument.
  unsigned proof_bound() const { return bound() - 1; }
  /// Smallest admissible n: the variables x_1..x_k must be independent.
  std::size_t min_n() const { return std::max<std::size_t>(3, k + 1); }

  /// f as a reduced polynomial of S_n.
  Poly<Field> embed(std::size_t n) const {
    if (n < k + 1) throw std::invalid_argument("n too small for the variables of f");
    Poly<Field> out(f.field_ptr(), n - 1);
    for (const auto& [m, c] : f.terms()) {
      Monomial r(n - 1);
      for (std::size_t v = 0; v < k; ++v) r.set(v, m[v]);
      out.add_term(r, c);
    }
    return out;
  }
};

/// One n of the sweep.
struct StabilityEvidence {
  std::size_t n = 0;
  bool in_kernel = false;
  bool beyond_bound = false;  // consistency check above the bound
  std::string witness;        // "B(<y>, f) = <value>" when not in the kernel
  double seconds = 0;
};

struct StabilityVerdict {
  std::string polynomial;
  unsigned bound = 0;
  unsigned proof_bound = 0;
  bool stable = false;
  bool certifying = true;  // false in experimental regimes or fast evaluation
  std::optional<std::size_t> first_failure;
  std::vector<StabilityEvidence> per_n;
};

struct StabilityOptions {
  bool experimental = false;     // allow regimes other than p=2, t=1
  int t = 1;
  unsigned beyond_bound = 0;     // extra odd n above the bound (empirical check)
  unsigned threads = 1;
  bool stop_at_failure = true;
};

namespace detail {

template <class Field>
StabilityEvidence stability_evidence(const StabilityInstance<Field>& inst, std::size_t n, int t,
                                     const std::shared_ptr<const Field>& field) {
  const auto start = std::chrono::steady_clock::now();
  DunklContext<Field> ctx(n, t, field);
  const auto res = is_in_kernel(inst.embed(n), ctx);
  StabilityEvidence ev;
  ev.n = n;
  ev.in_kernel = res.in_kernel;
  if (res.witness) {
    const auto& w = *res.witness;
    if (w.y_exponents)
      ev.witness = "B(" + format_y_monomial(*w.y_exponents, n) + ", f) = " + field->format(*w.monomial_value);
    else
      ev.witness = "B(" + format_y_word(w.word) + ", f) = " + field->format(w.value);
  }
  ev.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return ev;
}

}  // namespace detail

/// Checks f in ker B for every odd n with max(3, k+1) <= n <= bound (and
/// optionally some n above it). The field fixes p and how c is realized.
template <class Field>
StabilityVerdict is_stably_in_kernel(const Poly<Field>& f, std::shared_ptr<const Field> field,
                                     const StabilityOptions& opts = {}) {
  const std::uint32_t p = field->characteristic();
  if (!opts.experimental && (p != 2 || opts.t != 1))
    throw RegimeError("stability criterion is proved for p=2, t=1 only (use the experimental flag)");
  StabilityVerdict verdict;
  verdict.polynomial = f.to_string();
  verdict.certifying = !opts.experimental && std::is_same_v<Field, RationalFunctionField>;
  if (f.is_zero()) {
    verdict.stable = true;
    return verdict;
  }
  const auto inst = StabilityInstance<Field>::from(f);
  verdict.bound = inst.bound();
  verdict.proof_bound = inst.proof_bound();
  std::vector<std::pair<std::size_t, bool>> cells;
  for (std::size_t n = inst.min_n(); n <= inst.bound(); ++n)
    if (n % 2 == 1) cells.emplace_back(n, false);
  std::size_t n = inst.bound() + 1;
  for (unsigned extra = 0; extra < opts.beyond_bound; ++n)
    if (n % 2 == 1) {
      cells.emplace_back(n, true);
      ++extra;
    }
  for (const auto& [cn, beyond] : cells)
    if (cn > Monomial::kMaxSlots) throw ResourceLimit("n = " + std::to_string(cn) + " exceeds the supported maximum");

  std::vector<std::optional<StabilityEvidence>> results(cells.size());
  std::mutex mutex;
  std::optional<std::size_t> failed_at;
  detail::parallel_for(cells.size(), opts.threads, [&](std::size_t idx) {
    const auto [cn, beyond] = cells[idx];
    {
      std::lock_guard<std::mutex> lock(mutex);
      if (opts.stop_at_failure && failed_at && *failed_at < cn) return;
    }
    auto ev = detail::stability_evidence(inst, cn, opts.t, field);
    ev.beyond_bound = beyond;
    std::lock_guard<std::mutex> lock(mutex);
    if (!ev.in_kernel && (!failed_at || cn < *failed_at)) failed_at = cn;
    results[idx] = std::move(ev);
  });
  verdict.stable = true;
  for (auto& r : results) {
    if (!r) continue;
    if (!r->in_kernel) {
      if (!r->beyond_bound) verdict.stable = false;
      if (!verdict.first_failure) verdict.first_failure = r->n;
    }
    verdict.per_n.push_back(std::move(*r));
  }
  return verdict;
}

/// Applies D_{y_{i_1}-y_{j_1}}, D_{y_{i_2}-y_{j_2}}, ... in order.
template <class Field>
Poly<Field> apply_dunkl_word(const Poly<Field>& f, const std::vector<std::pair<std::size_t, std::size_t>>& word,
                             const DunklContext<Field>& ctx) {
  Poly<Field> g = f;
  for (const auto& [i, j] : word) g = ctx.dunkl_difference(g, i, j);
  return g;
}

struct MixedGeneratorReport {
  StabilityVerdict generator;  // x1^3x2^3x3^2 + c(x2^3x3^5 + x1x2^2x3^5)
  StabilityVerdict helper;     // x1^2x2^2x3^5
  StabilityVerdict derived;    // x1^4x2^3x3^2 + c x1x2^3x3^5; per_n holds the direct checks only
  bool combination_identity = false;  // x1*generator - c*helper = derived
  // derived lies in the submodule spanned by x1*generator and helper
  bool derived_by_closure = false;
  bool ok() const { return generator.stable && helper.stable && derived.stable && combination_identity; }
};

/// Certifies the mixed-coefficient degree-8 generator and the helper, and
/// gets the degree-9 polynomial from x1*generator - c*helper. The degree-9
/// polynomial is also checked directly for odd n <= derived_direct_max_n.
template <class Field>
MixedGeneratorReport verify_mixed_generator(std::shared_ptr<const Field> field, const StabilityOptions& opts = {},
                                            std::size_t derived_direct_max_n = 7) {
  auto P = [&](const char* text) { return parse_poly(text, 3, field); };
  const auto gen = P("x1^3*x2^3*x3^2+(c)*x2^3*x3^5+(c)*x1*x2^2*x3^5");
  const auto helper = P("x1^2*x2^2*x3^5");
  const auto derived = P("x1^4*x2^3*x3^2+(c)*x1*x2^3*x3^5");
  MixedGeneratorReport rep;
  Poly<Field> combo = P("x1") * gen;
  combo.add_scaled(helper, field->neg(field->c()));
  rep.combination_identity = combo == derived;
  rep.generator = is_stably_in_kernel(gen, field, opts);
  rep.helper = is_stably_in_kernel(helper, field, opts);

  const auto inst = StabilityInstance<Field>::from(derived);
  auto& d = rep.derived;
  d.polynomial = derived.to_string();
  d.bound = inst.bound();
  d.proof_bound = inst.proof_bound();
  d.certifying = rep.generator.certifying && rep.helper.certifying;
  bool direct_ok = true;
  for (std::size_t n = inst.min_n() | 1; n <= std::min<std::size_t>(derived_direct_max_n, d.bound); n += 2) {
    auto ev = detail::stability_evidence(inst, n, opts.t, field);
    if (!ev.in_kernel && direct_ok) {
      direct_ok = false;
      d.first_failure = n;
    }
    d.per_n.push_back(std::move(ev));
  }
  rep.derived_by_closure = rep.combination_identity && rep.generator.stable && rep.helper.stable;
  d.stable = rep.derived_by_closure && direct_ok;
  return rep;
}

}  // namespace cherednik
