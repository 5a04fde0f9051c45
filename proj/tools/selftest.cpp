#include "selftest.hpp"

#include <filesystem>
#include <fstream>
#include <random>

#include "cherednik/catalog.hpp"
#include "harness.hpp"

namespace cherednik::harness {

namespace {

template <class Field>
std::shared_ptr<const Field> make_field(std::uint32_t p);

template <>
std::shared_ptr<const PrimeField> make_field<PrimeField>(std::uint32_t p) {
  return std::make_shared<const PrimeField>(p, 1);
}

template <>
std::shared_ptr<const RationalFunctionField> make_field<RationalFunctionField>(std::uint32_t p) {
  return std::make_shared<const RationalFunctionField>(p);
}

std::string cell(std::uint32_t p, int t, std::size_t n) {
  return "p=" + std::to_string(p) + " t=" + std::to_string(t) + " n=" + std::to_string(n);
}

SelftestStep commutators(const SelftestOptions& opts) {
  SelftestStep step{"commutators"};
  std::uint64_t seed = 1;
  auto run = [&](auto field, int t, std::size_t n) {
    DunklContext<std::remove_const_t<typename decltype(field)::element_type>> ctx(n, t, field);
    ctx.set_mutation(opts.mutate);
    const auto rep = check_commutators(ctx, 4, opts.commutator_trials, seed++);
    step.checks += rep.checks;
    if (!rep.passed() && step.counterexample.empty())
      step.counterexample = cell(ctx.p(), t, n) + ": " + rep.counterexample;
  };
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int t : {0, 1})
      for (std::size_t n : {3u, 4u, 5u}) run(make_field<PrimeField>(p), t, n);
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t n : {3u, 4u}) run(make_field<RationalFunctionField>(p), 1, n);
  step.passed = step.counterexample.empty();
  return step;
}

SelftestStep oracle(const SelftestOptions& opts) {
  SelftestStep step{"kernel-vs-gram-oracle"};
  struct Cell {
    std::uint32_t p;
    std::size_t n;
    int t;
  };
  for (const auto [p, n, t] : {Cell{2, 3, 0}, Cell{2, 5, 0}, Cell{3, 4, 0}, Cell{2, 3, 1}}) {
    DunklContext<PrimeField> ctx(n, t, make_field<PrimeField>(p));
    ctx.set_mutation(opts.mutate);
    GradedKernel<PrimeField> k(ctx);
    k.run();
    for (unsigned d = 0; d <= k.top_degree(); ++d) {
      ++step.checks;
      if (!k.quotient_rref(d).same_as(gram_oracle_rowspace(ctx, d).echelon(), ctx.field()) &&
          step.counterexample.empty())
        step.counterexample = cell(p, t, n) + " d=" + std::to_string(d) + ": row spaces differ";
    }
  }
  step.passed = step.counterexample.empty();
  return step;
}

SelftestStep catalog(const SelftestOptions& opts) {
  SelftestStep step{"catalog"};
  auto certify = [&](auto field, Family fam, std::size_t n, int t) {
    DunklContext<std::remove_const_t<typename decltype(field)::element_type>> ctx(n, t, field);
    ctx.set_mutation(opts.mutate);
    ++step.checks;
    if (!certify_family(fam, {}, ctx).certified && step.counterexample.empty())
      step.counterexample = std::string(family_info(fam).name) + " " + cell(ctx.p(), t, n) + ": not certified";
  };
  for (std::size_t n : {5u, 7u}) certify(make_field<PrimeField>(2), Family::quadratic, n, 0);
  certify(make_field<PrimeField>(3), Family::product, 4, 0);
  certify(make_field<PrimeField>(3), Family::product, 7, 0);
  certify(make_field<PrimeField>(5), Family::product, 6, 0);
  certify(make_field<PrimeField>(3), Family::cubic, 4, 0);
  certify(make_field<PrimeField>(3), Family::degree_p, 4, 0);
  certify(make_field<PrimeField>(5), Family::degree_p, 6, 0);
  certify(make_field<RationalFunctionField>(2), Family::quartic, 5, 1);
  certify(make_field<RationalFunctionField>(2), Family::devadas_sun, 4, 1);
  step.passed = step.counterexample.empty();
  return step;
}

SelftestStep cache_versioning() {
  SelftestStep step{"cache-versioning"};
  std::random_device rd;
  const auto dir = std::filesystem::temp_directory_path() / ("cherednik-selftest-" + std::to_string(rd()));
  auto fail = [&](const std::string& what) {
    if (step.counterexample.empty()) step.counterexample = what;
  };
  try {
    HilbertRequest req;
    req.p = 2;
    req.n = 3;
    req.t = 0;
    RunRecord poisoned;
    poisoned.key = req.key();
    poisoned.key.format_version = kFormatVersion - 1;
    poisoned.series = {9, 9};
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "runs.jsonl") << poisoned.to_json().dump() << "\nnot json\n";

    bool hit = true;
    ResultCache first(dir);
    const auto fresh = cached_record(req, &first, &hit);
    ++step.checks;
    if (hit || first.ignored_lines() != 2) fail("poisoned cache entry was used");
    if (fresh.series != std::vector<std::uint64_t>{1, 2, 2, 1}) fail("recomputed series is wrong");

    ResultCache second(dir);
    const auto cached = cached_record(req, &second, &hit);
    ++step.checks;
    if (!hit) fail("valid cache entry was not found");
    if (cached.to_json().dump() != fresh.to_json().dump()) fail("cached record differs from the fresh one");
  } catch (const std::exception& e) {
    fail(std::string("cache step threw: ") + e.what());
  }
  std::error_code ec;
  std::filesystem::remove_all(dir, ec);
  step.passed = step.counterexample.empty();
  return step;
}

}  // namespace

bool SelftestReport::passed() const {
  for (const auto& s : steps)
    if (!s.passed) return false;
  return true;
}

std::string SelftestReport::first_counterexample() const {
  for (const auto& s : steps)
    if (!s.passed) return s.name + ": " + s.counterexample;
  return {};
}

SelftestReport run_selftest(const SelftestOptions& opts, std::ostream& log) {
  SelftestReport report;
  auto record = [&](SelftestStep step) {
    log << (step.passed ? "PASS " : "FAIL ") << step.name << " (" << step.checks << " checks)";
    if (!step.passed) log << ": " << step.counterexample;
    log << std::endl;
    report.steps.push_back(std::move(step));
  };
  record(commutators(opts));
  record(oracle(opts));
  record(catalog(opts));
  record(cache_versioning());
  return report;
}

}  // namespace cherednik::harness
