#include <iostream>
#include <regex>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cherednik/catalog.hpp"
#include "cherednik/hilbert.hpp"
#include "cherednik/stability.hpp"
#include "harness.hpp"
#include "selftest.hpp"

using namespace cherednik;
using namespace cherednik::harness;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kMismatch = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CFlags {
  std::string c = "generic";
  bool fast_eval = false;
  unsigned evaluations = 3;
  std::uint64_t seed = 1;

  void add(CLI::App* app) {
    app->add_option("--c", c, "deformation parameter: 'generic' or an integer")->capture_default_str();
    app->add_flag("--fast-eval", fast_eval, "evaluate c at random points of an extension field (non-certifying)");
    app->add_option("--evaluations", evaluations, "random evaluations with --fast-eval")->capture_default_str();
    app->add_option("--seed", seed, "first seed for --fast-eval")->capture_default_str();
  }

  CSpec spec() const {
    CSpec s;
    s.seed = seed;
    s.evaluations = evaluations;
    if (fast_eval) {
      if (c != "generic") throw UsageError("--fast-eval cannot be combined with a fixed --c value");
      if (evaluations == 0) throw UsageError("--evaluations must be positive");
      s.mode = CMode::random_extension;
    } else if (c != "generic") {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(c, &used);
        if (used != c.size()) throw std::invalid_argument(c);
        s.mode = CMode::value;
        s.value = v;
      } catch (const std::logic_error&) {
        throw UsageError("--c expects 'generic' or an integer, got '" + c + "'");
      }
    }
    return s;
  }
};

void require_regime(std::uint32_t p, std::uint64_t n, int t) {
  if (!modp::is_prime(p)) throw UsageError("--p must be prime, got " + std::to_string(p));
  if (n < 2) throw UsageError("--n must be at least 2");
  if (n > Monomial::kMaxSlots) throw UsageError("--n exceeds the supported maximum " + std::to_string(Monomial::kMaxSlots));
  if (t != 0 && t != 1) throw UsageError("--t must be 0 or 1");
}

CoeffDomain single_domain(const CSpec& s, std::uint32_t p) { return s.domain(p, 0); }

std::string coefficients(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string coefficients(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::size_t max_variable(const std::string& text) {
  static const std::regex var("x([0-9]+)");
  std::size_t top = 1;
  for (std::sregex_iterator it(text.begin(), text.end(), var), end; it != end; ++it)
    top = std::max<std::size_t>(top, std::stoul((*it)[1].str()));
  return top;
}

// ---------------------------------------------------------------------------

struct HilbertFlags {
  std::uint32_t p = 2;
  std::uint64_t n = 3;
  int t = 0;
  CFlags c;
  unsigned max_degree = 0;
  unsigned threads = 1;
  double time_cap = 0;
  bool json_out = false;
  bool no_cache = false;
  std::string cache_dir;
};

int cmd_hilbert(const HilbertFlags& f) {
  require_regime(f.p, f.n, f.t);
  HilbertRequest req;
  req.p = f.p;
  req.n = f.n;
  req.t = f.t;
  req.c = f.c.spec();
  req.max_degree = f.max_degree;
  req.threads = f.threads;
  req.time_cap_seconds = f.time_cap;
  std::optional<ResultCache> cache;
  if (!f.no_cache) cache.emplace(f.cache_dir.empty() ? ResultCache::default_dir() : std::filesystem::path(f.cache_dir));
  bool hit = false;
  const auto rec = cached_record(req, cache ? &*cache : nullptr, &hit);

  if (f.json_out) {
    std::cout << rec.to_json().dump(2) << std::endl;
  } else {
    std::cout << "p=" << f.p << " n=" << f.n << " t=" << f.t << " c=" << rec.key.c_mode << (hit ? " (cached)" : "")
              << "\n";
    std::cout << "status: " << rec.status << (rec.error.empty() ? "" : " (" + rec.error + ")") << "\n";
    if (!rec.series.empty()) {
      std::cout << "series: " << coefficients(rec.series) << "\n";
      std::cout << "factored: " << rec.factored << "\n";
    }
    if (rec.ok()) {
      auto line = [](const char* name, const ConjectureVerdict& v) {
        std::cout << name << ": " << (v.match ? "match" : "MISMATCH") << " [" << coefficients(v.predicted) << "]";
        if (!v.match) std::cout << " " << v.detail;
        std::cout << "\n";
      };
      line("conjecture (as printed)", rec.as_printed);
      line("conjecture (remark-consistent)", rec.remark_consistent);
      if (rec.theorem) line(("theorem, " + rec.theorem_regime.value_or("")).c_str(), *rec.theorem);
      else std::cout << "theorem: outside the proved regimes\n";
      std::cout << "baby Verma bound: " << (rec.dominated_by_baby_verma ? "holds" : "VIOLATED") << "\n";
      if (rec.shape_ok) std::cout << "shape check: " << (*rec.shape_ok ? "ok" : "FAILED " + rec.shape_message) << "\n";
      if (!rec.evaluations.empty())
        std::cout << "evaluations: " << rec.evaluations.size() << (rec.evaluations_agree ? " agree" : " DISAGREE") << "\n";
    }
  }
  if (rec.status == "error") return kFailure;
  if (!rec.ok()) {
    std::cerr << "run did not finish (" << rec.status << ")\n";
    return kFailure;
  }
  return rec.conjecture_match() ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------

struct CheckFlags {
  std::string poly;
  std::uint32_t p = 2;
  std::uint64_t n = 0;
  int t = -1;
  CFlags c;
  std::string route = "auto";
  std::string family;
  std::size_t i = 1, j = 2, k = 3;
  bool experimental = false;
  unsigned beyond = 0;
  unsigned threads = 1;
};

template <class Field>
Poly<Field> parse_reduced(const std::string& text, const DunklContext<Field>& ctx) {
  return ctx.substitution().reduce(parse_poly(text, ctx.n(), ctx.field_ptr()));
}

template <class Field>
json witness_json(const KernelWitness<Field>& w, const Field& F, std::size_t n) {
  json j{{"word", format_y_word(w.word)}, {"value", F.format(w.value)}};
  if (w.y_exponents) {
    j["y_monomial"] = format_y_monomial(*w.y_exponents, n);
    j["monomial_value"] = F.format(*w.monomial_value);
  }
  return j;
}

json regime_json(const CheckFlags& f, const CSpec& c) {
  return {{"p", f.p}, {"n", f.n}, {"t", f.t}, {"c_mode", c.c_mode(f.p)}};
}

int cmd_check_pointwise(const std::string& what, const CheckFlags& f) {
  if (f.t < 0) throw UsageError("--t is required");
  require_regime(f.p, f.n, f.t);
  const auto spec = f.c.spec();
  json out{{"command", what}, {"polynomial", f.poly}, {"regime", regime_json(f, spec)}};
  std::string summary;
  with_field(single_domain(spec, f.p), [&](auto field) {
    using Field = std::remove_const_t<typename decltype(field)::element_type>;
    DunklContext<Field> ctx(f.n, f.t, field);
    const auto g = parse_reduced(f.poly, ctx);
    out["reduced"] = g.to_string();
    if (what == "singular") {
      const bool s = is_singular(g, ctx);
      out["singular"] = s;
      summary = s ? "singular" : "not singular";
    } else {
      MembershipRoute route = MembershipRoute::automatic;
      if (f.route == "engine") route = MembershipRoute::engine;
      else if (f.route == "descent") route = MembershipRoute::descent;
      else if (f.route != "auto") throw UsageError("--route must be auto, engine or descent");
      const auto res = is_in_kernel(g, ctx, route);
      out["in_kernel"] = res.in_kernel;
      out["route"] = res.route == MembershipRoute::engine ? "engine" : "descent";
      out["witness"] = nullptr;
      summary = res.in_kernel ? "in ker B" : "not in ker B";
      if (res.witness) {
        out["witness"] = witness_json(*res.witness, ctx.field(), ctx.n());
        summary += ", B(" + out["witness"].value("y_monomial", out["witness"]["word"].get<std::string>()) + ", f) = " +
                   out["witness"].value("monomial_value", out["witness"]["value"].get<std::string>());
      }
    }
  });
  out["certifying"] = spec.mode != CMode::random_extension;
  std::cout << out.dump(2) << std::endl;
  std::cerr << what << ": " << summary << std::endl;
  return kOk;
}

int cmd_check_family(const CheckFlags& f) {
  if (f.t < 0) throw UsageError("--t is required");
  require_regime(f.p, f.n, f.t);
  const Family fam = parse_family(f.family);
  const auto spec = f.c.spec();
  json out{{"command", "family"}, {"family", f.family}, {"regime", regime_json(f, spec)}};
  with_field(single_domain(spec, f.p), [&](auto field) {
    using Field = std::remove_const_t<typename decltype(field)::element_type>;
    DunklContext<Field> ctx(f.n, f.t, field);
    const auto chk = certify_family(fam, {f.i, f.j, f.k}, ctx);
    out["polynomial"] = chk.polynomial.to_string();
    out["certificate"] = chk.certificate == Certificate::singular ? "singular" : "kernel";
    out["certified"] = chk.certified;
    out["raw_singular"] = chk.raw_singular;
  });
  std::cout << out.dump(2) << std::endl;
  std::cerr << f.family << ": " << (out["certified"].get<bool>() ? "certified" : "NOT certified") << std::endl;
  return kOk;
}

int cmd_check_stable(const CheckFlags& f) {
  const int t = f.t < 0 ? 1 : f.t;
  if (!modp::is_prime(f.p)) throw UsageError("--p must be prime, got " + std::to_string(f.p));
  const auto spec = f.c.spec();
  if (spec.mode == CMode::value) throw UsageError("stability needs generic c (or --fast-eval)");
  json out;
  with_field(single_domain(spec, f.p), [&](auto field) {
    const auto g = parse_poly(f.poly, max_variable(f.poly), field);
    StabilityOptions opts;
    opts.experimental = f.experimental;
    opts.t = t;
    opts.beyond_bound = f.beyond;
    opts.threads = f.threads;
    const auto v = is_stably_in_kernel(g, field, opts);
    json per_n = json::array(), timing = json::array();
    for (const auto& e : v.per_n) {
      json cell{{"n", e.n}, {"in_kernel", e.in_kernel}, {"beyond_bound", e.beyond_bound}};
      if (!e.witness.empty()) cell["witness"] = e.witness;
      per_n.push_back(cell);
      timing.push_back({{"n", e.n}, {"seconds", e.seconds}});
    }
    out = {{"polynomial", v.polynomial},
           {"bound", v.bound},
           {"proof_bound", v.proof_bound},
           {"per_n", per_n},
           {"stable", v.stable},
           {"certifying", v.certifying && spec.mode == CMode::generic},
           {"first_failure", v.first_failure ? json(*v.first_failure) : json(nullptr)},
           {"timing", timing}};
  });
  std::cout << out.dump(2) << std::endl;
  std::cerr << "stable: " << (out["stable"].get<bool>() ? "true" : "false") << " (bound " << out["bound"] << ")"
            << std::endl;
  return kOk;
}

// ---------------------------------------------------------------------------

struct SweepFlags {
  std::vector<std::uint32_t> ps;
  std::vector<std::uint64_t> ns;
  int t = 0;
  CFlags c;
  int residue = -1;
  unsigned jobs = 1;
  unsigned max_degree = 0;
  double time_cap = 0;
  std::string out = "sweep-out";
  bool no_cache = false;
  std::string cache_dir;
};

int cmd_sweep(const SweepFlags& f) {
  if (f.t != 0 && f.t != 1) throw UsageError("--t must be 0 or 1");
  SweepRequest req;
  req.ps = f.ps;
  req.ns = f.ns;
  req.t = f.t;
  req.c = f.c.spec();
  if (f.residue >= 0) req.residue = static_cast<std::uint32_t>(f.residue);
  req.jobs = f.jobs;
  req.max_degree = f.max_degree;
  req.time_cap_seconds = f.time_cap;
  std::optional<ResultCache> cache;
  if (!f.no_cache) cache.emplace(f.cache_dir.empty() ? ResultCache::default_dir() : std::filesystem::path(f.cache_dir));
  const auto cells = sweep(req, cache ? &*cache : nullptr);
  const auto csv = std::filesystem::path(f.out) / "summary.csv";
  write_csv(csv, cells);
  std::cout << kCsvHeader << "\n";
  std::size_t failed = 0, cached = 0;
  for (const auto& cell : cells) {
    std::cout << csv_row(cell.record) << "\n";
    failed += !cell.record.ok();
    cached += cell.from_cache;
  }
  std::cerr << cells.size() << " cells (" << cached << " cached, " << failed << " not ok); wrote " << csv.string()
            << std::endl;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernels of the contravariant form and Hilbert series of L_{t,c}(S_n) in characteristic p"};
  app.require_subcommand(1);

  HilbertFlags hf;
  auto* hilbert = app.add_subcommand("hilbert", "compute the Hilbert series of L_{t,c} and compare with predictions");
  hilbert->add_option("--p", hf.p, "characteristic")->required();
  hilbert->add_option("--n", hf.n, "rank of S_n")->required();
  hilbert->add_option("--t", hf.t, "0 or 1")->required();
  hf.c.add(hilbert);
  hilbert->add_option("--max-degree", hf.max_degree, "degree cap (default max(n+10, deg h_N + 1))");
  hilbert->add_option("--threads", hf.threads, "worker threads for row assembly")->capture_default_str();
  hilbert->add_option("--time-cap", hf.time_cap, "seconds before the run is marked exceeded_cap");
  hilbert->add_flag("--json", hf.json_out, "print the run record as JSON");
  hilbert->add_flag("--no-cache", hf.no_cache, "do not read or write the result cache");
  hilbert->add_option("--cache-dir", hf.cache_dir, "cache directory (default $CHEREDNIK_CACHE_DIR or .cherednik-cache)");

  CheckFlags cf;
  auto* check = app.add_subcommand("check", "decide singularity, kernel membership or stability of a polynomial");
  check->require_subcommand(1);
  auto pointwise = [&](CLI::App* sub) {
    sub->add_option("--poly", cf.poly, "polynomial in x1..xn, e.g. \"x1^2+(c)*x1*x2\"")->required();
    sub->add_option("--p", cf.p, "characteristic")->required();
    sub->add_option("--n", cf.n, "rank of S_n")->required();
    sub->add_option("--t", cf.t, "0 or 1")->required();
    cf.c.add(sub);
  };
  auto* singular = check->add_subcommand("singular", "is the polynomial annihilated by every Dunkl operator");
  pointwise(singular);
  auto* kernel = check->add_subcommand("kernel", "is the polynomial in ker B");
  pointwise(kernel);
  kernel->add_option("--route", cf.route, "auto, engine or descent")->capture_default_str();
  auto* stable = check->add_subcommand("stable", "is the polynomial in ker B for every odd n (p=2, t=1)");
  stable->add_option("--poly", cf.poly, "polynomial in x1..xk")->required();
  stable->add_option("--p", cf.p, "characteristic")->capture_default_str();
  stable->add_option("--t", cf.t, "0 or 1 (default 1)");
  cf.c.add(stable);
  stable->add_flag("--experimental", cf.experimental, "allow regimes where the criterion is not proved");
  stable->add_option("--beyond", cf.beyond, "extra odd n above the bound to check");
  stable->add_option("--threads", cf.threads, "parallel n checks")->capture_default_str();
  auto* family = check->add_subcommand("family", "build and certify a catalog family member");
  family->add_option("--name", cf.family, "quadratic, product, cubic, degree-p, quartic or devadas-sun")->required();
  family->add_option("--p", cf.p, "characteristic")->required();
  family->add_option("--n", cf.n, "rank of S_n")->required();
  family->add_option("--t", cf.t, "0 or 1")->required();
  family->add_option("--i", cf.i, "first index")->capture_default_str();
  family->add_option("--j", cf.j, "second index")->capture_default_str();
  family->add_option("--k", cf.k, "third index")->capture_default_str();
  cf.c.add(family);

  SweepFlags sf;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a (p, n) grid and write a CSV summary");
  sweep_cmd->add_option("--p-list", sf.ps, "characteristics")->delimiter(',');
  sweep_cmd->add_option("--n-list", sf.ns, "ranks")->delimiter(',');
  sweep_cmd->add_option("--t", sf.t, "0 or 1")->required();
  sf.c.add(sweep_cmd);
  sweep_cmd->add_option("--residue", sf.residue, "keep only n with n mod p equal to this");
  sweep_cmd->add_option("--jobs", sf.jobs, "worker threads")->capture_default_str();
  sweep_cmd->add_option("--max-degree", sf.max_degree, "degree cap per cell (default max(n+10, deg h_N + 1))");
  sweep_cmd->add_option("--time-cap", sf.time_cap, "seconds per cell before it is marked exceeded_cap");
  sweep_cmd->add_option("--out", sf.out, "output directory")->capture_default_str();
  sweep_cmd->add_flag("--no-cache", sf.no_cache, "do not read or write the result cache");
  sweep_cmd->add_option("--cache-dir", sf.cache_dir, "cache directory");

  SelftestOptions so;
  auto* selftest = app.add_subcommand("selftest", "run the built-in property suites");
  selftest->add_flag("--mutate", so.mutate, "inject a fault into the Dunkl operators (must fail)");
  selftest->add_option("--trials", so.commutator_trials, "commutator trials per cell")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*hilbert) return cmd_hilbert(hf);
    if (*singular) return cmd_check_pointwise("singular", cf);
    if (*kernel) return cmd_check_pointwise("kernel", cf);
    if (*stable) return cmd_check_stable(cf);
    if (*family) return cmd_check_family(cf);
    if (*sweep_cmd) return cmd_sweep(sf);
    if (*selftest) {
      const auto rep = run_selftest(so, std::cout);
      if (rep.passed()) return kOk;
      std::cerr << "first counterexample: " << rep.first_counterexample() << std::endl;
      return kFailure;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return kFailure;
  }
  return kFailure;
}
