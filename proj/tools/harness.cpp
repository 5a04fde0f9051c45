#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <sstream>
#include <thread>

#include "cherednik/hilbert.hpp"
#include "cherednik/kernel.hpp"

namespace cherednik::harness {

namespace {

using Clock = std::chrono::steady_clock;

struct KernelRun {
  std::vector<DegreeDims> degrees;
  bool finished = false;
  bool timed_out = false;
};

template <class Field>
KernelRun run_kernel(std::shared_ptr<const Field> field, const HilbertRequest& req,
                     std::optional<Clock::time_point> deadline) {
  DunklContext<Field> ctx(req.n, req.t, field);
  KernelOptions opts;
  opts.max_degree = req.max_degree;
  opts.threads = req.threads;
  GradedKernel<Field> kernel(ctx, opts);
  KernelRun out;
  while (!kernel.finished() && kernel.top_degree() < kernel.options().max_degree) {
    if (deadline && Clock::now() > *deadline) {
      out.timed_out = true;
      break;
    }
    kernel.extend();
  }
  out.finished = kernel.finished();
  for (unsigned d = 0; d <= kernel.top_degree(); ++d) {
    const auto& deg = kernel.degree(d);
    out.degrees.push_back({d, deg.dim_M(), deg.dim_L(), deg.dim_ker()});
  }
  return out;
}

ConjectureVerdict verdict(const Series& computed, const Series& predicted) {
  const auto cmp = compare(computed, predicted);
  return {predicted.poly.coeffs(), cmp.equal, cmp.equal ? "match" : cmp.to_string()};
}

json verdict_json(const ConjectureVerdict& v) {
  return {{"predicted", v.predicted}, {"match", v.match}, {"detail", v.detail}};
}

ConjectureVerdict verdict_from(const json& j) {
  return {j.at("predicted").get<std::vector<std::int64_t>>(), j.at("match").get<bool>(),
          j.at("detail").get<std::string>()};
}

std::vector<std::uint64_t> trimmed(std::vector<std::uint64_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

std::string engine_version() { return std::string("cherednik-core ") + CHEREDNIK_VERSION; }

std::string RunKey::id() const {
  std::ostringstream s;
  s << "p=" << p << ";n=" << n << ";t=" << t << ";c=" << c_mode << ";v=" << format_version;
  return s.str();
}

CoeffDomain CSpec::domain(std::uint32_t p, unsigned evaluation) const {
  switch (mode) {
    case CMode::value:
      return CoeffDomain::at_value(p, value);
    case CMode::random_extension:
      return CoeffDomain::random_extension(p, seed + evaluation);
    case CMode::generic:
    default:
      return CoeffDomain::generic(p);
  }
}

std::string CSpec::c_mode(std::uint32_t p) const {
  std::string s = domain(p).c_mode_string();
  if (mode == CMode::random_extension && evaluations > 1) s += "x" + std::to_string(evaluations);
  return s;
}

json RunRecord::to_json() const {
  json j;
  j["format_version"] = key.format_version;
  j["key"] = {{"p", key.p}, {"n", key.n}, {"t", key.t}, {"c_mode", key.c_mode}};
  j["engine_version"] = engine_version();
  j["status"] = status;
  if (!error.empty()) j["error"] = error;
  j["series"] = series;
  j["factored"] = factored;
  json degs = json::array();
  for (const auto& d : degrees)
    degs.push_back({{"d", d.d}, {"dim_M", d.dim_M}, {"dim_L", d.dim_L}, {"dim_ker", d.dim_ker}});
  j["degrees"] = degs;
  j["conjecture"] = {{"as_printed", verdict_json(as_printed)},
                     {"remark_consistent", verdict_json(remark_consistent)}};
  j["theorem"] = nullptr;
  if (theorem) {
    j["theorem"] = verdict_json(*theorem);
    j["theorem"]["regime"] = theorem_regime.value_or("");
  }
  j["baby_verma"] = {{"series", baby_verma}, {"dominated", dominated_by_baby_verma}};
  j["shape"] = nullptr;
  if (shape_ok) j["shape"] = {{"ok", *shape_ok}, {"message", shape_message}};
  if (!evaluations.empty()) j["evaluations"] = {{"series", evaluations}, {"agree", evaluations_agree}};
  j["timing"] = {{"seconds", seconds}};
  return j;
}

RunRecord RunRecord::from_json(const json& j) {
  RunRecord r;
  const auto& k = j.at("key");
  r.key = {k.at("p").get<std::uint32_t>(), k.at("n").get<std::uint64_t>(), k.at("t").get<int>(),
           k.at("c_mode").get<std::string>(), j.at("format_version").get<int>()};
  r.status = j.at("status").get<std::string>();
  if (j.contains("error")) r.error = j["error"].get<std::string>();
  r.series = j.at("series").get<std::vector<std::uint64_t>>();
  r.factored = j.at("factored").get<std::string>();
  for (const auto& d : j.at("degrees"))
    r.degrees.push_back({d.at("d").get<unsigned>(), d.at("dim_M").get<std::uint64_t>(),
                         d.at("dim_L").get<std::uint64_t>(), d.at("dim_ker").get<std::uint64_t>()});
  r.as_printed = verdict_from(j.at("conjecture").at("as_printed"));
  r.remark_consistent = verdict_from(j.at("conjecture").at("remark_consistent"));
  if (!j.at("theorem").is_null()) {
    r.theorem = verdict_from(j["theorem"]);
    r.theorem_regime = j["theorem"].at("regime").get<std::string>();
  }
  r.baby_verma = j.at("baby_verma").at("series").get<std::vector<std::int64_t>>();
  r.dominated_by_baby_verma = j.at("baby_verma").at("dominated").get<bool>();
  if (!j.at("shape").is_null()) {
    r.shape_ok = j["shape"].at("ok").get<bool>();
    r.shape_message = j["shape"].at("message").get<std::string>();
  }
  if (j.contains("evaluations")) {
    r.evaluations = j["evaluations"].at("series").get<std::vector<std::vector<std::uint64_t>>>();
    r.evaluations_agree = j["evaluations"].at("agree").get<bool>();
  }
  r.seconds = j.at("timing").at("seconds").get<double>();
  return r;
}

RunRecord compute_record(const HilbertRequest& req) {
  RunRecord rec;
  rec.key = req.key();
  const auto start = Clock::now();
  try {
    if (req.t != 0 && req.t != 1) throw std::invalid_argument("t must be 0 or 1");
    if (req.n < 2) throw std::invalid_argument("n must be at least 2");
    if (req.n > Monomial::kMaxSlots) throw std::invalid_argument("n exceeds the supported maximum");
    CoeffDomain::generic(req.p).validate();
    std::optional<Clock::time_point> deadline;
    if (req.time_cap_seconds > 0)
      deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(req.time_cap_seconds));

    const unsigned evals = req.c.mode == CMode::random_extension ? std::max(1u, req.c.evaluations) : 1;
    std::vector<KernelRun> runs;
    for (unsigned e = 0; e < evals; ++e) {
      auto dom = req.c.domain(req.p, e);
      if (req.t == 0 && dom.mode == CMode::generic) dom = CoeffDomain::at_value(req.p, 1);
      runs.push_back(with_field(dom, [&](auto field) { return run_kernel(field, req, deadline); }));
      if (runs.back().timed_out) break;
    }

    rec.degrees = runs.front().degrees;
    for (const auto& run : runs) {
      if (run.timed_out) rec.status = "exceeded_cap";
      else if (!run.finished && rec.status == "ok") rec.status = "incomplete";
      for (std::size_t d = 0; d < std::min(run.degrees.size(), rec.degrees.size()); ++d)
        if (run.degrees[d].dim_L > rec.degrees[d].dim_L) rec.degrees[d] = run.degrees[d];
    }
    if (req.c.mode == CMode::random_extension) {
      for (const auto& run : runs) {
        std::vector<std::uint64_t> s;
        for (const auto& d : run.degrees) s.push_back(d.dim_L);
        rec.evaluations.push_back(trimmed(std::move(s)));
      }
      rec.evaluations_agree =
          std::all_of(rec.evaluations.begin(), rec.evaluations.end(), [&](const auto& s) { return s == rec.evaluations[0]; });
    }
    std::vector<std::uint64_t> dims;
    for (const auto& d : rec.degrees) dims.push_back(d.dim_L);
    rec.series = trimmed(dims);

    const auto computed = computed_series(rec.series);
    rec.factored = factored(computed.poly);
    if (rec.ok()) {
      const auto cong = CongruenceData::of(req.n, req.p);
      rec.as_printed = verdict(computed, conjectured_hilbert(cong, req.t, ConjectureVariant::as_printed));
      rec.remark_consistent = verdict(computed, conjectured_hilbert(cong, req.t, ConjectureVariant::remark_consistent));
      if (auto th = theorem_hilbert(cong, req.t)) {
        rec.theorem = verdict(computed, *th);
        rec.theorem_regime = theorem_regime(cong, req.t);
      }
      const auto bv = baby_verma_series(req.n, req.p, req.t);
      rec.baby_verma = bv.poly.coeffs();
      rec.dominated_by_baby_verma = dominated_by(computed, bv);
      if (req.t == 1) {
        const auto shape = shape_check_t1(computed, req.n, req.p);
        rec.shape_ok = shape.ok;
        rec.shape_message = shape.message;
      }
    }
  } catch (const std::exception& e) {
    rec.status = "error";
    rec.error = e.what();
  }
  rec.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rec;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)), file_(dir_ / "runs.jsonl") {
  std::filesystem::create_directories(dir_);
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto j = json::parse(line);
      if (j.at("format_version").get<int>() != kFormatVersion || j.at("status").get<std::string>() != "ok") {
        ++ignored_;
        continue;
      }
      const auto rec = RunRecord::from_json(j);
      entries_[rec.key.id()] = std::move(j);
    } catch (const std::exception&) {
      ++ignored_;
    }
  }
}

std::filesystem::path ResultCache::default_dir() {
  if (const char* env = std::getenv("CHEREDNIK_CACHE_DIR"); env && *env) return env;
  return ".cherednik-cache";
}

std::optional<RunRecord> ResultCache::lookup(const RunKey& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find(key.id());
  if (it == entries_.end()) return std::nullopt;
  return RunRecord::from_json(it->second);
}

void ResultCache::append(const RunRecord& rec) {
  auto j = rec.to_json();
  std::lock_guard<std::mutex> lock(mutex_);
  std::ofstream out(file_, std::ios::app);
  out << j.dump() << '\n';
  if (!out) throw std::runtime_error("cannot write cache file " + file_.string());
  entries_[rec.key.id()] = std::move(j);
}

std::size_t ResultCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

RunRecord cached_record(const HilbertRequest& req, ResultCache* cache, bool* hit) {
  if (hit) *hit = false;
  if (cache) {
    if (auto rec = cache->lookup(req.key())) {
      if (hit) *hit = true;
      return *rec;
    }
  }
  auto rec = compute_record(req);
  if (cache && rec.ok()) cache->append(rec);
  return rec;
}

std::vector<SweepCell> sweep(const SweepRequest& req, ResultCache* cache) {
  std::vector<HilbertRequest> cells;
  for (auto p : req.ps)
    for (auto n : req.ns) {
      if (req.residue && n % p != *req.residue) continue;
      HilbertRequest h;
      h.p = p;
      h.n = n;
      h.t = req.t;
      h.c = req.c;
      h.max_degree = req.max_degree;
      h.time_cap_seconds = req.time_cap_seconds;
      cells.push_back(h);
    }
  std::vector<SweepCell> out(cells.size());

  std::mutex qmutex;
  std::condition_variable qcv;
  std::deque<RunRecord> queue;
  bool done = false;
  std::jthread writer([&] {
    std::unique_lock<std::mutex> lock(qmutex);
    for (;;) {
      qcv.wait(lock, [&] { return done || !queue.empty(); });
      while (!queue.empty()) {
        auto rec = std::move(queue.front());
        queue.pop_front();
        lock.unlock();
        if (cache) cache->append(rec);
        lock.lock();
      }
      if (done) return;
    }
  });

  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    const unsigned jobs = std::max(1u, std::min<unsigned>(req.jobs, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1))));
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (std::size_t idx; (idx = next.fetch_add(1)) < cells.size();) {
          if (cache) {
            if (auto rec = cache->lookup(cells[idx].key())) {
              out[idx] = {std::move(*rec), true};
              continue;
            }
          }
          out[idx] = {compute_record(cells[idx]), false};
          if (out[idx].record.ok()) {
            std::lock_guard<std::mutex> lock(qmutex);
            queue.push_back(out[idx].record);
            qcv.notify_one();
          }
        }
      });
  }
  {
    std::lock_guard<std::mutex> lock(qmutex);
    done = true;
  }
  qcv.notify_one();
  writer.join();
  return out;
}

std::string csv_row(const RunRecord& rec) {
  std::ostringstream s;
  s << rec.key.p << ',' << rec.key.n << ',' << rec.key.n % rec.key.p << ',' << rec.status << ',';
  for (std::size_t i = 0; i < rec.series.size(); ++i) s << (i ? " " : "") << rec.series[i];
  s << ',';
  if (rec.ok()) s << (rec.as_printed.match ? "true" : "false") << ',' << (rec.remark_consistent.match ? "true" : "false");
  else s << ',';
  return s.str();
}

void write_csv(const std::filesystem::path& path, const std::vector<SweepCell>& cells) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  out << kCsvHeader << '\n';
  for (const auto& cell : cells) out << csv_row(cell.record) << '\n';
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace cherednik::harness
