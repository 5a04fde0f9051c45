#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "cherednik/field.hpp"

namespace cherednik::harness {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;
std::string engine_version();

/// Cache key of a Hilbert computation.
struct RunKey {
  std::uint32_t p = 2;
  std::uint64_t n = 2;
  int t = 0;
  std::string c_mode = "generic";
  int format_version = kFormatVersion;

  std::string id() const;
  friend bool operator==(const RunKey&, const RunKey&) = default;
};

struct DegreeDims {
  unsigned d = 0;
  std::uint64_t dim_M = 0;
  std::uint64_t dim_L = 0;
  std::uint64_t dim_ker = 0;
};

struct ConjectureVerdict {
  std::vector<std::int64_t> predicted;
  bool match = false;
  std::string detail;
};

/// One Hilbert computation with its comparisons. `status` is "ok",
/// "incomplete" (degree cap reached), "exceeded_cap" (time cap) or "error".
struct RunRecord {
  RunKey key;
  std::string status = "ok";
  std::string error;
  std::vector<std::uint64_t> series;
  std::string factored;
  std::vector<DegreeDims> degrees;
  ConjectureVerdict as_printed;
  ConjectureVerdict remark_consistent;
  std::optional<std::string> theorem_regime;
  std::optional<ConjectureVerdict> theorem;
  std::vector<std::int64_t> baby_verma;
  bool dominated_by_baby_verma = false;
  std::optional<bool> shape_ok;  // t = 1 only
  std::string shape_message;
  std::vector<std::vector<std::uint64_t>> evaluations;  // fast-eval only
  bool evaluations_agree = true;
  double seconds = 0;

  bool ok() const { return status == "ok"; }
  /// Both conjecture variants agree with the computed series.
  bool conjecture_match() const { return as_printed.match && remark_consistent.match; }

  json to_json() const;
  static RunRecord from_json(const json& j);
};

/// How c is realized for a run.
struct CSpec {
  CMode mode = CMode::generic;
  std::int64_t value = 1;
  std::uint64_t seed = 1;
  unsigned evaluations = 1;  // random mode: seeds seed .. seed+evaluations-1

  CoeffDomain domain(std::uint32_t p, unsigned evaluation = 0) const;
  std::string c_mode(std::uint32_t p) const;
};

struct HilbertRequest {
  std::uint32_t p = 2;
  std::uint64_t n = 2;
  int t = 0;
  CSpec c;
  unsigned max_degree = 0;   // 0: default_degree_cap
  unsigned threads = 1;
  double time_cap_seconds = 0;  // 0: none

  RunKey key() const { return {p, n, t, c.c_mode(p), kFormatVersion}; }
};

/// Runs the kernel engine and fills every comparison. Never throws for
/// computational failures: they are reported through `status`.
RunRecord compute_record(const HilbertRequest& req);

/// Append-only JSON-lines cache. Lines with another format_version or that
/// fail to parse are ignored. Thread-safe; appends are serialized.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  /// $CHEREDNIK_CACHE_DIR, else ".cherednik-cache".
  static std::filesystem::path default_dir();

  const std::filesystem::path& file() const { return file_; }
  std::optional<RunRecord> lookup(const RunKey& key) const;
  void append(const RunRecord& rec);
  std::size_t size() const;
  std::size_t ignored_lines() const { return ignored_; }

 private:
  std::filesystem::path dir_;
  std::filesystem::path file_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, json> entries_;
  std::size_t ignored_ = 0;
};

/// Cache lookup, then computation; successful records are appended.
RunRecord cached_record(const HilbertRequest& req, ResultCache* cache, bool* hit = nullptr);

struct SweepRequest {
  std::vector<std::uint32_t> ps;
  std::vector<std::uint64_t> ns;
  int t = 0;
  CSpec c;
  std::optional<std::uint32_t> residue;  // keep only n with n mod p == residue
  unsigned jobs = 1;
  unsigned max_degree = 0;
  double time_cap_seconds = 0;
};

struct SweepCell {
  RunRecord record;
  bool from_cache = false;
};

/// Runs every (p, n) cell through a worker pool. Cache appends go through a
/// single writer thread. Cells come back in grid order.
std::vector<SweepCell> sweep(const SweepRequest& req, ResultCache* cache);

inline constexpr const char* kCsvHeader = "p,n,r,status,series,variant_a_match,variant_b_match";
std::string csv_row(const RunRecord& rec);
void write_csv(const std::filesystem::path& path, const std::vector<SweepCell>& cells);

}  // namespace cherednik::harness
