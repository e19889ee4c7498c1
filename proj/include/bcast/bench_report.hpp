#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bcast/generators.hpp"

namespace bcast {

inline constexpr std::string_view kAnchorFree = "anchor-free";
inline constexpr std::string_view kAnchored = "anchored";

/// One timed solver on one instance.
struct BenchRow {
  std::string family;
  int n = 0;
  std::uint64_t seed = 0;
  std::string solver;
  double median_seconds = 0;
  std::int64_t cost = 0;
  int threads = 1;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct FamilyAggregate {
  std::string family;
  int cases = 0;
  int max_n = 0;
  double median_speedup = 0;
  double max_speedup = 0;
  double new_seconds = 0;       // on the largest instance
  double baseline_seconds = 0;  // on the largest instance
};

struct BenchReport {
  std::vector<BenchRow> rows;

  // Speedup = anchored time / anchor-free time, paired by (family, n, seed).
  std::vector<FamilyAggregate> aggregates() const;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

std::string render_csv(const BenchReport& report);
// Throws parse_error.
BenchReport parse_csv(std::string_view text);
std::string render_table(const BenchReport& report);
// family,n,seed,speedup per instance, for external plotting.
std::string render_speedup_csv(const BenchReport& report);

struct BenchCase {
  Family family = Family::path;
  int n = 0;
  std::uint64_t seed = 0;
  std::optional<double> edge_probability;
};

struct SuiteConfig {
  std::vector<BenchCase> cases;
  int reps = 5;
  double timeout_seconds = 600;
};

/// Lines of "family=NAME sizes=A,B,C [seeds=S,T] [p=P]" plus optional
/// "reps=R" and "timeout=SECONDS" lines; '#' comments. Throws parse_error.
SuiteConfig parse_suite(std::string_view text);

/// All seven families at sizes that finish in seconds.
SuiteConfig default_suite();

/// Runs solve_optimal with both path routines on every case, median of
/// `reps` single-threaded runs each. Instances are spread over `threads`
/// workers; rows come back in suite order either way. Throws
/// invariant_error when the two costs differ and std::runtime_error when a
/// single solve exceeds the timeout.
BenchReport run_bench(const SuiteConfig& suite, int threads = 1, std::ostream* progress = nullptr);

}  // namespace bcast
