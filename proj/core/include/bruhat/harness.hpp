#ifndef BRUHAT_HARNESS_HPP
#define BRUHAT_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bruhat/perm.hpp"

namespace bruhat {

inline constexpr std::uint64_t kDefaultSeed = 1729;
inline constexpr int kMaxSweepRank = 7;

enum class CheckStatus { Pass, Fail, Skip };

struct VerificationReport {
  std::string check;
  int n = 0;
  std::string u_text, v_text;
  CheckStatus status = CheckStatus::Pass;
  std::string details_json;  // check-specific payload; carries a witness on failure
  double elapsed_ms = 0.0;

  std::string json_line() const;
};

struct SweepOptions {
  int n = 4;
  int sample = 0;  // 0 = exhaustive sweep; otherwise number of seeded intervals
  std::uint64_t seed = kDefaultSeed;
  int jobs = 0;  // 0 = hardware concurrency
};

struct SweepSummary {
  std::string check;
  SweepOptions options;
  int total = 0, passed = 0, failed = 0, skipped = 0;
  double elapsed_ms = 0.0;

  bool all_passed() const { return failed == 0; }
  std::string json_line() const;
};

// Names of the verification suites, in the order they are documented.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// One check on one interval.
VerificationReport run_check_on_interval(const std::string& check, const Permutation& u, const Permutation& v);

// All intervals of S_n, ordered by (length(v)-length(u), v window, u window).
std::vector<std::pair<Permutation, Permutation>> all_intervals(int n);

// Deterministic seeded sample of distinct intervals of S_n.
std::vector<std::pair<Permutation, Permutation>> sample_intervals(int n, int count, std::uint64_t seed);

using ReportSink = std::function<void(const VerificationReport&)>;

// Runs one suite over the interval sweep given by the options (exhaustive or
// sampled), distributing intervals over a worker pool. The sink is invoked
// under a lock as results complete; with jobs = 1 the order is the sweep
// order.
SweepSummary run_suite(const std::string& check, const SweepOptions& options, const ReportSink& sink);

// Re-runs every failed record of a JSON-lines report file; returns the
// replayed reports through the sink and a summary over them.
SweepSummary replay_failures(const std::string& path, const ReportSink& sink);

// Command-line entry point (subcommands: verify, ds, rpoly, classes).
// Returns 0 on success, 1 on verification failure, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bruhat

#endif  // BRUHAT_HARNESS_HPP
