#pragma once

// Verification suites: enumerate cases, fan them out over a worker pool and
// assemble the results in a fixed order.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "modinv/report.hpp"

namespace modinv {

struct RunConfig {
  /// Doubled q-exponent bound (exclusive); 0 picks the per-suite default.
  int q_order = 0;
  /// Form-degree truncation for expansions; 0 picks the default.
  int max_degree = 0;
  double tolerance = 1e-9;
  LVariant l_variant = LVariant::full_angle;
  std::string format = "json";
  std::string out;
  std::string cache_dir;
  /// 0 = one worker per hardware thread
  int jobs = 0;

  /// Throws std::invalid_argument on bad values.
  void validate() const;
};

/// The result-affecting part of the configuration (no paths, no job count).
Json config_json(const RunConfig& c);

struct VerifyParams {
  std::optional<int> m;
  std::optional<int> dim;
  std::optional<Law> law;
  std::optional<Complex> tau;
  /// 1 selects P_1/Q_1 for the route suite, 2 (default) P_2/Q_2.
  int theta_index = 2;
  bool allow_degenerate = false;
};

using Task = std::function<Json()>;

/// Runs every task, at most `jobs` at a time (0 = hardware concurrency), and
/// returns results in task order. The first exception (in task order) is
/// rethrown after all workers stop.
std::vector<Json> run_tasks(const std::vector<Task>& tasks, int jobs);

std::vector<std::string> suite_names();

/// Throws std::invalid_argument for unknown suites or inconsistent params.
std::vector<Task> suite_tasks(const std::string& suite, const VerifyParams& params,
                              const RunConfig& config, const ThetaProvider& provider);

/// {"version": 1, "config": {...}, "results": [...]}
Json run_verify(const std::string& suite, const VerifyParams& params, const RunConfig& config,
                const ThetaProvider& provider = {});

/// True when every result carrying a status passes; degenerate-zero counts
/// only if allowed.
bool all_pass(const Json& results, bool allow_degenerate);

/// "0.3+1.2i", "2i", "-0.5-i", "1.5"
Complex parse_complex(const std::string& text);

}  // namespace modinv
