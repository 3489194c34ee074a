#ifndef CAUSAL_LAB_CLI_HPP
#define CAUSAL_LAB_CLI_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace causal_lab::cli {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

enum class Subcommand { Rates, Table, Plan, Verify, Sweep };
enum class Format { Csv, Json };

struct RunConfig {
  Subcommand subcommand = Subcommand::Rates;
  std::string scenario;
  std::string suite;
  int d = 2;
  int n = 1;
  int nMax = 20;
  std::int64_t k = 2;
  double p = 0.1;
  double pMin = 0.0;
  double pMax = 1.0;
  int grid = 11;
  double eps = 1e-6;
  double slack = 0.1;
  std::uint64_t seed = kDefaultSeed;
  std::int64_t trials = 1000;
  Format format = Format::Csv;
  std::optional<std::string> outputPath;
};

struct OutputRecord {
  std::string scenario;
  std::optional<int> d;
  std::optional<int> N;
  std::optional<std::int64_t> k;
  std::optional<double> p;
  double value = 0.0;
  std::string provenance;  // formula, brute-force, monte-carlo
};

struct RunResult {
  int exitCode = 0;
  std::vector<OutputRecord> records;
};

/// Thrown for argument values that parse but are out of range.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RunResult execute(const RunConfig& config);

std::string tool_version();
std::string format_double(double v);
std::string to_csv(const std::vector<OutputRecord>& records);
std::string to_json(const std::vector<OutputRecord>& records);

/// Executes and writes to `out` (or the configured path). Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. 0 on success, 1 on a failed verification, 2 on bad arguments.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Worker count from CAUSAL_LAB_THREADS, clamped to [1, hardware threads].
unsigned worker_count();

/// Runs tasks on the worker pool; results keep task order.
template <typename T>
std::vector<T> parallel_map(const std::vector<std::function<T()>>& tasks);

}  // namespace causal_lab::cli

#include "causal_lab/detail/parallel.hpp"

#endif  // CAUSAL_LAB_CLI_HPP
