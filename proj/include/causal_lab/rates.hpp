#ifndef CAUSAL_LAB_RATES_HPP
#define CAUSAL_LAB_RATES_HPP

#include "causal_lab/combinatorics.hpp"
#include "causal_lab/linalg.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>

namespace causal_lab {

// All rates are in bits per query.

struct RateReport {
  int d;
  std::string scenario;
  double rClassical;
  double rQuantum;
};

RateReport rates_summary(int d);

enum class Scenario { Classical, Coherent, Superposed, CauseId };

std::string to_string(Scenario s);
Scenario parse_scenario(const std::string& name);

struct PlanResult {
  Scenario scenario;
  int d;
  int k;
  int N;
  int step;               // granularity of admissible N
  double achievedErr;
  double target;
  std::optional<Rational> exactErr;
  std::optional<BigInt> r;  // reference rank, superposed scenario only
};

/// Error of `scenario` at N queries; nullopt when N is not admissible.
std::optional<double> scenario_error(Scenario s, int d, int N, int k = 2);

/// Smallest admissible N whose error is at most eps.
PlanResult min_queries(Scenario s, int d, double eps, int k = 2);

/// (k - 1) / (d^{2N} + k - 1).
double cause_id_error(std::int64_t k, int N, int d);

inline constexpr double kInfiniteRate = std::numeric_limits<double>::infinity();

/// Scans s on a uniform grid, refines by golden section to 1e-8, returns (s*, f(s*)).
std::pair<double, double> minimize_on_unit_interval(const std::function<double(double)>& f, int gridPoints);

/// -log2 min_s Tr[rho1^s rho2^(1-s)], +infinity when the minimum vanishes.
double chernoff_numeric(const DensityMatrix& rho1, const DensityMatrix& rho2, int gridPoints = 101);

/// Outputs of the two single-use hypotheses on a maximally entangled probe with
/// both output slots depolarized; factors [B, C, R].
std::pair<DensityMatrix, DensityMatrix> noisy_intermediary_states(int d, double p);

/// (1/d^2)[a^s + (d^2-1) b^s][a^(1-s) + (d^2-1) b^(1-s)], a = 1 - p + p/d^2, b = p/d^2.
double noisy_chernoff_bracket(int d, double p, double s);
double noisy_chernoff_rate(int d, double p);
double heralded_rate(int d, double p);

struct NoisyRateReport {
  int d;
  double p;
  double chernoffRate;
  double heraldedRate;
  double thresholdHeralded;   // 1/(d+1)
  double advantageBoundary;   // p where chernoffRate = log2 d
};

NoisyRateReport noisy_rates(int d, double p);
double advantage_boundary(int d);

using PerKError = std::function<double(int)>;

/// k-copy Helstrom error of the maximally entangled probe, (1 - sqrt(1 - d^{-2k}))/2.
PerKError entangled_probe_per_k(int d);

/// Binomial mixture sum_k C(N,k) (1-p)^k p^(N-k) perK(k).
double heralded_error(int d, double p, int N, const PerKError& perK);
double heralded_error(int d, double p, int N);

}  // namespace causal_lab

#endif  // CAUSAL_LAB_RATES_HPP
