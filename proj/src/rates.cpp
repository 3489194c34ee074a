#include "causal_lab/rates.hpp"

#include "causal_lab/discrimination.hpp"
#include "causal_lab/states_channels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace causal_lab {

namespace {

constexpr int kMaxPlanQueries = 2000;
constexpr double kGoldenTol = 1e-8;
constexpr double kBoundaryTol = 1e-6;

void check_rate_dim(int d) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
}

// x^s with 0^s := 0 for every s, matching the null-space convention.
double spow(double x, double s) { return x < kNullEigenvalue ? 0.0 : std::pow(x, s); }

Rational coherent_error(int d, int N, int k) {
  const BigInt D = boost::multiprecision::pow(BigInt(d), N);
  Rational miss = 1;
  for (int i = 0; i < k; ++i) miss *= Rational(D - 1, D);
  return Rational(1) - Rational(D, BigInt(k)) * (Rational(1) - miss);
}

}  // namespace

RateReport rates_summary(int d) {
  check_rate_dim(d);
  const double rc = std::log2(double(d));
  return RateReport{d, "intermediary", rc, 2.0 * rc};
}

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::Classical: return "classical";
    case Scenario::Coherent: return "coherent";
    case Scenario::Superposed: return "superposed";
    case Scenario::CauseId: return "cause-id";
  }
  return "unknown";
}

Scenario parse_scenario(const std::string& name) {
  if (name == "classical") return Scenario::Classical;
  if (name == "coherent") return Scenario::Coherent;
  if (name == "superposed") return Scenario::Superposed;
  if (name == "cause-id") return Scenario::CauseId;
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

double cause_id_error(std::int64_t k, int N, int d) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (N < 0 || d < 1) throw std::invalid_argument("invalid cause identification parameters");
  if (k == 1) return 0.0;
  const double km1 = double(k - 1);
  const double logD2 = 2.0 * N * std::log(double(d));
  // (k-1)/(d^{2N}+k-1) = 1/(1 + d^{2N}/(k-1))
  const double ratio = std::exp(logD2 - std::log(km1));
  return 1.0 / (1.0 + ratio);
}

std::optional<double> scenario_error(Scenario s, int d, int N, int k) {
  check_rate_dim(d);
  if (N < 1) return std::nullopt;
  switch (s) {
    case Scenario::Classical:
      return to_double(classical_error_exact(d, N, k, 1));
    case Scenario::Coherent:
      return to_double(coherent_error(d, N, k));
    case Scenario::Superposed: {
      if (k != 2) throw std::invalid_argument("superposed scenario is defined for k = 2");
      if (N % d != 0) return std::nullopt;
      const auto rec = schur_weyl_record(balanced_diagram(N, d), d);
      return superposed_error_formula(d, N, rec.multiplicity.convert_to<double>(), rec.repDim.convert_to<double>())
          .value;
    }
    case Scenario::CauseId:
      return cause_id_error(k, N, d);
  }
  return std::nullopt;
}

PlanResult min_queries(Scenario s, int d, double eps, int k) {
  check_rate_dim(d);
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("target error must lie in (0,1)");
  if (k < 1 || (s != Scenario::CauseId && k < 2)) throw std::invalid_argument("k out of range for scenario");
  const int step = s == Scenario::Superposed ? d : 1;
  for (int N = step; N <= kMaxPlanQueries; N += step) {
    const auto err = scenario_error(s, d, N, k);
    if (!err || *err > eps) continue;
    PlanResult plan{s, d, k, N, step, *err, eps, std::nullopt, std::nullopt};
    if (s == Scenario::Classical) plan.exactErr = classical_error_exact(d, N, k, 1);
    if (s == Scenario::Coherent) plan.exactErr = coherent_error(d, N, k);
    if (s == Scenario::Superposed) plan.r = schur_weyl_record(balanced_diagram(N, d), d).multiplicity;
    return plan;
  }
  throw std::domain_error("target error unreachable within 2000 queries");
}

std::pair<double, double> minimize_on_unit_interval(const std::function<double(double)>& f, int gridPoints) {
  if (gridPoints < 11) throw std::invalid_argument("at least 11 grid points are required");
  int best = 0;
  double fbest = f(0.0);
  for (int i = 1; i < gridPoints; ++i) {
    const double v = f(double(i) / (gridPoints - 1));
    if (v < fbest) {
      fbest = v;
      best = i;
    }
  }
  double lo = double(std::max(0, best - 1)) / (gridPoints - 1);
  double hi = double(std::min(gridPoints - 1, best + 1)) / (gridPoints - 1);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > kGoldenTol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    }
  }
  double sStar = double(best) / (gridPoints - 1);
  for (double x : {x1, x2}) {
    const double v = f(x);
    if (v < fbest) {
      fbest = v;
      sStar = x;
    }
  }
  return {sStar, fbest};
}

double chernoff_numeric(const DensityMatrix& rho1, const DensityMatrix& rho2, int gridPoints) {
  if (rho1.dim() != rho2.dim()) throw std::invalid_argument("states have different dimensions");
  const auto e1 = hermitian_eigensystem<double>(rho1.matrix());
  const auto e2 = hermitian_eigensystem<double>(rho2.matrix());
  const auto& a = e1.eigenvalues();
  const auto& b = e2.eigenvalues();
  if (a(0) < -kPsdTol || b(0) < -kPsdTol) throw std::domain_error("Chernoff input is not positive semidefinite");
  const Eigen::MatrixXd overlap = (e1.eigenvectors().adjoint() * e2.eigenvectors()).cwiseAbs2();
  auto Q = [&](double s) {
    double q = 0.0;
    for (Index i = 0; i < a.size(); ++i) {
      const double as = spow(a(i), s);
      if (as == 0.0) continue;
      for (Index j = 0; j < b.size(); ++j) q += as * spow(b(j), 1.0 - s) * overlap(i, j);
    }
    return q;
  };
  const double qmin = minimize_on_unit_interval(Q, gridPoints).second;
  if (qmin <= 0.0) return kInfiniteRate;
  return std::max(0.0, -std::log2(qmin));
}

std::pair<DensityMatrix, DensityMatrix> noisy_intermediary_states(int d, double p) {
  check_rate_dim(d);
  const NoiseModel noise(p, d);
  const ProbeState probe = entangled_battery_probe(d, 1);
  const UnitaryMatrix I = UnitaryMatrix::identity(d);
  const std::vector<int> outputs{0, 1};
  return {depolarize(apply_intermediary_channel(CausalChannel(d, 0, I), probe, 2), noise, outputs),
          depolarize(apply_intermediary_channel(CausalChannel(d, 1, I), probe, 2), noise, outputs)};
}

double noisy_chernoff_bracket(int d, double p, double s) {
  check_rate_dim(d);
  check_probability(p);
  const double d2 = double(d) * d;
  const double a = 1.0 - p + p / d2;
  const double b = p / d2;
  return (spow(a, s) + (d2 - 1.0) * spow(b, s)) * (spow(a, 1.0 - s) + (d2 - 1.0) * spow(b, 1.0 - s)) / d2;
}

double noisy_chernoff_rate(int d, double p) {
  const auto [s, q] = minimize_on_unit_interval([&](double x) { return noisy_chernoff_bracket(d, p, x); }, 101);
  (void)s;
  if (q <= 0.0) return kInfiniteRate;
  return std::max(0.0, -std::log2(q));
}

double heralded_rate(int d, double p) {
  check_rate_dim(d);
  check_probability(p);
  return -std::log2((1.0 - p) / (double(d) * d) + p);
}

double advantage_boundary(int d) {
  check_rate_dim(d);
  const double target = std::log2(double(d));
  double lo = 0.0;  // rate 2 log d > target
  double hi = 1.0;  // rate 0 < target
  while (hi - lo > kBoundaryTol) {
    const double mid = 0.5 * (lo + hi);
    if (noisy_chernoff_rate(d, mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

NoisyRateReport noisy_rates(int d, double p) {
  check_rate_dim(d);
  check_probability(p);
  return NoisyRateReport{d, p, noisy_chernoff_rate(d, p), heralded_rate(d, p), 1.0 / (d + 1.0), advantage_boundary(d)};
}

PerKError entangled_probe_per_k(int d) {
  check_rate_dim(d);
  return [d](int k) {
    if (k < 0) throw std::invalid_argument("copy count must be non-negative");
    const double f = std::pow(double(d), -2.0 * k);
    return 0.5 * f / (1.0 + std::sqrt(1.0 - f));
  };
}

double heralded_error(int d, double p, int N, const PerKError& perK) {
  check_rate_dim(d);
  check_probability(p);
  if (N < 0) throw std::invalid_argument("N must be non-negative");
  double total = 0.0;
  for (int k = 0; k <= N; ++k) {
    const double logw = std::lgamma(N + 1.0) - std::lgamma(k + 1.0) - std::lgamma(N - k + 1.0);
    double w;
    if ((k < N && p == 0.0) || (k > 0 && p == 1.0))
      w = 0.0;
    else
      w = std::exp(logw + (k ? k * std::log1p(-p) : 0.0) + (N - k ? (N - k) * std::log(p) : 0.0));
    if (w > 0.0) total += w * perK(k);
  }
  return total;
}

double heralded_error(int d, double p, int N) { return heralded_error(d, p, N, entangled_probe_per_k(d)); }

}  // namespace causal_lab
