#ifndef CAUSAL_LAB_CERTIFICATES_HPP
#define CAUSAL_LAB_CERTIFICATES_HPP

#include "causal_lab/linalg.hpp"
#include "causal_lab/states_channels.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace causal_lab {

struct DivergenceEstimate {
  double minRatio;
  std::optional<std::pair<Ket, Ket>> argmin;
  int samples;  // pairs actually evaluated
  int skipped;  // pairs with input fidelity below 1e-8
};

/// Output fidelity of the two single-use intermediary channels on inputs psi, phi over A (x) R.
/// Outputs are ordered B, C, R.
double intermediary_output_fidelity(const Ket& psi, const Ket& phi, int d);

/// Sampled upper estimate of the fidelity divergence of the two single-use
/// intermediary channels, over Haar-random pure pairs on A (x) R.
DivergenceEstimate fidelity_divergence_sample(int d, int refDim, int samples, std::uint64_t seed);

/// Ratio attained when both inputs are the same random pure state.
double identical_input_ratio(int d, int refDim, std::uint64_t seed);

struct SequentialBound {
  double tight;
  double loose;
};

SequentialBound sequential_error_bound(double divergence, int N);

struct DualCertificate {
  int d;
  int N;
  double alpha;
  double beta;
  double x0;
  double a;
  double b;
  double pPlus;
  double pMinus;
  double lambda;
};

DualCertificate dual_certificate(int d, int N);

/// Closed-form lambda, (sqrt(D+1) + sqrt(D-1))^2 / (4D).
double certificate_lambda(int d, int N);

/// p+ C+ + p- C- for the certificate weights.
ChoiOperator certificate_choi(const DualCertificate& cert);

struct YklReport {
  std::vector<double> perHypothesisMinEig;
  bool feasible;
  double impliedErrLower;  // 1 - lambda
};

struct Hypothesis {
  ChoiOperator choi;
  double prior;
};

/// Checks lambda C - p_x C_x >= 0 for every hypothesis, tolerance 1e-9 scaled by
/// the largest eigenvalue magnitude of each matrix (at least 1).
YklReport ykl_check(double lambda, const ChoiOperator& choiC, const std::vector<Hypothesis>& hypotheses);

/// Output factors of input i for the symmetric layout: {i, N + i}.
std::vector<std::vector<int>> paired_outputs(int N);

/// Random input pairs that differ only on the inputs in `subset` must give the
/// same output marginal on the outputs owned by the remaining inputs.
/// pairOutputs[i] lists the output factors attached to input factor i.
bool nosignalling_check(const ChoiOperator& choi, const std::vector<std::vector<int>>& pairOutputs,
                        const std::vector<int>& subset, int trials, std::uint64_t seed, double tol);

}  // namespace causal_lab

#endif  // CAUSAL_LAB_CERTIFICATES_HPP
