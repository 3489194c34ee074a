#ifndef CAUSAL_LAB_DISCRIMINATION_HPP
#define CAUSAL_LAB_DISCRIMINATION_HPP

#include "causal_lab/combinatorics.hpp"
#include "causal_lab/linalg.hpp"

#include <cstdint>
#include <vector>

namespace causal_lab {

struct BinaryResult {
  double pErr;
  double traceDistance;  // ||rho1 - rho2||_1, ranges over [0, 2]
};

/// Minimum error of the two-outcome measurement, (1 - ||p rho1 - (1-p) rho2||_1) / 2.
BinaryResult helstrom(const DensityMatrix& rho1, const DensityMatrix& rho2, double prior = 0.5);

struct EnsembleResult {
  double pSuccess;
  std::vector<double> perHypothesis;  // Tr[E_x rho_x]
  double completenessDefect;          // max-norm distance of sum E_x from the support projector
};

/// Square-root measurement E_x = S^{-1/2} p_x rho_x S^{-1/2}, S = sum p_x rho_x,
/// with the inverse taken on the support of S.
EnsembleResult pgm_success(const std::vector<DensityMatrix>& states, const std::vector<double>& priors);
EnsembleResult pgm_success(const std::vector<DensityMatrix>& states);

/// The d^2 states X^a Z^b |psi>.
std::vector<DensityMatrix> weyl_heisenberg_orbit(const Ket& psi);

struct ComplementarityInput {
  double T;  // Tr sqrt of the twirled probe
  int d;
  int N;
  std::int64_t ensembleSize;
};

struct ComplementarityBound {
  double pErrLower;
  double pGuessUpper;
};

ComplementarityBound complementarity_bound(const ComplementarityInput& in);

/// Error lower bound at guessing probability pGuess, (1 / (2 d^N)) [1 + (pGuess |U| - 1)^2 / (2 (d^N - 1))].
double complementarity_error_at(double pGuess, const ComplementarityInput& in);

struct ClassicalAssignment {
  std::vector<int> values;
  int v;  // number of distinct values

  ClassicalAssignment(std::vector<int> values, int d);
};

/// Number of injective maps from a v-element set into d symbols.
BigInt injective_count(int d, int v);

/// Exact error of the consistency rule with k slots and v distinct probe values.
Rational classical_error_exact(int d, int N, int k, int v);

/// Exhaustive error of the consistency rule for two slots: every noise string
/// and every hidden permutation of the alphabet is enumerated; the worst
/// permutation is reported.
Rational classical_consistency_oracle(int d, int N, const ClassicalAssignment& assignment);

/// True if some injective map sends probe values to the observed string.
bool consistent_with_injective(const std::vector<int>& probe, const std::vector<int>& observed, int d);

/// Empirical error of the consistency rule on the all-equal assignment with
/// random cause slot, hidden permutation and noise.
double classical_monte_carlo(int d, int N, int k, std::int64_t trials, std::uint64_t seed);

/// Success of the best reference-free strategy restricted to sector lambda0.
Rational quantum_k_no_ref_success(int d, int N, int k, const YoungDiagram& lambda0);

struct SuperposedError {
  double value;
  double asymptotic;  // leading large-r behaviour d_lambda / (4 r d^N)
};

SuperposedError superposed_error_formula(int d, int N, double r, double repDim);

/// Rank of the Gram matrix of the configuration vectors.
int rank_of_configurations(int N, int d);

/// Average success of the batch Gram-Schmidt measurement on the states
/// Phi(M_x, R) (x) (I/m)^{(l-1)}, x = 0..l-1.
double gram_schmidt_sequence_success(int m, int l);

}  // namespace causal_lab

#endif  // CAUSAL_LAB_DISCRIMINATION_HPP
