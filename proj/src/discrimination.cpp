#include "causal_lab/discrimination.hpp"

#include "causal_lab/states_channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace causal_lab {

namespace {

constexpr double kSupportCutoff = 1e-12;
constexpr double kRankCutoff = 1e-9;
constexpr Index kMaxGramSize = 10'000;
constexpr std::uint64_t kMonteCarloChunk = 1 << 16;

void check_same_dims(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("states have different dimensions");
}

BigInt pow_int(int base, int e) { return boost::multiprecision::pow(BigInt(base), e); }

// Number of length-N strings consistent with the probe.
int consistent_count(const std::vector<int>& probe, int d, int N) {
  std::vector<int> s(N, 0);
  int count = 0;
  while (true) {
    if (consistent_with_injective(probe, s, d)) ++count;
    int i = N - 1;
    while (i >= 0 && ++s[i] == d) s[i--] = 0;
    if (i < 0) break;
  }
  return count;
}

}  // namespace

BinaryResult helstrom(const DensityMatrix& rho1, const DensityMatrix& rho2, double prior) {
  check_same_dims(rho1, rho2);
  if (!(prior >= 0.0 && prior <= 1.0)) throw std::invalid_argument("prior must lie in [0,1]");
  const Matrix diff = rho1.matrix() - rho2.matrix();
  const double td = trace_norm<double>(diff);
  double weighted = td / 2.0;
  if (prior != 0.5) weighted = trace_norm<double>(Matrix(prior * rho1.matrix() - (1.0 - prior) * rho2.matrix()));
  const double pErr = std::clamp((1.0 - weighted) / 2.0, 0.0, std::min(prior, 1.0 - prior));
  return BinaryResult{pErr, td};
}

EnsembleResult pgm_success(const std::vector<DensityMatrix>& states, const std::vector<double>& priors) {
  if (states.empty()) throw std::invalid_argument("ensemble is empty");
  if (priors.size() != states.size()) throw std::invalid_argument("one prior per state is required");
  const double total = std::accumulate(priors.begin(), priors.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("priors must sum to 1");
  const Index n = states.front().dim();
  Matrix avg = Matrix::Zero(n, n);
  for (std::size_t x = 0; x < states.size(); ++x) {
    check_same_dims(states.front(), states[x]);
    if (priors[x] < 0.0) throw std::invalid_argument("priors must be non-negative");
    avg += priors[x] * states[x].matrix();
  }
  avg = (avg + avg.adjoint()).eval() / 2.0;
  const auto es = hermitian_eigensystem<double>(avg);
  const auto& ev = es.eigenvalues();
  const double cutoff = kSupportCutoff * ev.maxCoeff();
  RVector<double> inv(ev.size());
  RVector<double> support(ev.size());
  for (Index i = 0; i < ev.size(); ++i) {
    const bool on = ev(i) > cutoff;
    inv(i) = on ? 1.0 / std::sqrt(ev(i)) : 0.0;
    support(i) = on ? 1.0 : 0.0;
  }
  const Matrix& V = es.eigenvectors();
  const Matrix root = V * inv.asDiagonal() * V.adjoint();
  const Matrix proj = V * support.asDiagonal() * V.adjoint();

  EnsembleResult res{0.0, {}, 0.0};
  Matrix sum = Matrix::Zero(n, n);
  for (std::size_t x = 0; x < states.size(); ++x) {
    const Matrix E = priors[x] * (root * states[x].matrix() * root);
    sum += E;
    const double s = std::clamp((E * states[x].matrix()).trace().real(), 0.0, 1.0);
    res.perHypothesis.push_back(s);
    res.pSuccess += priors[x] * s;
  }
  res.completenessDefect = (sum - proj).cwiseAbs().maxCoeff();
  return res;
}

EnsembleResult pgm_success(const std::vector<DensityMatrix>& states) {
  if (states.empty()) throw std::invalid_argument("ensemble is empty");
  return pgm_success(states, std::vector<double>(states.size(), 1.0 / double(states.size())));
}

std::vector<DensityMatrix> weyl_heisenberg_orbit(const Ket& psi) {
  const Index d = psi.dim();
  const std::complex<double> omega = std::polar(1.0, 2.0 * std::numbers::pi / double(d));
  std::vector<DensityMatrix> out;
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) {
      Vector v(d);
      for (Index j = 0; j < d; ++j) v((j + a) % d) = std::pow(omega, double(b * j)) * psi.amplitudes()(j);
      out.push_back(DensityMatrix::pure(Ket(std::move(v), psi.dims())));
    }
  return out;
}

double complementarity_error_at(double pGuess, const ComplementarityInput& in) {
  if (in.d < 2 || in.N < 1) throw std::invalid_argument("complementarity bound needs d >= 2 and N >= 1");
  if (in.ensembleSize < 1) throw std::invalid_argument("ensemble size must be positive");
  const double D = std::pow(double(in.d), in.N);
  const double excess = pGuess * double(in.ensembleSize) - 1.0;
  return (1.0 + excess * excess / (2.0 * (D - 1.0))) / (2.0 * D);
}

ComplementarityBound complementarity_bound(const ComplementarityInput& in) {
  if (in.d < 2 || in.N < 1) throw std::invalid_argument("complementarity bound needs d >= 2 and N >= 1");
  const double D = std::pow(double(in.d), in.N);
  if (!(in.T >= 1.0 - 1e-12 && in.T <= std::sqrt(D) + 1e-12))
    throw std::invalid_argument("T must lie in [1, sqrt(d^N)]");
  const double pGuess = in.T * in.T / double(in.ensembleSize);
  return ComplementarityBound{complementarity_error_at(pGuess, in), pGuess};
}

ClassicalAssignment::ClassicalAssignment(std::vector<int> vals, int d) : values(std::move(vals)) {
  if (values.empty()) throw std::invalid_argument("assignment must be non-empty");
  std::set<int> distinct;
  for (int a : values) {
    if (a < 0 || a >= d) throw std::invalid_argument("assignment value outside the alphabet");
    distinct.insert(a);
  }
  v = static_cast<int>(distinct.size());
}

BigInt injective_count(int d, int v) {
  if (v < 0 || v > d) return 0;
  BigInt r = 1;
  for (int i = 0; i < v; ++i) r *= d - i;
  return r;
}

Rational classical_error_exact(int d, int N, int k, int v) {
  if (d < 2 || N < 1) throw std::invalid_argument("classical error needs d >= 2 and N >= 1");
  if (k < 2) throw std::invalid_argument("classical error needs k >= 2");
  if (v < 1 || v > d || v > N) throw std::invalid_argument("v must satisfy 1 <= v <= min(N, d)");
  const Rational q(injective_count(d, v), pow_int(d, N));
  const Rational nq = Rational(1) - q;
  Rational err = 0;
  for (int t = 1; t <= k - 1; ++t) {
    Rational term = Rational(t, t + 1) * Rational(binomial(k - 1, t));
    for (int i = 0; i < t; ++i) term *= q;
    for (int i = 0; i < k - 1 - t; ++i) term *= nq;
    err += term;
  }
  return err;
}

bool consistent_with_injective(const std::vector<int>& probe, const std::vector<int>& observed, int d) {
  if (probe.size() != observed.size()) throw std::invalid_argument("probe and observation lengths differ");
  std::vector<int> image(d, -1);
  std::vector<int> preimage(d, -1);
  for (std::size_t i = 0; i < probe.size(); ++i) {
    const int a = probe[i];
    const int b = observed[i];
    if (image[a] == -1 && preimage[b] == -1) {
      image[a] = b;
      preimage[b] = a;
    } else if (image[a] != b || preimage[b] != a) {
      return false;
    }
  }
  return true;
}

Rational classical_consistency_oracle(int d, int N, const ClassicalAssignment& assignment) {
  if (d < 2 || N < 1) throw std::invalid_argument("oracle needs d >= 2 and N >= 1");
  if (static_cast<int>(assignment.values.size()) != N) throw std::invalid_argument("assignment length must be N");
  if (pow_int(d, N) > (BigInt(1) << 20)) throw std::length_error("oracle limited to d^N <= 2^20");
  if (d > 8) throw std::length_error("oracle enumerates all d! permutations; d <= 8");
  const BigInt strings = pow_int(d, N);
  // Noise strings consistent with the probe do not depend on the hidden permutation.
  const int noiseConsistent = consistent_count(assignment.values, d, N);

  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  Rational worst = 0;
  do {
    std::vector<int> truth(N);
    for (int i = 0; i < N; ++i) truth[i] = perm[assignment.values[i]];
    const bool truthOk = consistent_with_injective(assignment.values, truth, d);
    // errors in half-units: both or neither consistent -> coin flip; only noise consistent -> wrong
    BigInt halves = 0;
    const BigInt noiseBad = strings - noiseConsistent;
    if (truthOk) {
      halves += noiseConsistent;
    } else {
      halves += 2 * BigInt(noiseConsistent) + noiseBad;
    }
    const Rational err(halves, 2 * strings);
    worst = std::max(worst, err);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return worst;
}

double classical_monte_carlo(int d, int N, int k, std::int64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (d < 2 || N < 1 || k < 2) throw std::invalid_argument("Monte Carlo needs d >= 2, N >= 1, k >= 2");
  const std::vector<int> probe(N, 0);
  std::int64_t errors = 0;
  std::vector<int> perm(d);
  std::vector<int> s(N);
  std::vector<int> consistent;
  const auto total = static_cast<std::uint64_t>(trials);
  for (std::uint64_t start = 0, chunk = 0; start < total; start += kMonteCarloChunk, ++chunk) {
    std::mt19937_64 rng(derive_seed(seed, chunk));
    std::uniform_int_distribution<int> slot(0, k - 1);
    std::uniform_int_distribution<int> symbol(0, d - 1);
    const std::uint64_t end = std::min(total, start + kMonteCarloChunk);
    for (std::uint64_t t = start; t < end; ++t) {
      const int x = slot(rng);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      consistent.clear();
      for (int j = 0; j < k; ++j) {
        if (j == x) {
          for (int i = 0; i < N; ++i) s[i] = perm[probe[i]];
        } else {
          for (int i = 0; i < N; ++i) s[i] = symbol(rng);
        }
        if (consistent_with_injective(probe, s, d)) consistent.push_back(j);
      }
      std::uniform_int_distribution<std::size_t> pick(0, consistent.size() - 1);
      if (consistent[pick(rng)] != x) ++errors;
    }
  }
  return double(errors) / double(trials);
}

Rational quantum_k_no_ref_success(int d, int N, int k, const YoungDiagram& lambda0) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (lambda0.box_count() != N) throw std::invalid_argument("diagram does not have N boxes");
  const SchurWeylRecord rec = schur_weyl_record(lambda0, d);
  const BigInt D = pow_int(d, N);
  const Rational r(rec.repDim, D);  // p_lambda / m_lambda
  Rational miss = 1;
  for (int i = 0; i < k; ++i) miss *= Rational(1) - r;
  return Rational(D, BigInt(k) * rec.repDim) * (Rational(1) - miss);
}

SuperposedError superposed_error_formula(int d, int N, double r, double repDim) {
  if (!(r >= 1.0)) throw std::invalid_argument("rank r must be at least 1");
  if (d < 2 || N < 0 || repDim <= 0.0) throw std::invalid_argument("invalid superposed error parameters");
  const double D = std::pow(double(d), N);
  const double rr = r;
  const double inv2 = 1.0 / (rr * rr);
  // r (1 - sqrt(1 - r^-2)) without cancellation
  const double f = rr * inv2 / (1.0 + std::sqrt(1.0 - inv2));
  return SuperposedError{repDim / (2.0 * D) * f, repDim / (4.0 * rr * D)};
}

int rank_of_configurations(int N, int d) {
  const BigInt G = grouping_count(N, d);
  if (G > kMaxGramSize) throw std::length_error("configuration Gram matrix limited to 10^4 vectors");
  const GroupingCatalog cat = groupings(N, d);
  const Index g = static_cast<Index>(cat.configurations.size());
  const Index n = static_cast<Index>(std::pow(double(d), N));
  if (n * g > kMaxSuperposedAmplitudes) throw std::length_error("configuration vectors exceed the amplitude guardrail");
  Matrix V(n, g);
  for (Index i = 0; i < g; ++i) V.col(i) = configuration_vector(N, d, cat.configurations[i]);
  Matrix gram = V.adjoint() * V;
  gram = (gram + gram.adjoint()).eval() / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("Gram eigensolver failed");
  const auto& ev = es.eigenvalues();
  const double cutoff = kRankCutoff * ev.maxCoeff();
  return static_cast<int>((ev.array() > cutoff).count());
}

double gram_schmidt_sequence_success(int m, int l) {
  if (m < 1 || l < 1) throw std::invalid_argument("Gram-Schmidt measurement needs m >= 1 and l >= 1");
  const Index total = static_cast<Index>(std::pow(double(m), l + 1));
  if (total > kMaxDenseDim) throw std::length_error("Gram-Schmidt measurement needs m^(l+1) <= 4096");
  // factors: M_0..M_{l-1}, R
  const Dims dims(l + 1, m);
  const auto strides = detail::strides(dims);
  const Index others = total / (Index(m) * m);

  // eigenvectors of sigma_x with nonzero eigenvalue: Phi(M_x, R) (x) |j> on the other factors
  auto eigvec = [&](int x, Index j) {
    Vector v = Vector::Zero(total);
    std::vector<int> digits;
    Index rem = j;
    for (int f = l - 1; f >= 0; --f) {
      if (f == x) continue;
      digits.push_back(static_cast<int>(rem % m));
      rem /= m;
    }
    std::reverse(digits.begin(), digits.end());
    Index base = 0;
    std::size_t di = 0;
    for (int f = 0; f < l; ++f)
      if (f != x) base += digits[di++] * strides[f];
    for (int a = 0; a < m; ++a) v(base + a * strides[x] + a * strides[l]) = 1.0 / std::sqrt(double(m));
    return v;
  };

  std::vector<Vector> accepted;
  double success = 0.0;
  for (int x = 0; x < l; ++x) {
    std::vector<Vector> batch;
    for (Index j = 0; j < others; ++j) {
      Vector v = eigvec(x, j);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& u : accepted) v -= u.dot(v) * u;
      const double nv = v.norm();
      if (nv < 1e-10) continue;
      v /= nv;
      accepted.push_back(v);
      batch.push_back(v);
    }
    // Tr[Pi_x sigma_x] with sigma_x = (1/others) sum_j |e_xj><e_xj|
    double p = 0.0;
    for (const auto& u : batch)
      for (Index j = 0; j < others; ++j) p += std::norm(u.dot(eigvec(x, j)));
    success += p / double(others);
  }
  return success / double(l);
}

}  // namespace causal_lab
