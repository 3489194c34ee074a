#include "causal_lab/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace causal_lab {

namespace {

constexpr double kSkipFidelity = 1e-8;
constexpr double kYklTol = 1e-9;
constexpr int kMaxDivergenceDim = 64;

// Output of the intermediary channel routing A to slot `slot`, factors [B, C, R].
DensityMatrix route(const Ket& psi, int d, int slot) {
  const int r = psi.dims().at(1);
  const Matrix rho = psi.amplitudes() * psi.amplitudes().adjoint();
  const Matrix m = kron<double>(rho, Matrix(Matrix::Identity(d, d) / double(d)));
  const Dims cur{d, r, d};  // [live, R, idle]
  const std::vector<int> order = slot == 0 ? std::vector<int>{0, 2, 1} : std::vector<int>{2, 0, 1};
  return DensityMatrix(permute_factors<double>(m, cur, order), Dims{d, d, r});
}

void check_divergence_dims(int d, int refDim) {
  if (d < 2 || refDim < 1) throw std::invalid_argument("divergence sampling needs d >= 2 and refDim >= 1");
  if (d * refDim > kMaxDivergenceDim) throw std::length_error("divergence sampling limited to d * refDim <= 64");
}

}  // namespace

double intermediary_output_fidelity(const Ket& psi, const Ket& phi, int d) {
  if (psi.dims().size() != 2 || psi.dims()[0] != d || psi.dims() != phi.dims())
    throw std::invalid_argument("inputs must live on A (dimension d) and one reference factor");
  return fidelity(route(psi, d, 0), route(phi, d, 1));
}

DivergenceEstimate fidelity_divergence_sample(int d, int refDim, int samples, std::uint64_t seed) {
  check_divergence_dims(d, refDim);
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  const Dims dims{d, refDim};
  DivergenceEstimate est{2.0, std::nullopt, 0, 0};
  for (int i = 0; i < samples; ++i) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    Ket psi = haar_ket<double>(dims, rng);
    Ket phi = haar_ket<double>(dims, rng);
    const double fin = std::norm(psi.amplitudes().dot(phi.amplitudes()));
    if (fin < kSkipFidelity) {
      ++est.skipped;
      continue;
    }
    const double ratio = intermediary_output_fidelity(psi, phi, d) / fin;
    ++est.samples;
    if (ratio < est.minRatio) {
      est.minRatio = ratio;
      est.argmin.emplace(std::move(psi), std::move(phi));
    }
  }
  if (est.samples == 0) throw std::runtime_error("every sampled pair had negligible input fidelity");
  return est;
}

double identical_input_ratio(int d, int refDim, std::uint64_t seed) {
  check_divergence_dims(d, refDim);
  std::mt19937_64 rng(seed);
  const Ket psi = haar_ket<double>(Dims{d, refDim}, rng);
  return intermediary_output_fidelity(psi, psi, d);
}

SequentialBound sequential_error_bound(double divergence, int N) {
  if (!(divergence > 0.0 && divergence <= 1.0)) throw std::invalid_argument("divergence must lie in (0,1]");
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  const double f = std::pow(divergence, N);
  // 1 - sqrt(1 - f) = f / (1 + sqrt(1 - f))
  return SequentialBound{0.5 * f / (1.0 + std::sqrt(1.0 - f)), f / 4.0};
}

double certificate_lambda(int d, int N) {
  const double D = std::pow(double(d), N);
  const double s = std::sqrt(D + 1.0) + std::sqrt(D - 1.0);
  return s * s / (4.0 * D);
}

DualCertificate dual_certificate(int d, int N) {
  if (d < 2 || N < 1) throw std::invalid_argument("certificate needs d >= 2 and N >= 1");
  const double D = std::pow(double(d), N);
  DualCertificate c{};
  c.d = d;
  c.N = N;
  c.x0 = (1.0 / std::sqrt(D + 1.0) + 1.0 / std::sqrt(D - 1.0)) / (8.0 * D);
  c.alpha = std::sqrt(D - 1.0) * c.x0;
  c.beta = std::sqrt(D + 1.0) * c.x0;
  c.a = 2.0 * (D + 1.0) * c.alpha;
  c.b = 2.0 * (D - 1.0) * c.beta;
  c.lambda = c.a + c.b;
  c.pPlus = c.a / c.lambda;
  c.pMinus = c.b / c.lambda;
  const double s = c.alpha + c.beta;
  const double slack = 1e-12 * std::max(1.0, s);
  if (s < 1.0 / (2.0 * D) - slack || 4.0 * c.alpha * c.beta < s / (2.0 * D) - slack)
    throw std::logic_error("certificate violates its complete-positivity conditions");
  return c;
}

ChoiOperator certificate_choi(const DualCertificate& cert) {
  const ChoiOperator plus = symmetric_choi(Symmetry::Plus, cert.d, cert.N);
  const ChoiOperator minus = symmetric_choi(Symmetry::Minus, cert.d, cert.N);
  return ChoiOperator(cert.pPlus * plus.matrix + cert.pMinus * minus.matrix, plus.inDims, plus.outDims);
}

YklReport ykl_check(double lambda, const ChoiOperator& choiC, const std::vector<Hypothesis>& hypotheses) {
  if (hypotheses.empty()) throw std::invalid_argument("no hypotheses given");
  YklReport rep{{}, true, 1.0 - lambda};
  for (const auto& h : hypotheses) {
    if (h.choi.inDims != choiC.inDims || h.choi.outDims != choiC.outDims)
      throw std::invalid_argument("hypothesis Choi dimensions do not match the certificate");
    Matrix m = lambda * choiC.matrix - h.prior * h.choi.matrix;
    m = (m + m.adjoint()).eval() / 2.0;
    const RVector<double> ev = hermitian_eigenvalues<double>(m);
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    rep.perHypothesisMinEig.push_back(ev(0));
    if (ev(0) < -kYklTol * scale) rep.feasible = false;
  }
  return rep;
}

std::vector<std::vector<int>> paired_outputs(int N) {
  std::vector<std::vector<int>> p(N);
  for (int i = 0; i < N; ++i) p[i] = {i, N + i};
  return p;
}

bool nosignalling_check(const ChoiOperator& choi, const std::vector<std::vector<int>>& pairOutputs,
                        const std::vector<int>& subset, int trials, std::uint64_t seed, double tol) {
  const int nin = static_cast<int>(choi.inDims.size());
  if (static_cast<int>(pairOutputs.size()) != nin) throw std::invalid_argument("one output list per input factor");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  detail::check_factor_set(subset, choi.inDims.size());
  std::vector<int> allOut;
  for (const auto& o : pairOutputs) allOut.insert(allOut.end(), o.begin(), o.end());
  detail::check_factor_set(allOut, choi.outDims.size());

  std::vector<bool> inS(nin, false);
  for (int s : subset) inS[s] = true;
  std::vector<int> rest;
  std::vector<int> keepOut;
  for (int i = 0; i < nin; ++i)
    if (!inS[i]) {
      rest.push_back(i);
      keepOut.insert(keepOut.end(), pairOutputs[i].begin(), pairOutputs[i].end());
    }
  std::sort(keepOut.begin(), keepOut.end());
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());

  // factors of omega_S (x) Tr_S rho are [S..., rest...]; map back to input order
  std::vector<int> order(nin);
  {
    std::vector<int> cur = sorted;
    cur.insert(cur.end(), rest.begin(), rest.end());
    for (int pos = 0; pos < nin; ++pos) order[cur[pos]] = pos;
  }
  Dims sDims;
  for (int s : sorted) sDims.push_back(choi.inDims[s]);

  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const DensityMatrix rho = random_density_matrix<double>(choi.inDims, rng);
    const DensityMatrix omega = random_density_matrix<double>(sDims, rng);
    const DensityMatrix rest_rho = partial_trace(rho, rest);
    const DensityMatrix swapped = permute_factors(tensor(omega, rest_rho), order);
    const DensityMatrix out1 = partial_trace(apply_choi(choi, rho), keepOut);
    const DensityMatrix out2 = partial_trace(apply_choi(choi, swapped), keepOut);
    if (trace_norm<double>(Matrix(out1.matrix() - out2.matrix())) > tol) return false;
  }
  return true;
}

}  // namespace causal_lab
