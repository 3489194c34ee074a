#include "causal_lab/states_channels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace causal_lab {

namespace {

Index ipow(Index base, int e) {
  Index r = 1;
  for (int i = 0; i < e; ++i) {
    r *= base;
    if (r > (Index{1} << 40)) throw std::length_error("dimension overflow");
  }
  return r;
}

void check_local_dim(int d) {
  if (d < 1) throw std::invalid_argument("local dimension must be positive");
}

Dims probe_dims(int d, int N, int refDim) {
  Dims dims(N, d);
  dims.push_back(refDim);
  return dims;
}

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

Matrix max_entangled_projector(int d) {
  Vector omega = Vector::Zero(Index(d) * d);
  for (int i = 0; i < d; ++i) omega(Index(i) * d + i) = 1.0 / std::sqrt(double(d));
  return omega * omega.adjoint();
}

}  // namespace

std::string to_string(ProbeKind kind) {
  switch (kind) {
    case ProbeKind::ProductValue: return "product-value";
    case ProbeKind::UniformCoherent: return "uniform-coherent";
    case ProbeKind::SingletProduct: return "singlet-product";
    case ProbeKind::SuperposedConfig: return "superposed-config";
    case ProbeKind::EntangledBattery: return "entangled-battery";
  }
  return "unknown";
}

Ket singlet_state(int d) {
  if (d < 2 || d > 6) throw std::invalid_argument("singlet state supported for 2 <= d <= 6");
  const Dims dims(d, d);
  Vector v = Vector::Zero(total_dim(dims));
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  const double amp = 1.0 / std::sqrt(std::tgamma(d + 1.0));
  do {
    Index idx = 0;
    for (int k : perm) idx = idx * d + k;
    v(idx) = amp * permutation_sign(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Ket(std::move(v), dims);
}

ProbeState uniform_probe(int d, int N) {
  check_local_dim(d);
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  const Index n = ipow(d, N);
  require_dense_dim<double>(n);
  Vector v = Vector::Constant(n, 1.0 / std::sqrt(double(n)));
  return ProbeState{Ket(std::move(v), probe_dims(d, N, 1)), N, d, 1, ProbeKind::UniformCoherent};
}

ProbeState product_value_probe(int d, const std::vector<int>& values) {
  check_local_dim(d);
  if (values.empty()) throw std::invalid_argument("product probe needs at least one value");
  const int N = static_cast<int>(values.size());
  const Index n = ipow(d, N);
  require_dense_dim<double>(n);
  Index idx = 0;
  for (int a : values) {
    if (a < 0 || a >= d) throw std::invalid_argument("probe value outside the alphabet");
    idx = idx * d + a;
  }
  Vector v = Vector::Zero(n);
  v(idx) = 1.0;
  return ProbeState{Ket(std::move(v), probe_dims(d, N, 1)), N, d, 1, ProbeKind::ProductValue};
}

ProbeState singlet_product_probe(int d, int N) {
  if (N < 1 || N % d != 0) throw std::invalid_argument("singlet product needs d to divide N");
  require_dense_dim<double>(ipow(d, N));
  const Ket s = singlet_state(d);
  Vector v = s.amplitudes();
  for (int b = 1; b < N / d; ++b) v = kron<double>(v, s.amplitudes());
  return ProbeState{Ket(std::move(v), probe_dims(d, N, 1)), N, d, 1, ProbeKind::SingletProduct};
}

ProbeState entangled_battery_probe(int d, int N) {
  check_local_dim(d);
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  const Index n = ipow(d, N);
  require_dense_dim<double>(n * n);
  Vector v = Vector::Zero(n * n);
  for (Index a = 0; a < n; ++a) v(a * n + a) = 1.0 / std::sqrt(double(n));
  return ProbeState{Ket(std::move(v), probe_dims(d, N, static_cast<int>(n))), N, d, static_cast<int>(n),
                    ProbeKind::EntangledBattery};
}

Vector configuration_vector(int N, int d, const Grouping& grouping) {
  if (N < 1 || N % d != 0) throw std::invalid_argument("configuration needs d to divide N");
  if (static_cast<int>(grouping.size()) != N / d) throw std::invalid_argument("grouping has the wrong number of blocks");
  std::vector<int> order(N, -1);
  for (std::size_t b = 0; b < grouping.size(); ++b) {
    if (static_cast<int>(grouping[b].size()) != d) throw std::invalid_argument("grouping block has the wrong size");
    for (int j = 0; j < d; ++j) {
      const int pos = grouping[b][j];
      if (pos < 0 || pos >= N || order[pos] != -1) throw std::invalid_argument("grouping is not a partition");
      order[pos] = static_cast<int>(b) * d + j;
    }
  }
  const ProbeState base = singlet_product_probe(d, N);
  return permute_factors<double>(base.ket.amplitudes(), Dims(N, d), order);
}

ProbeState superposed_config_state(int N, int d) {
  if (d < 2 || N < 1 || N % d != 0) throw std::invalid_argument("superposed configuration needs d to divide N");
  const BigInt G = grouping_count(N, d);
  const Index n = ipow(d, N);
  if (G * n > kMaxSuperposedAmplitudes)
    throw std::length_error("superposed configuration state exceeds the amplitude guardrail");
  const GroupingCatalog cat = groupings(N, d);
  const Index g = static_cast<Index>(cat.configurations.size());
  // Layout is probe-major: amplitude of |a>|i> sits at a * g + i.
  Vector v = Vector::Zero(n * g);
  const double w = 1.0 / std::sqrt(double(g));
  for (Index i = 0; i < g; ++i) {
    const Vector c = configuration_vector(N, d, cat.configurations[i]);
    for (Index a = 0; a < n; ++a) v(a * g + i) = w * c(a);
  }
  return ProbeState{Ket(std::move(v), probe_dims(d, N, static_cast<int>(g))), N, d, static_cast<int>(g),
                    ProbeKind::SuperposedConfig};
}

CausalChannel::CausalChannel(int d_, int slot_, UnitaryMatrix U_) : d(d_), slot(slot_), U(std::move(U_)) {
  check_local_dim(d);
  if (slot < 0) throw std::invalid_argument("slot index must be non-negative");
  if (U.dim() != d) throw std::invalid_argument("gate dimension does not match d");
}

void apply_collective(Vector& v, const Dims& dims, int n, const Matrix& U) {
  for (int f = 0; f < n; ++f) apply_to_factor<double>(v, dims, f, U);
}

DensityMatrix apply_intermediary_channel(const CausalChannel& ch, const ProbeState& probe, int k) {
  if (k < 1 || ch.slot >= k) throw std::invalid_argument("slot outside the k output slots");
  if (probe.d != ch.d) throw std::invalid_argument("probe and channel dimensions differ");
  const int N = probe.N;
  const Index rest = ipow(ch.d, N * (k - 1));
  const Index outDim = ipow(ch.d, N) * rest * probe.refDim;
  if (outDim > kMaxDenseDim)
    throw std::length_error("intermediary output needs dimension " + std::to_string(outDim) + " > 4096");

  Vector psi = probe.ket.amplitudes();
  apply_collective(psi, probe.ket.dims(), N, ch.U.matrix());
  Matrix rho = psi * psi.adjoint();
  if (k > 1) rho = kron<double>(rho, Matrix(Matrix::Identity(rest, rest) / double(rest)));

  // current factors: A (N), R, then the N(k-1) idle slot factors
  Dims cur = probe.ket.dims();
  for (int i = 0; i < N * (k - 1); ++i) cur.push_back(ch.d);
  std::vector<int> order;
  int idle = 0;
  for (int s = 0; s < k; ++s)
    for (int j = 0; j < N; ++j) order.push_back(s == ch.slot ? j : N + 1 + (idle++));
  order.push_back(N);
  return DensityMatrix(permute_factors<double>(rho, cur, order), permute_dims(cur, order));
}

DensityMatrix cause_probe_output(int k, int d, int N, int x) {
  check_local_dim(d);
  if (k < 1 || N < 1) throw std::invalid_argument("cause probe needs k >= 1 and N >= 1");
  if (x < 0 || x >= k) throw std::invalid_argument("cause index out of range");
  const Index total = ipow(d, N * (k + 1));
  if (total > kMaxDenseDim)
    throw std::length_error("cause probe output needs dimension " + std::to_string(total) + " > 4096");

  const Index rest = ipow(d, k - 1);
  Matrix one = kron<double>(max_entangled_projector(d), Matrix(Matrix::Identity(rest, rest) / double(rest)));
  // factors now [B, R_x, others ascending]; move R_x into place
  std::vector<int> order{0};
  int other = 2;
  for (int r = 0; r < k; ++r) order.push_back(r == x ? 1 : other++);
  const Dims single(k + 1, d);
  one = permute_factors<double>(one, single, order);

  Matrix rho = one;
  Dims dims = single;
  for (int rep = 1; rep < N; ++rep) {
    rho = kron<double>(rho, one);
    dims = concat(dims, single);
  }
  return DensityMatrix(std::move(rho), std::move(dims));
}

NoiseModel::NoiseModel(double p_, int d_) : p(p_), d(d_) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("depolarizing probability must lie in [0,1]");
  check_local_dim(d);
}

DensityMatrix depolarize(const DensityMatrix& rho, const NoiseModel& noise, const std::vector<int>& factors) {
  const Dims& dims = rho.dims();
  detail::check_factor_set(factors, dims.size());
  const auto strides = detail::strides(dims);
  Matrix m = rho.matrix();
  const Index n = m.rows();
  for (int f : factors) {
    const int d = dims[f];
    if (d != noise.d) throw std::invalid_argument("depolarized factor has the wrong dimension");
    const Index s = strides[f];
    // replaced(i,j) = delta(i_f, j_f)/d * sum_a m(i with f=a, j with f=a)
    Matrix replaced = Matrix::Zero(n, n);
    for (Index j = 0; j < n; ++j) {
      const Index jf = (j / s) % d;
      const Index j0 = j - jf * s;
      for (Index i = 0; i < n; ++i) {
        const Index if_ = (i / s) % d;
        if (if_ != jf) continue;
        const Index i0 = i - if_ * s;
        std::complex<double> acc = 0;
        for (int a = 0; a < d; ++a) acc += m(i0 + a * s, j0 + a * s);
        replaced(i, j) = acc / double(d);
      }
    }
    m = (1.0 - noise.p) * m + noise.p * replaced;
  }
  m = (m + m.adjoint()).eval() / 2.0;
  return DensityMatrix(std::move(m), dims);
}

ChoiOperator::ChoiOperator(Matrix m, Dims in, Dims out)
    : matrix(std::move(m)), inDims(std::move(in)), outDims(std::move(out)) {
  if (matrix.rows() != in_dim() * out_dim() || matrix.cols() != matrix.rows())
    throw std::invalid_argument("Choi matrix does not match input and output dimensions");
}

double ChoiOperator::trace_preservation_defect() const {
  const Index din = in_dim();
  const Index dout = out_dim();
  Matrix t = Matrix::Zero(din, din);
  for (Index i = 0; i < din; ++i)
    for (Index j = 0; j < din; ++j) t(i, j) = matrix.block(i * dout, j * dout, dout, dout).trace();
  return (t - Matrix::Identity(din, din)).cwiseAbs().maxCoeff();
}

Matrix swap_projector(Symmetry sign, int d, int N) {
  check_local_dim(d);
  const Dims out(2 * N, d);
  const Index n = total_dim(out);
  std::vector<int> order(2 * N);
  for (int i = 0; i < N; ++i) {
    order[i] = N + i;
    order[N + i] = i;
  }
  const auto map = detail::permutation_map(out, order);
  Matrix swap = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) swap(i, map[i]) = 1.0;
  const double s = sign == Symmetry::Plus ? 1.0 : -1.0;
  return (Matrix::Identity(n, n) + s * swap) / 2.0;
}

ChoiOperator symmetric_choi(Symmetry sign, int d, int N) {
  if (d < 2 || N < 1) throw std::invalid_argument("symmetric Choi needs d >= 2 and N >= 1");
  const Index D = ipow(d, N);
  if (D * D * D > kMaxChoiDim)
    throw std::length_error("symmetric Choi needs dimension " + std::to_string(D * D * D) + " > 4096");
  Vector omega = Vector::Zero(D * D);
  for (Index a = 0; a < D; ++a) omega(a * D + a) = 1.0;
  const Matrix m = kron<double>(Matrix(omega * omega.adjoint()), Matrix(Matrix::Identity(D, D)));
  const Matrix P = kron<double>(Matrix(Matrix::Identity(D, D)), swap_projector(sign, d, N));
  const double norm = sign == Symmetry::Plus ? 2.0 / double(D + 1) : 2.0 / double(D - 1);
  Matrix c = norm * (P * m * P);
  c = (c + c.adjoint()).eval() / 2.0;
  return ChoiOperator(std::move(c), Dims(N, d), Dims(2 * N, d));
}

ChoiOperator intermediary_choi(int d, int N, int slot) {
  if (d < 1 || N < 1) throw std::invalid_argument("intermediary Choi needs d >= 1 and N >= 1");
  if (slot != 0 && slot != 1) throw std::invalid_argument("intermediary Choi slot must be 0 or 1");
  const Index D = ipow(d, N);
  if (D * D * D > kMaxChoiDim)
    throw std::length_error("intermediary Choi needs dimension " + std::to_string(D * D * D) + " > 4096");
  Vector omega = Vector::Zero(D * D);
  for (Index a = 0; a < D; ++a) omega(a * D + a) = 1.0;
  Matrix m = kron<double>(Matrix(omega * omega.adjoint()), Matrix(Matrix::Identity(D, D) / double(D)));
  if (slot == 1) {
    // factors [A, C, B] -> [A, B, C]
    const Dims three{static_cast<int>(D), static_cast<int>(D), static_cast<int>(D)};
    const std::vector<int> order{0, 2, 1};
    m = permute_factors<double>(m, three, order);
  }
  return ChoiOperator(std::move(m), Dims(N, d), Dims(2 * N, d));
}

ChoiOperator choi_of_unitary(const UnitaryMatrix& U, const Dims& inDims, const Dims& outDims) {
  const Index din = total_dim(inDims);
  if (U.dim() != din || total_dim(outDims) != din)
    throw std::invalid_argument("unitary must map input dimension onto output dimension");
  if (din * din > kMaxChoiDim) throw std::length_error("unitary Choi exceeds the dense guardrail");
  Vector v = Vector::Zero(din * din);
  for (Index i = 0; i < din; ++i) v.segment(i * din, din) = U.matrix().col(i);
  return ChoiOperator(v * v.adjoint(), inDims, outDims);
}

DensityMatrix apply_choi(const ChoiOperator& choi, const DensityMatrix& rho) {
  if (rho.dims() != choi.inDims) throw std::invalid_argument("input state does not match Choi input dimensions");
  const Index din = choi.in_dim();
  const Index dout = choi.out_dim();
  Matrix out = Matrix::Zero(dout, dout);
  for (Index i = 0; i < din; ++i)
    for (Index j = 0; j < din; ++j) {
      const std::complex<double> r = rho.matrix()(i, j);
      if (r != 0.0) out += r * choi.matrix.block(i * dout, j * dout, dout, dout);
    }
  out = (out + out.adjoint()).eval() / 2.0;
  return DensityMatrix(std::move(out), choi.outDims);
}

}  // namespace causal_lab
