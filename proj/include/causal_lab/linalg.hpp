#ifndef CAUSAL_LAB_LINALG_HPP
#define CAUSAL_LAB_LINALG_HPP

// Dense complex linear algebra on small multipartite Hilbert spaces.
//
// Every type and kernel is templated on the real scalar; the rest of the
// library works with the double-precision aliases at the bottom of the file.
// Tensor factors are ordered most-significant first, i.e. the basis index of
// |i_0 i_1 ... i_{n-1}> is sum_f i_f * stride_f with stride_{n-1} = 1, which is
// the ordering produced by the Kronecker product.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace causal_lab {

using Dims = std::vector<int>;
using Index = Eigen::Index;

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

inline constexpr Index kMaxDenseDim = 4096;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kUnitaryTol = 1e-12;
// Eigenvalues below this are treated as exact zeros by fractional powers.
inline constexpr double kNullEigenvalue = 1e-14;

inline Index total_dim(const Dims& dims) {
  Index n = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("tensor factor dimensions must be positive");
    n *= d;
  }
  return n;
}

namespace detail {

inline std::vector<Index> strides(const Dims& dims) {
  std::vector<Index> s(dims.size(), 1);
  for (std::size_t f = dims.size(); f-- > 1;) s[f - 1] = s[f] * dims[f];
  return s;
}

inline void check_factor_set(std::span<const int> factors, std::size_t count) {
  std::vector<bool> seen(count, false);
  for (int f : factors) {
    if (f < 0 || static_cast<std::size_t>(f) >= count)
      throw std::invalid_argument("factor index " + std::to_string(f) + " out of range");
    if (seen[f]) throw std::invalid_argument("factor index repeated");
    seen[f] = true;
  }
}

// old_index[new_index] for a factor permutation where new factor i is old factor order[i].
inline std::vector<Index> permutation_map(const Dims& dims, std::span<const int> order) {
  if (order.size() != dims.size()) throw std::invalid_argument("permutation has wrong length");
  check_factor_set(order, dims.size());
  const auto old_strides = strides(dims);
  Dims new_dims(dims.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_dims[i] = dims[order[i]];
  const Index n = total_dim(dims);
  std::vector<Index> map(static_cast<std::size_t>(n));
  std::vector<int> digits(dims.size(), 0);
  for (Index idx = 0; idx < n; ++idx) {
    Index old = 0;
    for (std::size_t i = 0; i < order.size(); ++i) old += digits[i] * old_strides[order[i]];
    map[static_cast<std::size_t>(idx)] = old;
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < new_dims[i]) break;
      digits[i] = 0;
    }
  }
  return map;
}

template <typename Real>
Real max_abs(const CMatrix<Real>& m) {
  return m.size() == 0 ? Real(0) : m.cwiseAbs().maxCoeff();
}

}  // namespace detail

template <typename Real>
Real hermiticity_defect(const CMatrix<Real>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix is not square");
  return detail::max_abs<Real>(a - a.adjoint());
}

template <typename Real>
void require_dense_dim(Index n) {
  if (n > kMaxDenseDim)
    throw std::length_error("dense dimension " + std::to_string(n) + " exceeds the " +
                            std::to_string(kMaxDenseDim) + " guardrail");
}

/// Eigenvalues of a Hermitian matrix in ascending order.
template <typename Real>
RVector<Real> hermitian_eigenvalues(const CMatrix<Real>& a) {
  require_dense_dim<Real>(a.rows());
  if (hermiticity_defect(a) > Real(kHermitianTol))
    throw std::domain_error("matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
  return es.eigenvalues();
}

template <typename Real>
Eigen::SelfAdjointEigenSolver<CMatrix<Real>> hermitian_eigensystem(const CMatrix<Real>& a) {
  require_dense_dim<Real>(a.rows());
  if (hermiticity_defect(a) > Real(kHermitianTol))
    throw std::domain_error("matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> es(a);
  if (es.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
  return es;
}

template <typename Real>
CMatrix<Real> kron(const CMatrix<Real>& a, const CMatrix<Real>& b) {
  CMatrix<Real> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

template <typename Real>
CVector<Real> kron(const CVector<Real>& a, const CVector<Real>& b) {
  CVector<Real> out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

inline Dims concat(const Dims& a, const Dims& b) {
  Dims out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline Dims permute_dims(const Dims& dims, std::span<const int> order) {
  Dims out(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) out[i] = dims.at(order[i]);
  return out;
}

/// Reorders tensor factors of an operator: new factor i is old factor order[i].
template <typename Real>
CMatrix<Real> permute_factors(const CMatrix<Real>& m, const Dims& dims, std::span<const int> order) {
  if (m.rows() != total_dim(dims) || m.cols() != m.rows())
    throw std::invalid_argument("operator does not match factor dimensions");
  const auto map = detail::permutation_map(dims, order);
  const Index n = m.rows();
  CMatrix<Real> out(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) out(i, j) = m(map[i], map[j]);
  return out;
}

template <typename Real>
CVector<Real> permute_factors(const CVector<Real>& v, const Dims& dims, std::span<const int> order) {
  if (v.size() != total_dim(dims)) throw std::invalid_argument("vector does not match factor dimensions");
  const auto map = detail::permutation_map(dims, order);
  CVector<Real> out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = v(map[i]);
  return out;
}

/// Partial trace of an operator on `dims`, keeping `keep` (in ascending factor order).
template <typename Real>
CMatrix<Real> partial_trace(const CMatrix<Real>& m, const Dims& dims, std::span<const int> keep) {
  detail::check_factor_set(keep, dims.size());
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  std::vector<int> order = kept;
  for (int f = 0; f < static_cast<int>(dims.size()); ++f)
    if (!std::binary_search(kept.begin(), kept.end(), f)) order.push_back(f);
  Index kdim = 1;
  for (int f : kept) kdim *= dims[f];
  const Index tdim = total_dim(dims) / kdim;
  const CMatrix<Real> p = permute_factors<Real>(m, dims, order);
  CMatrix<Real> out = CMatrix<Real>::Zero(kdim, kdim);
  for (Index b = 0; b < kdim; ++b)
    for (Index a = 0; a < kdim; ++a) {
      std::complex<Real> s(0);
      for (Index t = 0; t < tdim; ++t) s += p(a * tdim + t, b * tdim + t);
      out(a, b) = s;
    }
  return out;
}

/// Applies a single-factor operator to factor `factor` of a state vector.
template <typename Real>
void apply_to_factor(CVector<Real>& v, const Dims& dims, int factor, const CMatrix<Real>& op) {
  const int d = dims.at(factor);
  if (op.rows() != d || op.cols() != d) throw std::invalid_argument("operator dimension mismatch");
  const auto s = detail::strides(dims);
  const Index stride = s[factor];
  const Index outer = total_dim(dims) / (stride * d);
  CVector<Real> tmp(d);
  for (Index o = 0; o < outer; ++o)
    for (Index inner = 0; inner < stride; ++inner) {
      const Index base = o * stride * d + inner;
      for (int a = 0; a < d; ++a) tmp(a) = v(base + a * stride);
      const CVector<Real> r = op * tmp;
      for (int a = 0; a < d; ++a) v(base + a * stride) = r(a);
    }
}

template <typename Real>
class BasicKet {
 public:
  BasicKet(CVector<Real> amplitudes, Dims dims) : amps_(std::move(amplitudes)), dims_(std::move(dims)) {
    if (amps_.size() != total_dim(dims_)) throw std::invalid_argument("ket length does not match factor dimensions");
    if (std::abs(amps_.norm() - Real(1)) > Real(kNormTol)) throw std::domain_error("ket is not normalized");
  }

  static BasicKet normalized(CVector<Real> v, Dims dims) {
    const Real n = v.norm();
    if (n == Real(0)) throw std::domain_error("cannot normalize the zero vector");
    v /= n;
    return BasicKet(std::move(v), std::move(dims));
  }

  const CVector<Real>& amplitudes() const { return amps_; }
  const Dims& dims() const { return dims_; }
  Index dim() const { return amps_.size(); }

 private:
  CVector<Real> amps_;
  Dims dims_;
};

/// Unit-trace Hermitian matrix. Positivity is checked on demand through
/// min_eigenvalue()/require_positive() since it needs a full eigensolve.
template <typename Real>
class BasicDensityMatrix {
 public:
  BasicDensityMatrix(CMatrix<Real> m, Dims dims) : m_(std::move(m)), dims_(std::move(dims)) {
    if (m_.rows() != total_dim(dims_) || m_.cols() != m_.rows())
      throw std::invalid_argument("density matrix does not match factor dimensions");
    if (hermiticity_defect(m_) > Real(kHermitianTol)) throw std::domain_error("density matrix is not Hermitian");
    if (std::abs(m_.trace() - std::complex<Real>(1)) > Real(kTraceTol))
      throw std::domain_error("density matrix does not have unit trace");
  }

  static BasicDensityMatrix pure(const BasicKet<Real>& k) {
    return BasicDensityMatrix(k.amplitudes() * k.amplitudes().adjoint(), k.dims());
  }

  static BasicDensityMatrix maximally_mixed(Dims dims) {
    const Index n = total_dim(dims);
    return BasicDensityMatrix(CMatrix<Real>::Identity(n, n) / Real(n), std::move(dims));
  }

  const CMatrix<Real>& matrix() const { return m_; }
  const Dims& dims() const { return dims_; }
  Index dim() const { return m_.rows(); }

  Real min_eigenvalue() const { return hermitian_eigenvalues<Real>(m_)(0); }

  const BasicDensityMatrix& require_positive() const {
    if (min_eigenvalue() < -Real(kPsdTol)) throw std::domain_error("density matrix is not positive semidefinite");
    return *this;
  }

 private:
  CMatrix<Real> m_;
  Dims dims_;
};

template <typename Real>
class BasicUnitary {
 public:
  explicit BasicUnitary(CMatrix<Real> u) : u_(std::move(u)) {
    if (u_.rows() != u_.cols()) throw std::invalid_argument("unitary must be square");
    const CMatrix<Real> defect = u_.adjoint() * u_ - CMatrix<Real>::Identity(u_.rows(), u_.rows());
    if (detail::max_abs<Real>(defect) > Real(kUnitaryTol)) throw std::domain_error("matrix is not unitary");
  }

  static BasicUnitary identity(Index n) { return BasicUnitary(CMatrix<Real>::Identity(n, n)); }

  /// Permutation gate sum_i |perm[i]><i|.
  static BasicUnitary permutation(std::span<const int> perm) {
    detail::check_factor_set(perm, perm.size());
    const Index n = static_cast<Index>(perm.size());
    CMatrix<Real> u = CMatrix<Real>::Zero(n, n);
    for (Index i = 0; i < n; ++i) u(perm[i], i) = 1;
    return BasicUnitary(std::move(u));
  }

  const CMatrix<Real>& matrix() const { return u_; }
  Index dim() const { return u_.rows(); }

 private:
  CMatrix<Real> u_;
};

template <typename Real>
BasicDensityMatrix<Real> tensor(const BasicDensityMatrix<Real>& a, const BasicDensityMatrix<Real>& b) {
  return BasicDensityMatrix<Real>(kron<Real>(a.matrix(), b.matrix()), concat(a.dims(), b.dims()));
}

template <typename Real>
BasicKet<Real> tensor(const BasicKet<Real>& a, const BasicKet<Real>& b) {
  return BasicKet<Real>(kron<Real>(a.amplitudes(), b.amplitudes()), concat(a.dims(), b.dims()));
}

template <typename Real>
BasicDensityMatrix<Real> partial_trace(const BasicDensityMatrix<Real>& rho, std::span<const int> keep) {
  detail::check_factor_set(keep, rho.dims().size());
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  Dims dims;
  for (int f : kept) dims.push_back(rho.dims().at(f));
  return BasicDensityMatrix<Real>(partial_trace<Real>(rho.matrix(), rho.dims(), kept), std::move(dims));
}

template <typename Real>
BasicDensityMatrix<Real> permute_factors(const BasicDensityMatrix<Real>& rho, std::span<const int> order) {
  return BasicDensityMatrix<Real>(permute_factors<Real>(rho.matrix(), rho.dims(), order),
                                  permute_dims(rho.dims(), order));
}

/// Sum of absolute eigenvalues of a Hermitian matrix.
template <typename Real>
Real trace_norm(const CMatrix<Real>& a) {
  return hermitian_eigenvalues<Real>(a).cwiseAbs().sum();
}

/// A^s for positive semidefinite A; null-space eigenvalues map to 0, also for s = 0.
template <typename Real>
CMatrix<Real> psd_power(const CMatrix<Real>& a, Real s) {
  const auto es = hermitian_eigensystem<Real>(a);
  const RVector<Real>& ev = es.eigenvalues();
  if (ev.size() > 0 && ev(0) < -Real(kPsdTol)) throw std::domain_error("matrix has a negative eigenvalue");
  RVector<Real> p(ev.size());
  for (Index i = 0; i < ev.size(); ++i) p(i) = ev(i) < Real(kNullEigenvalue) ? Real(0) : std::pow(ev(i), s);
  return es.eigenvectors() * p.asDiagonal() * es.eigenvectors().adjoint();
}

template <typename Real>
CMatrix<Real> fractional_power(const BasicDensityMatrix<Real>& rho, Real s) {
  if (!(s >= Real(0) && s <= Real(1))) throw std::domain_error("fractional power exponent must lie in [0,1]");
  return psd_power<Real>(rho.matrix(), s);
}

/// Squared Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, computed as the
/// squared nuclear norm of sqrt(rho) sqrt(sigma).
template <typename Real>
Real fidelity(const BasicDensityMatrix<Real>& rho, const BasicDensityMatrix<Real>& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  const CMatrix<Real> prod = psd_power<Real>(rho.matrix(), Real(0.5)) * psd_power<Real>(sigma.matrix(), Real(0.5));
  Eigen::JacobiSVD<CMatrix<Real>> svd(prod);
  if (svd.info() != Eigen::Success) throw std::runtime_error("fidelity: singular value decomposition failed");
  const Real t = svd.singularValues().sum();
  if (!std::isfinite(t)) throw std::runtime_error("fidelity: non-finite matrix square root");
  return t * t;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of the `index`-th independent task under a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

template <typename Real, typename Engine>
CMatrix<Real> ginibre(Index rows, Index cols, Engine& rng) {
  std::normal_distribution<Real> normal(0, 1);
  CMatrix<Real> z(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) {
      const Real re = normal(rng);
      const Real im = normal(rng);
      z(i, j) = std::complex<Real>(re, im) / std::sqrt(Real(2));
    }
  return z;
}

/// Haar-distributed unitary: QR of a complex Gaussian matrix with R's diagonal phases removed.
template <typename Real, typename Engine>
BasicUnitary<Real> haar_unitary(Index dim, Engine& rng) {
  if (dim < 1) throw std::invalid_argument("unitary dimension must be positive");
  require_dense_dim<Real>(dim);
  const CMatrix<Real> z = ginibre<Real>(dim, dim, rng);
  Eigen::HouseholderQR<CMatrix<Real>> qr(z);
  CMatrix<Real> q = qr.householderQ();
  const CMatrix<Real> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Index j = 0; j < dim; ++j) {
    const Real a = std::abs(r(j, j));
    if (a > Real(0)) q.col(j) *= r(j, j) / a;
  }
  return BasicUnitary<Real>(std::move(q));
}

template <typename Real = double>
BasicUnitary<Real> haar_unitary(Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_unitary<Real>(dim, rng);
}

/// Haar-random pure state.
template <typename Real, typename Engine>
BasicKet<Real> haar_ket(Dims dims, Engine& rng) {
  const Index n = total_dim(dims);
  CVector<Real> v = ginibre<Real>(n, 1, rng);
  return BasicKet<Real>::normalized(std::move(v), std::move(dims));
}

/// Random mixed state G G^dagger / Tr(G G^dagger) with square Ginibre G.
template <typename Real, typename Engine>
BasicDensityMatrix<Real> random_density_matrix(Dims dims, Engine& rng) {
  const Index n = total_dim(dims);
  const CMatrix<Real> g = ginibre<Real>(n, n, rng);
  CMatrix<Real> m = g * g.adjoint();
  m = (m + m.adjoint()).eval() / Real(2);
  m /= m.trace().real();
  return BasicDensityMatrix<Real>(std::move(m), std::move(dims));
}

using Matrix = CMatrix<double>;
using Vector = CVector<double>;
using Ket = BasicKet<double>;
using DensityMatrix = BasicDensityMatrix<double>;
using UnitaryMatrix = BasicUnitary<double>;

}  // namespace causal_lab

#endif  // CAUSAL_LAB_LINALG_HPP
