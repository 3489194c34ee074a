#include "causal_lab/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace causal_lab;

namespace {

Matrix random_matrix(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return ginibre<double>(n, n, rng);
}

}  // namespace

TEST(Kron, OrderingIsMostSignificantFirst) {
  Vector a(2), b(3);
  a << 1, 2;
  b << 3, 4, 5;
  const Vector ab = kron(a, b);
  ASSERT_EQ(ab.size(), 6);
  EXPECT_EQ(ab(0), std::complex<double>(3));
  EXPECT_EQ(ab(2), std::complex<double>(5));
  EXPECT_EQ(ab(3), std::complex<double>(6));
  EXPECT_EQ(ab(5), std::complex<double>(10));
}

TEST(PermuteFactors, SwapsKronOrder) {
  const Matrix a = random_matrix(2, 1), b = random_matrix(3, 2);
  const int order[] = {1, 0};
  EXPECT_LT((permute_factors(kron(a, b), Dims{2, 3}, order) - kron(b, a)).norm(), 1e-12);
  const Matrix c = random_matrix(2, 3);
  const int cyc[] = {2, 0, 1};
  EXPECT_LT((permute_factors(kron(kron(a, b), c), Dims{2, 3, 2}, cyc) - kron(kron(c, a), b)).norm(), 1e-12);
  EXPECT_EQ(permute_dims(Dims{2, 3, 4}, cyc), (Dims{4, 2, 3}));
}

TEST(PartialTrace, ProductStates) {
  std::mt19937_64 rng(5);
  const auto r1 = random_density_matrix<double>(Dims{2}, rng);
  const auto r2 = random_density_matrix<double>(Dims{3}, rng);
  const auto r3 = random_density_matrix<double>(Dims{2}, rng);
  const auto all = tensor(tensor(r1, r2), r3);
  const int k0[] = {0}, k1[] = {1}, k02[] = {0, 2};
  EXPECT_LT((partial_trace(all, k0).matrix() - r1.matrix()).norm(), 1e-12);
  EXPECT_LT((partial_trace(all, k1).matrix() - r2.matrix()).norm(), 1e-12);
  EXPECT_LT((partial_trace(all, k02).matrix() - kron(r1.matrix(), r3.matrix())).norm(), 1e-12);
  const int unsorted[] = {2, 0};
  EXPECT_LT((partial_trace(all, unsorted).matrix() - kron(r1.matrix(), r3.matrix())).norm(), 1e-12);
  const int bad[] = {0, 3};
  EXPECT_THROW(partial_trace(all, bad), std::invalid_argument);
}

TEST(PartialTrace, BellStateMarginalIsMixed) {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  const auto rho = DensityMatrix::pure(Ket(v, {2, 2}));
  const int keep[] = {1};
  EXPECT_LT((partial_trace(rho, keep).matrix() - Matrix::Identity(2, 2) / 2.0).norm(), 1e-15);
}

TEST(TraceNorm, MatchesSingularValues) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    Matrix a = random_matrix(6, s);
    a = (a + a.adjoint()).eval();
    Eigen::JacobiSVD<Matrix> svd(a);
    EXPECT_NEAR(trace_norm(a), svd.singularValues().sum(), 1e-10);
  }
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.5;
  d(1, 1) = -0.5;
  EXPECT_NEAR(trace_norm(d), 1.0, 1e-15);
}

TEST(Fidelity, PureStatesAndMixed) {
  std::mt19937_64 rng(9);
  const auto a = haar_ket<double>(Dims{3}, rng);
  const auto b = haar_ket<double>(Dims{3}, rng);
  const double overlap = std::norm(a.amplitudes().dot(b.amplitudes()));
  EXPECT_NEAR(fidelity(DensityMatrix::pure(a), DensityMatrix::pure(b)), overlap, 1e-8);
  const auto r = random_density_matrix<double>(Dims{3}, rng);
  EXPECT_NEAR(fidelity(r, r), 1.0, 1e-10);
  const auto mixed = DensityMatrix::maximally_mixed(Dims{3});
  const double f = fidelity(DensityMatrix::pure(a), mixed);
  EXPECT_NEAR(f, 1.0 / 3.0, 1e-10);
}

TEST(FractionalPower, SquareRootSquaresBack) {
  std::mt19937_64 rng(11);
  const auto r = random_density_matrix<double>(Dims{4}, rng);
  const Matrix s = fractional_power(r, 0.5);
  EXPECT_LT((s * s - r.matrix()).norm(), 1e-10);
  EXPECT_LT((fractional_power(r, 1.0) - r.matrix()).norm(), 1e-10);
  EXPECT_THROW(fractional_power(r, 1.5), std::domain_error);
}

TEST(FractionalPower, NullSpaceMapsToZero) {
  Vector v = Vector::Zero(2);
  v(0) = 1.0;
  const auto rho = DensityMatrix::pure(Ket(v, {2}));
  const Matrix z = fractional_power(rho, 0.0);
  EXPECT_NEAR(std::abs(z(1, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(z(0, 0)), 1.0, 1e-15);
}

TEST(Validation, RejectsMalformedInputs) {
  Vector v = Vector::Ones(2);
  EXPECT_THROW(Ket(v, {2}), std::domain_error);
  EXPECT_THROW(Ket(Vector::Ones(3) / std::sqrt(3.0), {2}), std::invalid_argument);
  Matrix m = Matrix::Identity(2, 2);
  EXPECT_THROW(DensityMatrix(m, {2}), std::domain_error);
  m(0, 1) = 0.3;
  EXPECT_THROW(DensityMatrix(m / 2.0, {2}), std::domain_error);
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix(neg, {2}).require_positive(), std::domain_error);
  EXPECT_THROW(UnitaryMatrix(Matrix::Ones(2, 2)), std::domain_error);
  EXPECT_THROW(hermitian_eigenvalues<double>(Matrix::Identity(4097, 4097)), std::length_error);
}

TEST(Haar, DeterministicAndUnitary) {
  const auto u1 = haar_unitary(5, 1234);
  const auto u2 = haar_unitary(5, 1234);
  EXPECT_EQ(u1.matrix(), u2.matrix());
  EXPECT_NE(u1.matrix(), haar_unitary(5, 1235).matrix());
  EXPECT_LT((u1.matrix().adjoint() * u1.matrix() - Matrix::Identity(5, 5)).norm(), 1e-12);
}

TEST(Haar, FirstMomentIsMaximallyMixed) {
  // E[U rho U^dagger] = I/d
  const int d = 3, trials = 4000;
  Vector e0 = Vector::Zero(d);
  e0(0) = 1.0;
  Matrix avg = Matrix::Zero(d, d);
  std::mt19937_64 rng(42);
  for (int t = 0; t < trials; ++t) {
    const Vector v = haar_unitary<double>(d, rng).matrix() * e0;
    avg += v * v.adjoint();
  }
  avg /= trials;
  EXPECT_LT((avg - Matrix::Identity(d, d) / d).norm(), 0.05);
}

TEST(Permutation, GateMapsBasisStates) {
  const int perm[] = {2, 0, 1};
  const auto p = UnitaryMatrix::permutation(perm);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(p.matrix()(perm[i], i), std::complex<double>(1));
  const int bad[] = {0, 0, 1};
  EXPECT_THROW(UnitaryMatrix::permutation(bad), std::invalid_argument);
}

TEST(Seeds, DerivedSeedsDiffer) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(Scalar, LongDoubleInstantiation) {
  std::mt19937_64 rng(3);
  const auto r = random_density_matrix<long double>(Dims{2, 2}, rng);
  const int keep[] = {0};
  const auto m = partial_trace(r, keep);
  EXPECT_NEAR(static_cast<double>(m.matrix().trace().real()), 1.0, 1e-15);
}
