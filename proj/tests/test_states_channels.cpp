#include "causal_lab/states_channels.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace causal_lab;

namespace {

// Depolarizing map as an average over Weyl-Heisenberg conjugations.
Matrix weyl_depolarize(const Matrix& rho, const Dims& dims, int factor, double p) {
  const int d = dims[factor];
  Matrix avg = Matrix::Zero(rho.rows(), rho.cols());
  const double two_pi = 2.0 * std::acos(-1.0);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Matrix w = Matrix::Zero(d, d);
      for (int j = 0; j < d; ++j) w((j + a) % d, j) = std::polar(1.0, two_pi * b * j / d);
      Matrix full = Matrix::Identity(1, 1);
      for (std::size_t f = 0; f < dims.size(); ++f)
        full = kron(full, static_cast<int>(f) == factor ? w : Matrix(Matrix::Identity(dims[f], dims[f])));
      avg += full * rho * full.adjoint();
    }
  return (1.0 - p) * rho + p * avg / double(d * d);
}

Index matrix_rank(const Matrix& m) {
  Eigen::ComplexEigenSolver<Matrix> es(m);
  Index r = 0;
  for (Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i)) > 1e-9) ++r;
  return r;
}

}  // namespace

TEST(Singlet, NormalizedAndAntisymmetric) {
  for (int d = 2; d <= 4; ++d) {
    const Ket s = singlet_state(d);
    EXPECT_NEAR(s.amplitudes().norm(), 1.0, 1e-14);
    const Dims dims(d, d);
    for (int i = 0; i + 1 < d; ++i) {
      std::vector<int> order(d);
      for (int f = 0; f < d; ++f) order[f] = f;
      std::swap(order[i], order[i + 1]);
      const Vector swapped = permute_factors(s.amplitudes(), dims, order);
      EXPECT_LT((swapped + s.amplitudes()).norm(), 1e-14);
    }
  }
  EXPECT_THROW(singlet_state(1), std::invalid_argument);
}

TEST(Singlet, PicksUpDeterminant) {
  for (int d = 2; d <= 3; ++d) {
    const auto u = haar_unitary(d, 77 + d);
    Vector v = singlet_state(d).amplitudes();
    const Vector before = v;
    apply_collective(v, Dims(d, d), d, u.matrix());
    EXPECT_LT((v - u.matrix().determinant() * before).norm(), 1e-12);
  }
}

TEST(Probes, DimsAndReferences) {
  const auto u = uniform_probe(3, 2);
  EXPECT_EQ(u.ket.dims(), (Dims{3, 3, 1}));
  EXPECT_EQ(u.refDim, 1);
  const auto s = singlet_product_probe(2, 4);
  EXPECT_EQ(s.ket.dims(), (Dims{2, 2, 2, 2, 1}));
  EXPECT_THROW(singlet_product_probe(2, 3), std::invalid_argument);
  const auto b = entangled_battery_probe(2, 2);
  EXPECT_EQ(b.ket.dims(), (Dims{2, 2, 4}));
  const auto v = product_value_probe(3, {0, 2, 1});
  EXPECT_NEAR(std::abs(v.ket.amplitudes()(0 * 9 + 2 * 3 + 1)), 1.0, 1e-15);
  EXPECT_THROW(product_value_probe(2, {0, 2}), std::invalid_argument);
}

TEST(Probes, UniformProbeIsPermutationInvariant) {
  const int perm[] = {2, 0, 1};
  const auto p = UnitaryMatrix::permutation(perm);
  const auto probe = uniform_probe(3, 2);
  Vector v = probe.ket.amplitudes();
  apply_collective(v, probe.ket.dims(), 2, p.matrix());
  EXPECT_LT((v - probe.ket.amplitudes()).norm(), 1e-14);
}

TEST(Probes, EntangledBatteryMarginalIsMixed) {
  const auto probe = entangled_battery_probe(2, 2);
  const auto rho = DensityMatrix::pure(probe.ket);
  const int keep[] = {0, 1};
  EXPECT_LT((partial_trace(rho, keep).matrix() - Matrix::Identity(4, 4) / 4.0).norm(), 1e-14);
}

TEST(Configurations, SingletBlocksMatchGrouping) {
  const Vector c = configuration_vector(4, 2, Grouping{{0, 2}, {1, 3}});
  EXPECT_NEAR(c.norm(), 1.0, 1e-14);
  // Reordering factors [0,2,1,3] turns it into |S>|S>.
  const int order[] = {0, 2, 1, 3};
  const Vector s = singlet_state(2).amplitudes();
  EXPECT_LT((permute_factors(c, Dims{2, 2, 2, 2}, order) - kron(s, s)).norm(), 1e-14);
}

TEST(Configurations, SuperposedStateShape) {
  const auto p = superposed_config_state(4, 2);
  EXPECT_EQ(p.refDim, 3);
  EXPECT_EQ(p.ket.dims(), (Dims{2, 2, 2, 2, 3}));
  const auto q = superposed_config_state(6, 3);
  EXPECT_EQ(q.refDim, 10);
}

TEST(Channels, OutputIsIndependentOfUForSinglets) {
  const auto probe = singlet_product_probe(2, 2);
  for (int slot = 0; slot < 2; ++slot) {
    const auto ref = apply_intermediary_channel(CausalChannel(2, slot, UnitaryMatrix::identity(2)), probe, 2);
    for (std::uint64_t s = 0; s < 3; ++s) {
      const auto out = apply_intermediary_channel(CausalChannel(2, slot, haar_unitary(2, s)), probe, 2);
      EXPECT_LT(trace_norm<double>(out.matrix() - ref.matrix()), 1e-12);
    }
  }
}

TEST(Channels, InactiveSlotsAreMaximallyMixed) {
  const auto probe = uniform_probe(2, 1);
  const auto out = apply_intermediary_channel(CausalChannel(2, 1, UnitaryMatrix::identity(2)), probe, 3);
  EXPECT_EQ(out.dims(), (Dims{2, 2, 2, 1}));
  const int k0[] = {0}, k1[] = {1};
  EXPECT_LT((partial_trace(out, k0).matrix() - Matrix::Identity(2, 2) / 2.0).norm(), 1e-14);
  const Matrix expected = DensityMatrix::pure(Ket(Vector::Ones(2) / std::sqrt(2.0), {2})).matrix();
  EXPECT_LT((partial_trace(out, k1).matrix() - expected).norm(), 1e-14);
  EXPECT_THROW(CausalChannel(2, -1, UnitaryMatrix::identity(2)), std::invalid_argument);
  EXPECT_THROW(CausalChannel(3, 0, UnitaryMatrix::identity(2)), std::invalid_argument);
}

TEST(Channels, CauseProbeOutput) {
  const auto a = cause_probe_output(2, 2, 1, 0);
  const auto b = cause_probe_output(2, 2, 1, 1);
  EXPECT_EQ(a.dims(), (Dims{2, 2, 2}));
  EXPECT_GT(trace_norm<double>(a.matrix() - b.matrix()), 0.1);
  const int keep[] = {0};
  EXPECT_LT((partial_trace(a, keep).matrix() - Matrix::Identity(2, 2) / 2.0).norm(), 1e-14);
  EXPECT_NEAR(a.min_eigenvalue(), 0.0, 1e-12);
}

TEST(Noise, MatchesWeylTwirl) {
  std::mt19937_64 rng(4);
  const auto rho = random_density_matrix<double>(Dims{2, 3}, rng);
  for (double p : {0.0, 0.2, 1.0}) {
    const auto out = depolarize(rho, NoiseModel(p, 3), {1});
    EXPECT_LT((out.matrix() - weyl_depolarize(rho.matrix(), {2, 3}, 1, p)).norm(), 1e-12) << p;
  }
  const auto both = depolarize(random_density_matrix<double>(Dims{2, 2}, rng), NoiseModel(1.0, 2), {0, 1});
  EXPECT_LT((both.matrix() - Matrix::Identity(4, 4) / 4.0).norm(), 1e-14);
  EXPECT_THROW(NoiseModel(1.5, 2), std::invalid_argument);
  EXPECT_THROW(depolarize(rho, NoiseModel(0.1, 2), {0, 1}), std::invalid_argument);
}

TEST(Choi, SwapProjectorsAreComplementary) {
  for (int d = 2; d <= 3; ++d) {
    const Matrix pp = swap_projector(Symmetry::Plus, d, 1);
    const Matrix pm = swap_projector(Symmetry::Minus, d, 1);
    const Index D = d;
    EXPECT_LT((pp * pp - pp).norm(), 1e-14);
    EXPECT_LT((pp + pm - Matrix::Identity(D * D, D * D)).norm(), 1e-14);
    EXPECT_NEAR(pp.trace().real(), D * (D + 1) / 2.0, 1e-12);
    EXPECT_NEAR(pm.trace().real(), D * (D - 1) / 2.0, 1e-12);
  }
  const Matrix p2 = swap_projector(Symmetry::Minus, 2, 2);
  EXPECT_EQ(matrix_rank(p2), 6);
}

TEST(Choi, SymmetricChoiIsCompletelyPositiveAndTracePreserving) {
  for (int N = 1; N <= 2; ++N)
    for (auto sign : {Symmetry::Plus, Symmetry::Minus}) {
      const auto c = symmetric_choi(sign, 2, N);
      EXPECT_LT(c.trace_preservation_defect(), 1e-12);
      EXPECT_GT(hermitian_eigenvalues<double>(c.matrix)(0), -1e-12);
    }
  EXPECT_THROW(symmetric_choi(Symmetry::Plus, 3, 3), std::length_error);
}

TEST(Choi, IntermediaryChoiRoutesInput) {
  std::mt19937_64 rng(8);
  const auto rho = random_density_matrix<double>(Dims{2}, rng);
  for (int slot = 0; slot < 2; ++slot) {
    const auto c = intermediary_choi(2, 1, slot);
    EXPECT_LT(c.trace_preservation_defect(), 1e-12);
    const auto out = apply_choi(c, rho);
    const int keep[] = {slot}, other[] = {1 - slot};
    EXPECT_LT((partial_trace(out, keep).matrix() - rho.matrix()).norm(), 1e-12);
    EXPECT_LT((partial_trace(out, other).matrix() - Matrix::Identity(2, 2) / 2.0).norm(), 1e-12);
  }
}

TEST(Choi, UnitaryChoiReproducesConjugation) {
  std::mt19937_64 rng(10);
  const auto u = haar_unitary<double>(3, rng);
  const auto rho = random_density_matrix<double>(Dims{3}, rng);
  const auto c = choi_of_unitary(u, {3}, {3});
  EXPECT_LT(c.trace_preservation_defect(), 1e-12);
  const auto out = apply_choi(c, rho);
  EXPECT_LT((out.matrix() - u.matrix() * rho.matrix() * u.matrix().adjoint()).norm(), 1e-12);
  EXPECT_EQ(matrix_rank(c.matrix), 1);
}
