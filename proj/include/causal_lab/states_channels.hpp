#ifndef CAUSAL_LAB_STATES_CHANNELS_HPP
#define CAUSAL_LAB_STATES_CHANNELS_HPP

#include "causal_lab/combinatorics.hpp"
#include "causal_lab/linalg.hpp"

#include <string>
#include <vector>

namespace causal_lab {

inline constexpr Index kMaxSuperposedAmplitudes = 10'000'000;
// Total Choi dimension (inputs times outputs) allowed for dense process matrices.
inline constexpr Index kMaxChoiDim = 4096;

enum class ProbeKind { ProductValue, UniformCoherent, SingletProduct, SuperposedConfig, EntangledBattery };

std::string to_string(ProbeKind kind);

/// Pure input on A_1..A_N (dimension d each) followed by one reference factor.
/// A trivial reference is kept as a factor of dimension 1.
struct ProbeState {
  Ket ket;
  int N;
  int d;
  int refDim;
  ProbeKind kind;
};

Ket singlet_state(int d);

ProbeState uniform_probe(int d, int N);
ProbeState product_value_probe(int d, const std::vector<int>& values);
/// |S_d>^{N/d} with consecutive groups {0..d-1}, {d..2d-1}, ...
ProbeState singlet_product_probe(int d, int N);
/// Each probe maximally entangled with its own copy inside a d^N-dimensional reference.
ProbeState entangled_battery_probe(int d, int N);

/// Product of singlets placed on the blocks of `grouping`.
Vector configuration_vector(int N, int d, const Grouping& grouping);

/// Equal-weight superposition of configuration vectors, each tagged by an
/// orthonormal reference state in catalog order.
ProbeState superposed_config_state(int N, int d);

/// Hypothesis "the effect sits at output slot `slot`" (0-based) with local gate U.
struct CausalChannel {
  int d;
  int slot;
  UnitaryMatrix U;

  CausalChannel(int d, int slot, UnitaryMatrix U);
};

/// Output on B_1..B_k (N factors each) followed by R. The probe is rotated by
/// U on every factor and routed to the channel's slot; other slots are maximally mixed.
DensityMatrix apply_intermediary_channel(const CausalChannel& ch, const ProbeState& probe, int k);

/// N repetitions of [B, R_0..R_{k-1}], with B maximally entangled with R_x.
DensityMatrix cause_probe_output(int k, int d, int N, int x);

struct NoiseModel {
  double p;
  int d;

  NoiseModel(double p, int d);
};

/// Independent depolarization of each listed factor.
DensityMatrix depolarize(const DensityMatrix& rho, const NoiseModel& noise, const std::vector<int>& factors);

/// Process matrix sum_ij |i><j| (x) E(|i><j|), input factors first.
struct ChoiOperator {
  Matrix matrix;
  Dims inDims;
  Dims outDims;

  ChoiOperator(Matrix m, Dims in, Dims out);

  Index in_dim() const { return total_dim(inDims); }
  Index out_dim() const { return total_dim(outDims); }
  /// Max-norm distance of Tr_out C from the identity.
  double trace_preservation_defect() const;
};

enum class Symmetry { Plus, Minus };

/// Projector (I +/- SWAP)/2 on out = B_1..B_N C_1..C_N, exchanging the B block with the C block.
Matrix swap_projector(Symmetry sign, int d, int N);

/// Inputs A_1..A_N; outputs B_1..B_N then C_1..C_N. Input i feeds the pair {B_i, C_i}.
ChoiOperator symmetric_choi(Symmetry sign, int d, int N);

/// Identity channel into block B (slot 0) or C (slot 1), other block maximally mixed.
ChoiOperator intermediary_choi(int d, int N, int slot);

ChoiOperator choi_of_unitary(const UnitaryMatrix& U, const Dims& inDims, const Dims& outDims);

/// Output dims of the channel on an input density matrix.
DensityMatrix apply_choi(const ChoiOperator& choi, const DensityMatrix& rho);

/// U applied to every one of the first n factors of `v`.
void apply_collective(Vector& v, const Dims& dims, int n, const Matrix& U);

}  // namespace causal_lab

#endif  // CAUSAL_LAB_STATES_CHANNELS_HPP
