#ifndef QFV_STATES_HPP
#define QFV_STATES_HPP

#include <cstdint>

#include "qfv/linalg.hpp"

namespace qfv {

struct PureState {
  Vector amplitudes;
  Dims dims;
};

/// Hermitian, unit-trace, positive semidefinite matrix with subsystem
/// annotation. Validation runs the full eigendecomposition (eigenvalues
/// are needed downstream anyway).
struct DensityMatrix {
  Matrix matrix;
  Dims dims;
};

/// White-noise family rho(p) = p|psi><psi| + (1-p) I/D.
struct NoisyFamily {
  PureState psi;
};

/// Throws InvariantViolation unless Hermitian (1e-10), trace 1 (1e-10)
/// and min eigenvalue >= -1e-10.
void validate_density(const DensityMatrix& rho);

DensityMatrix pure_density(const PureState& psi);

DensityMatrix white_noise_mix(const NoisyFamily& family, double p);

DensityMatrix maximally_mixed(const Dims& dims);

/// Two-ququart mixture p * sum_{n=1..4} |psi_n><psi_n| + q * sum_{n=5,6},
/// constrained to 4p + 2q = 1. PPT bound entangled at the right (p, q).
DensityMatrix example1_state(double p, double q);

/// Two-qubit (2/3)(|00> + |11>) + (1/3)|10>, mixed with white noise.
NoisyFamily example2_family();

/// Three-qubit GHZ-type (2/3)(|000> + |111>) + (1/3)|110>.
NoisyFamily example3_family();

/// Convex mixture of k_terms Haar-random product states. Deterministic
/// for a fixed seed.
DensityMatrix random_separable(const Dims& dims, int k_terms, std::uint64_t seed);

}  // namespace qfv

#endif
