#include "qfv/states.hpp"

#include <cmath>
#include <random>

namespace qfv {

namespace {

Vector ket(int dim, int index) {
  Vector v = Vector::Zero(dim);
  v(index) = Complex(1, 0);
  return v;
}

// |i j> on dims (4,4): flat index 4*i + j.
int qq(int i, int j) { return 4 * i + j; }

}  // namespace

void validate_density(const DensityMatrix& rho) {
  if (rho.matrix.rows() != rho.matrix.cols())
    throw InvariantViolation("density matrix not square");
  if (total_dim(rho.dims) != rho.matrix.rows())
    throw InvariantViolation("dims do not match matrix dimension");
  if (!is_hermitian(rho.matrix))
    throw InvariantViolation("density matrix not Hermitian within 1e-10");
  if (std::abs(rho.matrix.trace().real() - 1.0) > 1e-10 ||
      std::abs(rho.matrix.trace().imag()) > 1e-10)
    throw InvariantViolation("density matrix trace differs from 1 beyond 1e-10");
  const auto eig = hermitian_eig(rho.matrix);
  if (eig.eigenvalues.minCoeff() < -1e-10)
    throw InvariantViolation("density matrix not positive semidefinite within 1e-10");
}

DensityMatrix pure_density(const PureState& psi) {
  if (std::abs(psi.amplitudes.norm() - 1.0) > 1e-12)
    throw NotNormalized("pure_density: amplitude vector not unit norm");
  DensityMatrix rho{psi.amplitudes * psi.amplitudes.adjoint(), psi.dims};
  return rho;
}

DensityMatrix white_noise_mix(const NoisyFamily& family, double p) {
  if (p < 0.0 || p > 1.0)
    throw ParameterOutOfRange("white_noise_mix: p outside [0,1]");
  const int d = total_dim(family.psi.dims);
  DensityMatrix pure = pure_density(family.psi);
  Matrix m = p * pure.matrix + (1.0 - p) / d * Matrix::Identity(d, d);
  return {m, family.psi.dims};
}

DensityMatrix maximally_mixed(const Dims& dims) {
  const int d = total_dim(dims);
  return {Matrix::Identity(d, d) / static_cast<double>(d), dims};
}

DensityMatrix example1_state(double p, double q) {
  if (p < 0.0 || q < 0.0 || std::abs(4 * p + 2 * q - 1.0) > 1e-12)
    throw ParameterOutOfRange("example1_state: need p,q >= 0 with 4p+2q = 1");
  const double h = 0.5;
  const double s = 1.0 / std::sqrt(2.0);
  // The first four kets carry 1/sqrt(2) so each is unit norm; with 1/2
  // the mixture would not have unit trace.
  std::vector<Vector> psis(6, Vector::Zero(16));
  psis[0](qq(0, 1)) = s;  psis[0](qq(2, 3)) = s;
  psis[1](qq(1, 0)) = s;  psis[1](qq(3, 2)) = s;
  psis[2](qq(1, 1)) = s;  psis[2](qq(2, 2)) = s;
  psis[3](qq(0, 0)) = s;  psis[3](qq(3, 3)) = -s;
  psis[4](qq(0, 3)) = h;  psis[4](qq(1, 2)) = h;  psis[4](qq(2, 1)) = s;
  psis[5](qq(0, 3)) = -h; psis[5](qq(1, 2)) = h;  psis[5](qq(3, 0)) = s;

  Matrix m = Matrix::Zero(16, 16);
  for (int n = 0; n < 4; ++n) m += p * (psis[n] * psis[n].adjoint());
  for (int n = 4; n < 6; ++n) m += q * (psis[n] * psis[n].adjoint());
  return {m, {4, 4}};
}

NoisyFamily example2_family() {
  Vector amps = Vector::Zero(4);
  amps(0) = 2.0 / 3.0;  // |00>
  amps(2) = 1.0 / 3.0;  // |10>
  amps(3) = 2.0 / 3.0;  // |11>
  return {PureState{amps, {2, 2}}};
}

NoisyFamily example3_family() {
  Vector amps = Vector::Zero(8);
  amps(0) = 2.0 / 3.0;  // |000>
  amps(6) = 1.0 / 3.0;  // |110>
  amps(7) = 2.0 / 3.0;  // |111>
  return {PureState{amps, {2, 2, 2}}};
}

DensityMatrix random_separable(const Dims& dims, int k_terms, std::uint64_t seed) {
  if (k_terms < 1) throw ParameterOutOfRange("random_separable: k_terms must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  // Haar-random local ket: normalized complex Gaussian vector.
  auto random_ket = [&](int d) {
    Vector v(d);
    for (int i = 0; i < d; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    v /= v.norm();
    return v;
  };

  // Exponential draws normalized -> uniform on the simplex.
  std::vector<double> weights(k_terms);
  double wsum = 0.0;
  for (double& w : weights) {
    w = -std::log(1.0 - unif(rng));
    wsum += w;
  }

  const int d = total_dim(dims);
  Matrix m = Matrix::Zero(d, d);
  for (int k = 0; k < k_terms; ++k) {
    Vector prod = random_ket(dims[0]);
    for (size_t s = 1; s < dims.size(); ++s) {
      Vector local = random_ket(dims[s]);
      Vector next(prod.size() * local.size());
      for (int i = 0; i < prod.size(); ++i)
        for (int j = 0; j < local.size(); ++j)
          next(i * local.size() + j) = prod(i) * local(j);
      prod = next;
    }
    m += (weights[k] / wsum) * (prod * prod.adjoint());
  }
  return {m, dims};
}

}  // namespace qfv
