#include "qfv/qfi.hpp"

#include <cmath>

namespace qfv {

namespace {

double real_checked(Complex z, const char* where) {
  if (std::abs(z.imag()) > 1e-10)
    throw std::runtime_error(std::string(where) + ": imaginary residue above 1e-10");
  return z.real();
}

void check_match(const DensityMatrix& rho, const Matrix& op, const char* where) {
  if (rho.matrix.rows() != op.rows() || op.rows() != op.cols())
    throw DimensionMismatch(std::string(where) + ": operator/state dimension mismatch");
}

}  // namespace

double expectation(const DensityMatrix& rho, const Matrix& op) {
  check_match(rho, op, "expectation");
  return real_checked((rho.matrix * op).trace(), "expectation");
}

double variance(const DensityMatrix& rho, const Matrix& op) {
  check_match(rho, op, "variance");
  if (!is_hermitian(op)) throw NotHermitian("variance: observable not Hermitian");
  const double second = real_checked((rho.matrix * op * op).trace(), "variance");
  const double first = real_checked((rho.matrix * op).trace(), "variance");
  return second - first * first;
}

double covariance(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  if (rho.dims.size() != 2) throw DimensionMismatch("covariance: state not bipartite");
  if (a.local_dim != rho.dims[0] || b.local_dim != rho.dims[1])
    throw DimensionMismatch("covariance: local dims mismatch");
  const Matrix ia = Matrix::Identity(a.local_dim, a.local_dim);
  const Matrix ib = Matrix::Identity(b.local_dim, b.local_dim);
  const double ab = expectation(rho, kron(a.matrix, b.matrix));
  const double ea = expectation(rho, kron(a.matrix, ib));
  const double eb = expectation(rho, kron(ia, b.matrix));
  return ab - ea * eb;
}

QfiResult qfi(const DensityMatrix& rho, const Matrix& op, double cutoff) {
  check_match(rho, op, "qfi");
  if (!is_hermitian(op)) throw NotHermitian("qfi: observable not Hermitian");
  const auto eig = hermitian_eig(rho.matrix);
  const int n = static_cast<int>(eig.eigenvalues.size());

  Eigen::VectorXd lambda = eig.eigenvalues.cwiseMax(0.0);
  // <k|O|l> for all eigenpairs at once.
  const Matrix overlap = eig.eigenvectors.adjoint() * op * eig.eigenvectors;

  QfiResult result;
  for (int k = 0; k < n; ++k)
    if (lambda(k) > cutoff) ++result.rank_used;

  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      if (k == l) continue;  // diagonal terms vanish identically
      const double denom = lambda(k) + lambda(l);
      if (denom <= cutoff) continue;
      const double diff = lambda(k) - lambda(l);
      sum += diff * diff / (2.0 * denom) * std::norm(overlap(k, l));
    }
  }
  result.value = sum;
  return result;
}

double qfi_noisy_closed_form(const NoisyFamily& family, const Matrix& op, double p) {
  if (p < 0.0 || p > 1.0)
    throw ParameterOutOfRange("qfi_noisy_closed_form: p outside [0,1]");
  const int d = total_dim(family.psi.dims);
  const double pure_fisher = variance(pure_density(family.psi), op);
  const double denom = p + 2.0 * (1.0 - p) / d;
  return p * p / denom * pure_fisher;
}

}  // namespace qfv
