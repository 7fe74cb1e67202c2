#ifndef QFV_LINALG_HPP
#define QFV_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qfv/errors.hpp"

namespace qfv {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Ordered local dimensions (d_1, ..., d_N); subsystem 0 is the leftmost
/// tensor factor and the most significant index in row-major flattening.
using Dims = std::vector<int>;

inline int total_dim(const Dims& dims) {
  int d = 1;
  for (int di : dims) d *= di;
  return d;
}

constexpr double kHermTol = 1e-10;

/// Eigenvalues ascending, eigenvectors column-aligned and orthonormal.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;
};

bool is_hermitian(const Matrix& m, double tol = kHermTol);

/// Hermitian eigendecomposition. The input is checked entrywise against
/// kHermTol and symmetrized before solving so downstream formulas see an
/// exactly Hermitian matrix. Throws NotHermitian.
SpectralDecomposition hermitian_eig(const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);

/// Trace out every subsystem not listed in `keep`. The kept subsystems
/// appear in the output in the order given, so keep={1,0} also swaps them.
Matrix partial_trace(const Matrix& m, const Dims& dims, const std::vector<int>& keep);

/// Transpose the indexed tensor factor only. Involutive.
Matrix partial_transpose(const Matrix& m, const Dims& dims, int subsystem);

}  // namespace qfv

#endif
