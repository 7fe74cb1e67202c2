#include "qfv/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace qfv {

namespace {

// Strides for row-major flattening with subsystem 0 most significant.
std::vector<int> strides_of(const Dims& dims) {
  std::vector<int> s(dims.size());
  int acc = 1;
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    s[i] = acc;
    acc *= dims[i];
  }
  return s;
}

void check_dims(const Matrix& m, const Dims& dims, const char* where) {
  if (m.rows() != m.cols()) throw DimensionMismatch(std::string(where) + ": matrix not square");
  if (total_dim(dims) != m.rows())
    throw DimensionMismatch(std::string(where) + ": product of dims != matrix dimension");
}

}  // namespace

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

SpectralDecomposition hermitian_eig(const Matrix& m) {
  if (!is_hermitian(m))
    throw NotHermitian("hermitian_eig: input exceeds Hermiticity tolerance 1e-10");
  Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: eigensolver did not converge");
  // Eigen returns eigenvalues ascending already.
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

Matrix partial_trace(const Matrix& m, const Dims& dims, const std::vector<int>& keep) {
  check_dims(m, dims, "partial_trace");
  const int n = static_cast<int>(dims.size());
  if (keep.empty()) throw DimensionMismatch("partial_trace: keep set empty");
  std::vector<bool> kept(n, false);
  for (int s : keep) {
    if (s < 0 || s >= n) throw DimensionMismatch("partial_trace: keep index out of range");
    if (kept[s]) throw DimensionMismatch("partial_trace: duplicate keep index");
    kept[s] = true;
  }
  std::vector<int> traced;
  for (int s = 0; s < n; ++s)
    if (!kept[s]) traced.push_back(s);

  const auto stride = strides_of(dims);
  int keep_dim = 1;
  for (int s : keep) keep_dim *= dims[s];
  int traced_dim = 1;
  for (int s : traced) traced_dim *= dims[s];

  // Base offset of each multi-index over a subsystem subset, in subset order.
  auto offsets = [&](const std::vector<int>& subs, int count) {
    std::vector<int> off(count, 0);
    for (int flat = 0; flat < count; ++flat) {
      int rest = flat;
      for (int i = static_cast<int>(subs.size()) - 1; i >= 0; --i) {
        int s = subs[i];
        off[flat] += (rest % dims[s]) * stride[s];
        rest /= dims[s];
      }
    }
    return off;
  };
  const auto keep_off = offsets(keep, keep_dim);
  const auto traced_off = offsets(traced, traced_dim);

  Matrix out = Matrix::Zero(keep_dim, keep_dim);
  for (int a = 0; a < keep_dim; ++a)
    for (int b = 0; b < keep_dim; ++b) {
      Complex acc(0, 0);
      for (int t = 0; t < traced_dim; ++t)
        acc += m(keep_off[a] + traced_off[t], keep_off[b] + traced_off[t]);
      out(a, b) = acc;
    }
  return out;
}

Matrix partial_transpose(const Matrix& m, const Dims& dims, int subsystem) {
  check_dims(m, dims, "partial_transpose");
  if (subsystem < 0 || subsystem >= static_cast<int>(dims.size()))
    throw DimensionMismatch("partial_transpose: subsystem index out of range");
  const auto stride = strides_of(dims);
  const int d = dims[subsystem];
  const int st = stride[subsystem];
  const int total = static_cast<int>(m.rows());

  Matrix out(total, total);
  for (int r = 0; r < total; ++r) {
    const int ri = (r / st) % d;
    const int rbase = r - ri * st;
    for (int c = 0; c < total; ++c) {
      const int ci = (c / st) % d;
      const int cbase = c - ci * st;
      out(rbase + ci * st, cbase + ri * st) = m(r, c);
    }
  }
  return out;
}

}  // namespace qfv
