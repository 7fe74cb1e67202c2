#include "qfv/observables.hpp"

namespace qfv {

Observable make_observable(Matrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("observable matrix not square");
  if (!is_hermitian(m)) throw NotHermitian("observable not Hermitian within 1e-10");
  const int d = static_cast<int>(m.rows());
  return {std::move(m), d};
}

ObservableSet make_set(std::vector<Observable> ops) {
  Dims dims;
  dims.reserve(ops.size());
  for (const auto& op : ops) dims.push_back(op.local_dim);
  return {std::move(ops), std::move(dims)};
}

Matrix collective_sum(const ObservableSet& set) {
  const int n = static_cast<int>(set.ops.size());
  if (n == 0) throw DimensionMismatch("collective_sum: empty set");
  for (int i = 0; i < n; ++i)
    if (set.ops[i].local_dim != set.dims[i])
      throw DimensionMismatch("collective_sum: observable/dims mismatch");
  const int d = total_dim(set.dims);
  Matrix sum = Matrix::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    Matrix lifted = Matrix::Identity(1, 1);
    for (int s = 0; s < n; ++s) {
      const Matrix& factor = (s == i)
          ? set.ops[i].matrix
          : Matrix(Matrix::Identity(set.dims[s], set.dims[s]));
      lifted = kron(lifted, factor);
    }
    sum += lifted;
  }
  return sum;
}

Matrix pairwise_difference(const ObservableSet& set, int i, int j) {
  const int n = static_cast<int>(set.ops.size());
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw DimensionMismatch("pairwise_difference: invalid subsystem pair");
  const Matrix& a = set.ops[i].matrix;
  const Matrix& b = set.ops[j].matrix;
  const Matrix ia = Matrix::Identity(a.rows(), a.rows());
  const Matrix ib = Matrix::Identity(b.rows(), b.rows());
  return kron(a, ib) - kron(ia, b);
}

Observable pauli(const std::string& name) {
  Matrix m(2, 2);
  if (name == "x") m << 0, 1, 1, 0;
  else if (name == "y") m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  else if (name == "z") m << 1, 0, 0, -1;
  else if (name == "i") m << 1, 0, 0, 1;
  else throw UnknownName("pauli: unknown name '" + name + "'");
  return {m, 2};
}

Observable projector(int dim, const std::vector<int>& kets, const std::vector<double>& signs) {
  if (kets.size() != signs.size())
    throw DimensionMismatch("projector: kets/signs length mismatch");
  Matrix m = Matrix::Zero(dim, dim);
  for (size_t k = 0; k < kets.size(); ++k) {
    if (kets[k] < 0 || kets[k] >= dim) throw UnknownName("projector: ket index out of range");
    m(kets[k], kets[k]) += signs[k];
  }
  return {m, dim};
}

}  // namespace qfv
