#include "qfv/criteria.hpp"

#include <cmath>

namespace qfv {

std::string to_string(CriterionId id) {
  switch (id) {
    case CriterionId::theorem1: return "theorem1";
    case CriterionId::theorem2: return "theorem2";
    case CriterionId::theoremN: return "theoremN";
    case CriterionId::ym_bipartite: return "ym_bipartite";
    case CriterionId::ym_tripartite: return "ym_tripartite";
    case CriterionId::ppt: return "ppt";
  }
  return "unknown";
}

CriterionReport make_report(CriterionId id, double lhs, double rhs) {
  const double gap = lhs - rhs;
  return {id, lhs, rhs, gap, gap > kDetectionThreshold};
}

namespace {

void check_parties(const DensityMatrix& rho, size_t n, const char* where) {
  if (rho.dims.size() != n)
    throw DimensionMismatch(std::string(where) + ": wrong number of subsystems");
}

// Reduced state on subsystems (i, j), in that order.
DensityMatrix reduced_pair(const DensityMatrix& rho, int i, int j) {
  Matrix m = partial_trace(rho.matrix, rho.dims, {i, j});
  return {std::move(m), {rho.dims[i], rho.dims[j]}};
}

}  // namespace

CriterionReport theorem1(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  check_parties(rho, 2, "theorem1");
  const Matrix ia = Matrix::Identity(a.local_dim, a.local_dim);
  const Matrix ib = Matrix::Identity(b.local_dim, b.local_dim);
  const double lhs = qfi(rho, kron(a.matrix, ib) + kron(ia, b.matrix)).value;
  const double rhs = variance(rho, kron(a.matrix, ib) - kron(ia, b.matrix));
  return make_report(CriterionId::theorem1, lhs, rhs);
}

CriterionReport theorem2(const DensityMatrix& rho, const Observable& a, const Observable& b,
                         const Observable& c) {
  check_parties(rho, 3, "theorem2");
  const ObservableSet set = make_set({a, b, c});
  const double lhs = qfi(rho, collective_sum(set)).value;
  double rhs = 0.0;
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : pairs)
    rhs += variance(reduced_pair(rho, pr[0], pr[1]), pairwise_difference(set, pr[0], pr[1]));
  rhs *= 0.5;
  return make_report(CriterionId::theorem2, lhs, rhs);
}

CriterionReport theoremN(const DensityMatrix& rho, const ObservableSet& set) {
  const int n = static_cast<int>(set.ops.size());
  if (n < 2) throw DimensionMismatch("theoremN: need at least 2 subsystems");
  check_parties(rho, set.ops.size(), "theoremN");
  const double lhs = qfi(rho, collective_sum(set)).value;
  double rhs = 0.0;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    rhs += variance(reduced_pair(rho, i, j), pairwise_difference(set, i, j));
  }
  rhs *= 0.5;
  return make_report(CriterionId::theoremN, lhs, rhs);
}

CriterionReport ym_bipartite(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  check_parties(rho, 2, "ym_bipartite");
  const ObservableSet set = make_set({a, b});
  const double lhs = qfi(rho, collective_sum(set)).value;
  const DensityMatrix rho_a{partial_trace(rho.matrix, rho.dims, {0}), {rho.dims[0]}};
  const DensityMatrix rho_b{partial_trace(rho.matrix, rho.dims, {1}), {rho.dims[1]}};
  const double rhs = expectation(rho_a, a.matrix * a.matrix)
                   + expectation(rho_b, b.matrix * b.matrix)
                   - 2.0 * std::abs(expectation(rho, kron(a.matrix, b.matrix)));
  return make_report(CriterionId::ym_bipartite, lhs, rhs);
}

CriterionReport ym_tripartite(const DensityMatrix& rho, const Observable& a, const Observable& b,
                              const Observable& c) {
  check_parties(rho, 3, "ym_tripartite");
  const ObservableSet set = make_set({a, b, c});
  const double lhs = qfi(rho, collective_sum(set)).value;

  double second_moments = 0.0;
  for (int i = 0; i < 3; ++i) {
    const DensityMatrix local{partial_trace(rho.matrix, rho.dims, {i}), {rho.dims[i]}};
    second_moments += expectation(local, set.ops[i].matrix * set.ops[i].matrix);
  }
  double eta = 0.0;
  const int pairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
  for (const auto& pr : pairs) {
    const DensityMatrix pair = reduced_pair(rho, pr[0], pr[1]);
    eta += std::abs(expectation(pair, kron(set.ops[pr[0]].matrix, set.ops[pr[1]].matrix)));
  }
  return make_report(CriterionId::ym_tripartite, lhs, second_moments - eta);
}

double ppt_min_eigenvalue(const DensityMatrix& rho, const std::vector<int>& bipartition) {
  if (bipartition.empty())
    throw DimensionMismatch("ppt_min_eigenvalue: empty bipartition");
  Matrix m = rho.matrix;
  for (int s : bipartition) m = partial_transpose(m, rho.dims, s);
  return hermitian_eig(m).eigenvalues.minCoeff();
}

CriterionReport ppt_report(const DensityMatrix& rho, const std::vector<int>& bipartition) {
  return make_report(CriterionId::ppt, -ppt_min_eigenvalue(rho, bipartition), 0.0);
}

}  // namespace qfv
