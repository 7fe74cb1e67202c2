#ifndef QFV_CRITERIA_HPP
#define QFV_CRITERIA_HPP

#include <string>

#include "qfv/qfi.hpp"

namespace qfv {

enum class CriterionId {
  theorem1,
  theorem2,
  theoremN,
  ym_bipartite,
  ym_tripartite,
  ppt,
};

std::string to_string(CriterionId id);

constexpr double kDetectionThreshold = 1e-9;

/// LHS - RHS of one criterion inequality. A positive gap certifies
/// entanglement; the verdict vocabulary is {entangled, inconclusive},
/// never "separable".
struct CriterionReport {
  CriterionId criterion_id;
  double lhs;
  double rhs;
  double gap;
  bool entangled_detected;
};

CriterionReport make_report(CriterionId id, double lhs, double rhs);

/// F(rho, A x I + I x B) <= Var(A x I - I x B) for separable bipartite rho.
CriterionReport theorem1(const DensityMatrix& rho, const Observable& a, const Observable& b);

/// F(rho, A+B+C) <= (1/2)[Var(A-B)_AB + Var(A-C)_AC + Var(B-C)_BC]
/// with variances on reduced pair states.
CriterionReport theorem2(const DensityMatrix& rho, const Observable& a, const Observable& b,
                         const Observable& c);

/// N-partite cyclic form: F(rho, sum A_i) <= (1/2) sum_i Var(A_i - A_{i+1})
/// on reduced neighbor pairs, indices mod N. Reduces to theorem1 at N=2
/// and theorem2 at N=3.
CriterionReport theoremN(const DensityMatrix& rho, const ObservableSet& set);

/// Baseline: F <= <A^2>_A + <B^2>_B - 2|<A x B>|. The first term is the
/// second moment, matching the criterion's own worked evaluation.
CriterionReport ym_bipartite(const DensityMatrix& rho, const Observable& a, const Observable& b);

/// Baseline: F <= sum <A_i^2> - (|<AB>_AB| + |<BC>_BC| + |<AC>_AC|).
CriterionReport ym_tripartite(const DensityMatrix& rho, const Observable& a, const Observable& b,
                              const Observable& c);

/// Minimum eigenvalue of the partial transpose over the listed subsystems.
/// Negative => entangled (NPT).
double ppt_min_eigenvalue(const DensityMatrix& rho, const std::vector<int>& bipartition);

/// PPT wrapped as a report: lhs = -min eigenvalue, rhs = 0.
CriterionReport ppt_report(const DensityMatrix& rho, const std::vector<int>& bipartition);

}  // namespace qfv

#endif
