#ifndef QFV_THRESHOLDS_HPP
#define QFV_THRESHOLDS_HPP

#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include "qfv/criteria.hpp"

namespace qfv {

/// Criterion gaps evaluated at one noise parameter.
struct SweepRow {
  double p;
  std::map<CriterionId, double> gaps;
};

struct ThresholdResult {
  CriterionId criterion_id;
  double p_critical;
  double bracket_lo;
  double bracket_hi;
  int iterations;
};

/// Gap of one criterion on white_noise_mix(family, p), using the full
/// numeric pipeline. For ppt the gap is -(min eigenvalue of the partial
/// transpose over subsystem 0).
std::function<double(double)> gap_function(const NoisyFamily& family, CriterionId id,
                                           const ObservableSet& set);

std::vector<SweepRow> sweep(const NoisyFamily& family, const std::vector<CriterionId>& criteria,
                            const ObservableSet& set, const std::vector<double>& grid);

/// Coarse scan at step 1e-2 for the first sign change, then bisection to
/// bracket width <= tol. Gap-vs-p is not assumed monotone beyond the
/// first bracket. Returns nullopt when no violation occurs on [0,1].
std::optional<ThresholdResult> find_threshold(const NoisyFamily& family, CriterionId id,
                                              const ObservableSet& set, double tol = 1e-6);

std::optional<ThresholdResult> find_threshold(const std::function<double(double)>& gap,
                                              CriterionId id, double tol = 1e-6);

/// Header `p,<id_1>,...`; 17 significant digits; LF line endings.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                     const std::vector<CriterionId>& criteria);

}  // namespace qfv

#endif
