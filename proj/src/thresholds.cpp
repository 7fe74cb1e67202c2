#include "qfv/thresholds.hpp"

#include <cmath>
#include <cstdio>

namespace qfv {

std::function<double(double)> gap_function(const NoisyFamily& family, CriterionId id,
                                           const ObservableSet& set) {
  return [family, id, set](double p) -> double {
    const DensityMatrix rho = white_noise_mix(family, p);
    switch (id) {
      case CriterionId::theorem1:
        return theorem1(rho, set.ops[0], set.ops[1]).gap;
      case CriterionId::theorem2:
        return theorem2(rho, set.ops[0], set.ops[1], set.ops[2]).gap;
      case CriterionId::theoremN:
        return theoremN(rho, set).gap;
      case CriterionId::ym_bipartite:
        return ym_bipartite(rho, set.ops[0], set.ops[1]).gap;
      case CriterionId::ym_tripartite:
        return ym_tripartite(rho, set.ops[0], set.ops[1], set.ops[2]).gap;
      case CriterionId::ppt:
        return -ppt_min_eigenvalue(rho, {0});
    }
    throw UnknownName("gap_function: unhandled criterion");
  };
}

std::vector<SweepRow> sweep(const NoisyFamily& family, const std::vector<CriterionId>& criteria,
                            const ObservableSet& set, const std::vector<double>& grid) {
  std::vector<std::function<double(double)>> gaps;
  gaps.reserve(criteria.size());
  for (CriterionId id : criteria) gaps.push_back(gap_function(family, id, set));

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  double prev = -1.0;
  for (double p : grid) {
    if (p < 0.0 || p > 1.0 || p <= prev)
      throw ParameterOutOfRange("sweep: grid must be strictly increasing within [0,1]");
    prev = p;
    SweepRow row{p, {}};
    for (size_t i = 0; i < criteria.size(); ++i) row.gaps[criteria[i]] = gaps[i](p);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<ThresholdResult> find_threshold(const std::function<double(double)>& gap,
                                              CriterionId id, double tol) {
  constexpr double kStep = 1e-2;
  // Violation means gap above the detection threshold, not merely above
  // zero; eigendecomposition noise sits well below it.
  const auto violated = [&gap](double p) { return gap(p) > kDetectionThreshold; };

  if (violated(0.0))
    throw ParameterOutOfRange("find_threshold: gap already positive at p = 0");

  // First sign-change bracket on the coarse grid.
  double lo = 0.0;
  double hi = 0.0;
  bool found = false;
  for (int i = 1; i <= 100; ++i) {
    hi = std::min(1.0, i * kStep);
    if (violated(hi)) {
      found = true;
      break;
    }
    lo = hi;
  }
  if (!found) return std::nullopt;

  int iterations = 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (violated(mid))
      hi = mid;
    else
      lo = mid;
    ++iterations;
  }
  return ThresholdResult{id, 0.5 * (lo + hi), lo, hi, iterations};
}

std::optional<ThresholdResult> find_threshold(const NoisyFamily& family, CriterionId id,
                                              const ObservableSet& set, double tol) {
  return find_threshold(gap_function(family, id, set), id, tol);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                     const std::vector<CriterionId>& criteria) {
  out << "p";
  for (CriterionId id : criteria) out << "," << to_string(id);
  out << "\n";
  char buf[32];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof(buf), "%.17g", row.p);
    out << buf;
    for (CriterionId id : criteria) {
      std::snprintf(buf, sizeof(buf), "%.17g", row.gaps.at(id));
      out << "," << buf;
    }
    out << "\n";
  }
}

}  // namespace qfv
