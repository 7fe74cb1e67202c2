#ifndef QFV_QFI_HPP
#define QFV_QFI_HPP

#include "qfv/observables.hpp"
#include "qfv/states.hpp"

namespace qfv {

struct QfiResult {
  double value = 0.0;
  int rank_used = 0;  // eigenvalues above the cutoff
};

double expectation(const DensityMatrix& rho, const Matrix& op);

/// (Delta O)^2 = <O^2> - <O>^2.
double variance(const DensityMatrix& rho, const Matrix& op);

/// Cov(A x I, I x B) = <A x B> - <A x I><I x B> on a bipartite state.
double covariance(const DensityMatrix& rho, const Observable& a, const Observable& b);

/// Quantum Fisher information from the spectral decomposition of rho:
///   F = sum_{k != l} (l_k - l_l)^2 / (2 (l_k + l_l)) |<k|O|l>|^2
/// over eigenpairs with l_k + l_l > cutoff. Normalization is such that
/// F equals the variance on pure states (no factor 4). Negative
/// eigenvalues within PSD tolerance are clamped to zero.
QfiResult qfi(const DensityMatrix& rho, const Matrix& op, double cutoff = 1e-12);

/// Closed form for a pure state mixed with white noise:
///   F(rho_noisy, O) = p^2 / (p + 2 (1-p) / D) * F(|psi>, O),
/// with F(|psi>, O) computed as the pure-state variance.
double qfi_noisy_closed_form(const NoisyFamily& family, const Matrix& op, double p);

}  // namespace qfv

#endif
