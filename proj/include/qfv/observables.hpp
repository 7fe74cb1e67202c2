#ifndef QFV_OBSERVABLES_HPP
#define QFV_OBSERVABLES_HPP

#include <string>
#include <vector>

#include "qfv/linalg.hpp"

namespace qfv {

/// Hermitian operator on one subsystem. No tracelessness or normalization
/// is assumed.
struct Observable {
  Matrix matrix;
  int local_dim;
};

Observable make_observable(Matrix m);

/// One local observable per subsystem.
struct ObservableSet {
  std::vector<Observable> ops;
  Dims dims;
};

ObservableSet make_set(std::vector<Observable> ops);

/// Sum_i I x ... x A_i x ... x I on the joint space.
Matrix collective_sum(const ObservableSet& set);

/// A_i x I - I x A_j on the pair space (dims[i], dims[j]); reduced-state
/// variances are evaluated against this, not a full-space embedding.
Matrix pairwise_difference(const ObservableSet& set, int i, int j);

/// "x", "y", "z" or "i" on a qubit.
Observable pauli(const std::string& name);

/// sum_k signs[k] |kets[k]><kets[k]| on the given local dimension.
Observable projector(int dim, const std::vector<int>& kets, const std::vector<double>& signs);

}  // namespace qfv

#endif
