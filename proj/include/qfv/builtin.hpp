#ifndef QFV_BUILTIN_HPP
#define QFV_BUILTIN_HPP

#include "qfv/observables.hpp"
#include "qfv/states.hpp"

namespace qfv::builtin {

/// Parameters making example 1 a metrologically useful PPT bound
/// entangled state: p = (2 - sqrt(2))/4, q = (sqrt(2) - 1)/2.
double example1_p();
double example1_q();

/// A = B = |0><0| + |1><1| - |2><2| - |3><3|.
ObservableSet example1_observables();

/// A = B = sigma_z.
ObservableSet example2_observables();

/// A = B = -|1><1|, C = |0><0|.
ObservableSet example3_observables();

/// A = B = C = sigma_z (the baseline comparison set).
ObservableSet example3_pauli_observables();

}  // namespace qfv::builtin

#endif
