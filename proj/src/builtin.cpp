#include "qfv/builtin.hpp"

#include <cmath>

namespace qfv::builtin {

double example1_p() { return (2.0 - std::sqrt(2.0)) / 4.0; }
double example1_q() { return (std::sqrt(2.0) - 1.0) / 2.0; }

ObservableSet example1_observables() {
  const Observable a = projector(4, {0, 1, 2, 3}, {1, 1, -1, -1});
  return make_set({a, a});
}

ObservableSet example2_observables() {
  const Observable z = pauli("z");
  return make_set({z, z});
}

ObservableSet example3_observables() {
  const Observable ab = projector(2, {1}, {-1});
  const Observable c = projector(2, {0}, {1});
  return make_set({ab, ab, c});
}

ObservableSet example3_pauli_observables() {
  const Observable z = pauli("z");
  return make_set({z, z, z});
}

}  // namespace qfv::builtin
