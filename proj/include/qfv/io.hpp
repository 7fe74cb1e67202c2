#ifndef QFV_IO_HPP
#define QFV_IO_HPP

#include <iosfwd>
#include <string>

#include "qfv/observables.hpp"
#include "qfv/states.hpp"

namespace qfv {

/// State file: one JSON object with `dims` (integer array) and `matrix`
/// (array of rows, each entry a two-element [re, im] array). Parsing
/// applies the full DensityMatrix invariant check.
DensityMatrix read_state(std::istream& in);
DensityMatrix read_state_file(const std::string& path);
void write_state(std::ostream& out, const DensityMatrix& rho);

/// Observable file: `local_dim` plus the same `matrix` layout.
Observable read_observable(std::istream& in);
Observable read_observable_file(const std::string& path);
void write_observable(std::ostream& out, const Observable& op);

}  // namespace qfv

#endif
