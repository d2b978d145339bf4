#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qkit/order.hpp"
#include "qkit/report.hpp"
#include "qkit/resolution.hpp"
#include "qkit/transitions.hpp"

namespace qkit {

/// Complete lattice with an orthocomplementation.
struct Ortholattice {
  LatticePtr lattice;
  std::vector<int> ortho;
  bool orthomodular = false;
  /// {"a": ..., "b": ...} with a <= b and b != a v (b ^ a'); null when
  /// orthomodular.
  nlohmann::json orthomodular_witness;

  int complement(int a) const { return ortho[static_cast<std::size_t>(a)]; }
};

/// Checks involution, order reversal, a v a' = 1 and a ^ a' = 0, then flags
/// orthomodularity. Throws OrthoLawViolation naming the law.
Ortholattice validate_ortholattice(LatticePtr lattice, std::vector<int> ortho);

/// p -> a ^ (a' v p).
LatticeMap sasaki_projection(const Ortholattice& ol, int a);

/// Atoms as states under the full-state join resolution. Throws
/// NotAtomistic.
ResolutionPtr atom_states(const Ortholattice& ol);

struct MeasurementTransition {
  Ortholattice lattice;
  int tested = 0;
  ResolutionPtr states;
  PossibleTransition transition;
};

/// Atom p -> {a ^ (a' v p), a' ^ (a v p)} minus bottom. Throws
/// NotOrthomodular, NotAtomistic, or ValueOutsideImage when an outcome is
/// not an atom.
MeasurementTransition measurement_transition(const Ortholattice& ol, int a);

/// Atom p -> the atoms below g(p), on the atom states of the lattice.
PossibleTransition atomically_generated(const LatticeMap& g, const ResolutionPtr& states);
PossibleTransition atomically_generated(const LatticeMap& g, const Ortholattice& ol);

/// Image-compatibility and empty kernel of the measurement, its equality
/// with the union of the two projection-generated maps, Sasaki idempotence
/// and join preservation, and searches for a single generating lattice map
/// and for indeterminism.
Report check_measurement_claims(const Ortholattice& ol, int a);

/// "2", "B2", "B3", "MO1", "MO2", "MO3", "O6". Throws UnknownElement.
Ortholattice builtin_ortholattice(std::string_view name);
/// The ortholattices above plus the plain lattices "M2", "N5", "chain3",
/// "chain4".
LatticePtr builtin_lattice(std::string_view name);
std::vector<std::string> builtin_ortholattice_names();
std::vector<std::string> builtin_lattice_names();

}  // namespace qkit
