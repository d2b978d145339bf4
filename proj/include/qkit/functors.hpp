#pragma once

#include <vector>

#include "qkit/closure.hpp"
#include "qkit/order.hpp"
#include "qkit/report.hpp"
#include "qkit/resolution.hpp"
#include "qkit/transitions.hpp"

namespace qkit {

/// The property transition induced by f: table1(T) -> table2(f(T)).
/// Throws ASharpFails with the offending pair when f is not
/// image-compatible.
PropertyTransition f_pr(const PossibleTransition& f);

/// t -> the closed set of the target whose value is g(table1({t})).
PossibleTransition lift_g_star(const PropertyTransition& g);

/// Join of every morphism of the state hom-set whose induced property
/// transition is below g, computed by enumeration. Throws SizeCapExceeded.
PossibleTransition galois_F_pr_star(const PropertyTransition& g, bool strict,
                                    EnumerationCaps caps = {});

struct SuiteOptions {
  bool strict = true;
  EnumerationCaps caps{};
  /// Cases per check and object tuple before sampling kicks in.
  std::size_t max_cases = 100000;
  std::uint64_t seed = 0xf00d;
};

/// Well-definedness and commuting squares of f_pr, join preservation,
/// identities, composition, joins of morphisms and fullness via the lift.
Report functor_F_pr_check(const std::vector<Object>& objects, const SuiteOptions& options = {});

/// The non-strict regime of the same suite.
Report functor_F_R_check(const std::vector<Object>& objects, SuiteOptions options = {});

/// The dual on hom-sets: lift versus brute-force sup, section identity,
/// composition, adjunction, and searches for a non-identity image of an
/// identity and for a join gap.
Report galois_dual_check(const std::vector<Object>& objects, const SuiteOptions& options = {});

/// Image lattice of a resolution.
const LatticePtr& functor_U(const Resolution& res);
/// Full-state join resolution on L minus bottom.
Resolution U_star(const LatticePtr& lattice);

/// Fullness and faithfulness of U on the hom-sets between the objects,
/// U(U*(L)) = L on the lattices, and U*(U(res)) related to the
/// canonicalization of every object.
Report functor_U_check(const std::vector<Object>& objects, const std::vector<LatticePtr>& lattices,
                       const SuiteOptions& options = {});

/// Closure factor of a resolution.
const ClosureSpace& functor_V(const Resolution& res);

/// The same map read as a closure-continuous morphism. Throws ASharpFails
/// when f is not image-compatible and LemmaViolation if it is but fails
/// continuity.
PossibleTransition res_sharp_to_star(const PossibleTransition& f);

/// V on objects and hom-sets, surjectivity through spaces read as their own
/// resolutions, and agreement of the image-compatible and continuous
/// hom-sets.
Report functor_V_check(const std::vector<Object>& objects, const std::vector<ClosureSpace>& spaces,
                       const SuiteOptions& options = {});

/// F -> C2(f(F)) between the closed-set lattices of the factor spaces.
/// Throws NotAClosMorphism when f is not closure-continuous.
LatticeMap functor_W(const PossibleTransition& f);

/// Identities, composition, joins and fullness of W on continuous maps
/// between spaces read as their own resolutions.
Report functor_W_check(const std::vector<ClosureSpace>& spaces, const SuiteOptions& options = {});

/// Partial map between closure spaces. image[x] is a point of the target,
/// or -1 when x lies in the kernel.
struct SpaceMorphism {
  ClosureSpace source;
  ClosureSpace target;
  std::vector<int> image;

  Bits kernel() const;
};

/// second after first; the kernel of the composite is K1 plus the preimage
/// of K2.
SpaceMorphism compose(const SpaceMorphism& second, const SpaceMorphism& first);

/// T -> {f(x) : x in T minus K} as a transition between the spaces read as
/// resolutions. Throws NotContinuous with the failing subset.
PossibleTransition ext_functor(const SpaceMorphism& f);

/// Continuity of every partial map between the spaces, identities and
/// composition of Ext, and a search for a join of two Ext images that leaves
/// the singleton-or-empty shape.
Report ext_check(const std::vector<ClosureSpace>& spaces, const SuiteOptions& options = {});

}  // namespace qkit
