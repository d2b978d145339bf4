#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qkit/bits.hpp"
#include "qkit/order.hpp"
#include "qkit/report.hpp"
#include "qkit/resolution.hpp"

namespace qkit {

/// Which category a morphism is taken in. The same underlying map can live
/// in several of them, so the kind is always explicit.
enum class HomKind {
  ResSharpStrict,  // union-preserving, empty kernel, image-compatible
  ResSharp,        // union-preserving, image-compatible
  ResStarStrict,   // union-preserving, empty kernel, closure-continuous
  ResStar,         // union-preserving, closure-continuous
  ResZeroStrict,   // join-preserving, bottom kernel
  Res,             // join-preserving
};

std::string_view to_string(HomKind kind);
/// Throws Parse on an unknown name.
HomKind hom_kind_from_string(std::string_view name);
bool is_strict(HomKind kind);
/// True for kinds whose morphisms are maps between powersets.
bool is_state_kind(HomKind kind);

/// Union-preserving map P(sigma1) -> P(sigma2), stored by the images of the
/// singletons. f(empty) = empty holds structurally.
class PossibleTransition {
 public:
  PossibleTransition(ResolutionPtr source, ResolutionPtr target, std::vector<Bits> images);

  static PossibleTransition identity(const ResolutionPtr& object);
  static PossibleTransition bottom(const ResolutionPtr& source, const ResolutionPtr& target);

  Bits operator()(Bits t) const;
  Bits image_of_point(int p) const { return images_[static_cast<std::size_t>(p)]; }
  const std::vector<Bits>& images() const { return images_; }
  const Resolution& source() const { return *source_; }
  const Resolution& target() const { return *target_; }
  const ResolutionPtr& source_ptr() const { return source_; }
  const ResolutionPtr& target_ptr() const { return target_; }
  bool is_bottom() const;

  friend bool operator==(const PossibleTransition& a, const PossibleTransition& b);

 private:
  ResolutionPtr source_;
  ResolutionPtr target_;
  std::vector<Bits> images_;
};

bool same_object(const ResolutionPtr& a, const ResolutionPtr& b);

Bits apply(const PossibleTransition& f, Bits t);

struct Conditions {
  bool a_empty;
  bool a_sharp;
  bool a_star;
};

/// Exhaustive side-condition check. Throws LemmaViolation if the
/// image-compatibility and closure-continuity verdicts disagree.
Conditions check_conditions(const PossibleTransition& f);

bool satisfies_a_empty(const PossibleTransition& f);
/// A pair T, T' with equal source values but different target values of
/// their images.
std::optional<std::pair<Bits, Bits>> a_sharp_failure(const PossibleTransition& f);
/// A subset T with f(C1(T)) not inside C2(f(T)).
std::optional<Bits> a_star_failure(const PossibleTransition& f);

/// second after first. Throws NotComposable.
PossibleTransition compose(const PossibleTransition& second, const PossibleTransition& first);
/// Pointwise union; the empty family is the bottom morphism.
PossibleTransition join_transitions(const std::vector<PossibleTransition>& family,
                                    const ResolutionPtr& source, const ResolutionPtr& target);
bool transition_le(const PossibleTransition& a, const PossibleTransition& b);

/// Membership in the hom-set of the given kind. In strict kinds the bottom
/// morphism is admitted even though it has a nonempty kernel.
bool admits(const PossibleTransition& f, HomKind kind);

/// Join-preserving map between the image lattices of two resolutions.
class PropertyTransition {
 public:
  PropertyTransition(ResolutionPtr source, ResolutionPtr target, LatticeMap map);
  PropertyTransition(ResolutionPtr source, ResolutionPtr target, std::vector<int> values);

  static PropertyTransition identity(const ResolutionPtr& object);
  static PropertyTransition bottom(const ResolutionPtr& source, const ResolutionPtr& target);

  int operator()(int a) const { return map_(a); }
  const LatticeMap& map() const { return map_; }
  const Resolution& source() const { return *source_; }
  const Resolution& target() const { return *target_; }
  const ResolutionPtr& source_ptr() const { return source_; }
  const ResolutionPtr& target_ptr() const { return target_; }
  bool is_bottom() const;

  friend bool operator==(const PropertyTransition& a, const PropertyTransition& b) {
    return a.map_.values() == b.map_.values() && same_object(a.source_, b.source_) &&
           same_object(a.target_, b.target_);
  }

 private:
  ResolutionPtr source_;
  ResolutionPtr target_;
  LatticeMap map_;
};

struct PropertyConditions {
  bool a_vee;
  bool a_zero;
};

PropertyConditions check_property_transition(const PropertyTransition& g);

PropertyTransition compose(const PropertyTransition& second, const PropertyTransition& first);
PropertyTransition join_properties(const std::vector<PropertyTransition>& family,
                                   const ResolutionPtr& source, const ResolutionPtr& target);
bool property_le(const PropertyTransition& a, const PropertyTransition& b);
bool admits(const PropertyTransition& g, HomKind kind);

/// {"p": ["a", "b"], ...}: singleton images by point name.
nlohmann::json describe(const PossibleTransition& f);
/// {"l1": "l2", ...}: values by image-element name.
nlohmann::json describe(const PropertyTransition& g);

/// The state-level and property-level kinds of a regime.
HomKind state_kind(bool strict);
HomKind property_kind(bool strict);

/// Bound on hom-set enumeration: at most `max_points` states on each side.
/// The QKIT_CAP environment variable overrides the default.
struct EnumerationCaps {
  int max_points = 3;

  static EnumerationCaps from_env();
};

template <class Morphism>
struct HomSet {
  HomKind kind;
  ResolutionPtr source;
  ResolutionPtr target;
  std::vector<Morphism> morphisms;

  bool contains(const Morphism& m) const {
    for (const auto& x : morphisms) {
      if (x == m) return true;
    }
    return false;
  }
  std::size_t size() const { return morphisms.size(); }
};

/// All state-level morphisms of the kind (bottom included), ordered by the
/// bit pattern of the singleton images. Throws SizeCapExceeded.
HomSet<PossibleTransition> enumerate_transitions(const ResolutionPtr& source,
                                                 const ResolutionPtr& target, HomKind kind,
                                                 EnumerationCaps caps = {});
/// All property-level morphisms of the kind (constant bottom included).
HomSet<PropertyTransition> enumerate_property_transitions(const ResolutionPtr& source,
                                                          const ResolutionPtr& target,
                                                          HomKind kind, EnumerationCaps caps = {});

struct Object {
  std::string name;
  ResolutionPtr res;
};

struct LawOptions {
  EnumerationCaps caps{};
  /// Cases per law and object tuple before switching to seeded sampling.
  std::size_t max_cases = 200000;
  std::uint64_t seed = 0x5eed;
};

/// Category and quantaloid laws over all hom-sets between the given objects:
/// identities, closure under composition, associativity, hom-set
/// join-completeness with bottom, two-sided distributivity over binary and
/// empty joins.
Report verify_quantaloid_laws(const std::vector<Object>& objects, HomKind kind,
                              const LawOptions& options = {});

}  // namespace qkit
