#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qkit/bits.hpp"
#include "qkit/closure.hpp"
#include "qkit/error.hpp"
#include "qkit/order.hpp"

namespace qkit {

using PosetPtr = std::shared_ptr<const FinitePoset>;

inline constexpr int kMaxResolutionPoints = 16;

/// A map from the powerset of a finite state set into a poset, satisfying
/// monotonicity and the join axiom; when `strict` it also separates the empty
/// set from every nonempty one. The full table is stored, indexed by the bit
/// pattern of the subset.
///
/// Derived data (image lattice, closure factor) is computed once at
/// construction; instances are immutable.
class Resolution {
 public:
  /// Throws MonotonicityViolation, JoinAxiomViolation or EmptyKernelViolation.
  static Resolution validate(std::vector<std::string> sigma, PosetPtr target,
                             std::vector<int> table, bool strict);

  /// The first axiom failure, if any, without throwing.
  static std::optional<Error> check_axioms(const std::vector<std::string>& sigma,
                                           const FinitePoset& target,
                                           const std::vector<int>& table, bool strict);

  const std::vector<std::string>& sigma() const { return sigma_; }
  int size() const { return static_cast<int>(sigma_.size()); }
  Bits all() const { return full_set(size()); }
  const FinitePoset& target() const { return *target_; }
  const PosetPtr& target_ptr() const { return target_; }
  const std::vector<int>& table() const { return table_; }
  bool strict() const { return strict_; }

  /// Target element assigned to T.
  int operator()(Bits t) const { return table_[t]; }
  int of_point(int p) const { return table_[bit(p)]; }

  /// Distinct table values as target indices, increasing.
  const std::vector<int>& image() const { return image_; }
  /// The image with the inherited order. Element names are target names.
  const LatticePtr& image_lattice() const { return image_lattice_; }
  /// Position of table(T) within image().
  int image_index(Bits t) const { return image_pos_[static_cast<std::size_t>(table_[t])]; }
  /// Position of a target element within image(), or -1.
  int image_position(int target_element) const {
    return image_pos_[static_cast<std::size_t>(target_element)];
  }

  /// Closure factor C(T) = {t : table({t}) <= table(T)}.
  Bits closure(Bits t) const { return closure_[t]; }
  const ClosureSpace& factor_space() const { return space_; }
  /// The closed set whose table value is the given image element.
  Bits closed_set_of(int image_idx) const { return closed_of_image_[static_cast<std::size_t>(image_idx)]; }

  std::string subset_key(Bits t) const;

  friend bool operator==(const Resolution& a, const Resolution& b) {
    return a.strict_ == b.strict_ && a.sigma_ == b.sigma_ && a.table_ == b.table_ &&
           (a.target_ == b.target_ || *a.target_ == *b.target_);
  }

 private:
  Resolution() = default;

  std::vector<std::string> sigma_;
  PosetPtr target_;
  std::vector<int> table_;
  bool strict_ = true;

  std::vector<int> image_;
  std::vector<int> image_pos_;
  LatticePtr image_lattice_;
  std::vector<Bits> closure_;
  ClosureSpace space_;
  std::vector<Bits> closed_of_image_;
};

using ResolutionPtr = std::shared_ptr<const Resolution>;

Resolution validate_resolution(std::vector<std::string> sigma, PosetPtr target,
                               std::vector<int> table, bool strict);
ResolutionPtr share(Resolution r);

/// Factor pair: a closure space on sigma and an order embedding of its closed
/// sets into the target. theta[i] is the target element of closed_sets()[i].
struct Factorization {
  ClosureSpace space;
  std::vector<int> theta;
};

Factorization factorize(const Resolution& res);

/// table(T) = theta(C(T)). Throws NotAnEmbedding if theta fails to be an
/// order embedding (witness: two closed sets).
Resolution resolution_from_factors(const ClosureSpace& space, const std::vector<int>& theta,
                                   PosetPtr target, bool strict);

/// T -> join T on a complete lattice, with sigma a set of non-bottom elements.
Resolution join_resolution(const LatticePtr& lattice, Bits states, bool strict = true);
/// Every element is the join of the states below it.
bool is_full_set_of_states(const CompleteLattice& lattice, Bits states);
/// A closure space read as its own resolution into its closed-set lattice.
/// Strict iff C(empty) = empty.
Resolution closure_resolution(const ClosureSpace& space);

struct Separation {
  bool t0;
  bool t1;
};

Separation separation(const Resolution& res);

/// Row p holds every q with table({p}) <= table({q}).
std::vector<Bits> preorder(const Resolution& res);

bool is_saturated(const Resolution& res);
bool is_canonical(const Resolution& res);

/// Canonical resolution on sigma' = im minus bottom, with
/// phi(t) = table({t}). phi is -1 for points whose singleton value is the
/// bottom (only possible for non-strict resolutions).
struct Canonicalization {
  Resolution canonical;
  std::vector<int> phi;
};

Canonicalization canonicalize(const Resolution& res);

/// table(T) = canonical(P(phi)(T)) for every T.
bool square_commutes(const Resolution& res, const Canonicalization& c);

/// Bijection between the state sets and isomorphism between the image
/// lattices of two canonical resolutions, with commuting squares.
struct CanonicalRelation {
  std::vector<int> sigma_bijection;
  std::vector<int> image_iso;
};

std::optional<CanonicalRelation> relate_canonical(const Resolution& a, const Resolution& b);

/// Point names p, q, r, ... used by generated instances.
std::vector<std::string> point_names(int n);

}  // namespace qkit
