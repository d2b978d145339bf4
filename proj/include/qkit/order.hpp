#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qkit/bits.hpp"

namespace qkit {

/// Finite partially ordered set over named elements. The element order given
/// at construction is canonical and drives every enumeration.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Builds the reflexive-transitive closure of `le_pairs`. Throws Cycle when
  /// two distinct elements end up mutually below each other.
  static FinitePoset from_pairs(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& le_pairs);

  /// Same as from_pairs but with index pairs.
  static FinitePoset from_index_pairs(std::vector<std::string> elements,
                                      const std::vector<std::pair<int, int>>& le_pairs);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name(int i) const { return elements_.at(static_cast<std::size_t>(i)); }

  /// Throws UnknownElement.
  int index(std::string_view name) const;
  std::optional<int> find(std::string_view name) const;

  bool le(int a, int b) const { return has(up_[static_cast<std::size_t>(a)], b); }
  bool lt(int a, int b) const { return a != b && le(a, b); }
  Bits up_set(int a) const { return up_[static_cast<std::size_t>(a)]; }
  Bits down_set(int a) const { return down_[static_cast<std::size_t>(a)]; }

  Bits upper_bounds(Bits subset) const;
  Bits lower_bounds(Bits subset) const;

  /// The element of `candidates` below every other one, if any.
  std::optional<int> least_of(Bits candidates) const;
  std::optional<int> greatest_of(Bits candidates) const;

  /// Hasse edges (a, b) with a covered by b, in canonical order.
  std::vector<std::pair<int, int>> covers() const;

  /// Sub-poset on the listed elements, in the listed order.
  FinitePoset restrict_to(const std::vector<int>& indices) const;

  /// All order pairs (a, b) with a < b, by name.
  std::vector<std::pair<std::string, std::string>> strict_pairs() const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.elements_ == b.elements_ && a.up_ == b.up_;
  }

 private:
  FinitePoset(std::vector<std::string> elements, std::vector<Bits> up);

  std::vector<std::string> elements_;
  std::unordered_map<std::string, int> index_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
};

/// Convenience wrapper over FinitePoset::from_pairs.
FinitePoset validate_poset(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& le_pairs);

/// A finite poset in which every subset has a least upper bound and a
/// greatest lower bound, with the binary tables materialized.
class CompleteLattice {
 public:
  CompleteLattice() = default;

  /// Throws NotALattice with a witness subset. Exhaustive over all subsets for
  /// posets of at most 12 elements; pairwise plus bottom and top otherwise.
  static CompleteLattice from_poset(FinitePoset poset);

  const FinitePoset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  const std::string& name(int i) const { return poset_.name(i); }
  int index(std::string_view name) const { return poset_.index(name); }
  bool le(int a, int b) const { return poset_.le(a, b); }

  int join(int a, int b) const { return join_[cell(a, b)]; }
  int meet(int a, int b) const { return meet_[cell(a, b)]; }
  int join(Bits subset) const;
  int meet(Bits subset) const;
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  /// Elements covering bottom.
  Bits atoms() const;
  Bits atoms_below(int a) const { return atoms() & poset_.down_set(a); }
  /// Every element is the join of the atoms below it.
  bool is_atomistic() const;

  friend bool operator==(const CompleteLattice& a, const CompleteLattice& b) {
    return a.poset_ == b.poset_;
  }

 private:
  std::size_t cell(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size()) +
           static_cast<std::size_t>(b);
  }

  FinitePoset poset_;
  std::vector<int> join_;
  std::vector<int> meet_;
  int bottom_ = 0;
  int top_ = 0;
};

using LatticePtr = std::shared_ptr<const CompleteLattice>;

CompleteLattice as_complete_lattice(FinitePoset poset);
LatticePtr make_lattice(FinitePoset poset);

/// Total map between two complete lattices, stored by element index.
class LatticeMap {
 public:
  LatticeMap(LatticePtr domain, LatticePtr codomain, std::vector<int> values);

  static LatticeMap identity(LatticePtr lattice);
  static LatticeMap constant(LatticePtr domain, LatticePtr codomain, int value);

  int operator()(int a) const { return values_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& values() const { return values_; }
  const CompleteLattice& domain() const { return *domain_; }
  const CompleteLattice& codomain() const { return *codomain_; }
  const LatticePtr& domain_ptr() const { return domain_; }
  const LatticePtr& codomain_ptr() const { return codomain_; }

  bool is_monotone() const;
  /// g(bottom) = bottom and g(a v b) = g(a) v g(b); on finite lattices this is
  /// preservation of all joins.
  bool preserves_joins() const;
  bool preserves_meets() const;
  /// First subset (empty or a pair) on which preservation fails.
  struct Failure {
    std::vector<int> subset;
    int image_of_bound;
    int bound_of_images;
  };
  std::optional<Failure> join_failure() const;
  std::optional<Failure> meet_failure() const;

  friend bool operator==(const LatticeMap& a, const LatticeMap& b);

 private:
  LatticePtr domain_;
  LatticePtr codomain_;
  std::vector<int> values_;
};

bool same_lattice(const LatticePtr& a, const LatticePtr& b);

/// second after first.
LatticeMap compose(const LatticeMap& second, const LatticeMap& first);
/// Pointwise join; the empty family gives the constant-bottom map.
LatticeMap pointwise_join(const std::vector<LatticeMap>& maps, const LatticePtr& domain,
                          const LatticePtr& codomain);
bool pointwise_le(const LatticeMap& a, const LatticeMap& b);

/// b -> join{a : g(a) <= b}. Throws NotJoinPreserving.
LatticeMap right_adjoint(const LatticeMap& g);
/// a -> meet{b : a <= h(b)}. Throws NotMeetPreserving.
LatticeMap left_adjoint(const LatticeMap& h);

inline constexpr int kDefaultIsoCap = 10;

/// Order isomorphism from `a` onto `b` as an index table, or nullopt. Throws
/// SizeCapExceeded when either side is larger than `cap`.
std::optional<std::vector<int>> find_lattice_isomorphism(const FinitePoset& a,
                                                         const FinitePoset& b,
                                                         int cap = kDefaultIsoCap);

/// Every join-preserving map from `domain` to `codomain`, in lexicographic
/// order of the value tables.
std::vector<LatticeMap> enumerate_join_preserving(const LatticePtr& domain,
                                                  const LatticePtr& codomain);

}  // namespace qkit
