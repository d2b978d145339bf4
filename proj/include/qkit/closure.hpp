#pragma once

#include <string>
#include <vector>

#include "qkit/bits.hpp"
#include "qkit/order.hpp"

namespace qkit {

/// Finite closure space stored as its intersection system: the family of
/// closed subsets, which contains the universe and is closed under
/// intersection. The closure operator is derived from the family.
class ClosureSpace {
 public:
  ClosureSpace() = default;

  /// Throws InvalidSpace when the universe is missing from the family or the
  /// family is not intersection-closed.
  static ClosureSpace from_family(std::vector<std::string> universe, std::vector<Bits> closed);

  const std::vector<std::string>& universe() const { return universe_; }
  int size() const { return static_cast<int>(universe_.size()); }
  /// Closed sets in increasing numeric order of their bit patterns.
  const std::vector<Bits>& closed_sets() const { return closed_; }
  bool is_closed(Bits s) const;

  /// Smallest closed superset: the intersection of all closed supersets.
  Bits closure_of(Bits s) const;

  /// C(T) for every T, indexed by the subset's bit pattern. Universe <= 16.
  std::vector<Bits> closure_table() const;

  /// C(empty) = empty.
  bool is_empty_strict() const { return closure_of(0) == 0; }
  bool is_T0() const;
  bool is_T1() const;

  /// Index of a closed set within closed_sets(), or -1.
  int closed_index(Bits s) const;

  friend bool operator==(const ClosureSpace& a, const ClosureSpace& b) {
    return a.universe_ == b.universe_ && a.closed_ == b.closed_;
  }

 private:
  std::vector<std::string> universe_;
  std::vector<Bits> closed_;
};

inline constexpr int kMaxTableUniverse = 16;

/// Checks extensivity, monotonicity and idempotence of a full operator table
/// and returns the space of its fixed points. Throws C1/C2/C3Violation.
ClosureSpace validate_closure_table(std::vector<std::string> universe,
                                    const std::vector<Bits>& table);

/// Closed sets ordered by inclusion; meet is intersection, join is the closure
/// of the union. Element i is closed_sets()[i], named like "[x,y]".
CompleteLattice closed_set_lattice(const ClosureSpace& space);

/// "[x,y]" rendering of a subset, in universe order.
std::string set_label(const std::vector<std::string>& universe, Bits s);

}  // namespace qkit
