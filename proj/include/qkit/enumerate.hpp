#pragma once

#include <vector>

#include "qkit/closure.hpp"
#include "qkit/order.hpp"
#include "qkit/resolution.hpp"

namespace qkit {

/// One representative of every isomorphism class of posets on n elements,
/// named e0, e1, ... with e_i <= e_j only when i <= j.
std::vector<FinitePoset> enumerate_posets(int n);

/// The lattices among enumerate_posets(n).
std::vector<LatticePtr> enumerate_lattices(int n);

/// Every resolution with k points (named p, q, r, ...) into the target,
/// strict or not, in lexicographic order of the tables.
std::vector<Resolution> enumerate_resolutions(int k, const PosetPtr& target, bool strict);

/// Every closure space on n points (named x, y, z, w, ...).
std::vector<ClosureSpace> enumerate_spaces(int n);

/// x, y, z, w, then x4, x5, ...
std::vector<std::string> space_point_names(int n);

}  // namespace qkit
