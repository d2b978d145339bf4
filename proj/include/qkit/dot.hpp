#pragma once

#include <string>
#include <string_view>

#include "qkit/closure.hpp"
#include "qkit/order.hpp"
#include "qkit/resolution.hpp"
#include "qkit/transitions.hpp"

namespace qkit {

/// Hasse diagram: one node per element, one edge per covering pair.
std::string hasse_dot(const FinitePoset& poset, std::string_view graph_name = "poset");

/// Hasse diagram of the closed sets under inclusion.
std::string space_dot(const ClosureSpace& space);

/// Hasse diagram of the target with image elements filled and each element
/// labeled by the points whose singleton lands there.
std::string resolution_dot(const Resolution& res);

/// Points of both state sets with an edge p -> q for each q in f({p}).
std::string transition_dot(const PossibleTransition& f);

/// The square P(sigma1) -> P(sigma2) over the two image lattices, with the
/// four maps as edge labels.
std::string square_dot(const PossibleTransition& f, const PropertyTransition& induced);

}  // namespace qkit
