#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qkit/closure.hpp"
#include "qkit/order.hpp"
#include "qkit/quantum.hpp"
#include "qkit/resolution.hpp"
#include "qkit/transitions.hpp"

namespace qkit {

/// JSON readers throw Parse (malformed document) or UnknownElement (a name
/// that does not resolve), besides the validation errors of the structure.

/// Reads a whole file. Throws Parse.
nlohmann::json read_json_file(const std::string& path);

/// {"elements": [...], "le": [["a", "b"], ...]}
FinitePoset poset_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FinitePoset& poset);

/// A poset document or the name of a built-in lattice.
LatticePtr lattice_from_json(const nlohmann::json& j);

/// {"universe": [...], "closed": [[...], ...]}
ClosureSpace space_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ClosureSpace& space);

/// Table form {"sigma", "lattice", "strict", "table": {"": .., "p,q": ..}}
/// or factored form {"space", "theta": {"[]": .., "[x]": ..}, "lattice"}.
/// `strict` overrides the document when given.
Resolution resolution_from_json(const nlohmann::json& j, std::optional<bool> strict = std::nullopt);
nlohmann::json to_json(const Resolution& res);

/// Reads "kind" when present, else `fallback`.
HomKind kind_from_json(const nlohmann::json& j, HomKind fallback);

/// {"kind": .., "map": {"p": ["a"], ...}}. Every source point must be listed.
PossibleTransition transition_from_json(const nlohmann::json& j, const ResolutionPtr& source,
                                        const ResolutionPtr& target);
nlohmann::json to_json(const PossibleTransition& f, HomKind kind);

/// {"kind": .., "map": {"l1": "l2", ...}} over image-element names.
PropertyTransition property_from_json(const nlohmann::json& j, const ResolutionPtr& source,
                                      const ResolutionPtr& target);
nlohmann::json to_json(const PropertyTransition& g, HomKind kind);

/// {"map": {..}} between given lattices, or self-contained with "domain"
/// and "codomain".
LatticeMap lattice_map_from_json(const nlohmann::json& j, LatticePtr domain = nullptr,
                                 LatticePtr codomain = nullptr);
nlohmann::json to_json(const LatticeMap& m);

/// Poset document plus {"ortho": {"a": "a'", ...}}; pairs are completed
/// symmetrically. A string names a built-in ortholattice.
Ortholattice ortholattice_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Ortholattice& ol);

}  // namespace qkit
