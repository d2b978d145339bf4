#include "qkit/io.hpp"

#include <fstream>
#include <sstream>

namespace qkit {

namespace {

using json = nlohmann::json;

/// Runs a reader, turning library-level JSON exceptions into Parse errors.
template <class F>
auto parsing(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed ") + what + ": " + e.what());
  }
}

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::Parse, std::string(what) + " is missing \"" + key + "\"");
  }
  return j.at(key);
}

int point_index(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  throw Error(ErrorKind::UnknownElement, "unknown point '" + name + "'");
}

Bits names_to_set(const std::vector<std::string>& names, const json& list) {
  Bits s = 0;
  for (const auto& x : list) s |= bit(point_index(names, x.get<std::string>()));
  return s;
}

json set_to_names(const std::vector<std::string>& names, Bits s) {
  json out = json::array();
  for (int i : members(s)) out.push_back(names[static_cast<std::size_t>(i)]);
  return out;
}

/// "p,q" (or "[p,q]" when bracketed) into a subset. Any order is accepted.
Bits key_to_set(const std::vector<std::string>& names, std::string key, bool bracketed) {
  if (bracketed) {
    if (key.size() < 2 || key.front() != '[' || key.back() != ']') {
      throw Error(ErrorKind::Parse, "closed-set key must look like [x,y]: " + key);
    }
    key = key.substr(1, key.size() - 2);
  }
  Bits s = 0;
  if (key.empty()) return s;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const int i = point_index(names, part);
    if (has(s, i)) throw Error(ErrorKind::Parse, "point listed twice in key '" + key + "'");
    s |= bit(i);
  }
  return s;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(what) + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(x.get<std::string>());
  return out;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, "'" + path + "' is not valid JSON: " + e.what());
  }
}

FinitePoset poset_from_json(const json& j) {
  return parsing("poset", [&] {
    auto elements = string_list(field(j, "elements", "poset"), "elements");
    std::vector<std::pair<std::string, std::string>> le;
    if (j.contains("le")) {
      for (const auto& p : j.at("le")) {
        if (!p.is_array() || p.size() != 2) throw Error(ErrorKind::Parse, "order pairs must have two names");
        le.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
      }
    }
    return FinitePoset::from_pairs(std::move(elements), le);
  });
}

json to_json(const FinitePoset& poset) {
  json le = json::array();
  for (const auto& [a, b] : poset.covers()) le.push_back({poset.name(a), poset.name(b)});
  return json{{"elements", poset.elements()}, {"le", le}};
}

LatticePtr lattice_from_json(const json& j) {
  if (j.is_string()) return builtin_lattice(j.get<std::string>());
  return make_lattice(poset_from_json(j));
}

ClosureSpace space_from_json(const json& j) {
  return parsing("space", [&] {
    auto universe = string_list(field(j, "universe", "space"), "universe");
    std::vector<Bits> closed;
    for (const auto& c : field(j, "closed", "space")) closed.push_back(names_to_set(universe, c));
    return ClosureSpace::from_family(std::move(universe), std::move(closed));
  });
}

json to_json(const ClosureSpace& space) {
  json closed = json::array();
  for (Bits c : space.closed_sets()) closed.push_back(set_to_names(space.universe(), c));
  return json{{"universe", space.universe()}, {"closed", closed}};
}

Resolution resolution_from_json(const json& j, std::optional<bool> strict) {
  return parsing("resolution", [&] {
    const auto& lat = field(j, "lattice", "resolution");
    auto target = std::make_shared<const FinitePoset>(lat.is_string() ? builtin_lattice(lat.get<std::string>())->poset()
                                                                      : poset_from_json(lat));
    if (j.contains("space")) {
      auto space = space_from_json(j.at("space"));
      const auto& theta_j = field(j, "theta", "resolution");
      std::vector<int> theta(space.closed_sets().size(), -1);
      for (const auto& [key, value] : theta_j.items()) {
        const int idx = space.closed_index(key_to_set(space.universe(), key, true));
        if (idx < 0) throw Error(ErrorKind::UnknownElement, "theta key " + key + " is not a closed set");
        theta[static_cast<std::size_t>(idx)] = target->index(value.get<std::string>());
      }
      for (std::size_t i = 0; i < theta.size(); ++i) {
        if (theta[i] < 0) {
          throw Error(ErrorKind::Parse, "theta misses closed set " + set_label(space.universe(), space.closed_sets()[i]));
        }
      }
      const bool s = strict.value_or(j.value("strict", space.is_empty_strict()));
      return resolution_from_factors(space, theta, target, s);
    }
    auto sigma = string_list(field(j, "sigma", "resolution"), "sigma");
    if (static_cast<int>(sigma.size()) > kMaxResolutionPoints) {
      throw Error(ErrorKind::SizeCapExceeded, "resolutions are limited to 16 points");
    }
    const std::size_t cells = std::size_t{1} << sigma.size();
    std::vector<int> table(cells, -1);
    for (const auto& [key, value] : field(j, "table", "resolution").items()) {
      const Bits t = key_to_set(sigma, key, false);
      if (table[t] >= 0) throw Error(ErrorKind::Parse, "table lists subset '" + key + "' twice");
      table[t] = target->index(value.get<std::string>());
    }
    for (std::size_t t = 0; t < cells; ++t) {
      if (table[t] < 0) {
        std::string key;
        for (int i : members(t)) key += (key.empty() ? "" : ",") + sigma[static_cast<std::size_t>(i)];
        throw Error(ErrorKind::Parse, "table misses subset '" + key + "'");
      }
    }
    const bool s = strict.value_or(j.value("strict", true));
    return Resolution::validate(std::move(sigma), std::move(target), std::move(table), s);
  });
}

json to_json(const Resolution& res) {
  json table = json::object();
  for (Bits t = 0; t <= res.all(); ++t) table[res.subset_key(t)] = res.target().name(res(t));
  return json{{"sigma", res.sigma()}, {"lattice", to_json(res.target())}, {"strict", res.strict()}, {"table", table}};
}

HomKind kind_from_json(const json& j, HomKind fallback) {
  if (j.is_object() && j.contains("kind")) {
    return parsing("morphism", [&] { return hom_kind_from_string(j.at("kind").get<std::string>()); });
  }
  return fallback;
}

PossibleTransition transition_from_json(const json& j, const ResolutionPtr& source, const ResolutionPtr& target) {
  return parsing("transition", [&] {
    const auto& map = field(j, "map", "transition");
    std::vector<Bits> images(static_cast<std::size_t>(source->size()), 0);
    std::vector<bool> seen(images.size(), false);
    for (const auto& [key, value] : map.items()) {
      const int p = point_index(source->sigma(), key);
      images[static_cast<std::size_t>(p)] = names_to_set(target->sigma(), value);
      seen[static_cast<std::size_t>(p)] = true;
    }
    for (std::size_t p = 0; p < seen.size(); ++p) {
      if (!seen[p]) throw Error(ErrorKind::Parse, "map misses source point '" + source->sigma()[p] + "'");
    }
    return PossibleTransition(source, target, std::move(images));
  });
}

json to_json(const PossibleTransition& f, HomKind kind) {
  return json{{"kind", std::string(to_string(kind))}, {"map", describe(f)}};
}

PropertyTransition property_from_json(const json& j, const ResolutionPtr& source, const ResolutionPtr& target) {
  return parsing("property transition", [&] {
    const auto& dom = *source->image_lattice();
    const auto& cod = *target->image_lattice();
    std::vector<int> values(static_cast<std::size_t>(dom.size()), -1);
    for (const auto& [key, value] : field(j, "map", "property transition").items()) {
      values[static_cast<std::size_t>(dom.index(key))] = cod.index(value.get<std::string>());
    }
    for (int a = 0; a < dom.size(); ++a) {
      if (values[static_cast<std::size_t>(a)] < 0) throw Error(ErrorKind::Parse, "map misses element '" + dom.name(a) + "'");
    }
    return PropertyTransition(source, target, std::move(values));
  });
}

json to_json(const PropertyTransition& g, HomKind kind) {
  return json{{"kind", std::string(to_string(kind))}, {"map", describe(g)}};
}

LatticeMap lattice_map_from_json(const json& j, LatticePtr domain, LatticePtr codomain) {
  return parsing("lattice map", [&] {
    if (j.contains("domain")) domain = lattice_from_json(j.at("domain"));
    if (j.contains("codomain")) codomain = lattice_from_json(j.at("codomain"));
    if (!domain || !codomain) throw Error(ErrorKind::Usage, "lattice map needs a domain and a codomain");
    std::vector<int> values(static_cast<std::size_t>(domain->size()), -1);
    for (const auto& [key, value] : field(j, "map", "lattice map").items()) {
      values[static_cast<std::size_t>(domain->index(key))] = codomain->index(value.get<std::string>());
    }
    for (int a = 0; a < domain->size(); ++a) {
      if (values[static_cast<std::size_t>(a)] < 0) throw Error(ErrorKind::Parse, "map misses element '" + domain->name(a) + "'");
    }
    return LatticeMap(domain, codomain, std::move(values));
  });
}

json to_json(const LatticeMap& m) {
  json map = json::object();
  for (int a = 0; a < m.domain().size(); ++a) map[m.domain().name(a)] = m.codomain().name(m(a));
  return json{{"domain", to_json(m.domain().poset())}, {"codomain", to_json(m.codomain().poset())}, {"map", map}};
}

Ortholattice ortholattice_from_json(const json& j) {
  if (j.is_string()) return builtin_ortholattice(j.get<std::string>());
  return parsing("ortholattice", [&] {
    auto lattice = make_lattice(poset_from_json(j));
    std::vector<int> ortho(static_cast<std::size_t>(lattice->size()), -1);
    for (const auto& [key, value] : field(j, "ortho", "ortholattice").items()) {
      const int a = lattice->index(key);
      const int b = lattice->index(value.get<std::string>());
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        auto& slot = ortho[static_cast<std::size_t>(x)];
        if (slot >= 0 && slot != y) {
          throw Error(ErrorKind::OrthoLawViolation, "orthocomplement given inconsistently",
                      json{{"law", "involution"}, {"elements", {lattice->name(x)}}});
        }
        slot = y;
      }
    }
    for (int a = 0; a < lattice->size(); ++a) {
      if (ortho[static_cast<std::size_t>(a)] < 0) {
        throw Error(ErrorKind::Parse, "orthocomplement misses element '" + lattice->name(a) + "'");
      }
    }
    return validate_ortholattice(std::move(lattice), std::move(ortho));
  });
}

json to_json(const Ortholattice& ol) {
  json j = to_json(ol.lattice->poset());
  json ortho = json::object();
  for (int a = 0; a < ol.lattice->size(); ++a) ortho[ol.lattice->name(a)] = ol.lattice->name(ol.complement(a));
  j["ortho"] = ortho;
  return j;
}

}  // namespace qkit
