#include "qkit/closure.hpp"

#include <algorithm>

#include "qkit/error.hpp"

namespace qkit {

namespace {

nlohmann::json set_json(const std::vector<std::string>& universe, Bits s) {
  nlohmann::json out = nlohmann::json::array();
  for (int i : members(s)) out.push_back(universe[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

std::string set_label(const std::vector<std::string>& universe, Bits s) {
  std::string out = "[";
  bool first = true;
  for (int i : members(s)) {
    if (!first) out += ",";
    out += universe[static_cast<std::size_t>(i)];
    first = false;
  }
  return out + "]";
}

ClosureSpace ClosureSpace::from_family(std::vector<std::string> universe, std::vector<Bits> closed) {
  if (universe.size() > static_cast<std::size_t>(kMaxCarrier)) {
    throw Error(ErrorKind::SizeCapExceeded, "universe larger than 64 points");
  }
  const Bits all = full_set(static_cast<int>(universe.size()));
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  for (Bits f : closed) {
    if (!is_subset(f, all)) throw Error(ErrorKind::InvalidSpace, "closed set outside the universe");
  }
  if (!std::binary_search(closed.begin(), closed.end(), all)) {
    throw Error(ErrorKind::InvalidSpace, "universe is not closed",
                nlohmann::json{{"missing", set_json(universe, all)}});
  }
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = i + 1; j < closed.size(); ++j) {
      const Bits m = closed[i] & closed[j];
      if (!std::binary_search(closed.begin(), closed.end(), m)) {
        throw Error(ErrorKind::InvalidSpace, "family is not closed under intersection",
                    nlohmann::json{{"sets", {set_json(universe, closed[i]), set_json(universe, closed[j])}},
                                   {"missing", set_json(universe, m)}});
      }
    }
  }
  ClosureSpace s;
  s.universe_ = std::move(universe);
  s.closed_ = std::move(closed);
  return s;
}

bool ClosureSpace::is_closed(Bits s) const {
  return std::binary_search(closed_.begin(), closed_.end(), s);
}

int ClosureSpace::closed_index(Bits s) const {
  auto it = std::lower_bound(closed_.begin(), closed_.end(), s);
  if (it == closed_.end() || *it != s) return -1;
  return static_cast<int>(it - closed_.begin());
}

Bits ClosureSpace::closure_of(Bits s) const {
  Bits acc = full_set(size());
  for (Bits f : closed_) {
    if (is_subset(s, f)) acc &= f;
  }
  return acc;
}

std::vector<Bits> ClosureSpace::closure_table() const {
  if (size() > kMaxTableUniverse) {
    throw Error(ErrorKind::SizeCapExceeded, "closure tables are limited to 16 points");
  }
  std::vector<Bits> table(std::size_t{1} << size());
  for (Bits t = 0; t < table.size(); ++t) table[t] = closure_of(t);
  return table;
}

bool ClosureSpace::is_T0() const {
  if (!is_empty_strict()) return false;
  for (int x = 0; x < size(); ++x) {
    for (int y = x + 1; y < size(); ++y) {
      if (closure_of(bit(x)) == closure_of(bit(y))) return false;
    }
  }
  return true;
}

bool ClosureSpace::is_T1() const {
  if (!is_empty_strict()) return false;
  for (int x = 0; x < size(); ++x) {
    if (closure_of(bit(x)) != bit(x)) return false;
  }
  return true;
}

ClosureSpace validate_closure_table(std::vector<std::string> universe,
                                    const std::vector<Bits>& table) {
  const int n = static_cast<int>(universe.size());
  if (n > kMaxTableUniverse) {
    throw Error(ErrorKind::SizeCapExceeded, "closure tables are limited to 16 points");
  }
  if (table.size() != (std::size_t{1} << n)) {
    throw Error(ErrorKind::Parse, "closure table is not total on the powerset");
  }
  const Bits all = full_set(n);
  for (Bits t = 0; t <= all; ++t) {
    if (!is_subset(table[t], all)) throw Error(ErrorKind::Parse, "closure value outside the universe");
    if (!is_subset(t, table[t])) {
      throw Error(ErrorKind::C1Violation, "T is not contained in C(T)",
                  nlohmann::json{{"T", set_json(universe, t)}, {"C(T)", set_json(universe, table[t])}});
    }
  }
  for (Bits t = 0; t <= all; ++t) {
    // Monotonicity reduces to single-point extensions.
    for (int i = 0; i < n; ++i) {
      if (has(t, i)) continue;
      const Bits u = t | bit(i);
      if (!is_subset(table[t], table[u])) {
        throw Error(ErrorKind::C2Violation, "T <= T' but C(T) not <= C(T')",
                    nlohmann::json{{"T", set_json(universe, t)}, {"T'", set_json(universe, u)}});
      }
    }
  }
  std::vector<Bits> closed;
  for (Bits t = 0; t <= all; ++t) {
    if (table[table[t]] != table[t]) {
      throw Error(ErrorKind::C3Violation, "C(C(T)) != C(T)",
                  nlohmann::json{{"T", set_json(universe, t)}, {"C(T)", set_json(universe, table[t])},
                                 {"C(C(T))", set_json(universe, table[table[t]])}});
    }
    if (table[t] == t) closed.push_back(t);
  }
  return ClosureSpace::from_family(std::move(universe), std::move(closed));
}

CompleteLattice closed_set_lattice(const ClosureSpace& space) {
  const auto& closed = space.closed_sets();
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    names.push_back(set_label(space.universe(), closed[i]));
    for (std::size_t j = 0; j < closed.size(); ++j) {
      if (i != j && is_subset(closed[i], closed[j])) {
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return CompleteLattice::from_poset(FinitePoset::from_index_pairs(std::move(names), pairs));
}

}  // namespace qkit
