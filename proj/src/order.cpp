#include "qkit/order.hpp"

#include <algorithm>
#include <functional>

#include "qkit/error.hpp"

namespace qkit {

namespace {

nlohmann::json names_of(const FinitePoset& p, Bits s) {
  nlohmann::json out = nlohmann::json::array();
  for (int i : members(s)) out.push_back(p.name(i));
  return out;
}

void check_carrier(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxCarrier)) {
    throw Error(ErrorKind::SizeCapExceeded,
                "carrier has " + std::to_string(n) + " elements; at most 64 supported");
  }
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::string> elements, std::vector<Bits> up)
    : elements_(std::move(elements)), up_(std::move(up)) {
  const int n = size();
  down_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (!index_.emplace(elements_[static_cast<std::size_t>(i)], i).second) {
      throw Error(ErrorKind::Parse, "duplicate element '" + elements_[static_cast<std::size_t>(i)] + "'",
                  nlohmann::json{{"element", elements_[static_cast<std::size_t>(i)]}});
    }
    for (int j : members(up_[static_cast<std::size_t>(i)])) down_[static_cast<std::size_t>(j)] |= bit(i);
  }
}

FinitePoset FinitePoset::from_index_pairs(std::vector<std::string> elements,
                                          const std::vector<std::pair<int, int>>& le_pairs) {
  check_carrier(elements.size());
  const int n = static_cast<int>(elements.size());
  std::vector<Bits> up(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = bit(i);
  for (auto [a, b] : le_pairs) up[static_cast<std::size_t>(a)] |= bit(b);
  // Warshall on bit rows.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (has(up[static_cast<std::size_t>(i)], k)) up[static_cast<std::size_t>(i)] |= up[static_cast<std::size_t>(k)];
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (has(up[static_cast<std::size_t>(i)], j) && has(up[static_cast<std::size_t>(j)], i)) {
        throw Error(ErrorKind::Cycle,
                    "'" + elements[static_cast<std::size_t>(i)] + "' and '" +
                        elements[static_cast<std::size_t>(j)] + "' are mutually below each other",
                    nlohmann::json{elements[static_cast<std::size_t>(i)], elements[static_cast<std::size_t>(j)]});
      }
    }
  }
  return FinitePoset(std::move(elements), std::move(up));
}

FinitePoset FinitePoset::from_pairs(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& le_pairs) {
  check_carrier(elements.size());
  std::unordered_map<std::string, int> idx;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!idx.emplace(elements[i], static_cast<int>(i)).second) {
      throw Error(ErrorKind::Parse, "duplicate element '" + elements[i] + "'",
                  nlohmann::json{{"element", elements[i]}});
    }
  }
  auto lookup = [&](const std::string& s) {
    auto it = idx.find(s);
    if (it == idx.end()) {
      throw Error(ErrorKind::UnknownElement, "unknown element '" + s + "'",
                  nlohmann::json{{"element", s}});
    }
    return it->second;
  };
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(le_pairs.size());
  for (const auto& [a, b] : le_pairs) pairs.emplace_back(lookup(a), lookup(b));
  return from_index_pairs(std::move(elements), pairs);
}

FinitePoset validate_poset(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& le_pairs) {
  return FinitePoset::from_pairs(std::move(elements), le_pairs);
}

int FinitePoset::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownElement, "unknown element '" + std::string(name) + "'",
              nlohmann::json{{"element", std::string(name)}});
}

std::optional<int> FinitePoset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Bits FinitePoset::upper_bounds(Bits subset) const {
  Bits ub = full_set(size());
  for (int i : members(subset)) ub &= up_[static_cast<std::size_t>(i)];
  return ub;
}

Bits FinitePoset::lower_bounds(Bits subset) const {
  Bits lb = full_set(size());
  for (int i : members(subset)) lb &= down_[static_cast<std::size_t>(i)];
  return lb;
}

std::optional<int> FinitePoset::least_of(Bits candidates) const {
  for (int i : members(candidates)) {
    if (is_subset(candidates, up_[static_cast<std::size_t>(i)])) return i;
  }
  return std::nullopt;
}

std::optional<int> FinitePoset::greatest_of(Bits candidates) const {
  for (int i : members(candidates)) {
    if (is_subset(candidates, down_[static_cast<std::size_t>(i)])) return i;
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    const Bits strictly_above = up_[static_cast<std::size_t>(a)] & ~bit(a);
    for (int b : members(strictly_above)) {
      // b covers a iff nothing sits strictly between them.
      const Bits between = strictly_above & down_[static_cast<std::size_t>(b)] & ~bit(b);
      if (between == 0) out.emplace_back(a, b);
    }
  }
  return out;
}

FinitePoset FinitePoset::restrict_to(const std::vector<int>& indices) const {
  std::vector<std::string> names;
  names.reserve(indices.size());
  for (int i : indices) names.push_back(name(i));
  const int m = static_cast<int>(indices.size());
  std::vector<Bits> up(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (le(indices[static_cast<std::size_t>(a)], indices[static_cast<std::size_t>(b)])) up[static_cast<std::size_t>(a)] |= bit(b);
    }
  }
  return FinitePoset(std::move(names), std::move(up));
}

std::vector<std::pair<std::string, std::string>> FinitePoset::strict_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (int a = 0; a < size(); ++a) {
    for (int b : members(up_[static_cast<std::size_t>(a)])) {
      if (b != a) out.emplace_back(name(a), name(b));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

CompleteLattice CompleteLattice::from_poset(FinitePoset poset) {
  const int n = poset.size();
  auto fail = [&](Bits s, const char* missing) {
    throw Error(ErrorKind::NotALattice,
                std::string("subset has no ") + missing,
                nlohmann::json{{"subset", names_of(poset, s)}, {"missing", missing}});
  };
  if (n == 0) fail(0, "lub");

  if (n <= 12) {
    for (Bits s = 0; s <= full_set(n); ++s) {
      if (!poset.least_of(poset.upper_bounds(s))) fail(s, "lub");
      if (!poset.greatest_of(poset.lower_bounds(s))) fail(s, "glb");
    }
  }

  CompleteLattice lat;
  lat.join_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  lat.meet_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  auto bot = poset.least_of(full_set(n));
  if (!bot) fail(0, "lub");
  auto top = poset.greatest_of(full_set(n));
  if (!top) fail(0, "glb");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Bits pair = bit(a) | bit(b);
      auto j = poset.least_of(poset.upper_bounds(pair));
      if (!j) fail(pair, "lub");
      auto m = poset.greatest_of(poset.lower_bounds(pair));
      if (!m) fail(pair, "glb");
      lat.join_[static_cast<std::size_t>(a * n + b)] = *j;
      lat.meet_[static_cast<std::size_t>(a * n + b)] = *m;
    }
  }
  lat.bottom_ = *bot;
  lat.top_ = *top;
  lat.poset_ = std::move(poset);
  return lat;
}

CompleteLattice as_complete_lattice(FinitePoset poset) {
  return CompleteLattice::from_poset(std::move(poset));
}

LatticePtr make_lattice(FinitePoset poset) {
  return std::make_shared<const CompleteLattice>(CompleteLattice::from_poset(std::move(poset)));
}

int CompleteLattice::join(Bits subset) const {
  int acc = bottom_;
  for (int i : members(subset)) acc = join(acc, i);
  return acc;
}

int CompleteLattice::meet(Bits subset) const {
  int acc = top_;
  for (int i : members(subset)) acc = meet(acc, i);
  return acc;
}

Bits CompleteLattice::atoms() const {
  Bits out = 0;
  for (auto [a, b] : poset_.covers()) {
    if (a == bottom_) out |= bit(b);
  }
  return out;
}

bool CompleteLattice::is_atomistic() const {
  const Bits at = atoms();
  for (int a = 0; a < size(); ++a) {
    if (join(at & poset_.down_set(a)) != a) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
  return a == b || (a && b && *a == *b);
}

LatticeMap::LatticeMap(LatticePtr domain, LatticePtr codomain, std::vector<int> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != domain_->size()) {
    throw Error(ErrorKind::Parse, "lattice map is not total on its domain");
  }
  for (int v : values_) {
    if (v < 0 || v >= codomain_->size()) {
      throw Error(ErrorKind::UnknownElement, "lattice map value outside codomain");
    }
  }
}

LatticeMap LatticeMap::identity(LatticePtr lattice) {
  std::vector<int> v(static_cast<std::size_t>(lattice->size()));
  for (int i = 0; i < lattice->size(); ++i) v[static_cast<std::size_t>(i)] = i;
  return LatticeMap(lattice, lattice, std::move(v));
}

LatticeMap LatticeMap::constant(LatticePtr domain, LatticePtr codomain, int value) {
  std::vector<int> v(static_cast<std::size_t>(domain->size()), value);
  return LatticeMap(std::move(domain), std::move(codomain), std::move(v));
}

bool LatticeMap::is_monotone() const {
  for (int a = 0; a < domain_->size(); ++a) {
    for (int b : members(domain_->poset().up_set(a))) {
      if (!codomain_->le((*this)(a), (*this)(b))) return false;
    }
  }
  return true;
}

std::optional<LatticeMap::Failure> LatticeMap::join_failure() const {
  const auto& d = *domain_;
  const auto& c = *codomain_;
  if ((*this)(d.bottom()) != c.bottom()) return Failure{{}, (*this)(d.bottom()), c.bottom()};
  for (int a = 0; a < d.size(); ++a) {
    for (int b = a + 1; b < d.size(); ++b) {
      const int lhs = (*this)(d.join(a, b));
      const int rhs = c.join((*this)(a), (*this)(b));
      if (lhs != rhs) return Failure{{a, b}, lhs, rhs};
    }
  }
  return std::nullopt;
}

std::optional<LatticeMap::Failure> LatticeMap::meet_failure() const {
  const auto& d = *domain_;
  const auto& c = *codomain_;
  if ((*this)(d.top()) != c.top()) return Failure{{}, (*this)(d.top()), c.top()};
  for (int a = 0; a < d.size(); ++a) {
    for (int b = a + 1; b < d.size(); ++b) {
      const int lhs = (*this)(d.meet(a, b));
      const int rhs = c.meet((*this)(a), (*this)(b));
      if (lhs != rhs) return Failure{{a, b}, lhs, rhs};
    }
  }
  return std::nullopt;
}

bool LatticeMap::preserves_joins() const { return !join_failure(); }
bool LatticeMap::preserves_meets() const { return !meet_failure(); }

bool operator==(const LatticeMap& a, const LatticeMap& b) {
  return a.values_ == b.values_ && same_lattice(a.domain_, b.domain_) &&
         same_lattice(a.codomain_, b.codomain_);
}

LatticeMap compose(const LatticeMap& second, const LatticeMap& first) {
  if (!same_lattice(first.codomain_ptr(), second.domain_ptr())) {
    throw Error(ErrorKind::NotComposable, "codomain of first map is not domain of second");
  }
  std::vector<int> v(first.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = second(first.values()[i]);
  return LatticeMap(first.domain_ptr(), second.codomain_ptr(), std::move(v));
}

LatticeMap pointwise_join(const std::vector<LatticeMap>& maps, const LatticePtr& domain,
                          const LatticePtr& codomain) {
  std::vector<int> v(static_cast<std::size_t>(domain->size()), codomain->bottom());
  for (const auto& m : maps) {
    if (!same_lattice(m.domain_ptr(), domain) || !same_lattice(m.codomain_ptr(), codomain)) {
      throw Error(ErrorKind::NotComposable, "join over maps with different types");
    }
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = codomain->join(v[i], m.values()[i]);
  }
  return LatticeMap(domain, codomain, std::move(v));
}

bool pointwise_le(const LatticeMap& a, const LatticeMap& b) {
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    if (!a.codomain().le(a.values()[i], b.values()[i])) return false;
  }
  return true;
}

namespace {

nlohmann::json failure_json(const CompleteLattice& d, const CompleteLattice& c,
                            const LatticeMap::Failure& f) {
  nlohmann::json s = nlohmann::json::array();
  for (int i : f.subset) s.push_back(d.name(i));
  return {{"subset", s},
          {"image_of_bound", c.name(f.image_of_bound)},
          {"bound_of_images", c.name(f.bound_of_images)}};
}

}  // namespace

LatticeMap right_adjoint(const LatticeMap& g) {
  if (auto f = g.join_failure()) {
    throw Error(ErrorKind::NotJoinPreserving, "map does not preserve joins",
                failure_json(g.domain(), g.codomain(), *f));
  }
  const auto& d = g.domain();
  const auto& c = g.codomain();
  std::vector<int> v(static_cast<std::size_t>(c.size()));
  for (int b = 0; b < c.size(); ++b) {
    Bits below = 0;
    for (int a = 0; a < d.size(); ++a) {
      if (c.le(g(a), b)) below |= bit(a);
    }
    v[static_cast<std::size_t>(b)] = d.join(below);
  }
  return LatticeMap(g.codomain_ptr(), g.domain_ptr(), std::move(v));
}

LatticeMap left_adjoint(const LatticeMap& h) {
  if (auto f = h.meet_failure()) {
    throw Error(ErrorKind::NotMeetPreserving, "map does not preserve meets",
                failure_json(h.domain(), h.codomain(), *f));
  }
  const auto& d = h.domain();
  const auto& c = h.codomain();
  std::vector<int> v(static_cast<std::size_t>(c.size()));
  for (int a = 0; a < c.size(); ++a) {
    Bits above = 0;
    for (int b = 0; b < d.size(); ++b) {
      if (c.le(a, h(b))) above |= bit(b);
    }
    v[static_cast<std::size_t>(a)] = d.meet(above);
  }
  return LatticeMap(h.codomain_ptr(), h.domain_ptr(), std::move(v));
}

// ---------------------------------------------------------------------------

std::optional<std::vector<int>> find_lattice_isomorphism(const FinitePoset& a,
                                                         const FinitePoset& b, int cap) {
  if (a.size() > cap || b.size() > cap) {
    throw Error(ErrorKind::SizeCapExceeded,
                "isomorphism search capped at " + std::to_string(cap) + " elements",
                nlohmann::json{{"sizes", {a.size(), b.size()}}, {"cap", cap}});
  }
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();

  // Rank-compatible candidates: equal down-set and up-set cardinalities.
  std::vector<Bits> candidates(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (count(a.down_set(i)) == count(b.down_set(j)) &&
          count(a.up_set(i)) == count(b.up_set(j))) {
        candidates[static_cast<std::size_t>(i)] |= bit(j);
      }
    }
    if (candidates[static_cast<std::size_t>(i)] == 0) return std::nullopt;
  }

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  Bits used = 0;
  std::function<bool(int)> extend = [&](int i) {
    if (i == n) return true;
    for (int j : members(candidates[static_cast<std::size_t>(i)] & ~used)) {
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        const int m = image[static_cast<std::size_t>(k)];
        ok = a.le(i, k) == b.le(j, m) && a.le(k, i) == b.le(m, j);
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(i)] = j;
      used |= bit(j);
      if (extend(i + 1)) return true;
      used &= ~bit(j);
    }
    image[static_cast<std::size_t>(i)] = -1;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

std::vector<LatticeMap> enumerate_join_preserving(const LatticePtr& domain,
                                                  const LatticePtr& codomain) {
  const auto& d = *domain;
  const auto& c = *codomain;
  const int n = d.size();

  // Linear extension: fewer elements below first.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return count(d.poset().down_set(x)) < count(d.poset().down_set(y));
  });

  std::vector<int> value(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> found;
  std::function<void(std::size_t)> extend = [&](std::size_t pos) {
    if (pos == order.size()) {
      found.push_back(value);
      return;
    }
    const int x = order[pos];
    for (int v = 0; v < c.size(); ++v) {
      if (x == d.bottom() && v != c.bottom()) continue;
      bool ok = true;
      for (std::size_t q = 0; q < pos && ok; ++q) {
        const int y = order[q];
        const int gy = value[static_cast<std::size_t>(y)];
        if (d.le(y, x) && !c.le(gy, v)) ok = false;
        for (std::size_t r = q; r < pos && ok; ++r) {
          const int z = order[r];
          if (d.join(y, z) == x && c.join(gy, value[static_cast<std::size_t>(z)]) != v) ok = false;
        }
      }
      if (!ok) continue;
      value[static_cast<std::size_t>(x)] = v;
      extend(pos + 1);
      value[static_cast<std::size_t>(x)] = -1;
    }
  };
  extend(0);
  std::sort(found.begin(), found.end());
  std::vector<LatticeMap> out;
  out.reserve(found.size());
  for (auto& v : found) out.emplace_back(domain, codomain, std::move(v));
  return out;
}

}  // namespace qkit
