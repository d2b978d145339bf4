#include "qkit/resolution.hpp"

#include <algorithm>

namespace qkit {

namespace {

nlohmann::json set_json(const std::vector<std::string>& sigma, Bits s) {
  nlohmann::json out = nlohmann::json::array();
  for (int i : members(s)) out.push_back(sigma[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

std::vector<std::string> point_names(int n) {
  static const char* base[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(i < 8 ? std::string(base[i]) : "p" + std::to_string(i));
  return out;
}

std::optional<Error> Resolution::check_axioms(const std::vector<std::string>& sigma,
                                              const FinitePoset& target,
                                              const std::vector<int>& table, bool strict) {
  const int n = static_cast<int>(sigma.size());
  if (n > kMaxResolutionPoints) {
    return Error(ErrorKind::SizeCapExceeded, "resolutions are limited to 16 points");
  }
  const Bits all = full_set(n);
  if (table.size() != static_cast<std::size_t>(all) + 1) {
    return Error(ErrorKind::Parse, "resolution table is not total on the powerset");
  }
  for (int v : table) {
    if (v < 0 || v >= target.size()) return Error(ErrorKind::UnknownElement, "table value outside the target");
  }
  auto label = [&](int v) { return target.name(v); };

  // Monotonicity: single-point extensions suffice.
  for (Bits t = 0; t <= all; ++t) {
    for (int i = 0; i < n; ++i) {
      if (has(t, i)) continue;
      if (!target.le(table[t], table[t | bit(i)])) {
        return Error(ErrorKind::MonotonicityViolation, "T <= T' but table(T) not <= table(T')",
                     nlohmann::json{{"T", set_json(sigma, t)},
                                    {"T'", set_json(sigma, t | bit(i))},
                                    {"table(T)", label(table[t])},
                                    {"table(T')", label(table[t | bit(i)])}});
      }
    }
  }

  // Join axiom: under monotonicity it is enough to test, for every T, the
  // largest family {S : table(S) <= table(T)}.
  for (Bits t = 0; t <= all; ++t) {
    Bits u = 0;
    std::vector<Bits> family;
    for (Bits s = 0; s <= all; ++s) {
      if (target.le(table[s], table[t])) {
        u |= s;
        if (s != 0 && !is_subset(s, t)) family.push_back(s);
      }
    }
    if (!target.le(table[u], table[t])) {
      nlohmann::json fam = nlohmann::json::array();
      for (Bits s : family) fam.push_back(set_json(sigma, s));
      return Error(ErrorKind::JoinAxiomViolation,
                   "every table(T_i) <= table(T) but table(union T_i) not <= table(T)",
                   nlohmann::json{{"family", fam},
                                  {"T", set_json(sigma, t)},
                                  {"table(union)", label(table[u])},
                                  {"table(T)", label(table[t])}});
    }
  }

  if (strict) {
    for (Bits t = 1; t <= all; ++t) {
      if (table[t] == table[0]) {
        return Error(ErrorKind::EmptyKernelViolation, "nonempty T with table(T) = table(empty)",
                     nlohmann::json{{"T", set_json(sigma, t)}, {"value", label(table[0])}});
      }
    }
  }
  return std::nullopt;
}

Resolution Resolution::validate(std::vector<std::string> sigma, PosetPtr target,
                                std::vector<int> table, bool strict) {
  if (auto err = check_axioms(sigma, *target, table, strict)) throw *err;
  {
    auto names = sigma;
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
      throw Error(ErrorKind::Parse, "duplicate point in sigma");
    }
  }

  Resolution r;
  r.sigma_ = std::move(sigma);
  r.target_ = std::move(target);
  r.table_ = std::move(table);
  r.strict_ = strict;

  const int n = r.size();
  const Bits all = full_set(n);
  Bits used = 0;
  for (int v : r.table_) used |= bit(v);
  r.image_ = members(used);
  r.image_pos_.assign(static_cast<std::size_t>(r.target_->size()), -1);
  for (std::size_t i = 0; i < r.image_.size(); ++i) r.image_pos_[static_cast<std::size_t>(r.image_[i])] = static_cast<int>(i);
  r.image_lattice_ = make_lattice(r.target_->restrict_to(r.image_));

  r.closure_.assign(static_cast<std::size_t>(all) + 1, 0);
  std::vector<Bits> closed;
  r.closed_of_image_.assign(r.image_.size(), 0);
  for (Bits t = 0; t <= all; ++t) {
    Bits c = 0;
    for (int p = 0; p < n; ++p) {
      if (r.target_->le(r.table_[bit(p)], r.table_[t])) c |= bit(p);
    }
    r.closure_[t] = c;
    closed.push_back(c);
    r.closed_of_image_[static_cast<std::size_t>(r.image_index(t))] = c;
  }
  r.space_ = ClosureSpace::from_family(r.sigma_, std::move(closed));
  return r;
}

Resolution validate_resolution(std::vector<std::string> sigma, PosetPtr target,
                               std::vector<int> table, bool strict) {
  return Resolution::validate(std::move(sigma), std::move(target), std::move(table), strict);
}

ResolutionPtr share(Resolution r) { return std::make_shared<const Resolution>(std::move(r)); }

std::string Resolution::subset_key(Bits t) const {
  std::string out;
  for (int i : members(t)) {
    if (!out.empty()) out += ",";
    out += sigma_[static_cast<std::size_t>(i)];
  }
  return out;
}

Factorization factorize(const Resolution& res) {
  Factorization f{res.factor_space(), {}};
  for (Bits c : f.space.closed_sets()) f.theta.push_back(res(c));
  return f;
}

Resolution resolution_from_factors(const ClosureSpace& space, const std::vector<int>& theta,
                                   PosetPtr target, bool strict) {
  const auto& closed = space.closed_sets();
  if (theta.size() != closed.size()) {
    throw Error(ErrorKind::Parse, "theta is not total on the closed sets");
  }
  for (int v : theta) {
    if (v < 0 || v >= target->size()) throw Error(ErrorKind::UnknownElement, "theta value outside the target");
  }
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = 0; j < closed.size(); ++j) {
      const bool inclusion = is_subset(closed[i], closed[j]);
      const bool order = target->le(theta[i], theta[j]);
      if (inclusion != order) {
        throw Error(ErrorKind::NotAnEmbedding,
                    inclusion ? "theta does not preserve inclusion" : "theta does not reflect order",
                    nlohmann::json{{"F", set_label(space.universe(), closed[i])},
                                   {"G", set_label(space.universe(), closed[j])},
                                   {"theta(F)", target->name(theta[i])},
                                   {"theta(G)", target->name(theta[j])}});
      }
    }
  }
  const int n = space.size();
  if (n > kMaxResolutionPoints) throw Error(ErrorKind::SizeCapExceeded, "resolutions are limited to 16 points");
  std::vector<int> table(std::size_t{1} << n);
  for (Bits t = 0; t < table.size(); ++t) {
    table[t] = theta[static_cast<std::size_t>(space.closed_index(space.closure_of(t)))];
  }
  return Resolution::validate(space.universe(), std::move(target), std::move(table), strict);
}

bool is_full_set_of_states(const CompleteLattice& lattice, Bits states) {
  if (has(states, lattice.bottom())) return false;
  for (int a = 0; a < lattice.size(); ++a) {
    if (lattice.join(states & lattice.poset().down_set(a)) != a) return false;
  }
  return true;
}

Resolution join_resolution(const LatticePtr& lattice, Bits states, bool strict) {
  const auto idx = members(states);
  std::vector<std::string> sigma;
  for (int i : idx) sigma.push_back(lattice->name(i));
  const int n = static_cast<int>(idx.size());
  if (n > kMaxResolutionPoints) throw Error(ErrorKind::SizeCapExceeded, "resolutions are limited to 16 points");
  std::vector<int> table(std::size_t{1} << n);
  for (Bits t = 0; t < table.size(); ++t) {
    int acc = lattice->bottom();
    for (int p : members(t)) acc = lattice->join(acc, idx[static_cast<std::size_t>(p)]);
    table[t] = acc;
  }
  auto target = std::make_shared<const FinitePoset>(lattice->poset());
  return Resolution::validate(std::move(sigma), std::move(target), std::move(table), strict);
}

Resolution closure_resolution(const ClosureSpace& space) {
  auto lattice = closed_set_lattice(space);
  const int n = space.size();
  if (n > kMaxResolutionPoints) throw Error(ErrorKind::SizeCapExceeded, "resolutions are limited to 16 points");
  std::vector<int> table(std::size_t{1} << n);
  for (Bits t = 0; t < table.size(); ++t) table[t] = space.closed_index(space.closure_of(t));
  auto target = std::make_shared<const FinitePoset>(lattice.poset());
  return Resolution::validate(space.universe(), std::move(target), std::move(table),
                              space.is_empty_strict());
}

Separation separation(const Resolution& res) {
  Separation s{true, true};
  for (int p = 0; p < res.size(); ++p) {
    for (int q = 0; q < res.size(); ++q) {
      if (p == q) continue;
      if (res.of_point(p) == res.of_point(q)) s.t0 = false;
      if (res.target().le(res.of_point(p), res.of_point(q))) s.t1 = false;
    }
  }
  return s;
}

std::vector<Bits> preorder(const Resolution& res) {
  std::vector<Bits> rows(static_cast<std::size_t>(res.size()), 0);
  for (int p = 0; p < res.size(); ++p) {
    for (int q = 0; q < res.size(); ++q) {
      if (res.target().le(res.of_point(p), res.of_point(q))) rows[static_cast<std::size_t>(p)] |= bit(q);
    }
  }
  return rows;
}

bool is_saturated(const Resolution& res) {
  Bits hit = 0;
  for (int p = 0; p < res.size(); ++p) hit |= bit(res.image_index(bit(p)));
  const Bits wanted = full_set(static_cast<int>(res.image().size())) & ~bit(res.image_index(0));
  return is_subset(wanted, hit);
}

bool is_canonical(const Resolution& res) { return is_saturated(res) && separation(res).t0; }

Canonicalization canonicalize(const Resolution& res) {
  const auto& im = *res.image_lattice();
  const int bottom = res.image_index(0);
  std::vector<int> states;  // image indices forming sigma'
  std::vector<std::string> sigma;
  for (int i = 0; i < im.size(); ++i) {
    if (i == bottom) continue;
    states.push_back(i);
    sigma.push_back("s:" + im.name(i));
  }
  const int m = static_cast<int>(states.size());
  if (m > kMaxResolutionPoints) throw Error(ErrorKind::SizeCapExceeded, "canonical state set exceeds 16 points");
  std::vector<int> table(std::size_t{1} << m);
  for (Bits t = 0; t < table.size(); ++t) {
    int acc = im.bottom();
    for (int k : members(t)) acc = im.join(acc, states[static_cast<std::size_t>(k)]);
    table[t] = acc;
  }
  std::vector<int> phi(static_cast<std::size_t>(res.size()), -1);
  for (int p = 0; p < res.size(); ++p) {
    const int v = res.image_index(bit(p));
    auto it = std::find(states.begin(), states.end(), v);
    if (it != states.end()) phi[static_cast<std::size_t>(p)] = static_cast<int>(it - states.begin());
  }
  auto target = std::make_shared<const FinitePoset>(im.poset());
  return {Resolution::validate(std::move(sigma), std::move(target), std::move(table), res.strict()),
          std::move(phi)};
}

bool square_commutes(const Resolution& res, const Canonicalization& c) {
  for (Bits t = 0; t <= res.all(); ++t) {
    Bits image = 0;
    for (int p : members(t)) {
      if (c.phi[static_cast<std::size_t>(p)] >= 0) image |= bit(c.phi[static_cast<std::size_t>(p)]);
    }
    if (res.target().name(res(t)) != c.canonical.target().name(c.canonical(image))) return false;
  }
  return true;
}

std::optional<CanonicalRelation> relate_canonical(const Resolution& a, const Resolution& b) {
  if (!is_canonical(a) || !is_canonical(b) || a.size() != b.size()) return std::nullopt;
  const auto& la = *a.image_lattice();
  const auto& lb = *b.image_lattice();
  if (la.size() != lb.size()) return std::nullopt;

  // Prefer the identity on element names when both images carry the same ones.
  std::optional<std::vector<int>> iso;
  {
    std::vector<int> by_name(static_cast<std::size_t>(la.size()), -1);
    bool ok = true;
    for (int i = 0; i < la.size() && ok; ++i) {
      auto j = lb.poset().find(la.name(i));
      if (!j) ok = false;
      else by_name[static_cast<std::size_t>(i)] = *j;
    }
    for (int i = 0; i < la.size() && ok; ++i) {
      for (int j = 0; j < la.size() && ok; ++j) {
        ok = la.le(i, j) == lb.le(by_name[static_cast<std::size_t>(i)], by_name[static_cast<std::size_t>(j)]);
      }
    }
    if (ok) iso = by_name;
  }
  if (!iso) iso = find_lattice_isomorphism(la.poset(), lb.poset(), std::max(kDefaultIsoCap, la.size()));
  if (!iso) return std::nullopt;

  CanonicalRelation rel{std::vector<int>(static_cast<std::size_t>(a.size()), -1), *iso};
  for (int p = 0; p < a.size(); ++p) {
    const int v = (*iso)[static_cast<std::size_t>(a.image_index(bit(p)))];
    for (int q = 0; q < b.size(); ++q) {
      if (b.image_index(bit(q)) == v) rel.sigma_bijection[static_cast<std::size_t>(p)] = q;
    }
    if (rel.sigma_bijection[static_cast<std::size_t>(p)] < 0) return std::nullopt;
  }
  for (Bits t = 0; t <= a.all(); ++t) {
    Bits image = 0;
    for (int p : members(t)) image |= bit(rel.sigma_bijection[static_cast<std::size_t>(p)]);
    if (b.image_index(image) != (*iso)[static_cast<std::size_t>(a.image_index(t))]) return std::nullopt;
  }
  return rel;
}

}  // namespace qkit
