#pragma once

// Brute-force reference implementations used only by the tests. They work
// from the definitions and share no code paths with the library beyond the
// plain data types.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "qkit/bits.hpp"
#include "qkit/order.hpp"
#include "qkit/resolution.hpp"
#include "qkit/transitions.hpp"

namespace oracle {

using qkit::Bits;

/// Reachability by depth-first search over the given edges.
inline bool reachable(int n, const std::vector<std::pair<int, int>>& edges, int from, int to) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{from};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    if (seen[static_cast<std::size_t>(x)]) continue;
    seen[static_cast<std::size_t>(x)] = true;
    for (const auto& [a, b] : edges) {
      if (a == x) stack.push_back(b);
    }
  }
  return false;
}

/// Least upper bound by scanning all elements, or -1.
inline int lub(const qkit::FinitePoset& p, Bits subset) {
  std::vector<int> ubs;
  for (int u = 0; u < p.size(); ++u) {
    bool above = true;
    for (int x = 0; x < p.size(); ++x) {
      if (qkit::has(subset, x) && !p.le(x, u)) above = false;
    }
    if (above) ubs.push_back(u);
  }
  for (int u : ubs) {
    bool least = true;
    for (int v : ubs) least = least && p.le(u, v);
    if (least) return u;
  }
  return -1;
}

inline int glb(const qkit::FinitePoset& p, Bits subset) {
  std::vector<int> lbs;
  for (int u = 0; u < p.size(); ++u) {
    bool below = true;
    for (int x = 0; x < p.size(); ++x) {
      if (qkit::has(subset, x) && !p.le(u, x)) below = false;
    }
    if (below) lbs.push_back(u);
  }
  for (int u : lbs) {
    bool greatest = true;
    for (int v : lbs) greatest = greatest && p.le(v, u);
    if (greatest) return u;
  }
  return -1;
}

/// Join preservation over every subset of the domain.
inline bool preserves_all_joins(const qkit::CompleteLattice& d, const qkit::CompleteLattice& c,
                                const std::vector<int>& values) {
  for (Bits s = 0; s < (Bits{1} << d.size()); ++s) {
    Bits img = 0;
    for (int x : qkit::members(s)) img |= qkit::bit(values[static_cast<std::size_t>(x)]);
    if (values[static_cast<std::size_t>(lub(d.poset(), s))] != lub(c.poset(), img)) return false;
  }
  return true;
}

/// All value tables d -> c that preserve every join, by trying every map.
inline std::vector<std::vector<int>> join_preserving_tables(const qkit::CompleteLattice& d,
                                                            const qkit::CompleteLattice& c) {
  std::vector<std::vector<int>> out;
  std::vector<int> values(static_cast<std::size_t>(d.size()), 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == values.size()) {
      if (preserves_all_joins(d, c, values)) out.push_back(values);
      return;
    }
    for (int v = 0; v < c.size(); ++v) {
      values[i] = v;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

/// The resolution axioms straight from their definitions: monotone on every
/// pair of nested subsets, the join axiom on every family of subsets, and
/// (strict) the empty kernel.
inline bool resolution_axioms(int k, const qkit::FinitePoset& p, const std::vector<int>& table, bool strict) {
  const Bits n = Bits{1} << k;
  for (Bits a = 0; a < n; ++a) {
    for (Bits b = 0; b < n; ++b) {
      if (qkit::is_subset(a, b) && !p.le(table[a], table[b])) return false;
    }
  }
  if (strict) {
    for (Bits a = 1; a < n; ++a) {
      if (table[a] == table[0]) return false;
    }
  }
  // Families are bit patterns over P(sigma).
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << n); ++fam) {
    Bits uni = 0;
    for (Bits a = 0; a < n; ++a) {
      if ((fam >> a) & 1U) uni |= a;
    }
    for (Bits t = 0; t < n; ++t) {
      bool all_below = true;
      for (Bits a = 0; a < n; ++a) {
        if (((fam >> a) & 1U) && !p.le(table[a], table[t])) all_below = false;
      }
      if (all_below && !p.le(table[uni], table[t])) return false;
    }
  }
  return true;
}

/// {t : table({t}) <= table(T)}.
inline Bits closure(const qkit::Resolution& r, Bits t) {
  Bits out = 0;
  for (int x = 0; x < r.size(); ++x) {
    if (r.target().le(r(qkit::bit(x)), r(t))) out |= qkit::bit(x);
  }
  return out;
}

/// Image compatibility over every pair of subsets.
inline bool a_sharp(const qkit::PossibleTransition& f) {
  const auto& r1 = f.source();
  const auto& r2 = f.target();
  for (Bits a = 0; a <= r1.all(); ++a) {
    for (Bits b = 0; b <= r1.all(); ++b) {
      if (r1(a) == r1(b) && r2(f(a)) != r2(f(b))) return false;
    }
  }
  return true;
}

/// Closure continuity over every subset, with closures from the definition.
inline bool a_star(const qkit::PossibleTransition& f) {
  for (Bits t = 0; t <= f.source().all(); ++t) {
    if (!qkit::is_subset(f(closure(f.source(), t)), closure(f.target(), f(t)))) return false;
  }
  return true;
}

/// Every union-preserving map as its list of singleton images.
inline std::vector<std::vector<Bits>> all_union_maps(int n1, int n2) {
  std::vector<std::vector<Bits>> out;
  std::vector<Bits> images(static_cast<std::size_t>(n1), 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == images.size()) {
      out.push_back(images);
      return;
    }
    for (Bits s = 0; s < (Bits{1} << n2); ++s) {
      images[i] = s;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

}  // namespace oracle
