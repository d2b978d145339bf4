#include "qkit/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qkit {

namespace {

/// Relation as a bit pattern over the n*n cells, relabeled by perm.
std::uint64_t relation_code(const std::vector<Bits>& up, const std::vector<int>& perm) {
  const int n = static_cast<int>(up.size());
  std::uint64_t code = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (has(up[static_cast<std::size_t>(a)], b)) {
        code |= std::uint64_t{1} << (perm[static_cast<std::size_t>(a)] * n + perm[static_cast<std::size_t>(b)]);
      }
    }
  }
  return code;
}

}  // namespace

std::vector<FinitePoset> enumerate_posets(int n) {
  if (n < 0 || n > 5) throw Error(ErrorKind::SizeCapExceeded, "poset enumeration is limited to 5 elements");
  std::vector<std::pair<int, int>> cells;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) cells.emplace_back(a, b);
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));

  std::set<std::uint64_t> seen;
  std::vector<FinitePoset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
    std::vector<Bits> up(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) up[static_cast<std::size_t>(a)] = bit(a);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if ((mask >> c) & 1U) up[static_cast<std::size_t>(cells[c].first)] |= bit(cells[c].second);
    }
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a) {
      for (int b : members(up[static_cast<std::size_t>(a)])) {
        if (!is_subset(up[static_cast<std::size_t>(b)], up[static_cast<std::size_t>(a)])) transitive = false;
      }
    }
    if (!transitive) continue;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t canon = ~std::uint64_t{0};
    do {
      canon = std::min(canon, relation_code(up, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!seen.insert(canon).second) continue;
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if ((mask >> c) & 1U) pairs.push_back(cells[c]);
    }
    out.push_back(FinitePoset::from_index_pairs(names, pairs));
  }
  return out;
}

std::vector<LatticePtr> enumerate_lattices(int n) {
  std::vector<LatticePtr> out;
  for (auto& p : enumerate_posets(n)) {
    try {
      out.push_back(make_lattice(std::move(p)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotALattice) throw;
    }
  }
  return out;
}

std::vector<Resolution> enumerate_resolutions(int k, const PosetPtr& target, bool strict) {
  if (k < 0 || k > 4) throw Error(ErrorKind::SizeCapExceeded, "resolution enumeration is limited to 4 points");
  const auto sigma = point_names(k);
  const auto& poset = *target;
  const int m = poset.size();
  const std::size_t cells = std::size_t{1} << k;
  std::vector<int> table(cells, 0);
  std::vector<Resolution> out;

  // Assign table[T] in increasing T; every T minus one point is already set.
  auto fill = [&](auto&& self, std::size_t t) -> void {
    if (t == cells) {
      if (!Resolution::check_axioms(sigma, poset, table, strict)) {
        out.push_back(Resolution::validate(sigma, target, table, strict));
      }
      return;
    }
    for (int v = 0; v < m; ++v) {
      if (strict && t != 0 && v == table[0]) continue;
      bool monotone = true;
      for (int i : members(t)) {
        if (!poset.le(table[t & ~bit(i)], v)) monotone = false;
      }
      if (!monotone) continue;
      table[t] = v;
      self(self, t + 1);
    }
  };
  if (m > 0) fill(fill, 0);
  return out;
}

std::vector<std::string> space_point_names(int n) {
  static const char* base[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(i < 4 ? base[i] : "x" + std::to_string(i));
  return out;
}

std::vector<ClosureSpace> enumerate_spaces(int n) {
  if (n < 0 || n > 3) throw Error(ErrorKind::SizeCapExceeded, "space enumeration is limited to 3 points");
  const Bits universe = full_set(n);
  const int subsets = 1 << n;
  std::vector<ClosureSpace> out;
  // Families are bit patterns over the proper subsets; the universe is added.
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << (subsets - 1)); ++fam) {
    std::vector<Bits> closed{universe};
    for (int s = 0; s < subsets - 1; ++s) {
      if ((fam >> s) & 1U) closed.push_back(static_cast<Bits>(s));
    }
    bool meets = true;
    for (Bits a : closed) {
      for (Bits b : closed) {
        if (std::find(closed.begin(), closed.end(), a & b) == closed.end()) meets = false;
      }
    }
    if (meets) out.push_back(ClosureSpace::from_family(space_point_names(n), closed));
  }
  return out;
}

}  // namespace qkit
