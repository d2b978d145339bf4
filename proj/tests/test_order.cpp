#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qkit/enumerate.hpp"
#include "qkit/error.hpp"
#include "qkit/order.hpp"
#include "qkit/quantum.hpp"

using namespace qkit;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Usage;
}

std::vector<LatticePtr> small_lattices() {
  std::vector<LatticePtr> out;
  for (int n = 1; n <= 5; ++n) {
    for (auto& l : enumerate_lattices(n)) out.push_back(l);
  }
  for (const auto& name : builtin_lattice_names()) out.push_back(builtin_lattice(name));
  return out;
}

}  // namespace

TEST_CASE("order closure matches path reachability on random relations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (rng() % 3 == 0) edges.emplace_back(a, b);
      }
    }
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    const auto p = FinitePoset::from_index_pairs(names, edges);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        REQUIRE(p.le(a, b) == oracle::reachable(n, edges, a, b));
      }
    }
  }
}

TEST_CASE("cycles are rejected with both elements in the witness") {
  try {
    FinitePoset::from_pairs({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    FAIL("cycle accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Cycle);
    CHECK(e.witness().size() == 2);
  }
  CHECK(kind_of([] { FinitePoset::from_pairs({"a", "a"}, {}); }) == ErrorKind::Parse);
  CHECK(kind_of([] { FinitePoset::from_pairs({"a"}, {{"a", "z"}}); }) == ErrorKind::UnknownElement);
}

TEST_CASE("lattice operations agree with brute-force bounds") {
  for (const auto& l : small_lattices()) {
    const auto& p = l->poset();
    for (int a = 0; a < l->size(); ++a) {
      for (int b = 0; b < l->size(); ++b) {
        REQUIRE(l->join(a, b) == oracle::lub(p, bit(a) | bit(b)));
        REQUIRE(l->meet(a, b) == oracle::glb(p, bit(a) | bit(b)));
      }
    }
    for (Bits s = 0; s < (Bits{1} << l->size()); ++s) {
      REQUIRE(l->join(s) == oracle::lub(p, s));
      REQUIRE(l->meet(s) == oracle::glb(p, s));
    }
    CHECK(l->bottom() == oracle::lub(p, 0));
    CHECK(l->top() == oracle::glb(p, 0));
  }
}

TEST_CASE("posets without all bounds are not lattices") {
  // Two maximal elements: the pair has no upper bound.
  const auto v = FinitePoset::from_pairs({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  try {
    CompleteLattice::from_poset(v);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotALattice);
    // The witness names a subset whose bound really is missing.
    Bits subset = 0;
    for (const auto& n : e.witness().at("subset")) subset |= bit(v.index(n.get<std::string>()));
    const bool lub = e.witness().at("missing") == "lub";
    CHECK((lub ? oracle::lub(v, subset) : oracle::glb(v, subset)) == -1);
  }
  // Bowtie: a, b below c, d with no least upper bound for {a, b}.
  const auto bowtie = FinitePoset::from_pairs(
      {"0", "a", "b", "c", "d", "1"},
      {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}});
  CHECK(kind_of([&] { CompleteLattice::from_poset(bowtie); }) == ErrorKind::NotALattice);
  CHECK(kind_of([] { CompleteLattice::from_poset(FinitePoset::from_pairs({}, {})); }) == ErrorKind::NotALattice);
}

TEST_CASE("poset and lattice counts up to isomorphism") {
  const std::vector<std::size_t> posets{1, 1, 2, 5, 16, 63};
  const std::vector<std::size_t> lattices{0, 1, 1, 1, 2, 5};
  for (int n = 0; n <= 5; ++n) {
    CHECK(enumerate_posets(n).size() == posets[static_cast<std::size_t>(n)]);
    CHECK(enumerate_lattices(n).size() == lattices[static_cast<std::size_t>(n)]);
  }
  // Representatives are pairwise non-isomorphic.
  const auto four = enumerate_posets(4);
  for (std::size_t i = 0; i < four.size(); ++i) {
    for (std::size_t j = i + 1; j < four.size(); ++j) {
      CHECK_FALSE(find_lattice_isomorphism(four[i], four[j]).has_value());
    }
  }
}

TEST_CASE("join-preserving maps match exhaustive enumeration") {
  std::vector<LatticePtr> ls;
  for (int n = 1; n <= 4; ++n) {
    for (auto& l : enumerate_lattices(n)) ls.push_back(l);
  }
  for (const auto& d : ls) {
    for (const auto& c : ls) {
      std::set<std::vector<int>> got;
      for (const auto& m : enumerate_join_preserving(d, c)) got.insert(m.values());
      const auto want_list = oracle::join_preserving_tables(*d, *c);
      std::set<std::vector<int>> want(want_list.begin(), want_list.end());
      REQUIRE(got == want);
    }
  }
}

TEST_CASE("right adjoint satisfies the Galois condition") {
  std::vector<LatticePtr> ls;
  for (int n = 1; n <= 4; ++n) {
    for (auto& l : enumerate_lattices(n)) ls.push_back(l);
  }
  ls.push_back(builtin_lattice("MO2"));
  for (const auto& d : ls) {
    for (const auto& c : ls) {
      for (const auto& g : enumerate_join_preserving(d, c)) {
        const auto r = right_adjoint(g);
        REQUIRE(r.preserves_meets());
        for (int a = 0; a < d->size(); ++a) {
          for (int b = 0; b < c->size(); ++b) REQUIRE(c->le(g(a), b) == d->le(a, r(b)));
        }
        REQUIRE(left_adjoint(r) == g);
      }
    }
  }
}

TEST_CASE("adjoints reject maps of the wrong kind") {
  const auto chain = builtin_lattice("chain3");
  // Sends bottom to top: not join-preserving, and not meet-preserving either.
  const LatticeMap bad(chain, chain, {2, 2, 2});
  CHECK_FALSE(bad.preserves_joins());
  CHECK(bad.join_failure().has_value());
  CHECK(kind_of([&] { right_adjoint(bad); }) == ErrorKind::NotJoinPreserving);
  const LatticeMap low(chain, chain, {0, 0, 0});
  CHECK(kind_of([&] { left_adjoint(low); }) == ErrorKind::NotMeetPreserving);
}

TEST_CASE("isomorphism search") {
  const auto m2 = builtin_lattice("M2");
  const auto b2 = builtin_lattice("B2");
  auto iso = find_lattice_isomorphism(m2->poset(), b2->poset());
  REQUIRE(iso.has_value());
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) CHECK(m2->le(a, b) == b2->le((*iso)[static_cast<std::size_t>(a)], (*iso)[static_cast<std::size_t>(b)]));
  }
  CHECK_FALSE(find_lattice_isomorphism(m2->poset(), builtin_lattice("chain4")->poset()).has_value());
  CHECK_FALSE(find_lattice_isomorphism(m2->poset(), builtin_lattice("chain3")->poset()).has_value());
  CHECK(kind_of([] {
          const auto big = builtin_lattice("B3");
          find_lattice_isomorphism(big->poset(), big->poset(), 4);
        }) == ErrorKind::SizeCapExceeded);
}

TEST_CASE("Hasse edges") {
  CHECK(builtin_lattice("M2")->poset().covers().size() == 4);
  CHECK(builtin_lattice("B3")->poset().covers().size() == 12);
  CHECK(builtin_lattice("chain4")->poset().covers().size() == 3);
  CHECK(FinitePoset::from_pairs({"x"}, {}).covers().empty());
}

TEST_CASE("atoms and atomisticity") {
  CHECK(builtin_lattice("MO2")->is_atomistic());
  CHECK(count(builtin_lattice("MO3")->atoms()) == 6);
  CHECK_FALSE(builtin_lattice("N5")->is_atomistic());
  CHECK_FALSE(builtin_lattice("chain3")->is_atomistic());
}
