#include <catch_amalgamated.hpp>

#include "qkit/closure.hpp"
#include "qkit/enumerate.hpp"
#include "qkit/error.hpp"

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

const std::vector<std::string> xy{"x", "y"};

}  // namespace

TEST_CASE("families must hold the universe and be intersection-closed") {
  CHECK(kind_of([] { ClosureSpace::from_family(xy, {0, 1}); }) == ErrorKind::InvalidSpace);
  CHECK(kind_of([] { ClosureSpace::from_family({"x", "y", "z"}, {7, 3, 6}); }) == ErrorKind::InvalidSpace);
  const auto s = ClosureSpace::from_family(xy, {3, 1, 0, 1});
  CHECK(s.closed_sets() == std::vector<Bits>{0, 1, 3});
}

TEST_CASE("closure is the intersection of closed supersets") {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& s : enumerate_spaces(n)) {
      const auto table = s.closure_table();
      for (Bits t = 0; t < table.size(); ++t) {
        Bits meet = full_set(n);
        for (Bits c : s.closed_sets()) {
          if (is_subset(t, c)) meet &= c;
        }
        REQUIRE(table[t] == meet);
        REQUIRE(s.closure_of(t) == meet);
      }
    }
  }
}

TEST_CASE("space counts") {
  // Moore families on 0..3 points.
  CHECK(enumerate_spaces(0).size() == 1);
  CHECK(enumerate_spaces(1).size() == 2);
  CHECK(enumerate_spaces(2).size() == 7);
  CHECK(enumerate_spaces(3).size() == 61);
}

TEST_CASE("operator tables are checked law by law") {
  // Not extensive: C({x}) = empty.
  try {
    validate_closure_table(xy, {0, 0, 2, 3});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::C1Violation);
  }
  // Extensive, but C(empty) = {x, y} is not inside C({y}) = {y}.
  CHECK(kind_of([] { validate_closure_table(xy, {3, 3, 2, 3}); }) == ErrorKind::C2Violation);
  // Not idempotent on three points: C({x}) = {x,y}, C({x,y}) = all.
  std::vector<Bits> t(8);
  for (Bits s = 0; s < 8; ++s) t[s] = s;
  t[1] = 3;
  t[3] = 7;
  t[5] = 7;
  CHECK(kind_of([&] { validate_closure_table({"x", "y", "z"}, t); }) == ErrorKind::C3Violation);
  const auto ok = validate_closure_table(xy, {0, 1, 3, 3});
  CHECK(ok.closed_sets() == std::vector<Bits>{0, 1, 3});
}

TEST_CASE("separation of spaces") {
  const auto chain = ClosureSpace::from_family(xy, {0, 1, 3});
  CHECK(chain.is_T0());
  CHECK_FALSE(chain.is_T1());
  const auto discrete = ClosureSpace::from_family(xy, {0, 1, 2, 3});
  CHECK(discrete.is_T1());
  const auto coarse = ClosureSpace::from_family(xy, {0, 3});
  CHECK_FALSE(coarse.is_T0());
  CHECK(coarse.is_empty_strict());
  CHECK_FALSE(ClosureSpace::from_family(xy, {3}).is_empty_strict());
}

TEST_CASE("closed-set lattice joins are closures of unions") {
  for (const auto& s : enumerate_spaces(3)) {
    const auto l = closed_set_lattice(s);
    const auto& cs = s.closed_sets();
    REQUIRE(l.size() == static_cast<int>(cs.size()));
    for (int a = 0; a < l.size(); ++a) {
      for (int b = 0; b < l.size(); ++b) {
        const Bits ua = cs[static_cast<std::size_t>(a)];
        const Bits ub = cs[static_cast<std::size_t>(b)];
        REQUIRE(cs[static_cast<std::size_t>(l.join(a, b))] == s.closure_of(ua | ub));
        REQUIRE(cs[static_cast<std::size_t>(l.meet(a, b))] == (ua & ub));
      }
    }
  }
  CHECK(closed_set_lattice(ClosureSpace::from_family(xy, {0, 1, 3})).name(1) == "[x]");
}
