#include "fixtures.hpp"
#include "qkit/enumerate.hpp"
#include "qkit/functors.hpp"

using namespace qkit;
using fixtures::kind_of;

namespace {

const std::vector<Object>& small_objects() {
  static const std::vector<Object> objs{{"P", fixtures::one_point()},
                                        {"S", fixtures::non_t1()},
                                        {"D", fixtures::discrete()},
                                        {"C", fixtures::four_chain()}};
  return objs;
}

}  // namespace

TEST_CASE("induced property maps") {
  const auto r = fixtures::four_chain();
  const auto g = f_pr(PossibleTransition(r, r, {2, 2}));
  CHECK(g.map().values() == std::vector<int>{0, 2, 2});
  CHECK(f_pr(PossibleTransition::identity(r)) == PropertyTransition::identity(r));
  CHECK(f_pr(PossibleTransition::bottom(r, r)).is_bottom());
  const auto s = fixtures::non_t1();
  const auto d = fixtures::discrete();
  // In S, {y} and {x,y} share the closed set [x,y]; send them apart.
  try {
    f_pr(PossibleTransition(s, d, {1, 2}));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ASharpFails);
    CHECK(e.witness().contains("T"));
    CHECK(e.witness().contains("T_prime"));
  }
}

TEST_CASE("lift of a property map") {
  const auto r = fixtures::four_chain();
  const PropertyTransition g(r, r, std::vector<int>{0, 2, 2});
  const auto lift = lift_g_star(g);
  CHECK(lift.image_of_point(0) == 3);
  CHECK(f_pr(lift) == g);
  // Non-strict: the constant bottom lifts to the bottom morphism when the
  // bottom closed set is empty.
  const auto a = fixtures::absurd_point();
  const auto lb = lift_g_star(PropertyTransition::bottom(a, a));
  CHECK(lb.image_of_point(0) == 1);  // the closed set at the bottom is {p}
  const auto s = fixtures::non_t1();
  CHECK(lift_g_star(PropertyTransition::bottom(s, s)).is_bottom());
}

TEST_CASE("brute-force sup equals the lift") {
  const auto& objs = small_objects();
  for (const auto& a : objs) {
    for (const auto& b : objs) {
      for (const auto& g : enumerate_property_transitions(a.res, b.res, HomKind::ResZeroStrict).morphisms) {
        REQUIRE(galois_F_pr_star(g, true) == lift_g_star(g));
      }
    }
  }
}

TEST_CASE("the dual of an identity need not be an identity") {
  const auto s = fixtures::non_t1();
  const auto dual = lift_g_star(PropertyTransition::identity(s));
  CHECK(dual.image_of_point(1) == 3);  // y -> {x, y}
  CHECK_FALSE(dual == PossibleTransition::identity(s));
}

TEST_CASE("the dual preserves composition only laxly") {
  const auto p = fixtures::one_point();
  const auto atoms = fixtures::m2_atoms();
  const auto full = fixtures::m2_full();
  // p -> top of M2, then M2 identically into the full-state resolution.
  const PropertyTransition g1(p, atoms, std::vector<int>{0, atoms->image_lattice()->top()});
  const PropertyTransition g2(atoms, full, std::vector<int>{0, 1, 2, 3});
  REQUIRE(admits(g1, HomKind::ResZeroStrict));
  REQUIRE(admits(g2, HomKind::ResZeroStrict));
  const auto whole = lift_g_star(compose(g2, g1));
  const auto parts = compose(lift_g_star(g2), lift_g_star(g1));
  CHECK(whole.image_of_point(0) == 7);  // {a, b, 1}
  CHECK(parts.image_of_point(0) == 3);  // {a, b}
  CHECK(transition_le(parts, whole));
  CHECK(f_pr(parts) == compose(g2, g1));
}

TEST_CASE("functor and dual suites") {
  const auto& objs = small_objects();
  const auto fpr = functor_F_pr_check(objs);
  INFO(fpr.to_json_lines());
  CHECK(fpr.ok());

  const auto dual = galois_dual_check(objs);
  for (const auto& r : dual.results()) {
    INFO(r.to_json().dump());
    if (r.check == "dual preserves composition") continue;
    CHECK(r.status != Status::Violated);
  }
  CHECK(dual.find("dual of an identity differs from the identity")->status == Status::Witnessed);

  const auto loose = functor_F_R_check({{"A", fixtures::absurd_point()}, {"S", fixtures::non_t1()}, {"P", fixtures::one_point()}});
  INFO(loose.to_json_lines());
  CHECK(loose.ok());
}

TEST_CASE("non-strict lift of a map that collapses to bottom") {
  const auto c = fixtures::four_chain();
  const auto s = fixtures::non_t1();
  // l1 -> bottom, l2 -> top: join-preserving, not bottom-reflecting.
  const PropertyTransition g(c, s, std::vector<int>{0, 0, 2});
  CHECK(admits(g, HomKind::Res));
  CHECK_FALSE(admits(g, HomKind::ResZeroStrict));
  const auto lift = lift_g_star(g);
  CHECK(admits(lift, HomKind::ResSharp));
  CHECK(f_pr(lift) == g);
}

TEST_CASE("full-state resolutions and the lattice functor") {
  const auto m2 = builtin_lattice("M2");
  const auto u = U_star(m2);
  CHECK(u.sigma() == std::vector<std::string>{"a", "b", "1"});
  CHECK(u.target().name(u(3)) == "1");
  CHECK(is_canonical(u));
  CHECK(*functor_U(u) == *m2);
  std::vector<LatticePtr> lattices;
  for (const auto& n : builtin_lattice_names()) lattices.push_back(builtin_lattice(n));
  const auto report = functor_U_check(small_objects(), lattices);
  INFO(report.to_json_lines());
  CHECK(report.ok());
}

TEST_CASE("space functor") {
  const auto report = functor_V_check(small_objects(), enumerate_spaces(2));
  INFO(report.to_json_lines());
  CHECK(report.ok());
  const auto s = fixtures::non_t1_space();
  CHECK(functor_V(closure_resolution(s)) == s);
  const auto r = fixtures::non_t1();
  const PossibleTransition f(r, r, {1, 3});
  CHECK(res_sharp_to_star(f).images() == f.images());
}

TEST_CASE("closed-set lattice functor") {
  const auto d = fixtures::discrete();
  const auto w = functor_W(PossibleTransition(d, d, {2, 0}));
  // [] -> [], [x] -> [y], [y] -> [], [x,y] -> [y]
  CHECK(w.values() == std::vector<int>{0, 2, 0, 2});
  const auto id = functor_W(PossibleTransition::identity(d));
  CHECK(id == LatticeMap::identity(id.domain_ptr()));
  const auto s = fixtures::non_t1();
  CHECK(kind_of([&] { functor_W(PossibleTransition(s, s, {2, 1})); }) == ErrorKind::NotAClosMorphism);
  SuiteOptions loose;
  loose.strict = false;
  const auto report = functor_W_check(enumerate_spaces(2), loose);
  INFO(report.to_json_lines());
  CHECK(report.ok());
}

TEST_CASE("partial maps") {
  const auto d = fixtures::discrete_space();
  const auto s = fixtures::non_t1_space();
  const auto swap = ext_functor(SpaceMorphism{d, d, {1, 0}});
  CHECK(swap.images() == std::vector<Bits>{2, 1});
  const auto killed = ext_functor(SpaceMorphism{d, d, {-1, 1}});
  CHECK(killed(1) == 0);
  try {
    // Swapping x and y on S sends C({y}) = {x,y} outside C({x}) = {x}.
    ext_functor(SpaceMorphism{s, s, {1, 0}});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotContinuous);
    CHECK(e.witness().contains("T"));
  }
  const SpaceMorphism f{d, d, {-1, 0}};
  const SpaceMorphism g{d, d, {-1, 1}};
  CHECK(compose(g, f).image == std::vector<int>{-1, -1});
  CHECK(compose(g, f).kernel() == 3);
  const auto report = ext_check(enumerate_spaces(2));
  INFO(report.to_json_lines());
  CHECK(report.ok());
  CHECK(report.find("join of two partial-map images is not a partial-map image")->status == Status::Witnessed);
}
