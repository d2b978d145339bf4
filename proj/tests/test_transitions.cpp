#include "fixtures.hpp"
#include "oracles.hpp"
#include "qkit/enumerate.hpp"
#include "qkit/transitions.hpp"

using namespace qkit;
using fixtures::kind_of;

namespace {

/// Small pool: every strict and non-strict resolution with up to 2 points
/// into the lattices with up to 3 elements.
std::vector<ResolutionPtr> pool(bool strict) {
  std::vector<ResolutionPtr> out;
  for (int m = 1; m <= 3; ++m) {
    for (const auto& p : enumerate_posets(m)) {
      auto target = std::make_shared<const FinitePoset>(p);
      for (int k = 1; k <= 2; ++k) {
        for (auto& r : enumerate_resolutions(k, target, strict)) out.push_back(share(std::move(r)));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("kind names round trip") {
  for (HomKind k : {HomKind::ResSharpStrict, HomKind::ResSharp, HomKind::ResStarStrict, HomKind::ResStar,
                    HomKind::ResZeroStrict, HomKind::Res}) {
    CHECK(hom_kind_from_string(to_string(k)) == k);
  }
  CHECK(kind_of([] { hom_kind_from_string("res-nope"); }) == ErrorKind::Parse);
}

TEST_CASE("applying transitions") {
  const auto d = fixtures::discrete();
  const PossibleTransition f(d, d, {1, 3});
  CHECK(f(3) == 3);
  CHECK(f(0) == 0);
  const auto id = PossibleTransition::identity(d);
  for (Bits t = 0; t < 4; ++t) {
    CHECK(id(t) == t);
    CHECK(PossibleTransition::bottom(d, d)(t) == 0);
  }
}

TEST_CASE("side conditions agree with the definitions on every map") {
  for (bool strict : {true, false}) {
    const auto objects = pool(strict);
    for (const auto& a : objects) {
      for (const auto& b : objects) {
        for (const auto& images : oracle::all_union_maps(a->size(), b->size())) {
          const PossibleTransition f(a, b, images);
          const auto c = check_conditions(f);
          REQUIRE(c.a_sharp == oracle::a_sharp(f));
          REQUIRE(c.a_star == oracle::a_star(f));
          bool empty = true;
          for (Bits t = 0; t <= a->all(); ++t) empty = empty && ((f(t) == 0) == (t == 0));
          REQUIRE(c.a_empty == empty);
        }
      }
    }
  }
}

TEST_CASE("condition examples") {
  const auto r = fixtures::four_chain();
  const auto c = check_conditions(PossibleTransition::identity(r));
  CHECK((c.a_empty && c.a_sharp && c.a_star));
  // Both points into one point of the same closed set.
  const PossibleTransition constant(r, r, {2, 2});
  CHECK(check_conditions(constant).a_sharp);
  const PossibleTransition drop(r, r, {0, 2});
  CHECK_FALSE(check_conditions(drop).a_empty);
  CHECK_FALSE(admits(drop, HomKind::ResSharpStrict));
}

TEST_CASE("hom-sets are the admitted maps") {
  for (bool strict : {true, false}) {
    const auto objects = pool(strict);
    for (std::size_t i = 0; i < objects.size(); i += 3) {
      for (std::size_t j = 0; j < objects.size(); j += 5) {
        const auto& a = objects[i];
        const auto& b = objects[j];
        const auto hom = enumerate_transitions(a, b, state_kind(strict));
        std::size_t want = 0;
        for (const auto& images : oracle::all_union_maps(a->size(), b->size())) {
          const PossibleTransition f(a, b, images);
          bool nonempty = true;
          for (Bits img : images) nonempty = nonempty && img != 0;
          const bool bottom = std::all_of(images.begin(), images.end(), [](Bits x) { return x == 0; });
          const bool in = oracle::a_sharp(f) && (!strict || bottom || nonempty);
          want += in ? 1 : 0;
          REQUIRE(hom.contains(f) == in);
        }
        REQUIRE(hom.size() == want);
        REQUIRE(hom.contains(PossibleTransition::bottom(a, b)));
      }
    }
  }
}

TEST_CASE("one-point object") {
  const auto p = fixtures::one_point();
  const auto hom = enumerate_transitions(p, p, HomKind::ResSharpStrict);
  REQUIRE(hom.size() == 2);
  CHECK(hom.contains(PossibleTransition::bottom(p, p)));
  CHECK(hom.contains(PossibleTransition::identity(p)));
  const auto report = verify_quantaloid_laws({{"P", p}}, HomKind::ResSharpStrict);
  CHECK(report.ok());
}

TEST_CASE("composition and joins") {
  const auto d = fixtures::discrete();
  const PossibleTransition f(d, d, {1, 0});
  const PossibleTransition g(d, d, {2, 0});
  CHECK(compose(f, PossibleTransition::identity(d)) == f);
  CHECK(join_transitions({f, g}, d, d).images() == std::vector<Bits>{3, 0});
  CHECK(join_transitions({}, d, d) == PossibleTransition::bottom(d, d));
  CHECK(transition_le(f, join_transitions({f, g}, d, d)));
  const auto other = fixtures::non_t1();
  CHECK(kind_of([&] { compose(f, PossibleTransition::identity(other)); }) == ErrorKind::NotComposable);
}

TEST_CASE("composites and joins stay in the hom-sets") {
  const std::vector<ResolutionPtr> objs{fixtures::one_point(), fixtures::non_t1(), fixtures::discrete(),
                                        fixtures::four_chain()};
  for (const auto& a : objs) {
    for (const auto& b : objs) {
      const auto h1 = enumerate_transitions(a, b, HomKind::ResSharpStrict);
      for (const auto& f : h1.morphisms) {
        for (const auto& g : h1.morphisms) REQUIRE(h1.contains(join_transitions({f, g}, a, b)));
      }
      for (const auto& c : objs) {
        const auto h2 = enumerate_transitions(b, c, HomKind::ResSharpStrict);
        const auto h3 = enumerate_transitions(a, c, HomKind::ResSharpStrict);
        for (const auto& f : h1.morphisms) {
          for (const auto& g : h2.morphisms) REQUIRE(h3.contains(compose(g, f)));
        }
      }
    }
  }
}

TEST_CASE("quantaloid laws on small objects") {
  const std::vector<Object> strict{{"P", fixtures::one_point()}, {"S", fixtures::non_t1()}, {"D", fixtures::discrete()}};
  for (HomKind k : {HomKind::ResSharpStrict, HomKind::ResSharp, HomKind::ResStarStrict, HomKind::ResStar,
                    HomKind::ResZeroStrict, HomKind::Res}) {
    const auto report = verify_quantaloid_laws(strict, k);
    INFO(report.to_json_lines());
    CHECK(report.ok());
    CHECK(report.total_cases() > 0);
  }
  const std::vector<Object> loose{{"A", fixtures::absurd_point()}, {"S", fixtures::non_t1()}};
  CHECK(verify_quantaloid_laws(loose, HomKind::ResSharp).ok());
  CHECK(verify_quantaloid_laws(loose, HomKind::Res).ok());
  CHECK(kind_of([&] { verify_quantaloid_laws(loose, HomKind::ResSharpStrict); }) == ErrorKind::Usage);
}

TEST_CASE("property transitions") {
  const auto r = fixtures::four_chain();
  const auto id = PropertyTransition::identity(r);
  const auto c = check_property_transition(id);
  CHECK((c.a_vee && c.a_zero));
  const auto bottom = PropertyTransition::bottom(r, r);
  CHECK_FALSE(check_property_transition(bottom).a_zero);
  CHECK(admits(bottom, HomKind::ResZeroStrict));
  const PropertyTransition up(r, r, std::vector<int>{0, 2, 2});
  const auto cu = check_property_transition(up);
  CHECK((cu.a_vee && cu.a_zero));
  const auto hom = enumerate_property_transitions(r, r, HomKind::ResZeroStrict);
  CHECK(hom.contains(bottom));
  CHECK(hom.contains(up));
  // Bottom-reflecting joins on a 3-chain: (l1, l2) -> (l1, l1), (l1, l2), (l2, l2); plus bottom.
  CHECK(hom.size() == 4);
}

TEST_CASE("enumeration caps") {
  const auto b3 = builtin_lattice("B3");
  const auto big = share(join_resolution(b3, b3->atoms()));
  const auto p = fixtures::one_point();
  CHECK_NOTHROW(enumerate_transitions(big, p, HomKind::ResSharpStrict));
  EnumerationCaps caps;
  caps.max_points = 2;
  CHECK(kind_of([&] { enumerate_transitions(big, p, HomKind::ResSharpStrict, caps); }) == ErrorKind::SizeCapExceeded);
}
