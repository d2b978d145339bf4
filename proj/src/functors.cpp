#include "qkit/functors.hpp"

#include <random>
#include <string>

#include "qkit/sampling.hpp"

namespace qkit {

namespace {

using json = nlohmann::json;

json names_of(const Resolution& r, Bits s) {
  json out = json::array();
  for (int i : members(s)) out.push_back(r.sigma()[static_cast<std::size_t>(i)]);
  return out;
}

std::string arrow(const std::vector<Object>& objects, std::initializer_list<std::size_t> ids) {
  std::string s;
  for (std::size_t i : ids) s += (s.empty() ? "" : "->") + objects[i].name;
  return s;
}

/// Hom-sets of both levels between every ordered pair of objects, with the
/// induced property transition of every state morphism.
struct HomTables {
  std::vector<std::vector<HomSet<PossibleTransition>>> state;
  std::vector<std::vector<HomSet<PropertyTransition>>> property;
  std::vector<std::vector<std::vector<PropertyTransition>>> induced;

  HomTables(const std::vector<Object>& objects, const SuiteOptions& opt) {
    const std::size_t n = objects.size();
    state.resize(n);
    property.resize(n);
    induced.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        state[a].push_back(enumerate_transitions(objects[a].res, objects[b].res, state_kind(opt.strict), opt.caps));
        property[a].push_back(
            enumerate_property_transitions(objects[a].res, objects[b].res, property_kind(opt.strict), opt.caps));
        std::vector<PropertyTransition> row;
        for (const auto& f : state[a][b].morphisms) row.push_back(f_pr(f));
        induced[a].push_back(std::move(row));
      }
    }
  }
};

}  // namespace

PropertyTransition f_pr(const PossibleTransition& f) {
  const auto& r1 = f.source();
  const auto& r2 = f.target();
  if (auto pair = a_sharp_failure(f)) {
    throw Error(ErrorKind::ASharpFails, "induced property map is not well defined",
                json{{"T", names_of(r1, pair->first)},
                     {"T_prime", names_of(r1, pair->second)},
                     {"source_value", r1.target().name(r1(pair->first))},
                     {"image_values",
                      {r2.target().name(r2(f(pair->first))), r2.target().name(r2(f(pair->second)))}}});
  }
  const int n = r1.image_lattice()->size();
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) values[static_cast<std::size_t>(a)] = r2.image_index(f(r1.closed_set_of(a)));
  return PropertyTransition(f.source_ptr(), f.target_ptr(), std::move(values));
}

PossibleTransition lift_g_star(const PropertyTransition& g) {
  const auto& r1 = g.source();
  const auto& r2 = g.target();
  std::vector<Bits> images;
  for (int t = 0; t < r1.size(); ++t) images.push_back(r2.closed_set_of(g(r1.image_index(bit(t)))));
  return PossibleTransition(g.source_ptr(), g.target_ptr(), std::move(images));
}

PossibleTransition galois_F_pr_star(const PropertyTransition& g, bool strict, EnumerationCaps caps) {
  auto hom = enumerate_transitions(g.source_ptr(), g.target_ptr(), state_kind(strict), caps);
  std::vector<PossibleTransition> below;
  for (const auto& f : hom.morphisms) {
    if (property_le(f_pr(f), g)) below.push_back(f);
  }
  return join_transitions(below, g.source_ptr(), g.target_ptr());
}

// ---------------------------------------------------------------------------

Report functor_F_pr_check(const std::vector<Object>& objects, const SuiteOptions& opt) {
  const HomTables hom(objects, opt);
  const std::size_t n = objects.size();
  std::mt19937_64 rng(opt.seed);
  Report report;

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& H = hom.state[a][b];
      const auto& P = hom.property[a][b];
      const auto& F = hom.induced[a][b];
      const auto& r1 = *objects[a].res;
      const auto& r2 = *objects[b].res;
      const std::string inst = arrow(objects, {a, b});

      Tally square("induced property map makes the square commute", inst);
      Tally joins("induced property map preserves joins", inst);
      Tally typed("induced property map lies in the property hom-set", inst);
      for (std::size_t i = 0; i < H.size(); ++i) {
        const auto& f = H.morphisms[i];
        const auto& g = F[i];
        for (Bits t = 0; t <= r1.all(); ++t) {
          if (!square.expect(r2.image_index(f(t)) == g(r1.image_index(t)), [&] {
                return json{{"f", describe(f)}, {"T", names_of(r1, t)}};
              })) {
            break;
          }
        }
        joins.expect(g.map().preserves_joins(), [&] { return json{{"f", describe(f)}, {"f_pr", describe(g)}}; });
        typed.expect(P.contains(g), [&] { return json{{"f", describe(f)}, {"f_pr", describe(g)}}; });
      }
      report.add(square);
      report.add(joins);
      report.add(typed);

      if (a == b) {
        Tally ident("functor preserves identities", inst);
        ident.expect(f_pr(PossibleTransition::identity(objects[a].res)) ==
                     PropertyTransition::identity(objects[a].res));
        report.add(ident);
      }

      Tally hom_joins("functor preserves joins of morphisms", inst);
      hom_joins.expect(f_pr(PossibleTransition::bottom(objects[a].res, objects[b].res)) ==
                           PropertyTransition::bottom(objects[a].res, objects[b].res),
                       [] { return json("empty join"); });
      for_tuples({H.size(), H.size()}, opt.max_cases, rng, [&](const auto& i) {
        const auto& f1 = H.morphisms[i[0]];
        const auto& f2 = H.morphisms[i[1]];
        const auto lhs = f_pr(join_transitions({f1, f2}, f1.source_ptr(), f1.target_ptr()));
        const auto rhs = join_properties({F[i[0]], F[i[1]]}, f1.source_ptr(), f1.target_ptr());
        return hom_joins.expect(lhs == rhs, [&] { return json{{"f1", describe(f1)}, {"f2", describe(f2)}}; });
      });
      report.add(hom_joins);

      Tally full("functor is full through the lift", inst);
      for (const auto& g : P.morphisms) {
        const auto lift = lift_g_star(g);
        full.expect(H.contains(lift) && f_pr(lift) == g,
                    [&] { return json{{"g", describe(g)}, {"lift", describe(lift)}}; });
      }
      report.add(full);
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto& H1 = hom.state[a][b];
        const auto& H2 = hom.state[b][c];
        Tally comp("functor preserves composition", arrow(objects, {a, b, c}));
        for_tuples({H2.size(), H1.size()}, opt.max_cases, rng, [&](const auto& i) {
          const auto& g = H2.morphisms[i[0]];
          const auto& f = H1.morphisms[i[1]];
          const auto lhs = f_pr(compose(g, f));
          const auto rhs = compose(hom.induced[b][c][i[0]], hom.induced[a][b][i[1]]);
          return comp.expect(lhs == rhs, [&] { return json{{"g", describe(g)}, {"f", describe(f)}}; });
        });
        report.add(comp);
      }
    }
  }
  return report;
}

Report functor_F_R_check(const std::vector<Object>& objects, SuiteOptions options) {
  options.strict = false;
  return functor_F_pr_check(objects, options);
}

Report galois_dual_check(const std::vector<Object>& objects, const SuiteOptions& opt) {
  const HomTables hom(objects, opt);
  const std::size_t n = objects.size();
  std::mt19937_64 rng(opt.seed);
  Report report;

  CheckResult identity_gap{"dual of an identity differs from the identity", "all", Status::NotFound, 0, nullptr};
  CheckResult join_gap{"dual fails to preserve a binary join", "all", Status::NotFound, 0, nullptr};

  std::vector<std::vector<std::vector<PossibleTransition>>> lifts(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& H = hom.state[a][b];
      const auto& P = hom.property[a][b];
      const auto& F = hom.induced[a][b];
      const auto& A = objects[a].res;
      const auto& B = objects[b].res;
      const std::string inst = arrow(objects, {a, b});
      std::vector<PossibleTransition> row;

      Tally sup("lift equals the sup of morphisms below", inst);
      Tally section("functor after dual is the identity", inst);
      Tally inside("dual lands in the state hom-set", inst);
      for (const auto& g : P.morphisms) {
        std::vector<PossibleTransition> below;
        for (std::size_t i = 0; i < H.size(); ++i) {
          if (property_le(F[i], g)) below.push_back(H.morphisms[i]);
        }
        const auto brute = join_transitions(below, A, B);
        const auto lift = lift_g_star(g);
        sup.expect(brute == lift, [&] {
          return json{{"g", describe(g)}, {"lift", describe(lift)}, {"sup", describe(brute)}};
        });
        inside.expect(H.contains(lift), [&] { return json{{"g", describe(g)}, {"lift", describe(lift)}}; });
        section.expect(f_pr(lift) == g, [&] { return json{{"g", describe(g)}, {"lift", describe(lift)}}; });
        row.push_back(lift);
      }
      report.add(sup);
      report.add(section);
      report.add(inside);

      Tally adj("functor and dual form an adjunction", inst);
      for_tuples({H.size(), P.size()}, opt.max_cases, rng, [&](const auto& i) {
        const bool lhs = property_le(F[i[0]], P.morphisms[i[1]]);
        const bool rhs = transition_le(H.morphisms[i[0]], row[i[1]]);
        return adj.expect(lhs == rhs, [&] {
          return json{{"f", describe(H.morphisms[i[0]])}, {"g", describe(P.morphisms[i[1]])}};
        });
      });
      report.add(adj);

      if (a == b) {
        const auto id = PossibleTransition::identity(A);
        const auto dual_id = lift_g_star(PropertyTransition::identity(A));
        ++identity_gap.cases;
        if (!(dual_id == id) && identity_gap.status == Status::NotFound) {
          identity_gap.status = Status::Witnessed;
          identity_gap.witness = json{{"object", objects[a].name}, {"dual_of_identity", describe(dual_id)}};
        }
      }

      for_tuples({P.size(), P.size()}, opt.max_cases, rng, [&](const auto& i) {
        const auto& g1 = P.morphisms[i[0]];
        const auto& g2 = P.morphisms[i[1]];
        const auto lhs = lift_g_star(join_properties({g1, g2}, A, B));
        const auto rhs = join_transitions({row[i[0]], row[i[1]]}, A, B);
        ++join_gap.cases;
        if (!(lhs == rhs)) {
          join_gap.status = Status::Witnessed;
          join_gap.witness = json{{"pair", inst},
                                  {"g1", describe(g1)},
                                  {"g2", describe(g2)},
                                  {"dual_of_join", describe(lhs)},
                                  {"join_of_duals", describe(rhs)}};
          return false;
        }
        return true;
      });
      lifts[a].push_back(std::move(row));
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto& P1 = hom.property[a][b];
        const auto& P2 = hom.property[b][c];
        const std::string inst = arrow(objects, {a, b, c});
        Tally strict_comp("dual preserves composition", inst);
        Tally lax("composite of duals is below the dual of the composite", inst);
        Tally image("functor sends the composite of duals to the composite", inst);
        for_tuples({P2.size(), P1.size()}, opt.max_cases, rng, [&](const auto& i) {
          const auto& g2 = P2.morphisms[i[0]];
          const auto& g1 = P1.morphisms[i[1]];
          const auto g21 = compose(g2, g1);
          const auto dual_of_comp = lift_g_star(g21);
          const auto comp_of_duals = compose(lifts[b][c][i[0]], lifts[a][b][i[1]]);
          auto witness = [&] {
            return json{{"g1", describe(g1)},
                        {"g2", describe(g2)},
                        {"dual_of_composite", describe(dual_of_comp)},
                        {"composite_of_duals", describe(comp_of_duals)}};
          };
          strict_comp.expect(dual_of_comp == comp_of_duals, witness);
          lax.expect(transition_le(comp_of_duals, dual_of_comp), witness);
          image.expect(f_pr(comp_of_duals) == g21, witness);
          return true;
        });
        report.add(strict_comp);
        report.add(lax);
        report.add(image);
      }
    }
  }

  report.add(identity_gap);
  report.add(join_gap);
  return report;
}

// ---------------------------------------------------------------------------

const LatticePtr& functor_U(const Resolution& res) { return res.image_lattice(); }

Resolution U_star(const LatticePtr& lattice) {
  return join_resolution(lattice, full_set(lattice->size()) & ~bit(lattice->bottom()), true);
}

Report functor_U_check(const std::vector<Object>& objects, const std::vector<LatticePtr>& lattices,
                       const SuiteOptions& opt) {
  Report report;
  const std::size_t n = objects.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& A = objects[a].res;
      const auto& B = objects[b].res;
      const auto P = enumerate_property_transitions(A, B, property_kind(opt.strict), opt.caps);
      // Target hom-set: join-preserving maps between the image lattices,
      // bottom-reflecting in the strict regime, plus the constant bottom.
      const auto& LA = functor_U(*A);
      const auto& LB = functor_U(*B);
      std::vector<LatticeMap> target;
      const auto bottom = LatticeMap::constant(LA, LB, LB->bottom());
      bool has_bottom = false;
      for (auto& m : enumerate_join_preserving(LA, LB)) {
        bool reflects = true;
        for (int x = 0; x < LA->size(); ++x) {
          if ((m(x) == LB->bottom()) != (x == LA->bottom())) reflects = false;
        }
        if (!opt.strict || reflects || m == bottom) {
          has_bottom = has_bottom || m == bottom;
          target.push_back(std::move(m));
        }
      }
      if (!has_bottom) target.push_back(bottom);

      Tally ff("lattice functor is fully faithful", arrow(objects, {a, b}));
      for (std::size_t i = 0; i < P.size(); ++i) {
        for (std::size_t j = i + 1; j < P.size(); ++j) {
          ff.expect(!(P.morphisms[i].map() == P.morphisms[j].map()),
                    [&] { return json{{"collision", describe(P.morphisms[i])}}; });
        }
      }
      for (const auto& m : target) {
        bool hit = false;
        for (const auto& g : P.morphisms) hit = hit || g.map() == m;
        ff.expect(hit, [&] { return json{{"missing", m.values()}}; });
      }
      ff.expect(P.size() == target.size(), [&] {
        return json{{"hom_size", P.size()}, {"lattice_hom_size", target.size()}};
      });
      report.add(ff);
    }
  }

  for (const auto& L : lattices) {
    Tally round("lattice of the full-state resolution is the lattice", L->poset().elements().empty() ? "" : L->name(L->top()));
    const auto res = U_star(L);
    round.expect(*functor_U(res) == *L, [&] { return json{{"elements", functor_U(res)->poset().elements()}}; });
    report.add(round);
  }

  for (const auto& o : objects) {
    Tally back("full-state resolution of the image matches the canonicalization", o.name);
    const auto c = canonicalize(*o.res);
    const auto u = U_star(functor_U(*o.res));
    back.expect(relate_canonical(u, c.canonical).has_value(), [] { return json("no essential isomorphism"); });
    report.add(back);
  }
  return report;
}

// ---------------------------------------------------------------------------

const ClosureSpace& functor_V(const Resolution& res) { return res.factor_space(); }

PossibleTransition res_sharp_to_star(const PossibleTransition& f) {
  if (auto pair = a_sharp_failure(f)) {
    throw Error(ErrorKind::ASharpFails, "map is not image-compatible",
                json{{"T", names_of(f.source(), pair->first)}, {"T_prime", names_of(f.source(), pair->second)}});
  }
  if (auto t = a_star_failure(f)) {
    throw Error(ErrorKind::LemmaViolation, "image-compatible map is not closure-continuous",
                json{{"T", names_of(f.source(), *t)}});
  }
  return f;
}

Report functor_V_check(const std::vector<Object>& objects, const std::vector<ClosureSpace>& spaces,
                       const SuiteOptions& opt) {
  Report report;
  for (const auto& o : objects) {
    Tally obj("space functor returns the closure factor", o.name);
    obj.expect(functor_V(*o.res) == factorize(*o.res).space);
    report.add(obj);
  }
  for (const auto& s : spaces) {
    Tally surj("space functor is surjective on objects", set_label(s.universe(), full_set(s.size())));
    surj.expect(functor_V(closure_resolution(s)) == s, [] { return json("space not recovered"); });
    report.add(surj);
  }

  const std::size_t n = objects.size();
  const HomKind sharp = state_kind(opt.strict);
  const HomKind star = opt.strict ? HomKind::ResStarStrict : HomKind::ResStar;
  std::vector<ResolutionPtr> refactored;
  for (const auto& o : objects) refactored.push_back(share(closure_resolution(functor_V(*o.res))));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::string inst = arrow(objects, {a, b});
      const auto h_sharp = enumerate_transitions(objects[a].res, objects[b].res, sharp, opt.caps);
      const auto h_star = enumerate_transitions(objects[a].res, objects[b].res, star, opt.caps);
      const auto h_space = enumerate_transitions(refactored[a], refactored[b], star, opt.caps);

      Tally iso("image-compatible and continuous hom-sets coincide", inst);
      iso.expect(h_sharp.size() == h_star.size(), [&] {
        return json{{"sharp", h_sharp.size()}, {"star", h_star.size()}};
      });
      for (std::size_t i = 0; i < std::min(h_sharp.size(), h_star.size()); ++i) {
        iso.expect(h_sharp.morphisms[i].images() == res_sharp_to_star(h_sharp.morphisms[i]).images() &&
                       h_sharp.morphisms[i].images() == h_star.morphisms[i].images(),
                   [&] { return json{{"f", describe(h_sharp.morphisms[i])}}; });
      }
      report.add(iso);

      Tally ff("space functor is fully faithful", inst);
      ff.expect(h_star.size() == h_space.size(), [&] {
        return json{{"resolutions", h_star.size()}, {"spaces", h_space.size()}};
      });
      for (std::size_t i = 0; i < std::min(h_star.size(), h_space.size()); ++i) {
        ff.expect(h_star.morphisms[i].images() == h_space.morphisms[i].images(),
                  [&] { return json{{"f", describe(h_star.morphisms[i])}}; });
      }
      report.add(ff);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

LatticeMap functor_W(const PossibleTransition& f) {
  if (auto t = a_star_failure(f)) {
    throw Error(ErrorKind::NotAClosMorphism, "map is not closure-continuous",
                json{{"T", names_of(f.source(), *t)}});
  }
  const auto& s1 = functor_V(f.source());
  const auto& s2 = functor_V(f.target());
  auto l1 = std::make_shared<const CompleteLattice>(closed_set_lattice(s1));
  auto l2 = std::make_shared<const CompleteLattice>(closed_set_lattice(s2));
  std::vector<int> values;
  for (Bits closed : s1.closed_sets()) values.push_back(s2.closed_index(s2.closure_of(f(closed))));
  return LatticeMap(std::move(l1), std::move(l2), std::move(values));
}

Report functor_W_check(const std::vector<ClosureSpace>& spaces, const SuiteOptions& opt) {
  Report report;
  std::vector<Object> objects;
  for (const auto& s : spaces) objects.push_back({set_label(s.universe(), full_set(s.size())), share(closure_resolution(s))});
  const std::size_t n = objects.size();
  const HomKind kind = opt.strict ? HomKind::ResStarStrict : HomKind::ResStar;
  std::mt19937_64 rng(opt.seed);

  std::vector<std::vector<HomSet<PossibleTransition>>> hom(n);
  std::vector<std::vector<std::vector<LatticeMap>>> images(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      hom[a].push_back(enumerate_transitions(objects[a].res, objects[b].res, kind, opt.caps));
      std::vector<LatticeMap> row;
      for (const auto& f : hom[a][b].morphisms) row.push_back(functor_W(f));
      images[a].push_back(std::move(row));
    }
  }

  CheckResult collapse{"lattice functor identifies distinct continuous maps", "all", Status::NotFound, 0, nullptr};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::string inst = arrow(objects, {a, b});
      const auto& H = hom[a][b];
      const auto& W = images[a][b];
      if (a == b) {
        Tally ident("lattice functor preserves identities", inst);
        const auto w = functor_W(PossibleTransition::identity(objects[a].res));
        ident.expect(w == LatticeMap::identity(w.domain_ptr()));
        report.add(ident);
      }
      Tally joins("lattice functor values preserve joins", inst);
      for (const auto& w : W) joins.expect(w.preserves_joins(), [&] { return json{{"values", w.values()}}; });
      report.add(joins);

      Tally hom_joins("lattice functor preserves joins of morphisms", inst);
      for_tuples({H.size(), H.size()}, opt.max_cases, rng, [&](const auto& i) {
        const auto j = join_transitions({H.morphisms[i[0]], H.morphisms[i[1]]}, objects[a].res, objects[b].res);
        const auto lhs = functor_W(j);
        const auto rhs = pointwise_join({W[i[0]], W[i[1]]}, lhs.domain_ptr(), lhs.codomain_ptr());
        return hom_joins.expect(lhs == rhs, [&] {
          return json{{"f1", describe(H.morphisms[i[0]])}, {"f2", describe(H.morphisms[i[1]])}};
        });
      });
      report.add(hom_joins);

      Tally full("lattice functor is full", inst);
      if (!W.empty()) {
        for (const auto& m : enumerate_join_preserving(W.front().domain_ptr(), W.front().codomain_ptr())) {
          bool reflects = true;
          for (int x = 0; x < m.domain().size(); ++x) {
            if ((m(x) == m.codomain().bottom()) != (x == m.domain().bottom())) reflects = false;
          }
          bool constant_bottom = true;
          for (int v : m.values()) constant_bottom = constant_bottom && v == m.codomain().bottom();
          if (opt.strict && !reflects && !constant_bottom) continue;
          bool hit = false;
          for (const auto& w : W) hit = hit || w == m;
          full.expect(hit, [&] { return json{{"missing", m.values()}}; });
        }
      }
      report.add(full);

      for (std::size_t i = 0; i < H.size(); ++i) {
        for (std::size_t j = i + 1; j < H.size(); ++j) {
          ++collapse.cases;
          if (collapse.status == Status::NotFound && W[i] == W[j]) {
            collapse.status = Status::Witnessed;
            collapse.witness = json{{"pair", inst}, {"f1", describe(H.morphisms[i])}, {"f2", describe(H.morphisms[j])}};
          }
        }
      }
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        Tally comp("lattice functor preserves composition", arrow(objects, {a, b, c}));
        const auto& H1 = hom[a][b];
        const auto& H2 = hom[b][c];
        for_tuples({H2.size(), H1.size()}, opt.max_cases, rng, [&](const auto& i) {
          const auto lhs = functor_W(compose(H2.morphisms[i[0]], H1.morphisms[i[1]]));
          const auto rhs = compose(images[b][c][i[0]], images[a][b][i[1]]);
          return comp.expect(lhs == rhs, [&] {
            return json{{"g", describe(H2.morphisms[i[0]])}, {"f", describe(H1.morphisms[i[1]])}};
          });
        });
        report.add(comp);
      }
    }
  }
  report.add(collapse);
  return report;
}

// ---------------------------------------------------------------------------

Bits SpaceMorphism::kernel() const {
  Bits k = 0;
  for (std::size_t x = 0; x < image.size(); ++x) {
    if (image[x] < 0) k |= bit(static_cast<int>(x));
  }
  return k;
}

SpaceMorphism compose(const SpaceMorphism& second, const SpaceMorphism& first) {
  if (!(first.target == second.source)) {
    throw Error(ErrorKind::NotComposable, "target space of the first map is not the source of the second");
  }
  std::vector<int> image;
  for (int y : first.image) image.push_back(y < 0 ? -1 : second.image[static_cast<std::size_t>(y)]);
  return SpaceMorphism{first.source, second.target, std::move(image)};
}

PossibleTransition ext_functor(const SpaceMorphism& f) {
  const auto& s1 = f.source;
  const auto& s2 = f.target;
  if (static_cast<int>(f.image.size()) != s1.size()) {
    throw Error(ErrorKind::Parse, "partial map must list every source point");
  }
  std::vector<Bits> images;
  for (int y : f.image) {
    if (y >= s2.size()) throw Error(ErrorKind::UnknownElement, "image point outside the target space");
    images.push_back(y < 0 ? 0 : bit(y));
  }
  auto apply_map = [&](Bits t) {
    Bits out = 0;
    for (int x : members(t)) out |= images[static_cast<std::size_t>(x)];
    return out;
  };
  const Bits kernel = f.kernel();
  for (Bits t = 0; t <= full_set(s1.size()); ++t) {
    const Bits lhs = apply_map(s1.closure_of(t) & ~kernel);
    const Bits rhs = s2.closure_of(apply_map(t & ~kernel));
    if (!is_subset(lhs, rhs)) {
      throw Error(ErrorKind::NotContinuous, "partial map is not continuous",
                  json{{"T", set_label(s1.universe(), t)},
                       {"image_of_closure", set_label(s2.universe(), lhs)},
                       {"closure_of_image", set_label(s2.universe(), rhs)}});
    }
  }
  return PossibleTransition(share(closure_resolution(s1)), share(closure_resolution(s2)), std::move(images));
}

namespace {

std::vector<SpaceMorphism> continuous_partial_maps(const ClosureSpace& s1, const ClosureSpace& s2) {
  std::vector<SpaceMorphism> out;
  const int n1 = s1.size();
  const int base = s2.size() + 1;
  std::size_t total = 1;
  for (int i = 0; i < n1; ++i) total *= static_cast<std::size_t>(base);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> image;
    std::size_t rest = code;
    for (int i = 0; i < n1; ++i) {
      image.push_back(static_cast<int>(rest % static_cast<std::size_t>(base)) - 1);
      rest /= static_cast<std::size_t>(base);
    }
    SpaceMorphism f{s1, s2, std::move(image)};
    try {
      ext_functor(f);
      out.push_back(std::move(f));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotContinuous) throw;
    }
  }
  return out;
}

}  // namespace

Report ext_check(const std::vector<ClosureSpace>& spaces, const SuiteOptions& opt) {
  Report report;
  const std::size_t n = spaces.size();
  std::mt19937_64 rng(opt.seed);
  auto label = [&](std::size_t i) { return set_label(spaces[i].universe(), full_set(spaces[i].size())); };

  std::vector<std::vector<std::vector<SpaceMorphism>>> maps(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) maps[a].push_back(continuous_partial_maps(spaces[a], spaces[b]));
  }

  CheckResult join_escape{"join of two partial-map images is not a partial-map image", "all", Status::NotFound, 0,
                          nullptr};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::string inst = label(a) + "->" + label(b);
      Tally shape("partial-map image is continuous with singleton-or-empty values", inst);
      std::vector<PossibleTransition> ext;
      for (const auto& f : maps[a][b]) {
        ext.push_back(ext_functor(f));
        const auto& e = ext.back();
        bool small = true;
        for (Bits img : e.images()) small = small && count(img) <= 1;
        shape.expect(small && !a_star_failure(e), [&] { return json{{"image", f.image}}; });
      }
      report.add(shape);
      if (a == b) {
        Tally ident("partial-map functor preserves identities", inst);
        std::vector<int> id;
        for (int x = 0; x < spaces[a].size(); ++x) id.push_back(x);
        const auto e = ext_functor(SpaceMorphism{spaces[a], spaces[a], id});
        ident.expect(e.images() == PossibleTransition::identity(e.source_ptr()).images());
        report.add(ident);
      }
      for_tuples({ext.size(), ext.size()}, opt.max_cases, rng, [&](const auto& i) {
        ++join_escape.cases;
        const auto j = join_transitions({ext[i[0]], ext[i[1]]}, ext[i[0]].source_ptr(), ext[i[0]].target_ptr());
        for (Bits img : j.images()) {
          if (count(img) > 1) {
            join_escape.status = Status::Witnessed;
            join_escape.witness = json{{"pair", inst},
                                       {"f1", maps[a][b][i[0]].image},
                                       {"f2", maps[a][b][i[1]].image},
                                       {"join", describe(j)}};
            return false;
          }
        }
        return true;
      });
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        Tally comp("partial-map functor preserves composition", label(a) + "->" + label(b) + "->" + label(c));
        const auto& M1 = maps[a][b];
        const auto& M2 = maps[b][c];
        for_tuples({M2.size(), M1.size()}, opt.max_cases, rng, [&](const auto& i) {
          const auto& g = M2[i[0]];
          const auto& f = M1[i[1]];
          bool ok = true;
          try {
            ok = ext_functor(compose(g, f)) == compose(ext_functor(g), ext_functor(f));
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotContinuous) throw;
            ok = false;
          }
          return comp.expect(ok, [&] { return json{{"g", g.image}, {"f", f.image}}; });
        });
        report.add(comp);
      }
    }
  }
  report.add(join_escape);
  return report;
}

}  // namespace qkit
