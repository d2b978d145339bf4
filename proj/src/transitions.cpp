#include "qkit/transitions.hpp"

#include "qkit/sampling.hpp"

#include <cstdlib>
#include <map>

namespace qkit {

namespace {

nlohmann::json set_json(const Resolution& r, Bits s) {
  nlohmann::json out = nlohmann::json::array();
  for (int i : members(s)) out.push_back(r.sigma()[static_cast<std::size_t>(i)]);
  return out;
}

void require_composable(const ResolutionPtr& mid_out, const ResolutionPtr& mid_in) {
  if (!same_object(mid_out, mid_in)) {
    throw Error(ErrorKind::NotComposable, "target of the first morphism is not the source of the second");
  }
}

}  // namespace

std::string_view to_string(HomKind kind) {
  switch (kind) {
    case HomKind::ResSharpStrict: return "res-sharp-strict";
    case HomKind::ResSharp: return "res-sharp";
    case HomKind::ResStarStrict: return "res-star-strict";
    case HomKind::ResStar: return "res-star";
    case HomKind::ResZeroStrict: return "res-zero-strict";
    case HomKind::Res: return "res";
  }
  return "unknown";
}

HomKind hom_kind_from_string(std::string_view name) {
  for (HomKind k : {HomKind::ResSharpStrict, HomKind::ResSharp, HomKind::ResStarStrict,
                    HomKind::ResStar, HomKind::ResZeroStrict, HomKind::Res}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorKind::Parse, "unknown morphism kind '" + std::string(name) + "'");
}

bool is_strict(HomKind kind) {
  return kind == HomKind::ResSharpStrict || kind == HomKind::ResStarStrict ||
         kind == HomKind::ResZeroStrict;
}

bool is_state_kind(HomKind kind) { return kind != HomKind::ResZeroStrict && kind != HomKind::Res; }

bool same_object(const ResolutionPtr& a, const ResolutionPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

PossibleTransition::PossibleTransition(ResolutionPtr source, ResolutionPtr target,
                                       std::vector<Bits> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_->size()) {
    throw Error(ErrorKind::Parse, "transition must give an image for every source point");
  }
  for (Bits b : images_) {
    if (!is_subset(b, target_->all())) throw Error(ErrorKind::UnknownElement, "image outside the target states");
  }
}

PossibleTransition PossibleTransition::identity(const ResolutionPtr& object) {
  std::vector<Bits> images;
  for (int p = 0; p < object->size(); ++p) images.push_back(bit(p));
  return PossibleTransition(object, object, std::move(images));
}

PossibleTransition PossibleTransition::bottom(const ResolutionPtr& source, const ResolutionPtr& target) {
  return PossibleTransition(source, target, std::vector<Bits>(static_cast<std::size_t>(source->size()), 0));
}

Bits PossibleTransition::operator()(Bits t) const {
  Bits out = 0;
  for (int p : members(t)) out |= images_[static_cast<std::size_t>(p)];
  return out;
}

bool PossibleTransition::is_bottom() const {
  for (Bits b : images_) {
    if (b != 0) return false;
  }
  return true;
}

bool operator==(const PossibleTransition& a, const PossibleTransition& b) {
  return a.images_ == b.images_ && same_object(a.source_, b.source_) && same_object(a.target_, b.target_);
}

Bits apply(const PossibleTransition& f, Bits t) { return f(t); }

bool satisfies_a_empty(const PossibleTransition& f) {
  for (Bits t = 0; t <= f.source().all(); ++t) {
    if ((f(t) == 0) != (t == 0)) return false;
  }
  return true;
}

std::optional<std::pair<Bits, Bits>> a_sharp_failure(const PossibleTransition& f) {
  const auto& r1 = f.source();
  const auto& r2 = f.target();
  // First representative seen for each source value.
  std::map<int, Bits> representative;
  for (Bits t = 0; t <= r1.all(); ++t) {
    auto [it, fresh] = representative.emplace(r1(t), t);
    if (!fresh && r2(f(it->second)) != r2(f(t))) return std::make_pair(it->second, t);
  }
  return std::nullopt;
}

std::optional<Bits> a_star_failure(const PossibleTransition& f) {
  const auto& r1 = f.source();
  const auto& r2 = f.target();
  for (Bits t = 0; t <= r1.all(); ++t) {
    if (!is_subset(f(r1.closure(t)), r2.closure(f(t)))) return t;
  }
  return std::nullopt;
}

Conditions check_conditions(const PossibleTransition& f) {
  Conditions c{satisfies_a_empty(f), !a_sharp_failure(f), !a_star_failure(f)};
  if (c.a_sharp != c.a_star) {
    nlohmann::json w{{"a_sharp", c.a_sharp}, {"a_star", c.a_star}};
    if (auto p = a_sharp_failure(f)) w["a_sharp_pair"] = {set_json(f.source(), p->first), set_json(f.source(), p->second)};
    if (auto t = a_star_failure(f)) w["a_star_subset"] = set_json(f.source(), *t);
    throw Error(ErrorKind::LemmaViolation, "image-compatibility and closure-continuity disagree", w);
  }
  return c;
}

PossibleTransition compose(const PossibleTransition& second, const PossibleTransition& first) {
  require_composable(first.target_ptr(), second.source_ptr());
  std::vector<Bits> images;
  images.reserve(first.images().size());
  for (Bits b : first.images()) images.push_back(second(b));
  return PossibleTransition(first.source_ptr(), second.target_ptr(), std::move(images));
}

PossibleTransition join_transitions(const std::vector<PossibleTransition>& family,
                                    const ResolutionPtr& source, const ResolutionPtr& target) {
  std::vector<Bits> images(static_cast<std::size_t>(source->size()), 0);
  for (const auto& f : family) {
    if (!same_object(f.source_ptr(), source) || !same_object(f.target_ptr(), target)) {
      throw Error(ErrorKind::NotComposable, "join over morphisms of different hom-sets");
    }
    for (std::size_t p = 0; p < images.size(); ++p) images[p] |= f.images()[p];
  }
  return PossibleTransition(source, target, std::move(images));
}

bool transition_le(const PossibleTransition& a, const PossibleTransition& b) {
  for (std::size_t p = 0; p < a.images().size(); ++p) {
    if (!is_subset(a.images()[p], b.images()[p])) return false;
  }
  return true;
}

bool admits(const PossibleTransition& f, HomKind kind) {
  switch (kind) {
    case HomKind::ResSharpStrict:
      return f.is_bottom() || (satisfies_a_empty(f) && !a_sharp_failure(f));
    case HomKind::ResSharp:
      return !a_sharp_failure(f);
    case HomKind::ResStarStrict:
      return f.is_bottom() || (satisfies_a_empty(f) && !a_star_failure(f));
    case HomKind::ResStar:
      return !a_star_failure(f);
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------

PropertyTransition::PropertyTransition(ResolutionPtr source, ResolutionPtr target, LatticeMap map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (!same_lattice(map_.domain_ptr(), source_->image_lattice()) ||
      !same_lattice(map_.codomain_ptr(), target_->image_lattice())) {
    throw Error(ErrorKind::NotComposable, "property map must run between the image lattices");
  }
}

PropertyTransition::PropertyTransition(ResolutionPtr source, ResolutionPtr target,
                                       std::vector<int> values)
    : PropertyTransition(source, target,
                         LatticeMap(source->image_lattice(), target->image_lattice(), std::move(values))) {}

PropertyTransition PropertyTransition::identity(const ResolutionPtr& object) {
  return PropertyTransition(object, object, LatticeMap::identity(object->image_lattice()));
}

PropertyTransition PropertyTransition::bottom(const ResolutionPtr& source, const ResolutionPtr& target) {
  return PropertyTransition(source, target,
                            LatticeMap::constant(source->image_lattice(), target->image_lattice(),
                                                 target->image_lattice()->bottom()));
}

bool PropertyTransition::is_bottom() const {
  for (int v : map_.values()) {
    if (v != map_.codomain().bottom()) return false;
  }
  return true;
}

PropertyConditions check_property_transition(const PropertyTransition& g) {
  const auto& d = g.map().domain();
  const auto& c = g.map().codomain();
  bool a_zero = true;
  for (int a = 0; a < d.size(); ++a) {
    if ((g(a) == c.bottom()) != (a == d.bottom())) a_zero = false;
  }
  return {g.map().preserves_joins(), a_zero};
}

PropertyTransition compose(const PropertyTransition& second, const PropertyTransition& first) {
  require_composable(first.target_ptr(), second.source_ptr());
  std::vector<int> v;
  for (int x : first.map().values()) v.push_back(second(x));
  return PropertyTransition(first.source_ptr(), second.target_ptr(), std::move(v));
}

PropertyTransition join_properties(const std::vector<PropertyTransition>& family,
                                   const ResolutionPtr& source, const ResolutionPtr& target) {
  std::vector<LatticeMap> maps;
  for (const auto& g : family) {
    if (!same_object(g.source_ptr(), source) || !same_object(g.target_ptr(), target)) {
      throw Error(ErrorKind::NotComposable, "join over morphisms of different hom-sets");
    }
    maps.push_back(g.map());
  }
  return PropertyTransition(source, target,
                            pointwise_join(maps, source->image_lattice(), target->image_lattice()));
}

bool property_le(const PropertyTransition& a, const PropertyTransition& b) {
  return pointwise_le(a.map(), b.map());
}

bool admits(const PropertyTransition& g, HomKind kind) {
  const auto c = check_property_transition(g);
  switch (kind) {
    case HomKind::ResZeroStrict: return g.is_bottom() || (c.a_vee && c.a_zero);
    case HomKind::Res: return c.a_vee;
    default: return false;
  }
}

nlohmann::json describe(const PossibleTransition& f) {
  nlohmann::json j = nlohmann::json::object();
  for (int p = 0; p < f.source().size(); ++p) {
    j[f.source().sigma()[static_cast<std::size_t>(p)]] = set_json(f.target(), f.image_of_point(p));
  }
  return j;
}

nlohmann::json describe(const PropertyTransition& g) {
  nlohmann::json j = nlohmann::json::object();
  const auto& d = g.map().domain();
  const auto& c = g.map().codomain();
  for (int a = 0; a < d.size(); ++a) j[d.name(a)] = c.name(g(a));
  return j;
}

HomKind state_kind(bool strict) { return strict ? HomKind::ResSharpStrict : HomKind::ResSharp; }
HomKind property_kind(bool strict) { return strict ? HomKind::ResZeroStrict : HomKind::Res; }

// ---------------------------------------------------------------------------

EnumerationCaps EnumerationCaps::from_env() {
  EnumerationCaps caps;
  if (const char* v = std::getenv("QKIT_CAP")) {
    try {
      caps.max_points = std::stoi(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Usage, std::string("QKIT_CAP is not an integer: ") + v);
    }
  }
  return caps;
}

namespace {

void check_caps(const ResolutionPtr& a, const ResolutionPtr& b, HomKind kind, EnumerationCaps caps) {
  if (a->size() > caps.max_points || b->size() > caps.max_points) {
    throw Error(ErrorKind::SizeCapExceeded,
                "hom-set enumeration capped at " + std::to_string(caps.max_points) + " states per side",
                nlohmann::json{{"sizes", {a->size(), b->size()}}, {"cap", caps.max_points}});
  }
  if (is_strict(kind) && (!a->strict() || !b->strict())) {
    throw Error(ErrorKind::Usage, "strict hom-sets need strict resolutions on both sides");
  }
}

}  // namespace

HomSet<PossibleTransition> enumerate_transitions(const ResolutionPtr& source,
                                                 const ResolutionPtr& target, HomKind kind,
                                                 EnumerationCaps caps) {
  if (!is_state_kind(kind)) throw Error(ErrorKind::Usage, "property kind passed to a state enumeration");
  check_caps(source, target, kind, caps);
  const int n1 = source->size();
  const int n2 = target->size();
  const Bits mask = full_set(n2);
  HomSet<PossibleTransition> hom{kind, source, target, {}};
  const std::uint64_t total = std::uint64_t{1} << (n1 * n2);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Bits> images(static_cast<std::size_t>(n1));
    for (int p = 0; p < n1; ++p) images[static_cast<std::size_t>(p)] = (code >> (p * n2)) & mask;
    PossibleTransition f(source, target, std::move(images));
    if (admits(f, kind)) hom.morphisms.push_back(std::move(f));
  }
  return hom;
}

HomSet<PropertyTransition> enumerate_property_transitions(const ResolutionPtr& source,
                                                          const ResolutionPtr& target,
                                                          HomKind kind, EnumerationCaps caps) {
  if (is_state_kind(kind)) throw Error(ErrorKind::Usage, "state kind passed to a property enumeration");
  check_caps(source, target, kind, caps);
  HomSet<PropertyTransition> hom{kind, source, target, {}};
  const auto bottom = PropertyTransition::bottom(source, target);
  bool has_bottom = false;
  for (auto& m : enumerate_join_preserving(source->image_lattice(), target->image_lattice())) {
    PropertyTransition g(source, target, std::move(m));
    if (admits(g, kind)) {
      has_bottom = has_bottom || g == bottom;
      hom.morphisms.push_back(std::move(g));
    }
  }
  if (!has_bottom) hom.morphisms.insert(hom.morphisms.begin(), bottom);
  return hom;
}

// ---------------------------------------------------------------------------

namespace {

struct StateOps {
  using M = PossibleTransition;
  static HomSet<M> hom(const ResolutionPtr& a, const ResolutionPtr& b, HomKind k, EnumerationCaps c) {
    return enumerate_transitions(a, b, k, c);
  }
  static M identity(const ResolutionPtr& a) { return M::identity(a); }
  static M bottom(const ResolutionPtr& a, const ResolutionPtr& b) { return M::bottom(a, b); }
  static M join(const M& x, const M& y) { return join_transitions({x, y}, x.source_ptr(), x.target_ptr()); }
  static nlohmann::json show(const M& f) { return describe(f); }
};

struct PropertyOps {
  using M = PropertyTransition;
  static HomSet<M> hom(const ResolutionPtr& a, const ResolutionPtr& b, HomKind k, EnumerationCaps c) {
    return enumerate_property_transitions(a, b, k, c);
  }
  static M identity(const ResolutionPtr& a) { return M::identity(a); }
  static M bottom(const ResolutionPtr& a, const ResolutionPtr& b) { return M::bottom(a, b); }
  static M join(const M& x, const M& y) { return join_properties({x, y}, x.source_ptr(), x.target_ptr()); }
  static nlohmann::json show(const M& g) { return describe(g); }
};

template <class Ops>
Report run_laws(const std::vector<Object>& objects, HomKind kind, const LawOptions& opt) {
  using M = typename Ops::M;
  const std::size_t n = objects.size();
  std::vector<std::vector<HomSet<M>>> hom(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) hom[a].push_back(Ops::hom(objects[a].res, objects[b].res, kind, opt.caps));
  }
  std::mt19937_64 rng(opt.seed);
  const std::string tag = std::string(to_string(kind));
  auto label = [&](std::initializer_list<std::size_t> ids) {
    std::string s = tag + ":";
    bool first = true;
    for (std::size_t i : ids) {
      s += (first ? "" : "->") + objects[i].name;
      first = false;
    }
    return s;
  };

  Report report;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& h = hom[a][b];
      const auto& A = objects[a].res;
      const auto& B = objects[b].res;

      Tally bottom("hom-set contains bottom", label({a, b}));
      bottom.expect(h.contains(Ops::bottom(A, B)), [] { return nlohmann::json("bottom missing"); });
      report.add(bottom);

      Tally joins("hom-set closed under binary joins", label({a, b}));
      for_tuples({h.size(), h.size()}, opt.max_cases, rng, [&](const auto& i) {
        const M j = Ops::join(h.morphisms[i[0]], h.morphisms[i[1]]);
        return joins.expect(h.contains(j), [&] {
          return nlohmann::json{{"f", Ops::show(h.morphisms[i[0]])}, {"g", Ops::show(h.morphisms[i[1]])},
                                {"join", Ops::show(j)}};
        });
      });
      report.add(joins);

      Tally ident("identity laws", label({a, b}));
      const M id_a = Ops::identity(A);
      const M id_b = Ops::identity(B);
      if (a == b) {
        ident.expect(h.contains(id_a), [] { return nlohmann::json("identity missing from endo-hom-set"); });
      }
      for (const auto& f : h.morphisms) {
        ident.expect(compose(f, id_a) == f && compose(id_b, f) == f,
                     [&] { return nlohmann::json{{"f", Ops::show(f)}}; });
      }
      report.add(ident);

      Tally empty_joins("composition with bottom is bottom", label({a, b}));
      for (std::size_t c = 0; c < n; ++c) {
        const auto& C = objects[c].res;
        for (const auto& g : hom[b][c].morphisms) {
          const M lhs = compose(g, Ops::bottom(A, B));
          empty_joins.expect(lhs == Ops::bottom(A, C), [&] { return nlohmann::json{{"g", Ops::show(g)}}; });
        }
        for (const auto& f : hom[c][a].morphisms) {
          const M lhs = compose(Ops::bottom(A, B), f);
          empty_joins.expect(lhs == Ops::bottom(C, B), [&] { return nlohmann::json{{"f", Ops::show(f)}}; });
        }
      }
      report.add(empty_joins);
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto& f_set = hom[a][b];
        const auto& g_set = hom[b][c];
        const auto& gf_set = hom[a][c];

        Tally closed("hom-sets closed under composition", label({a, b, c}));
        for_tuples({g_set.size(), f_set.size()}, opt.max_cases, rng, [&](const auto& i) {
          const M gf = compose(g_set.morphisms[i[0]], f_set.morphisms[i[1]]);
          return closed.expect(gf_set.contains(gf), [&] {
            return nlohmann::json{{"g", Ops::show(g_set.morphisms[i[0]])}, {"f", Ops::show(f_set.morphisms[i[1]])}};
          });
        });
        report.add(closed);

        Tally left("composition distributes over joins on the right argument", label({a, b, c}));
        for_tuples({g_set.size(), f_set.size(), f_set.size()}, opt.max_cases, rng, [&](const auto& i) {
          const M& g = g_set.morphisms[i[0]];
          const M& f1 = f_set.morphisms[i[1]];
          const M& f2 = f_set.morphisms[i[2]];
          return left.expect(compose(g, Ops::join(f1, f2)) == Ops::join(compose(g, f1), compose(g, f2)), [&] {
            return nlohmann::json{{"g", Ops::show(g)}, {"f1", Ops::show(f1)}, {"f2", Ops::show(f2)}};
          });
        });
        report.add(left);

        Tally right("composition distributes over joins on the left argument", label({a, b, c}));
        for_tuples({g_set.size(), g_set.size(), f_set.size()}, opt.max_cases, rng, [&](const auto& i) {
          const M& g1 = g_set.morphisms[i[0]];
          const M& g2 = g_set.morphisms[i[1]];
          const M& f = f_set.morphisms[i[2]];
          return right.expect(compose(Ops::join(g1, g2), f) == Ops::join(compose(g1, f), compose(g2, f)), [&] {
            return nlohmann::json{{"g1", Ops::show(g1)}, {"g2", Ops::show(g2)}, {"f", Ops::show(f)}};
          });
        });
        report.add(right);

        for (std::size_t d = 0; d < n; ++d) {
          const auto& h_set = hom[c][d];
          Tally assoc("associativity", label({a, b, c, d}));
          for_tuples({h_set.size(), g_set.size(), f_set.size()}, opt.max_cases, rng, [&](const auto& i) {
            const M& h = h_set.morphisms[i[0]];
            const M& g = g_set.morphisms[i[1]];
            const M& f = f_set.morphisms[i[2]];
            return assoc.expect(compose(h, compose(g, f)) == compose(compose(h, g), f), [&] {
              return nlohmann::json{{"h", Ops::show(h)}, {"g", Ops::show(g)}, {"f", Ops::show(f)}};
            });
          });
          report.add(assoc);
        }
      }
    }
  }
  return report;
}

}  // namespace

Report verify_quantaloid_laws(const std::vector<Object>& objects, HomKind kind, const LawOptions& options) {
  if (is_state_kind(kind)) return run_laws<StateOps>(objects, kind, options);
  return run_laws<PropertyOps>(objects, kind, options);
}

}  // namespace qkit
