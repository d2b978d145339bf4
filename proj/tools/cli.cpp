#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qkit/dot.hpp"
#include "qkit/functors.hpp"
#include "qkit/io.hpp"
#include "qkit/quantum.hpp"

namespace qkit {

namespace {

using json = nlohmann::json;

struct Options {
  std::vector<std::string> in;
  std::string out;
  std::string format = "json";
  std::string strict;
  int cap = -1;
  std::string kind;
  std::string lattice;
  std::string property;
  bool galois = false;

  std::optional<bool> strict_flag() const {
    if (strict.empty()) return std::nullopt;
    if (strict == "true") return true;
    if (strict == "false") return false;
    throw Error(ErrorKind::Usage, "--strict takes true or false");
  }
  bool regime() const { return strict_flag().value_or(true); }
  EnumerationCaps caps() const {
    auto c = EnumerationCaps::from_env();
    if (cap >= 0) c.max_points = cap;
    return c;
  }
  bool dot() const { return format == "dot"; }
};

void need_inputs(const Options& o, std::size_t n, const char* what) {
  if (o.in.size() != n) {
    throw Error(ErrorKind::Usage, std::string(what) + " takes " + std::to_string(n) + " --in files");
  }
}

void write_out(const Options& o, const json& j) {
  if (o.out.empty()) return;
  std::ofstream f(o.out);
  if (!f) throw Error(ErrorKind::Usage, "cannot write '" + o.out + "'");
  f << j.dump(2) << "\n";
}

enum class DocType { Resolution, Space, Ortholattice, Poset, Morphism };

DocType detect(const json& j) {
  if (j.is_string()) return DocType::Poset;
  if (!j.is_object()) throw Error(ErrorKind::Parse, "document must be a JSON object");
  if (j.contains("sigma") || j.contains("theta")) return DocType::Resolution;
  if (j.contains("universe")) return DocType::Space;
  if (j.contains("ortho")) return DocType::Ortholattice;
  if (j.contains("elements")) return DocType::Poset;
  if (j.contains("map")) return DocType::Morphism;
  throw Error(ErrorKind::Parse, "cannot tell what kind of structure the document holds");
}

ResolutionPtr load_resolution(const std::string& path, const Options& o) {
  return share(resolution_from_json(read_json_file(path), o.strict_flag()));
}

/// One JSON per line for the state-level morphisms, with the conditions that
/// fail the kind as a witness.
json morphism_witness(const PossibleTransition& f, HomKind kind) {
  json w{{"kind", std::string(to_string(kind))}, {"map", describe(f)}};
  const Conditions c{satisfies_a_empty(f), !a_sharp_failure(f), !a_star_failure(f)};
  w["a_empty"] = c.a_empty;
  w["a_sharp"] = c.a_sharp;
  w["a_star"] = c.a_star;
  if (auto p = a_sharp_failure(f)) {
    w["a_sharp_pair"] = {f.source().subset_key(p->first), f.source().subset_key(p->second)};
  }
  return w;
}

void require_admitted(const PossibleTransition& f, HomKind kind) {
  if (admits(f, kind)) return;
  const ErrorKind why = a_sharp_failure(f)      ? ErrorKind::ASharpFails
                        : a_star_failure(f)     ? ErrorKind::NotAClosMorphism
                                                : ErrorKind::EmptyKernelViolation;
  throw Error(why, "morphism is not in the " + std::string(to_string(kind)) + " hom-set", morphism_witness(f, kind));
}

void require_admitted(const PropertyTransition& g, HomKind kind) {
  if (admits(g, kind)) return;
  const auto c = check_property_transition(g);
  throw Error(c.a_vee ? ErrorKind::EmptyKernelViolation : ErrorKind::NotJoinPreserving,
              "morphism is not in the " + std::string(to_string(kind)) + " hom-set",
              json{{"map", describe(g)}, {"a_vee", c.a_vee}, {"a_zero", c.a_zero}});
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& o, std::ostream& out) {
  json doc;
  if (!o.lattice.empty()) {
    doc = o.lattice;
  } else {
    need_inputs(o, 1, "validate");
    doc = read_json_file(o.in[0]);
  }
  json summary;
  std::string dot;
  switch (detect(doc)) {
    case DocType::Resolution: {
      const auto res = resolution_from_json(doc, o.strict_flag());
      const auto sep = separation(res);
      json image = json::array();
      for (int e : res.image()) image.push_back(res.target().name(e));
      summary = {{"type", "resolution"}, {"valid", true},        {"strict", res.strict()},
                 {"points", res.size()}, {"image", image},       {"t0", sep.t0},
                 {"t1", sep.t1},         {"saturated", is_saturated(res)}, {"canonical", is_canonical(res)}};
      write_out(o, to_json(res));
      dot = resolution_dot(res);
      break;
    }
    case DocType::Space: {
      const auto space = space_from_json(doc);
      summary = {{"type", "space"},         {"valid", true},
                 {"t0", space.is_T0()},     {"t1", space.is_T1()},
                 {"empty_strict", space.is_empty_strict()}, {"closed_sets", space.closed_sets().size()}};
      write_out(o, to_json(space));
      dot = space_dot(space);
      break;
    }
    case DocType::Ortholattice: {
      const auto ol = ortholattice_from_json(doc);
      summary = {{"type", "ortholattice"}, {"valid", true}, {"orthomodular", ol.orthomodular}};
      if (!ol.orthomodular) summary["orthomodular_witness"] = ol.orthomodular_witness;
      write_out(o, to_json(ol));
      dot = hasse_dot(ol.lattice->poset(), "ortholattice");
      break;
    }
    case DocType::Poset: {
      const FinitePoset poset = doc.is_string() ? builtin_lattice(doc.get<std::string>())->poset() : poset_from_json(doc);
      summary = {{"type", "poset"}, {"valid", true}, {"elements", poset.size()}};
      try {
        const auto l = CompleteLattice::from_poset(poset);
        summary["lattice"] = true;
        summary["atomistic"] = l.is_atomistic();
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotALattice) throw;
        summary["lattice"] = false;
        summary["lattice_witness"] = e.witness();
      }
      write_out(o, to_json(poset));
      dot = hasse_dot(poset);
      break;
    }
    case DocType::Morphism:
      throw Error(ErrorKind::Usage, "morphisms are checked with check-morphism");
  }
  out << (o.dot() ? dot : summary.dump() + "\n");
  return 0;
}

int cmd_factorize(const Options& o, std::ostream& out) {
  need_inputs(o, 1, "factorize");
  const auto res = load_resolution(o.in[0], o);
  const auto fz = factorize(*res);
  json theta = json::object();
  for (std::size_t i = 0; i < fz.space.closed_sets().size(); ++i) {
    theta[set_label(fz.space.universe(), fz.space.closed_sets()[i])] = res->target().name(fz.theta[i]);
  }
  const bool iso =
      find_lattice_isomorphism(closed_set_lattice(fz.space).poset(), res->image_lattice()->poset(), 64).has_value();
  json doc{{"space", to_json(fz.space)}, {"theta", theta}, {"lattice", to_json(res->target())}, {"strict", res->strict()}};
  write_out(o, doc);
  json summary = doc;
  summary["closed_sets_isomorphic_to_image"] = iso;
  if (o.dot()) {
    out << space_dot(fz.space);
  } else {
    out << summary.dump() << "\n";
  }
  return iso ? 0 : 1;
}

int cmd_canonicalize(const Options& o, std::ostream& out) {
  need_inputs(o, 1, "canonicalize");
  const auto res = load_resolution(o.in[0], o);
  const auto c = canonicalize(*res);
  json phi = json::object();
  for (int p = 0; p < res->size(); ++p) {
    const int v = c.phi[static_cast<std::size_t>(p)];
    phi[res->sigma()[static_cast<std::size_t>(p)]] = v < 0 ? json(nullptr) : json(c.canonical.sigma()[static_cast<std::size_t>(v)]);
  }
  const bool square = square_commutes(*res, c);
  const bool canonical = is_canonical(c.canonical);
  write_out(o, to_json(c.canonical));
  if (o.dot()) {
    out << resolution_dot(c.canonical);
  } else {
    out << json{{"canonical", to_json(c.canonical)}, {"phi", phi}, {"square_commutes", square}, {"is_canonical", canonical}}.dump()
        << "\n";
  }
  return square && canonical ? 0 : 1;
}

int cmd_check_morphism(const Options& o, std::ostream& out) {
  need_inputs(o, 3, "check-morphism");
  const auto src = load_resolution(o.in[0], o);
  const auto tgt = load_resolution(o.in[1], o);
  const auto doc = read_json_file(o.in[2]);
  const HomKind kind = o.kind.empty() ? kind_from_json(doc, state_kind(o.regime())) : hom_kind_from_string(o.kind);
  if (is_strict(kind) && (!src->strict() || !tgt->strict())) {
    throw Error(ErrorKind::Usage, "strict kinds need strict resolutions");
  }
  if (is_state_kind(kind)) {
    const auto f = transition_from_json(doc, src, tgt);
    check_conditions(f);
    const bool ok = admits(f, kind);
    json r = morphism_witness(f, kind);
    r["admitted"] = ok;
    out << r.dump() << "\n";
    return ok ? 0 : 1;
  }
  const auto g = property_from_json(doc, src, tgt);
  const auto c = check_property_transition(g);
  const bool ok = admits(g, kind);
  out << json{{"kind", std::string(to_string(kind))}, {"map", describe(g)}, {"a_vee", c.a_vee}, {"a_zero", c.a_zero},
              {"bottom", g.is_bottom()}, {"admitted", ok}}.dump()
      << "\n";
  return ok ? 0 : 1;
}

int cmd_compose(const Options& o, std::ostream& out) {
  need_inputs(o, 5, "compose (r1 r2 r3 f1 f2)");
  const auto r1 = load_resolution(o.in[0], o);
  const auto r2 = load_resolution(o.in[1], o);
  const auto r3 = load_resolution(o.in[2], o);
  const auto d1 = read_json_file(o.in[3]);
  const auto d2 = read_json_file(o.in[4]);
  const HomKind kind = o.kind.empty() ? kind_from_json(d1, state_kind(o.regime())) : hom_kind_from_string(o.kind);
  json result;
  if (is_state_kind(kind)) {
    const auto f1 = transition_from_json(d1, r1, r2);
    const auto f2 = transition_from_json(d2, r2, r3);
    require_admitted(f1, kind);
    require_admitted(f2, kind);
    result = to_json(compose(f2, f1), kind);
  } else {
    const auto g1 = property_from_json(d1, r1, r2);
    const auto g2 = property_from_json(d2, r2, r3);
    require_admitted(g1, kind);
    require_admitted(g2, kind);
    result = to_json(compose(g2, g1), kind);
  }
  write_out(o, result);
  out << result.dump() << "\n";
  return 0;
}

int cmd_join(const Options& o, std::ostream& out) {
  if (o.in.size() < 2) throw Error(ErrorKind::Usage, "join takes r1 r2 and any number of morphisms");
  const auto r1 = load_resolution(o.in[0], o);
  const auto r2 = load_resolution(o.in[1], o);
  std::vector<json> docs;
  for (std::size_t i = 2; i < o.in.size(); ++i) docs.push_back(read_json_file(o.in[i]));
  const HomKind kind = !o.kind.empty()   ? hom_kind_from_string(o.kind)
                       : !docs.empty()   ? kind_from_json(docs.front(), state_kind(o.regime()))
                                         : state_kind(o.regime());
  json result;
  if (is_state_kind(kind)) {
    std::vector<PossibleTransition> fs;
    for (const auto& d : docs) {
      fs.push_back(transition_from_json(d, r1, r2));
      require_admitted(fs.back(), kind);
    }
    result = to_json(join_transitions(fs, r1, r2), kind);
  } else {
    std::vector<PropertyTransition> gs;
    for (const auto& d : docs) {
      gs.push_back(property_from_json(d, r1, r2));
      require_admitted(gs.back(), kind);
    }
    result = to_json(join_properties(gs, r1, r2), kind);
  }
  write_out(o, result);
  out << result.dump() << "\n";
  return 0;
}

int cmd_fpr(const Options& o, std::ostream& out) {
  need_inputs(o, 3, "fpr");
  const auto r1 = load_resolution(o.in[0], o);
  const auto r2 = load_resolution(o.in[1], o);
  const auto f = transition_from_json(read_json_file(o.in[2]), r1, r2);
  const auto g = f_pr(f);
  const json result = to_json(g, property_kind(o.regime() && r1->strict() && r2->strict()));
  write_out(o, result);
  out << (o.dot() ? square_dot(f, g) : result.dump() + "\n");
  return 0;
}

int cmd_lift(const Options& o, std::ostream& out) {
  need_inputs(o, 3, "lift");
  const auto r1 = load_resolution(o.in[0], o);
  const auto r2 = load_resolution(o.in[1], o);
  const auto doc = read_json_file(o.in[2]);
  const bool strict = o.regime() && r1->strict() && r2->strict();
  const auto g = property_from_json(doc, r1, r2);
  require_admitted(g, o.kind.empty() ? kind_from_json(doc, property_kind(strict)) : hom_kind_from_string(o.kind));
  const json result = to_json(lift_g_star(g), state_kind(strict));
  write_out(o, result);
  out << (o.dot() ? transition_dot(lift_g_star(g)) : result.dump() + "\n");
  return 0;
}

int cmd_adjoint(const Options& o, std::ostream& out) {
  if (o.in.empty() || o.in.size() == 2 || o.in.size() > 3) {
    throw Error(ErrorKind::Usage, "adjoint takes a map file, optionally preceded by domain and codomain lattices");
  }
  LatticePtr dom;
  LatticePtr cod;
  if (o.in.size() == 3) {
    dom = lattice_from_json(read_json_file(o.in[0]));
    cod = lattice_from_json(read_json_file(o.in[1]));
  }
  const auto g = lattice_map_from_json(read_json_file(o.in.back()), dom, cod);
  const auto r = right_adjoint(g);
  const bool round = left_adjoint(r) == g;
  const json result = to_json(r);
  write_out(o, result);
  out << json{{"right_adjoint", result}, {"left_of_right_is_map", round}}.dump() << "\n";
  return round ? 0 : 1;
}

int cmd_sasaki(const Options& o, std::ostream& out) {
  Ortholattice ol;
  if (!o.lattice.empty()) {
    ol = builtin_ortholattice(o.lattice);
  } else {
    need_inputs(o, 1, "sasaki");
    ol = ortholattice_from_json(read_json_file(o.in[0]));
  }
  if (o.property.empty()) throw Error(ErrorKind::Usage, "sasaki needs --property");
  const int a = ol.lattice->index(o.property);
  const auto m = measurement_transition(ol, a);
  const auto report = check_measurement_claims(ol, a);
  const json result = to_json(m.transition, HomKind::ResSharpStrict);
  write_out(o, result);
  if (o.dot()) {
    out << transition_dot(m.transition);
  } else {
    out << json{{"measurement", result}}.dump() << "\n" << report.to_json_lines();
  }
  return report.ok() ? 0 : 1;
}

int cmd_laws(const Options& o, std::ostream& out) {
  if (o.in.empty()) throw Error(ErrorKind::Usage, "laws takes at least one resolution");
  std::vector<Object> objects;
  for (const auto& path : o.in) objects.push_back({path, load_resolution(path, o)});
  const bool strict = o.regime();
  const HomKind kind = o.kind.empty() ? state_kind(strict) : hom_kind_from_string(o.kind);
  LawOptions lo;
  lo.caps = o.caps();
  Report report = verify_quantaloid_laws(objects, kind, lo);
  if (o.galois) {
    SuiteOptions so;
    so.strict = strict;
    so.caps = o.caps();
    report.merge(functor_F_pr_check(objects, so));
    report.merge(galois_dual_check(objects, so));
  }
  std::size_t violations = 0;
  for (const auto& r : report.results()) violations += r.status == Status::Violated ? 1 : 0;
  out << report.to_json_lines()
      << json{{"checks", report.results().size()}, {"cases", report.total_cases()}, {"violations", violations}}.dump()
      << "\n";
  return report.ok() ? 0 : 1;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  if (!o.lattice.empty()) {
    out << hasse_dot(builtin_lattice(o.lattice)->poset(), o.lattice);
    return 0;
  }
  if (o.in.size() == 3) {
    const auto r1 = load_resolution(o.in[0], o);
    const auto r2 = load_resolution(o.in[1], o);
    const auto f = transition_from_json(read_json_file(o.in[2]), r1, r2);
    out << square_dot(f, f_pr(f));
    return 0;
  }
  need_inputs(o, 1, "export-dot");
  const auto doc = read_json_file(o.in[0]);
  switch (detect(doc)) {
    case DocType::Resolution: out << resolution_dot(resolution_from_json(doc, o.strict_flag())); break;
    case DocType::Space: out << space_dot(space_from_json(doc)); break;
    case DocType::Ortholattice: out << hasse_dot(ortholattice_from_json(doc).lattice->poset(), "ortholattice"); break;
    case DocType::Poset: out << hasse_dot(poset_from_json(doc)); break;
    case DocType::Morphism: throw Error(ErrorKind::Usage, "a morphism needs its two resolutions: --in r1 r2 f");
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite resolutions, transitions and their functors"};
  app.require_subcommand(1);
  Options o;
  using Handler = int (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--in", o.in, "input files")->expected(1, -1);
    sub->add_option("--out", o.out, "write the resulting structure here");
    sub->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    sub->add_option("--strict", o.strict, "true or false")->check(CLI::IsMember({"true", "false"}));
    sub->add_option("--cap", o.cap, "states per side in hom-set enumeration");
    sub->add_option("--kind", o.kind, "morphism kind");
    sub->add_option("--lattice", o.lattice, "built-in lattice name");
    sub->add_option("--property", o.property, "tested property for sasaki");
    sub->add_flag("--galois", o.galois, "laws: also run the functor and dual suites");
    commands.emplace_back(sub, h);
  };
  add("validate", "validate a poset, space, resolution or ortholattice", cmd_validate);
  add("factorize", "closure factor and embedding of a resolution", cmd_factorize);
  add("canonicalize", "canonical resolution and state map", cmd_canonicalize);
  add("check-morphism", "side conditions of a morphism: r1 r2 f", cmd_check_morphism);
  add("compose", "f2 after f1: r1 r2 r3 f1 f2", cmd_compose);
  add("join", "pointwise join: r1 r2 f...", cmd_join);
  add("fpr", "induced property transition: r1 r2 f", cmd_fpr);
  add("lift", "state lift of a property transition: r1 r2 g", cmd_lift);
  add("adjoint", "right adjoint of a join-preserving map", cmd_adjoint);
  add("sasaki", "measurement transition of a tested property", cmd_sasaki);
  add("laws", "quantaloid laws over the given objects", cmd_laws);
  add("export-dot", "DOT rendering of a structure or a square", cmd_export_dot);

  std::vector<const char*> argv{"qkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) return handler(o, out);
    }
    return 2;
  } catch (const Error& e) {
    if (is_input_error(e.kind())) {
      err << e.to_json().dump() << "\n";
      return 2;
    }
    out << e.to_json().dump() << "\n";
    return 1;
  }
}

}  // namespace qkit
