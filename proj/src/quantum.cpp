#include "qkit/quantum.hpp"

#include <algorithm>

#include "qkit/functors.hpp"

namespace qkit {

namespace {

using json = nlohmann::json;

void ortho_fail(const CompleteLattice& l, const std::string& law, std::initializer_list<int> elems) {
  json w = json::array();
  for (int e : elems) w.push_back(l.name(e));
  throw Error(ErrorKind::OrthoLawViolation, "ortholattice law fails: " + law, json{{"law", law}, {"elements", w}});
}

Ortholattice make_ortho(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& le,
                        const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto lattice = make_lattice(FinitePoset::from_pairs(std::move(names), le));
  std::vector<int> ortho(static_cast<std::size_t>(lattice->size()), -1);
  for (const auto& [x, y] : pairs) {
    ortho[static_cast<std::size_t>(lattice->index(x))] = lattice->index(y);
    ortho[static_cast<std::size_t>(lattice->index(y))] = lattice->index(x);
  }
  return validate_ortholattice(std::move(lattice), std::move(ortho));
}

/// 0 below the atoms, the atoms below 1, each atom paired with its primed twin.
Ortholattice mo(int n) {
  std::vector<std::string> names{"0"};
  std::vector<std::pair<std::string, std::string>> le;
  std::vector<std::pair<std::string, std::string>> pairs{{"0", "1"}};
  for (int i = 0; i < n; ++i) {
    const std::string a(1, static_cast<char>('a' + i));
    for (const std::string& x : {a, a + "'"}) {
      names.push_back(x);
      le.emplace_back("0", x);
      le.emplace_back(x, "1");
    }
    pairs.emplace_back(a, a + "'");
  }
  names.push_back("1");
  return make_ortho(names, le, pairs);
}

Ortholattice boolean3() {
  std::vector<std::string> names{"0", "a", "b", "c", "ab", "ac", "bc", "1"};
  std::vector<std::pair<std::string, std::string>> le;
  for (const char* x : {"a", "b", "c"}) le.emplace_back("0", x);
  for (std::string x : {"ab", "ac", "bc"}) {
    for (char c : x) le.emplace_back(std::string(1, c), x);
    le.emplace_back(x, "1");
  }
  return make_ortho(names, le, {{"0", "1"}, {"a", "bc"}, {"b", "ac"}, {"c", "ab"}});
}

LatticePtr chain(int n) {
  std::vector<std::string> names{"0"};
  for (int i = 1; i + 1 < n; ++i) names.push_back("l" + std::to_string(i));
  names.push_back("1");
  std::vector<std::pair<int, int>> le;
  for (int i = 0; i + 1 < n; ++i) le.emplace_back(i, i + 1);
  return make_lattice(FinitePoset::from_index_pairs(std::move(names), le));
}

}  // namespace

Ortholattice validate_ortholattice(LatticePtr lattice, std::vector<int> ortho) {
  const auto& l = *lattice;
  const int n = l.size();
  if (static_cast<int>(ortho.size()) != n) {
    throw Error(ErrorKind::OrthoLawViolation, "orthocomplement must be total", json{{"law", "total"}});
  }
  for (int a = 0; a < n; ++a) {
    const int c = ortho[static_cast<std::size_t>(a)];
    if (c < 0 || c >= n) ortho_fail(l, "total", {a});
  }
  auto o = [&](int a) { return ortho[static_cast<std::size_t>(a)]; };
  for (int a = 0; a < n; ++a) {
    if (o(o(a)) != a) ortho_fail(l, "involution", {a});
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (l.le(a, b) && !l.le(o(b), o(a))) ortho_fail(l, "order reversal", {a, b});
    }
  }
  for (int a = 0; a < n; ++a) {
    if (l.join(a, o(a)) != l.top()) ortho_fail(l, "join with complement is top", {a});
    if (l.meet(a, o(a)) != l.bottom()) ortho_fail(l, "meet with complement is bottom", {a});
  }
  Ortholattice ol{lattice, ortho, true, nullptr};
  for (int a = 0; a < n && ol.orthomodular; ++a) {
    for (int b = 0; b < n; ++b) {
      if (l.le(a, b) && l.join(a, l.meet(b, o(a))) != b) {
        ol.orthomodular = false;
        ol.orthomodular_witness = json{{"a", l.name(a)}, {"b", l.name(b)}, {"a_join_b_meet_a_perp", l.name(l.join(a, l.meet(b, o(a))))}};
        break;
      }
    }
  }
  return ol;
}

LatticeMap sasaki_projection(const Ortholattice& ol, int a) {
  const auto& l = *ol.lattice;
  std::vector<int> values;
  for (int p = 0; p < l.size(); ++p) values.push_back(l.meet(a, l.join(ol.complement(a), p)));
  return LatticeMap(ol.lattice, ol.lattice, std::move(values));
}

ResolutionPtr atom_states(const Ortholattice& ol) {
  if (!ol.lattice->is_atomistic()) {
    throw Error(ErrorKind::NotAtomistic, "lattice is not atomistic");
  }
  return share(join_resolution(ol.lattice, ol.lattice->atoms(), true));
}

MeasurementTransition measurement_transition(const Ortholattice& ol, int a) {
  if (!ol.orthomodular) {
    throw Error(ErrorKind::NotOrthomodular, "measurement needs an orthomodular lattice", ol.orthomodular_witness);
  }
  auto states = atom_states(ol);
  const auto& l = *ol.lattice;
  const auto yes = sasaki_projection(ol, a);
  const auto no = sasaki_projection(ol, ol.complement(a));
  std::vector<Bits> images;
  for (const auto& atom_name : states->sigma()) {
    const int p = l.index(atom_name);
    Bits img = 0;
    for (int outcome : {yes(p), no(p)}) {
      if (outcome == l.bottom()) continue;
      const auto pos = std::find(states->sigma().begin(), states->sigma().end(), l.name(outcome));
      if (pos == states->sigma().end()) {
        throw Error(ErrorKind::ValueOutsideImage, "measurement outcome is not an atom",
                    json{{"state", atom_name}, {"outcome", l.name(outcome)}});
      }
      img |= bit(static_cast<int>(pos - states->sigma().begin()));
    }
    images.push_back(img);
  }
  PossibleTransition f(states, states, std::move(images));
  return MeasurementTransition{ol, a, states, std::move(f)};
}

PossibleTransition atomically_generated(const LatticeMap& g, const ResolutionPtr& states) {
  const auto& l = g.codomain();
  std::vector<Bits> images;
  for (const auto& atom_name : states->sigma()) {
    const int p = g.domain().index(atom_name);
    Bits img = 0;
    for (int q = 0; q < states->size(); ++q) {
      if (l.le(l.index(states->sigma()[static_cast<std::size_t>(q)]), g(p))) img |= bit(q);
    }
    images.push_back(img);
  }
  return PossibleTransition(states, states, std::move(images));
}

PossibleTransition atomically_generated(const LatticeMap& g, const Ortholattice& ol) {
  return atomically_generated(g, atom_states(ol));
}

Report check_measurement_claims(const Ortholattice& ol, int a) {
  const auto& l = *ol.lattice;
  const std::string inst = "tested " + l.name(a);
  const auto m = measurement_transition(ol, a);
  const auto& f = m.transition;
  Report report;

  Tally sharp("measurement is image-compatible", inst);
  sharp.expect(!a_sharp_failure(f), [&] {
    auto p = a_sharp_failure(f);
    return json{{"T", p->first}, {"T_prime", p->second}};
  });
  report.add(sharp);

  Tally kernel("measurement has empty kernel", inst);
  kernel.expect(satisfies_a_empty(f), [&] { return describe(f); });
  report.add(kernel);

  const auto yes = sasaki_projection(ol, a);
  const auto no = sasaki_projection(ol, ol.complement(a));
  const auto gen_yes = atomically_generated(yes, m.states);
  const auto gen_no = atomically_generated(no, m.states);
  Tally uni("measurement is the union of the two projection-generated maps", inst);
  const auto joined = join_transitions({gen_yes, gen_no}, m.states, m.states);
  uni.expect(joined == f, [&] { return json{{"union", describe(joined)}, {"measurement", describe(f)}}; });
  report.add(uni);

  Tally idem("Sasaki projection is idempotent", inst);
  Tally onto("Sasaki projection preserves joins onto the interval below the tested property", inst);
  for (int p = 0; p < l.size(); ++p) {
    idem.expect(yes(yes(p)) == yes(p), [&] { return json{{"p", l.name(p)}}; });
  }
  Bits range = 0;
  for (int v : yes.values()) range |= bit(v);
  onto.expect(yes.preserves_joins() && range == l.poset().down_set(a), [&] {
    return json{{"preserves_joins", yes.preserves_joins()}, {"range", set_label(l.poset().elements(), range)}};
  });
  report.add(idem);
  report.add(onto);

  CheckResult indet{"measurement is indeterministic", inst, Status::NotFound, 0, nullptr};
  for (int p = 0; p < m.states->size(); ++p) {
    ++indet.cases;
    if (count(f.image_of_point(p)) > 1 && indet.status == Status::NotFound) {
      indet.status = Status::Witnessed;
      indet.witness = json{{"state", m.states->sigma()[static_cast<std::size_t>(p)]},
                           {"outcomes", describe(f)[m.states->sigma()[static_cast<std::size_t>(p)]]}};
    }
  }
  report.add(indet);

  CheckResult single{"no single join-preserving map generates the measurement", inst, Status::Witnessed, 0,
                     nullptr};
  for (const auto& g : enumerate_join_preserving(ol.lattice, ol.lattice)) {
    ++single.cases;
    if (atomically_generated(g, m.states) == f) {
      single.status = Status::NotFound;
      json gen = json::object();
      for (int x = 0; x < l.size(); ++x) gen[l.name(x)] = l.name(g(x));
      single.witness = json{{"generator", gen}};
      break;
    }
  }
  if (single.status == Status::Witnessed) single.witness = json{{"candidates_checked", single.cases}};
  report.add(single);

  CheckResult pj{"pointwise join of the two projections generates the measurement", inst, Status::NotFound, 1,
                 nullptr};
  const auto pjoin = pointwise_join({yes, no}, ol.lattice, ol.lattice);
  const auto gen_join = atomically_generated(pjoin, m.states);
  pj.status = gen_join == f ? Status::Witnessed : Status::NotFound;
  pj.witness = json{{"generated", describe(gen_join)}};
  report.add(pj);

  CheckResult prop{"induced property transition", inst, Status::Ok, 1, nullptr};
  prop.witness = describe(f_pr(f));
  report.add(prop);
  return report;
}

Ortholattice builtin_ortholattice(std::string_view name) {
  if (name == "2") return make_ortho({"0", "1"}, {{"0", "1"}}, {{"0", "1"}});
  if (name == "B2" || name == "MO1") return mo(1);
  if (name == "B3") return boolean3();
  if (name == "MO2") return mo(2);
  if (name == "MO3") return mo(3);
  if (name == "O6") {
    return make_ortho({"0", "a", "b", "b'", "a'", "1"},
                      {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "b'"}, {"b'", "a'"}, {"a'", "1"}},
                      {{"0", "1"}, {"a", "a'"}, {"b", "b'"}});
  }
  throw Error(ErrorKind::UnknownElement, "no built-in ortholattice named '" + std::string(name) + "'");
}

LatticePtr builtin_lattice(std::string_view name) {
  if (name == "M2") {
    return make_lattice(FinitePoset::from_pairs({"0", "a", "b", "1"},
                                                {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
  }
  if (name == "N5") {
    return make_lattice(FinitePoset::from_pairs(
        {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}));
  }
  if (name == "chain3") return chain(3);
  if (name == "chain4") return chain(4);
  return builtin_ortholattice(name).lattice;
}

std::vector<std::string> builtin_ortholattice_names() { return {"2", "B2", "B3", "MO1", "MO2", "MO3", "O6"}; }

std::vector<std::string> builtin_lattice_names() {
  auto names = builtin_ortholattice_names();
  for (const char* n : {"M2", "N5", "chain3", "chain4"}) names.emplace_back(n);
  return names;
}

}  // namespace qkit
