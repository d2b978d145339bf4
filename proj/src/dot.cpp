#include "qkit/dot.hpp"

#include <sstream>

namespace qkit {

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string hasse_dot(const FinitePoset& poset, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << quote(graph_name) << " {\n  rankdir=BT;\n";
  for (const auto& e : poset.elements()) out << "  " << quote(e) << ";\n";
  for (const auto& [a, b] : poset.covers()) out << "  " << quote(poset.name(a)) << " -> " << quote(poset.name(b)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string space_dot(const ClosureSpace& space) {
  return hasse_dot(closed_set_lattice(space).poset(), "closed_sets");
}

std::string resolution_dot(const Resolution& res) {
  const auto& target = res.target();
  std::ostringstream out;
  out << "digraph \"resolution\" {\n  rankdir=BT;\n";
  for (int e = 0; e < target.size(); ++e) {
    std::string points;
    for (int p = 0; p < res.size(); ++p) {
      if (res.of_point(p) == e) points += (points.empty() ? "" : ",") + res.sigma()[static_cast<std::size_t>(p)];
    }
    std::string label = target.name(e);
    if (!points.empty()) label += "\\n{" + points + "}";
    out << "  " << quote(target.name(e)) << " [label=" << quote(label);
    if (res.image_position(e) >= 0) out << ", style=filled";
    out << "];\n";
  }
  for (const auto& [a, b] : target.covers()) out << "  " << quote(target.name(a)) << " -> " << quote(target.name(b)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string transition_dot(const PossibleTransition& f) {
  std::ostringstream out;
  out << "digraph \"transition\" {\n  rankdir=LR;\n";
  for (const auto& p : f.source().sigma()) out << "  " << quote("src:" + p) << " [label=" << quote(p) << "];\n";
  for (const auto& q : f.target().sigma()) out << "  " << quote("tgt:" + q) << " [label=" << quote(q) << "];\n";
  for (int p = 0; p < f.source().size(); ++p) {
    for (int q : members(f.image_of_point(p))) {
      out << "  " << quote("src:" + f.source().sigma()[static_cast<std::size_t>(p)]) << " -> "
          << quote("tgt:" + f.target().sigma()[static_cast<std::size_t>(q)]) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string square_dot(const PossibleTransition& f, const PropertyTransition& induced) {
  auto sigma = [](const Resolution& r) {
    std::string s;
    for (const auto& p : r.sigma()) s += (s.empty() ? "" : ",") + p;
    return "P({" + s + "})";
  };
  auto image = [](const Resolution& r) {
    std::string s;
    for (const auto& e : r.image_lattice()->poset().elements()) s += (s.empty() ? "" : ",") + e;
    return "im{" + s + "}";
  };
  auto arrows = [](const nlohmann::json& m) {
    std::string s;
    for (const auto& [k, v] : m.items()) {
      std::string rhs = v.is_string() ? v.get<std::string>() : v.dump();
      s += (s.empty() ? "" : "\\n") + k + " -> " + rhs;
    }
    return s;
  };
  std::ostringstream out;
  out << "digraph \"square\" {\n";
  out << "  P1 [label=" << quote(sigma(f.source())) << "];\n";
  out << "  P2 [label=" << quote(sigma(f.target())) << "];\n";
  out << "  I1 [label=" << quote(image(f.source())) << "];\n";
  out << "  I2 [label=" << quote(image(f.target())) << "];\n";
  out << "  P1 -> P2 [label=" << quote("f\\n" + arrows(describe(f))) << "];\n";
  out << "  P1 -> I1 [label=\"table1\"];\n";
  out << "  P2 -> I2 [label=\"table2\"];\n";
  out << "  I1 -> I2 [label=" << quote("f_pr\\n" + arrows(describe(induced))) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace qkit
