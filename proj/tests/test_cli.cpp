#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "qkit/io.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = qkit::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("qkit_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

const char* kChain = R"({"elements":["0","l1","l2","l3"],"le":[["0","l1"],["l1","l2"],["l2","l3"]]})";

std::string resolution_doc() {
  return std::string(R"({"sigma":["p","q"],"lattice":)") + kChain +
         R"(,"strict":true,"table":{"":"0","p":"l1","q":"l2","p,q":"l2"}})";
}

std::size_t count_of(const std::string& s, const std::string& pat) {
  std::size_t n = 0;
  for (std::size_t i = s.find(pat); i != std::string::npos; i = s.find(pat, i + 1)) ++n;
  return n;
}

/// Edge statements: lines whose part before any attribute list has an arrow.
std::size_t edge_lines(const std::string& dot) {
  std::istringstream in(dot);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    if (line.substr(0, line.find('[')).find("->") != std::string::npos) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("validate the worked example") {
  TempDir dir;
  const auto res = dir.write("res.json", resolution_doc());
  const auto r = run({"validate", "--in", res, "--strict", "true"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("canonical") == true);
  CHECK(j.at("t1") == false);
}

TEST_CASE("axiom violations exit 1 with a witness") {
  TempDir dir;
  const auto bad = dir.write("bad.json", std::string(R"({"sigma":["p","q"],"lattice":)") + kChain +
                                             R"(,"table":{"":"0","p":"l1","q":"l2","p,q":"l3"}})");
  const auto r = run({"validate", "--in", bad});
  CHECK(r.code == 1);
  const auto j = json::parse(r.out);
  CHECK(j.at("error") == "JoinAxiomViolation");
  CHECK(j.contains("witness"));
}

TEST_CASE("input errors exit 2") {
  TempDir dir;
  const auto junk = dir.write("junk.json", "{not json");
  CHECK(run({"validate", "--in", junk}).code == 2);
  CHECK(run({"validate", "--in", (dir.path / "missing.json").string()}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"validate", "--in", junk, "--strict", "maybe"}).code == 2);
  const auto unknown = dir.write("u.json", std::string(R"({"sigma":["p"],"lattice":)") + kChain +
                                               R"(,"table":{"":"0","p":"l9"}})");
  const auto r = run({"validate", "--in", unknown});
  CHECK(r.code == 2);
  CHECK(json::parse(r.err).at("error") == "UnknownElement");
}

TEST_CASE("induced property maps from the command line") {
  TempDir dir;
  const auto res = dir.write("res.json", resolution_doc());
  const auto f = dir.write("f.json", R"({"kind":"res-sharp-strict","map":{"p":["q"],"q":["q"]}})");
  const auto r = run({"fpr", "--in", res, res, f});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("map") == json{{"0", "0"}, {"l1", "l2"}, {"l2", "l2"}});

  const auto space = dir.write("s.json", R"({"lattice":{"elements":["0","1","2"],"le":[["0","1"],["1","2"]]},
      "space":{"universe":["x","y"],"closed":[[],["x"],["x","y"]]},"theta":{"[]":"0","[x]":"1","[x,y]":"2"}})");
  const auto split = dir.write("split.json", R"({"map":{"x":["q"],"y":["p"]}})");
  const auto fail = run({"fpr", "--in", space, res, split});
  CHECK(fail.code == 1);
  const auto w = json::parse(fail.out);
  CHECK(w.at("error") == "ASharpFails");
  CHECK(w.at("witness").contains("T_prime"));

  const auto dot = run({"fpr", "--in", res, res, f, "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(edge_lines(dot.out) == 4);
}

TEST_CASE("lift, compose, join and check-morphism") {
  TempDir dir;
  const auto res = dir.write("res.json", resolution_doc());
  const auto g = dir.write("g.json", R"({"kind":"res-zero-strict","map":{"0":"0","l1":"l2","l2":"l2"}})");
  const auto lift = run({"lift", "--in", res, res, g});
  CHECK(lift.code == 0);
  CHECK(json::parse(lift.out).at("map").at("p") == json{"p", "q"});

  const auto f = dir.write("f.json", R"({"kind":"res-sharp-strict","map":{"p":["q"],"q":["q"]}})");
  const auto id = dir.write("id.json", R"({"kind":"res-sharp-strict","map":{"p":["p"],"q":["q"]}})");
  const auto comp = run({"compose", "--in", res, res, res, f, id});
  CHECK(comp.code == 0);
  CHECK(json::parse(comp.out).at("map").at("p") == json{"q"});
  const auto joined = run({"join", "--in", res, res, f, id});
  CHECK(joined.code == 0);
  CHECK(json::parse(joined.out).at("map").at("p") == json{"p", "q"});

  const auto check = run({"check-morphism", "--in", res, res, f});
  CHECK(check.code == 0);
  const auto drop = dir.write("drop.json", R"({"kind":"res-sharp-strict","map":{"p":[],"q":["q"]}})");
  const auto bad = run({"check-morphism", "--in", res, res, drop});
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out).at("a_empty") == false);
  CHECK(run({"compose", "--in", res, res, res, drop, id}).code == 1);
}

TEST_CASE("laws over files") {
  TempDir dir;
  const auto res = dir.write("res.json", resolution_doc());
  const auto one = dir.write("one.json", R"({"sigma":["p"],"lattice":"2","table":{"":"0","p":"1"}})");
  const auto r = run({"laws", "--in", res, one});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::string last;
  while (std::getline(lines, line)) last = line;
  CHECK(json::parse(last).at("violations") == 0);
  CHECK(run({"laws", "--in", res, one, "--cap", "1"}).code == 2);
}

TEST_CASE("canonicalize, factorize and adjoint") {
  TempDir dir;
  const auto res = dir.write("res.json", resolution_doc());
  const auto canon = run({"canonicalize", "--in", res});
  CHECK(canon.code == 0);
  CHECK(json::parse(canon.out).at("phi").at("p") == "s:l1");
  const auto fz = run({"factorize", "--in", res});
  CHECK(fz.code == 0);
  CHECK(json::parse(fz.out).at("theta").at("[p]") == "l1");

  const auto map = dir.write("map.json", R"({"domain":"chain3","codomain":"M2","map":{"0":"0","l1":"a","1":"1"}})");
  const auto adj = run({"adjoint", "--in", map});
  CHECK(adj.code == 0);
  CHECK(json::parse(adj.out).at("right_adjoint").at("map") == json{{"0", "0"}, {"a", "l1"}, {"b", "0"}, {"1", "1"}});
  const auto bad = dir.write("bad.json", R"({"domain":"chain3","codomain":"chain3","map":{"0":"1","l1":"1","1":"1"}})");
  const auto nj = run({"adjoint", "--in", bad});
  CHECK(nj.code == 1);
  CHECK(json::parse(nj.out).at("error") == "NotJoinPreserving");
}

TEST_CASE("sasaki from the command line") {
  const auto r = run({"sasaki", "--lattice", "MO2", "--property", "a"});
  CHECK(r.code == 0);
  const auto first = json::parse(r.out.substr(0, r.out.find('\n')));
  CHECK(first.at("measurement").at("map").at("b") == json{"a", "a'"});
  CHECK(run({"sasaki", "--lattice", "O6", "--property", "a"}).code == 1);
  CHECK(run({"sasaki", "--lattice", "MO2", "--property", "zz"}).code == 2);
}

TEST_CASE("DOT export") {
  TempDir dir;
  const auto m2 = run({"export-dot", "--lattice", "M2"});
  CHECK(m2.code == 0);
  CHECK(edge_lines(m2.out) == 4);
  CHECK(count_of(m2.out, ";\n") == 1 + 4 + 4);  // rankdir, nodes, edges
  const auto single = dir.write("one.json", R"({"elements":["x"]})");
  const auto one = run({"export-dot", "--in", single});
  CHECK(edge_lines(one.out) == 0);
  CHECK(one.out.find("\"x\"") != std::string::npos);
}

TEST_CASE("structures written with --out reload to equal values") {
  TempDir dir;
  const auto res = dir.write("res.json", resolution_doc());
  const auto out = (dir.path / "copy.json").string();
  CHECK(run({"validate", "--in", res, "--out", out}).code == 0);
  CHECK(qkit::resolution_from_json(qkit::read_json_file(out)) == qkit::resolution_from_json(json::parse(resolution_doc())));

  const auto space = dir.write("s.json", R"({"universe":["x","y"],"closed":[["x","y"],[],["x"]]})");
  const auto sout = (dir.path / "s2.json").string();
  CHECK(run({"validate", "--in", space, "--out", sout}).code == 0);
  CHECK(qkit::space_from_json(qkit::read_json_file(sout)) == qkit::space_from_json(qkit::read_json_file(space)));

  const auto ol = dir.write("ol.json", R"({"elements":["0","a","a'","1"],"le":[["0","a"],["0","a'"],["a","1"],["a'","1"]],
      "ortho":{"0":"1","a":"a'"}})");
  const auto oout = (dir.path / "ol2.json").string();
  CHECK(run({"validate", "--in", ol, "--out", oout}).code == 0);
  const auto back = qkit::ortholattice_from_json(qkit::read_json_file(oout));
  CHECK(back.ortho == qkit::ortholattice_from_json(qkit::read_json_file(ol)).ortho);

  const auto fz = (dir.path / "fz.json").string();
  CHECK(run({"factorize", "--in", res, "--out", fz}).code == 0);
  CHECK(qkit::resolution_from_json(qkit::read_json_file(fz)) == qkit::resolution_from_json(json::parse(resolution_doc())));

  const auto canon = (dir.path / "c.json").string();
  CHECK(run({"canonicalize", "--in", res, "--out", canon}).code == 0);
  CHECK(qkit::is_canonical(qkit::resolution_from_json(qkit::read_json_file(canon))));
}
