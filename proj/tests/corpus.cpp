#include "corpus.hpp"

#include <fstream>
#include <sstream>

#include "monograph/export.hpp"
#include "monograph/fixtures.hpp"
#include "monograph/limits.hpp"

namespace corpus {

using namespace monograph;

namespace {

Monograph egraph_type(bool nv_forward, bool ev_forward) {
  return Monograph::validate(
      {{"nodes", {}},
       {"values", {}},
       {"edges", {"nodes", "nodes"}},
       {"nv-edges", nv_forward ? EdgeSeq{"nodes", "values"} : EdgeSeq{"values", "nodes"}},
       {"ev-edges", ev_forward ? EdgeSeq{"edges", "values"} : EdgeSeq{"values", "edges"}}});
}

}  // namespace

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> out;
  {
    Document d;
    d.add_monograph("A", fixtures::running_example());
    d.add_morphism("swap", "A", "A", fixtures::running_example_swap().map());
    out.push_back({"running_example", d, "A", std::nullopt});
  }
  {
    Document d;
    d.add_monograph("T012", terminal({0, 1, 2}));
    out.push_back({"terminal_012", d, "T012", std::nullopt});
  }
  {
    Document d;
    d.add_monograph("Tg", fixtures::graph_type());
    d.add_signature("G", fixtures::graph_signature());
    out.push_back({"graph_type", d, "Tg", std::nullopt});
  }
  for (int i = 0; i < 4; ++i) {
    bool nv = i == 0 || i == 1, ev = i == 0 || i == 3;
    std::string name = "T" + std::to_string(i + 1);
    Document d;
    d.add_monograph(name, egraph_type(nv, ev));
    if (i == 0) d.add_signature("E", fixtures::egraph_signature());
    out.push_back({"egraph_" + name, d, name, std::nullopt});
  }
  {
    SpanRule rule = fixtures::loop_deletion_rule();
    Morphism m = fixtures::loop_deletion_match();
    Document d;
    d.add_monograph("T3", m.cod());
    d.add_monograph("K", rule.interface());
    d.add_monograph("L", rule.lhs());
    d.add_monograph("R", rule.rhs());
    d.add_morphism("l", "K", "L", rule.left.map());
    d.add_morphism("r", "K", "R", rule.right.map());
    d.add_rule("delete_loop", "l", "r");
    d.add_morphism("m", "L", "T3", m.map());
    out.push_back({"loop_removal", d, "T3", std::nullopt});
  }
  {
    Morphism a = fixtures::term_graph_example();
    Document d;
    d.add_monograph("TSigma", a.cod());
    d.add_monograph("A", a.dom());
    d.add_morphism("a", "A", "TSigma", a.map());
    out.push_back({"term_graph", d, "A", "a"});
  }
  {
    Atm x = fixtures::attribute_shared("a");
    Document d;
    d.add_monograph("T", x.type());
    d.add_monograph("G", x.graph());
    d.add_morphism("typing", "G", "T", x.typing().map());
    d.add_signature("D", x.data().signature());
    d.add_algebra("data", "D", x.data());
    out.push_back({"attributed", d, "G", "typing"});
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> renderings(const GoldenCase& c) {
  const Monograph& m = c.doc.monograph(c.draw);
  std::optional<Morphism> typing;
  if (c.typing) typing = c.doc.morphism(*c.typing).morphism;
  return {{"mg", c.doc.serialize()}, {"dot", export_dot(m, typing)}, {"tikz", export_tikz(m, typing)}};
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace corpus
