#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monograph/attributed.hpp"
#include "monograph/document.hpp"
#include "monograph/export.hpp"
#include "monograph/fixtures.hpp"
#include "monograph/limits.hpp"
#include "monograph/random.hpp"

namespace py = pybind11;
using namespace monograph;

namespace {

std::string repr(const Monograph& m) {
  std::string out = "Monograph(" + (m.name().empty() ? std::string() : m.name() + ", ") + "{";
  bool first = true;
  for (const auto& [e, seq] : m.adjacency()) {
    out += (first ? "" : ", ") + e + ": [";
    for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? " " : "") + seq[i];
    out += "]";
    first = false;
  }
  return out + "})";
}

py::dict kind_dict(const MorphismKind& k) {
  py::dict d;
  d["injective"] = k.injective;
  d["surjective"] = k.surjective;
  d["iso"] = k.iso;
  return d;
}

}  // namespace

PYBIND11_MODULE(_monograph, m) {
  m.doc() = "Monographs: finite edge-to-edge-sequence structures, their morphisms, "
            "limits, colimits and rewriting.";

  // Library errors surface as MonographError(kind, message).
  static py::exception<Error> error(m, "MonographError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(std::string(to_string(e.kind())), e.what());
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Monograph>(m, "Monograph")
      .def(py::init([](const Adjacency& adjacency, const std::string& name) {
             return Monograph::validate(adjacency, name);
           }),
           py::arg("adjacency"), py::arg("name") = "")
      .def_property_readonly("adjacency", &Monograph::adjacency)
      .def_property_readonly("name", &Monograph::name)
      .def_property_readonly("edges", &Monograph::edges)
      .def_property_readonly("nodes", &Monograph::nodes)
      .def_property_readonly("trace", &Monograph::trace)
      .def("is_standard", &Monograph::is_standard)
      .def("__getitem__", &Monograph::at)
      .def("__len__", &Monograph::size)
      .def("__contains__", &Monograph::contains)
      .def("__eq__", [](const Monograph& a, const Monograph& b) { return a == b; })
      .def("__repr__", &repr);

  py::class_<Morphism>(m, "Morphism")
      .def(py::init([](const Monograph& dom, const Monograph& cod, const EdgeMap& map) {
             return Morphism::check(dom, cod, map);
           }),
           py::arg("dom"), py::arg("cod"), py::arg("map"))
      .def_static("identity", &Morphism::identity)
      .def_property_readonly("dom", &Morphism::dom)
      .def_property_readonly("cod", &Morphism::cod)
      .def_property_readonly("map", &Morphism::map)
      .def("__call__", &Morphism::operator())
      .def("__eq__", [](const Morphism& a, const Morphism& b) { return a == b; })
      .def("kind", [](const Morphism& f) { return kind_dict(classify_morphism(f)); })
      .def("then", [](const Morphism& f, const Morphism& g) { return compose(g, f); },
           "The composite of this morphism followed by g.");

  m.def("compose", py::overload_cast<const Morphism&, const Morphism&>(&compose), py::arg("g"),
        py::arg("f"), "g after f.");
  m.def("enumerate_morphisms",
        [](const Monograph& dom, const Monograph& cod, std::optional<std::size_t> limit, bool injective) {
          return enumerate_morphisms(dom, cod, EnumerateOptions{.limit = limit, .injective = injective});
        },
        py::arg("dom"), py::arg("cod"), py::arg("limit") = py::none(), py::arg("injective") = false);
  m.def("find_isomorphism", &find_isomorphism);
  m.def("isomorphic", py::overload_cast<const Monograph&, const Monograph&>(&isomorphic));

  // Universal constructions return (object, morphisms...).
  m.def("coproduct", [](const Monograph& a, const Monograph& b) {
    auto c = coproduct(a, b);
    return py::make_tuple(c.object, c.left, c.right);
  });
  m.def("coequalizer", [](const Morphism& f, const Morphism& g) {
    auto c = coequalizer(f, g);
    return py::make_tuple(c.object, c.quotient);
  });
  m.def("pushout", [](const Morphism& f, const Morphism& g) {
    auto p = pushout(f, g);
    return py::make_tuple(p.object, p.left, p.right);
  });
  m.def("product", [](const Monograph& a, const Monograph& b) {
    auto p = product(a, b);
    return py::make_tuple(p.object, p.left, p.right);
  });
  m.def("equalizer", [](const Morphism& f, const Morphism& g) {
    auto e = equalizer(f, g);
    return py::make_tuple(e.object, e.inclusion);
  });
  m.def("pullback", [](const Morphism& f, const Morphism& g) {
    auto p = pullback(f, g);
    return py::make_tuple(p.object, p.left, p.right);
  });
  m.def("terminal", &terminal, py::arg("trace"));
  m.def("bang", &bang, py::arg("m"), py::arg("trace"));

  py::class_<SpanRule>(m, "Rule")
      .def(py::init(&SpanRule::make), py::arg("name"), py::arg("left"), py::arg("right"))
      .def_readonly("name", &SpanRule::name)
      .def_readonly("left", &SpanRule::left)
      .def_readonly("right", &SpanRule::right);
  m.def("gluing_condition",
        [](const Morphism& l, const Morphism& match) {
          auto r = gluing_condition(l, match);
          return py::make_tuple(r.holds, describe(r));
        },
        "Returns (holds, description of the violations).");
  m.def("pushout_complement", [](const Morphism& l, const Morphism& match) {
    auto pc = pushout_complement(l, match);
    return py::make_tuple(pc.object, pc.k, pc.f);
  });
  m.def("dpo_apply", [](const SpanRule& rule, const Morphism& match) { return dpo_apply(rule, match).result; });
  m.def("spo_apply",
        [](const SpanRule& rule, const Morphism& match) { return spo_apply(span_to_partial(rule), match).result; },
        "Single pushout rewriting with the partial morphism of a span rule.");

  py::class_<Signature>(m, "Signature")
      .def(py::init([](const std::vector<Sort>& sorts,
                       const std::vector<std::tuple<std::string, std::vector<Sort>, Sort>>& ops) {
             std::vector<Operator> operators;
             for (const auto& [name, domain, range] : ops) operators.push_back({name, domain, range});
             return Signature::make(sorts, operators);
           }),
           py::arg("sorts"), py::arg("operators"))
      .def_property_readonly("sorts", &Signature::sorts)
      .def_property_readonly("operators",
                             [](const Signature& s) {
                               py::list out;
                               for (const auto& o : s.operators()) out.append(py::make_tuple(o.name, o.domain, o.range));
                               return out;
                             })
      .def("is_graph_structure", &Signature::is_graph_structure)
      .def("__eq__", [](const Signature& a, const Signature& b) { return a == b; });

  py::class_<Algebra>(m, "Algebra")
      .def(py::init(&Algebra::make), py::arg("signature"), py::arg("carriers"), py::arg("tables"))
      .def_property_readonly("signature", &Algebra::signature)
      .def("carrier", &Algebra::carrier)
      .def("apply", &Algebra::apply)
      .def_property_readonly("tables", &Algebra::tables);

  m.def("sig_of_monograph", &sig_of_monograph);
  m.def("type_monograph_of_sig",
        [](const Signature& g, const std::map<Sort, std::vector<std::string>>& orderings) {
          return type_monograph_of_sig(g, orderings).type;
        },
        py::arg("signature"), py::arg("orderings") = std::map<Sort, std::vector<std::string>>{});
  m.def("all_type_monographs", &all_type_monographs);
  m.def("algebra_of_typed", &algebra_of_typed);
  m.def("typed_of_algebra", &typed_of_algebra);
  m.def("find_algebra_isomorphism", &find_algebra_isomorphism);

  py::class_<Atm>(m, "Atm")
      .def(py::init(&Atm::validate), py::arg("typing"), py::arg("data"))
      .def_property_readonly("typing", &Atm::typing)
      .def_property_readonly("data", &Atm::data)
      .def("attributes", &Atm::attributes);
  m.def("stabilizes", &stabilizes);

  py::class_<Document>(m, "Document")
      .def(py::init<>())
      .def_static("parse", [](const std::string& text) { return Document::parse(text); })
      .def("serialize", &Document::serialize)
      .def("names", [](const Document& d) {
        std::vector<std::string> out;
        for (const auto& [kind, name] : d.declarations()) out.push_back(name);
        return out;
      })
      .def("monograph", &Document::monograph)
      .def("morphism", [](const Document& d, const std::string& n) { return d.morphism(n).morphism; })
      .def("rule", [](const Document& d, const std::string& n) { return d.rule(n).rule; })
      .def("signature", &Document::signature)
      .def("algebra", [](const Document& d, const std::string& n) { return d.algebra(n).algebra; })
      .def("add_monograph", &Document::add_monograph)
      .def("add_morphism", &Document::add_morphism)
      .def("__eq__", [](const Document& a, const Document& b) { return a == b; });

  m.def("export_dot", &export_dot, py::arg("m"), py::arg("typing") = py::none());
  m.def("export_tikz", &export_tikz, py::arg("m"), py::arg("typing") = py::none());

  m.def("random_monograph",
        [](std::uint64_t seed, std::size_t max_edges, std::size_t max_length) {
          Rng rng(seed);
          return random_monograph(rng, {.max_edges = max_edges, .max_length = max_length});
        },
        py::arg("seed"), py::arg("max_edges") = 4, py::arg("max_length") = 3);

  py::module_ fx = m.def_submodule("fixtures", "Standard example monographs.");
  fx.def("running_example", &fixtures::running_example);
  fx.def("graph_type", &fixtures::graph_type);
  fx.def("graph_signature", &fixtures::graph_signature);
  fx.def("egraph_signature", &fixtures::egraph_signature);
  fx.def("globular_type", &fixtures::globular_type);
  fx.def("loop_deletion_rule", &fixtures::loop_deletion_rule);
  fx.def("loop_deletion_match", &fixtures::loop_deletion_match);
}
