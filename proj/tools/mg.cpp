// Command-line front end: reads documents, runs one construction, and writes
// the input document extended with the results.
//
// Exit status: 0 success, 1 validation or precondition failure, 2 usage,
// parse or unresolved-reference error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "monograph/attributed.hpp"
#include "monograph/document.hpp"
#include "monograph/export.hpp"
#include "monograph/limits.hpp"
#include "monograph/random.hpp"

using namespace monograph;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool colored() {
  const char* c = std::getenv("MG_COLOR");
  return c != nullptr && std::string(c) == "1";
}

void report(const std::string& what) {
  if (colored())
    std::cerr << "\033[31merror:\033[0m " << what << "\n";
  else
    std::cerr << "error: " << what << "\n";
}

Document load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return Document::parse(text.str());
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + out + "'");
  f << text;
}

// `base`, or base followed by primes until unused.
std::string fresh(const Document& d, std::string base) {
  while (d.has(base)) base += "'";
  return base;
}

std::string add_monograph(Document& d, const std::string& base, const Monograph& m) {
  std::string name = fresh(d, base);
  d.add_monograph(name, m);
  return name;
}

std::string add_morphism(Document& d, const std::string& base, const std::string& dom,
                         const std::string& cod, const Morphism& f) {
  std::string name = fresh(d, base);
  d.add_morphism(name, dom, cod, f.map());
  return name;
}

Trace parse_trace(const std::string& text) {
  Trace t;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad length '" + item + "' in --trace");
    t.insert(std::stoul(item));
  }
  return t;
}

std::string flags(const MorphismKind& k) {
  return std::string(k.injective ? "injective" : "not injective") + ", " +
         (k.surjective ? "surjective" : "not surjective") + ", " + (k.iso ? "iso" : "not iso");
}

struct RewriteArgs {
  std::string file, rule, match, host, out;
  std::optional<std::size_t> index;
  bool all = false;
};

// Matches selected by --match, --match-index or --all.
std::vector<Morphism> selected_matches(const Document& d, const SpanRule& rule, const RewriteArgs& a,
                                       std::string& host) {
  int given = !a.match.empty() + a.index.has_value() + a.all;
  if (given != 1) throw UsageError("give exactly one of --match, --match-index, --all");
  if (!a.match.empty()) {
    const NamedMorphism& m = d.morphism(a.match);
    if (!(m.morphism.dom() == rule.lhs()))
      throw Error(ErrorKind::PreconditionViolated, "match '" + a.match + "' does not start at the left-hand side");
    host = m.cod;
    return {m.morphism};
  }
  if (a.host.empty()) throw UsageError("--match-index and --all need --host");
  host = a.host;
  std::vector<Morphism> all = enumerate_morphisms(rule.lhs(), d.monograph(a.host));
  if (a.all) return all;
  if (*a.index >= all.size())
    throw Error(ErrorKind::PreconditionViolated, "only " + std::to_string(all.size()) + " matches exist");
  return {all[*a.index]};
}

void rewrite(const RewriteArgs& a, bool spo) {
  Document d = load(a.file);
  const SpanRule& rule = d.rule(a.rule).rule;
  std::string host;
  std::vector<Morphism> matches = selected_matches(d, rule, a, host);
  std::size_t applied = 0;
  for (const auto& m : matches) {
    if (spo) {
      SpoResult r = spo_apply(span_to_partial(rule), m);
      add_monograph(d, host + "_" + a.rule, r.result);
    } else {
      GluingReport g = gluing_condition(rule.left, m);
      if (!g.holds) {
        if (!a.all) throw Error(ErrorKind::GluingViolated, describe(g));
        continue;
      }
      DpoResult r = dpo_apply(rule, m);
      std::string n = add_monograph(d, host + "_" + a.rule, r.result);
      add_morphism(d, "comatch_" + n, d.morphism(d.rule(a.rule).right).cod, n, r.comatch);
    }
    ++applied;
  }
  if (a.all) std::cerr << applied << " of " << matches.size() << " matches rewritten\n";
  emit(d.serialize(), a.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monographs: constructions, rewriting and signature translation"};
  app.require_subcommand(1);
  std::function<void()> action;

  std::string file, a, b, out, typing, terminal_name, random_name;
  std::size_t limit = 0;
  bool injective = false;
  std::string trace;
  std::vector<std::string> orders;
  std::uint64_t seed = 0;
  std::size_t edges = 4, length = 3;

  auto with_file = [&](CLI::App* c) { c->add_option("FILE", file, "Document")->required(); };
  auto with_out = [&](CLI::App* c) { c->add_option("-o,--output", out, "Output file (default: stdout)"); };

  {
    auto* c = app.add_subcommand("validate", "Parse and validate a document");
    with_file(c);
    c->callback([&] {
      action = [&] {
        Document d = load(file);
        std::cout << "ok: " << d.declarations().size() << " declarations\n";
      };
    });
  }
  {
    auto* c = app.add_subcommand("check-morphism", "Classify a declared morphism");
    with_file(c);
    c->add_option("NAME", a)->required();
    c->callback([&] {
      action = [&] {
        Document d = load(file);
        const NamedMorphism& f = d.morphism(a);
        std::cout << a << " : " << f.dom << " -> " << f.cod << ": " << flags(classify_morphism(f.morphism)) << "\n";
      };
    });
  }
  {
    auto* c = app.add_subcommand("morphisms", "Enumerate morphisms A -> B");
    with_file(c);
    c->add_option("A", a)->required();
    c->add_option("B", b)->required();
    c->add_option("--limit", limit, "Stop after N morphisms");
    c->add_flag("--injective", injective, "Only injective morphisms");
    with_out(c);
    c->callback([&] {
      action = [&] {
        Document d = load(file);
        EnumerateOptions o;
        if (limit > 0) o.limit = limit;
        o.injective = injective;
        auto all = enumerate_morphisms(d.monograph(a), d.monograph(b), o);
        for (std::size_t i = 0; i < all.size(); ++i) add_morphism(d, "h" + std::to_string(i), a, b, all[i]);
        std::cerr << all.size() << " morphisms\n";
        emit(d.serialize(), out);
      };
    });
  }
  {
    auto* c = app.add_subcommand("iso", "Find an isomorphism A -> B");
    with_file(c);
    c->add_option("A", a)->required();
    c->add_option("B", b)->required();
    with_out(c);
    c->callback([&] {
      action = [&] {
        Document d = load(file);
        auto f = find_isomorphism(d.monograph(a), d.monograph(b));
        if (!f) throw Error(ErrorKind::NotBijective, "'" + a + "' and '" + b + "' are not isomorphic");
        add_morphism(d, "iso", a, b, *f);
        emit(d.serialize(), out);
      };
    });
  }
  for (const char* cmd : {"coproduct", "product"}) {
    auto* c = app.add_subcommand(cmd, std::string("Build the ") + cmd + " of A and B");
    with_file(c);
    c->add_option("A", a)->required();
    c->add_option("B", b)->required();
    with_out(c);
    bool is_sum = std::string(cmd) == "coproduct";
    c->callback([&, is_sum] {
      action = [&, is_sum] {
        Document d = load(file);
        const Monograph& x = d.monograph(a);
        const Monograph& y = d.monograph(b);
        if (is_sum) {
          Coproduct s = coproduct(x, y);
          std::string n = add_monograph(d, a + "_plus_" + b, s.object);
          add_morphism(d, "inl", a, n, s.left);
          add_morphism(d, "inr", b, n, s.right);
        } else {
          Product p = product(x, y);
          std::string n = add_monograph(d, a + "_times_" + b, p.object);
          add_morphism(d, "fst", n, a, p.left);
          add_morphism(d, "snd", n, b, p.right);
        }
        emit(d.serialize(), out);
      };
    });
  }
  for (const char* cmd : {"coequalizer", "equalizer", "pushout", "pullback"}) {
    auto* c = app.add_subcommand(cmd, std::string("Build the ") + cmd + " of f and g");
    with_file(c);
    c->add_option("f", a)->required();
    c->add_option("g", b)->required();
    with_out(c);
    std::string which = cmd;
    c->callback([&, which] {
      action = [&, which] {
        Document d = load(file);
        const NamedMorphism f = d.morphism(a);
        const NamedMorphism g = d.morphism(b);
        if (which == "coequalizer") {
          Coequalizer q = coequalizer(f.morphism, g.morphism);
          std::string n = add_monograph(d, "coeq_" + a + "_" + b, q.object);
          add_morphism(d, "quotient", f.cod, n, q.quotient);
        } else if (which == "equalizer") {
          if (f.dom != g.dom || f.cod != g.cod)
            throw Error(ErrorKind::NotParallel, "'" + a + "' and '" + b + "' are not parallel");
          Equalizer e = equalizer(f.morphism, g.morphism);
          std::string n = add_monograph(d, "eq_" + a + "_" + b, e.object);
          add_morphism(d, "inclusion", n, f.dom, e.inclusion);
        } else if (which == "pushout") {
          if (f.dom != g.dom) throw Error(ErrorKind::PreconditionViolated, "morphisms do not share a domain");
          Pushout p = pushout(f.morphism, g.morphism);
          std::string n = add_monograph(d, "po_" + a + "_" + b, p.object);
          add_morphism(d, "po_left", f.cod, n, p.left);
          add_morphism(d, "po_right", g.cod, n, p.right);
        } else {
          if (f.cod != g.cod) throw Error(ErrorKind::PreconditionViolated, "morphisms do not share a codomain");
          Pullback p = pullback(f.morphism, g.morphism);
          std::string n = add_monograph(d, "pb_" + a + "_" + b, p.object);
          add_morphism(d, "pb_left", n, f.dom, p.left);
          add_morphism(d, "pb_right", n, g.dom, p.right);
        }
        emit(d.serialize(), out);
      };
    });
  }
  {
    auto* c = app.add_subcommand("terminal", "Terminal O-monograph for a set of lengths");
    c->add_option("--trace", trace, "Comma-separated lengths, e.g. 0,2")->required();
    c->add_option("--name", terminal_name, "Name of the monograph")->default_val("T");
    with_out(c);
    c->callback([&] {
      action = [&] {
        Document d;
        d.add_monograph(terminal_name, terminal(parse_trace(trace)));
        emit(d.serialize(), out);
      };
    });
  }
  {
    auto* c = app.add_subcommand("gluing", "Check the gluing condition for l and m");
    with_file(c);
    c->add_option("l", a)->required();
    c->add_option("m", b)->required();
    c->callback([&] {
      action = [&] {
        Document d = load(file);
        GluingReport r = gluing_condition(d.morphism(a).morphism, d.morphism(b).morphism);
        if (!r.holds) throw Error(ErrorKind::GluingViolated, describe(r));
        std::cout << "gluing condition holds\n";
      };
    });
  }
  {
    auto* c = app.add_subcommand("po-complement", "Pushout complement of l and m");
    with_file(c);
    c->add_option("l", a)->required();
    c->add_option("m", b)->required();
    with_out(c);
    c->callback([&] {
      action = [&] {
        Document d = load(file);
        const NamedMorphism l = d.morphism(a);
        const NamedMorphism m = d.morphism(b);
        PushoutComplement pc = pushout_complement(l.morphism, m.morphism);
        std::string n = add_monograph(d, "complement", pc.object);
        add_morphism(d, "k", l.dom, n, pc.k);
        add_morphism(d, "f", n, m.cod, pc.f);
        emit(d.serialize(), out);
      };
    });
  }
  RewriteArgs rw;
  for (const char* cmd : {"dpo", "spo"}) {
    auto* c = app.add_subcommand(cmd, std::string("Apply a rule by ") + (std::string(cmd) == "dpo" ? "double" : "single") +
                                          " pushout");
    c->add_option("FILE", rw.file)->required();
    c->add_option("RULE", rw.rule)->required();
    c->add_option("--match", rw.match, "Declared match morphism");
    c->add_option("--match-index", rw.index, "Index into the enumerated matches");
    c->add_flag("--all", rw.all, "Rewrite at every match");
    c->add_option("--host", rw.host, "Host monograph for --match-index and --all");
    c->add_option("-o,--output", rw.out, "Output file (default: stdout)");
    bool spo = std::string(cmd) == "spo";
    c->callback([&, spo] { action = [&, spo] { rewrite(rw, spo); }; });
  }
  {
    auto* c = app.add_subcommand("sig2type", "Type monograph of a monadic signature");
    with_file(c);
    c->add_option("SIG", a)->required();
    c->add_option("--order", orders, "sort=op1,op2 fixes the order of a sort's operators");
    with_out(c);
    c->callback([&] {
      action = [&] {
        Document d = load(file);
        std::map<Sort, std::vector<std::string>> orderings;
        for (const auto& o : orders) {
          auto eq = o.find('=');
          if (eq == std::string::npos) throw UsageError("--order expects sort=op1,op2");
          std::vector<std::string> ops;
          std::stringstream in(o.substr(eq + 1));
          std::string op;
          while (std::getline(in, op, ',')) ops.push_back(op);
          orderings[o.substr(0, eq)] = ops;
        }
        TypeMonograph t = type_monograph_of_sig(d.signature(a), orderings);
        add_monograph(d, "T_" + a, t.type);
        std::string text;
        for (const auto& [pos, op] : t.op_bijection) text += "# " + pos + " is " + op + "\n";
        emit(text + d.serialize(), out);
      };
    });
  }
  {
    auto* c = app.add_subcommand("type2sig", "Signature of a type monograph");
    with_file(c);
    c->add_option("T", a)->required();
    with_out(c);
    c->callback([&] {
      action = [&] {
        Document d = load(file);
        d.add_signature(fresh(d, "S_" + a), sig_of_monograph(d.monograph(a)));
        emit(d.serialize(), out);
      };
    });
  }
  {
    auto* c = app.add_subcommand("typed2alg", "Algebra of a typed monograph");
    with_file(c);
    c->add_option("TYPING", a)->required();
    with_out(c);
    c->callback([&] {
      action = [&] {
        Document d = load(file);
        const NamedMorphism t = d.morphism(a);
        std::string sig = fresh(d, "S_" + t.cod);
        d.add_signature(sig, sig_of_monograph(t.morphism.cod()));
        d.add_algebra(fresh(d, "alg_" + a), sig, algebra_of_typed(t.morphism));
        emit(d.serialize(), out);
      };
    });
  }
  {
    auto* c = app.add_subcommand("alg2typed", "Typed monograph of an algebra");
    with_file(c);
    c->add_option("ALG", a)->required();
    c->add_option("T", b)->required();
    with_out(c);
    c->callback([&] {
      action = [&] {
        Document d = load(file);
        Morphism t = typed_of_algebra(d.algebra(a).algebra, d.monograph(b));
        std::string n = add_monograph(d, "typed_" + a, t.dom());
        add_morphism(d, "typing_" + a, n, b, t);
        emit(d.serialize(), out);
      };
    });
  }
  {
    auto* c = app.add_subcommand("atm-check", "Check a typing and data algebra form an ATM");
    with_file(c);
    c->add_option("TYPING", a)->required();
    c->add_option("ALGEBRA", b)->required();
    c->callback([&] {
      action = [&] {
        Document d = load(file);
        Atm x = Atm::validate(d.morphism(a).morphism, d.algebra(b).algebra);
        std::cout << "valid ATM; attributes:";
        for (const auto& e : x.attributes()) std::cout << " " << quote_name(e);
        std::cout << "\n";
      };
    });
  }
  for (const char* cmd : {"export-dot", "export-tikz"}) {
    bool dot = std::string(cmd) == "export-dot";
    auto* c = app.add_subcommand(cmd, dot ? "Draw a monograph as Graphviz DOT" : "Draw a monograph as TikZ");
    with_file(c);
    c->add_option("A", a)->required();
    c->add_option("--typing", typing, "Morphism out of A whose targets label the edges");
    with_out(c);
    c->callback([&, dot] {
      action = [&, dot] {
        Document d = load(file);
        std::optional<Morphism> t;
        if (!typing.empty()) t = d.morphism(typing).morphism;
        const Monograph& m = d.monograph(a);
        emit(dot ? export_dot(m, t) : export_tikz(m, t), out);
      };
    });
  }
  {
    auto* c = app.add_subcommand("random-monograph", "Generate a random monograph");
    c->add_option("--seed", seed, "Generator seed")->required();
    c->add_option("--edges", edges, "Maximum number of edges")->default_val(4);
    c->add_option("--max-length", length, "Maximum edge length")->default_val(3);
    c->add_option("--name", random_name, "Name of the monograph")->default_val("M");
    with_out(c);
    c->callback([&] {
      action = [&] {
        Rng rng(seed);
        Document d;
        d.add_monograph(random_name, random_monograph(rng, {.max_edges = edges, .max_length = length}));
        emit(d.serialize(), out);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    action();
    return 0;
  } catch (const UsageError& e) {
    report(e.what());
    return 2;
  } catch (const Error& e) {
    report(e.what());
    return e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::UnresolvedReference ? 2 : 1;
  }
}
