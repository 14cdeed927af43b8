#include "monograph/document.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

namespace monograph {

namespace {

bool simple_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.' || c == '@';
}

enum class Tok { Name, Punct, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  bool quoted = false;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t{Tok::End, "", false, line_, col_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (simple_char(c)) {
        t.kind = Tok::Name;
        while (pos_ < text_.size() && simple_char(text_[pos_])) t.text += advance();
      } else if (c == '"') {
        t.kind = Tok::Name;
        t.quoted = true;
        advance();
        for (;;) {
          if (pos_ >= text_.size() || text_[pos_] == '\n')
            throw ParseError(t.line, t.column, "unterminated quoted name");
          char d = advance();
          if (d == '"') break;
          if (d == '\\') {
            if (pos_ >= text_.size()) throw ParseError(line_, col_, "dangling escape");
            d = advance();
          }
          t.text += d;
        }
        if (t.text.empty()) throw ParseError(t.line, t.column, "empty quoted name");
      } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        t.kind = Tok::Arrow;
        t.text = "->";
        advance();
        advance();
      } else if (std::string_view("{};:,()=").find(c) != std::string_view::npos) {
        t.kind = Tok::Punct;
        t.text = std::string(1, advance());
      } else {
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct RawMonograph {
  std::vector<std::pair<EdgeId, EdgeSeq>> edges;
};
struct RawMorphism {
  std::string dom, cod;
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
};
struct RawRule {
  std::string left, right;
};
struct RawSignature {
  std::vector<Sort> sorts;
  std::vector<Operator> ops;
};
struct RawAlgebra {
  std::string signature;
  std::vector<std::pair<Sort, std::vector<Element>>> carriers;
  std::vector<std::tuple<std::string, std::vector<Element>, Element>> entries;
};

struct RawDecl {
  DeclKind kind;
  std::string name;
  std::size_t line, column;
  RawMonograph monograph;
  RawMorphism morphism;
  RawRule rule;
  RawSignature signature;
  RawAlgebra algebra;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  std::vector<RawDecl> run() {
    std::vector<RawDecl> out;
    while (peek().kind != Tok::End) out.push_back(declaration());
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& what) {
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, "expected " + what + ", found " + found);
  }

  bool at_punct(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }
  bool at_keyword(const char* k) const {
    return peek().kind == Tok::Name && !peek().quoted && peek().text == k;
  }

  void expect(const char* p) {
    if (!at_punct(p)) fail(peek(), std::string("'") + p + "'");
    next();
  }
  void expect_arrow() {
    if (peek().kind != Tok::Arrow) fail(peek(), "'->'");
    next();
  }
  std::string name() {
    if (peek().kind != Tok::Name) fail(peek(), "a name");
    return next().text;
  }
  std::vector<std::string> names_until_punct() {
    std::vector<std::string> out;
    while (peek().kind == Tok::Name) out.push_back(next().text);
    return out;
  }

  RawDecl declaration() {
    const Token& head = peek();
    RawDecl d{};
    d.line = head.line;
    d.column = head.column;
    if (at_keyword("monograph")) {
      next();
      d.kind = DeclKind::Monograph;
      d.name = name();
      expect("{");
      while (!at_punct("}")) {
        std::string e = name();
        expect(":");
        EdgeSeq seq = names_until_punct();
        expect(";");
        d.monograph.edges.emplace_back(std::move(e), std::move(seq));
      }
      expect("}");
    } else if (at_keyword("morphism")) {
      next();
      d.kind = DeclKind::Morphism;
      d.name = name();
      expect(":");
      d.morphism.dom = name();
      expect_arrow();
      d.morphism.cod = name();
      expect("{");
      while (!at_punct("}")) {
        std::string x = name();
        expect_arrow();
        std::string y = name();
        expect(";");
        d.morphism.pairs.emplace_back(std::move(x), std::move(y));
      }
      expect("}");
    } else if (at_keyword("rule")) {
      next();
      d.kind = DeclKind::Rule;
      d.name = name();
      expect("{");
      bool seen_left = false, seen_right = false;
      while (!at_punct("}")) {
        const Token& t = peek();
        bool left = at_keyword("left");
        if (!left && !at_keyword("right")) fail(t, "'left' or 'right'");
        bool& seen = left ? seen_left : seen_right;
        if (seen) throw ParseError(t.line, t.column, "repeated '" + t.text + "'");
        seen = true;
        next();
        expect(":");
        (left ? d.rule.left : d.rule.right) = name();
        expect(";");
      }
      if (!seen_left || !seen_right) fail(peek(), "both 'left' and 'right'");
      expect("}");
    } else if (at_keyword("signature")) {
      next();
      d.kind = DeclKind::Signature;
      d.name = name();
      expect("{");
      while (!at_punct("}")) {
        if (at_keyword("sorts")) {
          next();
          for (auto& s : names_until_punct()) d.signature.sorts.push_back(std::move(s));
          expect(";");
        } else if (at_keyword("op")) {
          next();
          Operator o;
          o.name = name();
          expect(":");
          o.domain = names_until_punct();
          expect_arrow();
          o.range = name();
          expect(";");
          d.signature.ops.push_back(std::move(o));
        } else {
          fail(peek(), "'sorts' or 'op'");
        }
      }
      expect("}");
    } else if (at_keyword("algebra")) {
      next();
      d.kind = DeclKind::Algebra;
      d.name = name();
      expect(":");
      d.algebra.signature = name();
      expect("{");
      while (!at_punct("}")) {
        if (at_keyword("carrier")) {
          next();
          Sort s = name();
          expect("=");
          std::vector<Element> xs = names_until_punct();
          expect(";");
          d.algebra.carriers.emplace_back(std::move(s), std::move(xs));
        } else if (at_keyword("op")) {
          next();
          std::string o = name();
          expect("(");
          std::vector<Element> args;
          if (!at_punct(")")) {
            args.push_back(name());
            while (at_punct(",")) {
              next();
              args.push_back(name());
            }
          }
          expect(")");
          expect("=");
          Element v = name();
          expect(";");
          d.algebra.entries.emplace_back(std::move(o), std::move(args), std::move(v));
        } else {
          fail(peek(), "'carrier' or 'op'");
        }
      }
      expect("}");
    } else {
      fail(head, "a declaration keyword");
    }
    return d;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string at(const RawDecl& d) {
  return " (declaration at " + std::to_string(d.line) + ":" + std::to_string(d.column) + ")";
}

}  // namespace

std::string quote_name(const std::string& name) {
  if (!name.empty() && std::all_of(name.begin(), name.end(), simple_char)) return name;
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Document Document::parse(std::string_view text) {
  std::vector<RawDecl> decls = Parser(Lexer(text).run()).run();
  {
    std::set<std::string> names;
    for (const auto& d : decls)
      if (!names.insert(d.name).second)
        throw ParseError(d.line, d.column, "duplicate declaration '" + d.name + "'");
  }
  Document doc;
  auto rethrow = [](const RawDecl& d, const Error& e) -> Error {
    return Error(e.kind(), std::string(e.what()) + at(d));
  };
  for (DeclKind pass : {DeclKind::Monograph, DeclKind::Signature, DeclKind::Morphism,
                        DeclKind::Algebra, DeclKind::Rule}) {
    for (const auto& d : decls) {
      if (d.kind != pass) continue;
      try {
        switch (d.kind) {
          case DeclKind::Monograph: {
            Adjacency adj;
            for (const auto& [e, seq] : d.monograph.edges)
              if (!adj.emplace(e, seq).second)
                throw Error(ErrorKind::PreconditionViolated, "edge '" + e + "' declared twice");
            doc.add_monograph(d.name, Monograph::validate(std::move(adj)));
            break;
          }
          case DeclKind::Morphism: {
            EdgeMap map;
            for (const auto& [x, y] : d.morphism.pairs)
              if (!map.emplace(x, y).second)
                throw Error(ErrorKind::PreconditionViolated, "'" + x + "' mapped twice");
            doc.add_morphism(d.name, d.morphism.dom, d.morphism.cod, map);
            break;
          }
          case DeclKind::Rule:
            doc.add_rule(d.name, d.rule.left, d.rule.right);
            break;
          case DeclKind::Signature:
            doc.add_signature(d.name, Signature::make(d.signature.sorts, d.signature.ops));
            break;
          case DeclKind::Algebra: {
            const Signature& sig = doc.signature(d.algebra.signature);
            std::map<Sort, std::set<Element>> carriers;
            for (const auto& [s, xs] : d.algebra.carriers) {
              auto& c = carriers[s];
              c.insert(xs.begin(), xs.end());
            }
            std::map<std::string, OpTable> tables;
            for (const auto& [o, args, v] : d.algebra.entries)
              if (!tables[o].emplace(args, v).second)
                throw Error(ErrorKind::InvalidAlgebra, "'" + o + "' defined twice on the same arguments");
            doc.add_algebra(d.name, d.algebra.signature, Algebra::make(sig, carriers, tables));
            break;
          }
        }
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw rethrow(d, e);
      }
    }
  }
  doc.order_.clear();
  for (const auto& d : decls) doc.order_.emplace_back(d.kind, d.name);
  return doc;
}

void Document::claim(const std::string& name, DeclKind kind) {
  if (name.empty()) throw Error(ErrorKind::PreconditionViolated, "empty declaration name");
  if (has(name)) throw Error(ErrorKind::PreconditionViolated, "duplicate declaration '" + name + "'");
  order_.emplace_back(kind, name);
}

void Document::add_monograph(const std::string& name, const Monograph& m) {
  claim(name, DeclKind::Monograph);
  monographs_.emplace(name, m.with_name(name));
}

void Document::add_morphism(const std::string& name, const std::string& dom, const std::string& cod,
                            const EdgeMap& map) {
  Morphism f = Morphism::check(monograph(dom), monograph(cod), map);
  claim(name, DeclKind::Morphism);
  morphisms_.emplace(name, NamedMorphism{dom, cod, std::move(f)});
}

void Document::add_rule(const std::string& name, const std::string& left, const std::string& right) {
  const NamedMorphism& l = morphism(left);
  const NamedMorphism& r = morphism(right);
  if (l.dom != r.dom)
    throw Error(ErrorKind::PreconditionViolated, "rule '" + name + "': morphisms start at '" + l.dom +
                                                     "' and '" + r.dom + "'");
  SpanRule rule = SpanRule::make(name, l.morphism, r.morphism);
  claim(name, DeclKind::Rule);
  rules_.emplace(name, NamedRule{left, right, std::move(rule)});
}

void Document::add_signature(const std::string& name, const Signature& s) {
  claim(name, DeclKind::Signature);
  signatures_.emplace(name, s);
}

void Document::add_algebra(const std::string& name, const std::string& signature, const Algebra& a) {
  if (!(this->signature(signature) == a.signature()))
    throw Error(ErrorKind::SignatureMismatch, "algebra '" + name + "' is not over '" + signature + "'");
  claim(name, DeclKind::Algebra);
  algebras_.emplace(name, NamedAlgebra{signature, a});
}

bool Document::has(const std::string& name) const { return kind(name).has_value(); }

std::optional<DeclKind> Document::kind(const std::string& name) const {
  for (const auto& [k, n] : order_)
    if (n == name) return k;
  return std::nullopt;
}

namespace {
template <typename Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end())
    throw Error(ErrorKind::UnresolvedReference, std::string("no ") + what + " named '" + name + "'");
  return it->second;
}
}  // namespace

const Monograph& Document::monograph(const std::string& name) const {
  return lookup(monographs_, name, "monograph");
}
const NamedMorphism& Document::morphism(const std::string& name) const {
  return lookup(morphisms_, name, "morphism");
}
const NamedRule& Document::rule(const std::string& name) const { return lookup(rules_, name, "rule"); }
const Signature& Document::signature(const std::string& name) const {
  return lookup(signatures_, name, "signature");
}
const NamedAlgebra& Document::algebra(const std::string& name) const {
  return lookup(algebras_, name, "algebra");
}

std::string Document::serialize() const {
  std::ostringstream out;
  bool first = true;
  auto list = [&](const std::vector<std::string>& xs) {
    for (const auto& x : xs) out << " " << quote_name(x);
  };
  for (const auto& [kind, name] : order_) {
    if (!first) out << "\n";
    first = false;
    const std::string q = quote_name(name);
    switch (kind) {
      case DeclKind::Monograph:
        out << "monograph " << q << " {\n";
        for (const auto& [e, seq] : monographs_.at(name).adjacency()) {
          out << "  " << quote_name(e) << ":";
          list(seq);
          out << (seq.empty() ? " ;\n" : ";\n");
        }
        out << "}\n";
        break;
      case DeclKind::Morphism: {
        const NamedMorphism& m = morphisms_.at(name);
        out << "morphism " << q << " : " << quote_name(m.dom) << " -> " << quote_name(m.cod) << " {\n";
        for (const auto& [x, y] : m.morphism.map())
          out << "  " << quote_name(x) << " -> " << quote_name(y) << ";\n";
        out << "}\n";
        break;
      }
      case DeclKind::Rule: {
        const NamedRule& r = rules_.at(name);
        out << "rule " << q << " {\n  left: " << quote_name(r.left) << ";\n  right: "
            << quote_name(r.right) << ";\n}\n";
        break;
      }
      case DeclKind::Signature: {
        const Signature& s = signatures_.at(name);
        out << "signature " << q << " {\n  sorts";
        list(s.sorts());
        out << ";\n";
        for (const auto& o : s.operators()) {
          out << "  op " << quote_name(o.name) << ":";
          list(o.domain);
          out << " -> " << quote_name(o.range) << ";\n";
        }
        out << "}\n";
        break;
      }
      case DeclKind::Algebra: {
        const NamedAlgebra& a = algebras_.at(name);
        out << "algebra " << q << " : " << quote_name(a.signature) << " {\n";
        for (const auto& s : a.algebra.signature().sorts()) {
          const auto& c = a.algebra.carrier(s);
          out << "  carrier " << quote_name(s) << " =";
          list(std::vector<std::string>(c.begin(), c.end()));
          out << ";\n";
        }
        for (const auto& o : a.algebra.signature().operators())
          for (const auto& [args, v] : a.algebra.tables().at(o.name)) {
            out << "  op " << quote_name(o.name) << "(";
            for (std::size_t i = 0; i < args.size(); ++i) out << (i ? "," : "") << quote_name(args[i]);
            out << ") = " << quote_name(v) << ";\n";
          }
        out << "}\n";
        break;
      }
    }
  }
  return out.str();
}

}  // namespace monograph
