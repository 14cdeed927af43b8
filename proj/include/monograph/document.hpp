#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monograph/rewriting.hpp"
#include "monograph/signature.hpp"

namespace monograph {

struct NamedMorphism {
  std::string dom;
  std::string cod;
  Morphism morphism;
  friend bool operator==(const NamedMorphism&, const NamedMorphism&) = default;
};

struct NamedRule {
  std::string left;
  std::string right;
  SpanRule rule;
  friend bool operator==(const NamedRule& a, const NamedRule& b) {
    return a.left == b.left && a.right == b.right && a.rule.left == b.rule.left &&
           a.rule.right == b.rule.right;
  }
};

struct NamedAlgebra {
  std::string signature;
  Algebra algebra;
  friend bool operator==(const NamedAlgebra&, const NamedAlgebra&) = default;
};

enum class DeclKind { Monograph, Morphism, Rule, Signature, Algebra };

// Named declarations sharing one namespace, kept in declaration order.
// Text format:
//   monograph A { x: x y x; n: ; }
//   morphism f : A -> B { x -> y; }
//   rule r { left: l; right: r; }
//   signature G { sorts s t; op f: s s -> t; }
//   algebra C : G { carrier s = a b; op f(a,b) = c; }
// Names outside [A-Za-z0-9_'.@] are written in double quotes.
class Document {
 public:
  // Throws ParseError for syntax, UnresolvedReference for missing names and
  // the validators' errors for invalid payloads.
  static Document parse(std::string_view text);
  std::string serialize() const;

  // Each add_* throws PreconditionViolated on a duplicate name and
  // UnresolvedReference when a referenced declaration is missing.
  void add_monograph(const std::string& name, const Monograph& m);
  void add_morphism(const std::string& name, const std::string& dom, const std::string& cod,
                    const EdgeMap& map);
  void add_rule(const std::string& name, const std::string& left, const std::string& right);
  void add_signature(const std::string& name, const Signature& s);
  void add_algebra(const std::string& name, const std::string& signature, const Algebra& a);

  bool has(const std::string& name) const;
  std::optional<DeclKind> kind(const std::string& name) const;
  const std::vector<std::pair<DeclKind, std::string>>& declarations() const { return order_; }

  // Each accessor throws UnresolvedReference for a missing name.
  const Monograph& monograph(const std::string& name) const;
  const NamedMorphism& morphism(const std::string& name) const;
  const NamedRule& rule(const std::string& name) const;
  const Signature& signature(const std::string& name) const;
  const NamedAlgebra& algebra(const std::string& name) const;

  friend bool operator==(const Document&, const Document&) = default;

 private:
  void claim(const std::string& name, DeclKind kind);

  std::vector<std::pair<DeclKind, std::string>> order_;
  std::map<std::string, Monograph> monographs_;
  std::map<std::string, NamedMorphism> morphisms_;
  std::map<std::string, NamedRule> rules_;
  std::map<std::string, Signature> signatures_;
  std::map<std::string, NamedAlgebra> algebras_;
};

// Name as written in the text format.
std::string quote_name(const std::string& name);

}  // namespace monograph
