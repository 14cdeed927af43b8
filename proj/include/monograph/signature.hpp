#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monograph/morphism.hpp"

namespace monograph {

using Sort = std::string;
using Element = std::string;

struct Operator {
  std::string name;
  std::vector<Sort> domain;
  Sort range;

  friend bool operator==(const Operator&, const Operator&) = default;
};

// Sorts and operators keep declaration order; equality is order sensitive.
class Signature {
 public:
  Signature() = default;
  // Throws InvalidSignature for duplicate names or undeclared sorts.
  static Signature make(std::vector<Sort> sorts, std::vector<Operator> operators);

  const std::vector<Sort>& sorts() const { return sorts_; }
  const std::vector<Operator>& operators() const { return operators_; }
  bool has_sort(const Sort& s) const;
  bool has_operator(const std::string& name) const;
  // Throws PreconditionViolated for an unknown name.
  const Operator& op(const std::string& name) const;
  // Operators whose domain is exactly [s], in declaration order.
  std::vector<std::string> monadic_ops_from(const Sort& s) const;
  bool is_graph_structure() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Sort> sorts_;
  std::vector<Operator> operators_;
};

using OpTable = std::map<std::vector<Element>, Element>;

// Finite algebra with interpretations stored as explicit tables.
class Algebra {
 public:
  Algebra() = default;
  // Throws InvalidAlgebra unless every table is total on its carrier
  // product with values in the range carrier. Missing carriers are empty.
  static Algebra make(Signature signature, std::map<Sort, std::set<Element>> carriers,
                      std::map<std::string, OpTable> tables);

  const Signature& signature() const { return signature_; }
  const std::map<Sort, std::set<Element>>& carriers() const { return carriers_; }
  const std::set<Element>& carrier(const Sort& s) const;
  const std::map<std::string, OpTable>& tables() const { return tables_; }
  const Element& apply(const std::string& op, const std::vector<Element>& args) const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  Signature signature_;
  std::map<Sort, std::set<Element>> carriers_;
  std::map<std::string, OpTable> tables_;
};

// Sort-indexed family of functions between carriers.
using SortedMap = std::map<Sort, std::map<Element, Element>>;

bool is_homomorphism(const Algebra& a, const Algebra& b, const SortedMap& h);
std::optional<SortedMap> find_algebra_isomorphism(const Algebra& a, const Algebra& b);

struct SigMorphism {
  std::map<std::string, std::string> op_map;
  std::map<Sort, Sort> sort_map;

  friend bool operator==(const SigMorphism&, const SigMorphism&) = default;
};

// Profiles commute: the image of o has the mapped profile of o.
bool is_sig_morphism(const Signature& from, const Signature& to, const SigMorphism& r);
SigMorphism compose(const SigMorphism& second, const SigMorphism& first);

// Operator "e.i" for each position i of each edge e: domain [e], range e_i.
Signature sig_of_monograph(const Monograph& t);
std::string position_op(const EdgeId& e, std::size_t i);
// Image of a morphism under the same construction.
SigMorphism sig_of_morphism(const Morphism& f);

struct TypeMonograph {
  Monograph type;
  // Operator "s.i" of sig_of_monograph(type) to the operator of the input.
  std::map<std::string, std::string> op_bijection;
};
// Orderings list, per sort, a permutation of its operators; sorts without an
// entry use declaration order. Throws NotMonadic or PreconditionViolated.
TypeMonograph type_monograph_of_sig(const Signature& g,
                                    const std::map<Sort, std::vector<std::string>>& orderings = {});
// Distinct type monographs over every choice of orderings.
std::vector<Monograph> all_type_monographs(const Signature& g);

// Isomorphisms whose sort map is the identity; backtracking per sort.
std::optional<SigMorphism> sig_iso_over_sorts(const Signature& a, const Signature& b);
std::size_t count_sig_isos_over_sorts(const Signature& a, const Signature& b);

Algebra algebra_of_typed(const Morphism& typing);
// Throws SignatureMismatch unless the algebra is over sig_of_monograph(t).
Morphism typed_of_algebra(const Algebra& c, const Monograph& t);
// Family induced by a slice morphism f from typing a to typing b.
SortedMap homomorphism_of_slice(const Morphism& f, const Morphism& typing_dom);

}  // namespace monograph
