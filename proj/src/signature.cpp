#include "monograph/signature.hpp"

#include <algorithm>
#include <functional>

namespace monograph {

Signature Signature::make(std::vector<Sort> sorts, std::vector<Operator> operators) {
  std::set<Sort> seen;
  for (const auto& s : sorts) {
    if (s.empty()) throw Error(ErrorKind::InvalidSignature, "empty sort name");
    if (!seen.insert(s).second) throw Error(ErrorKind::InvalidSignature, "duplicate sort '" + s + "'");
  }
  std::set<std::string> names;
  for (const auto& o : operators) {
    if (o.name.empty()) throw Error(ErrorKind::InvalidSignature, "empty operator name");
    if (!names.insert(o.name).second)
      throw Error(ErrorKind::InvalidSignature, "duplicate operator '" + o.name + "'");
    for (const auto& s : o.domain)
      if (seen.count(s) == 0)
        throw Error(ErrorKind::InvalidSignature, "operator '" + o.name + "' uses undeclared sort '" + s + "'");
    if (seen.count(o.range) == 0)
      throw Error(ErrorKind::InvalidSignature,
                  "operator '" + o.name + "' has undeclared range '" + o.range + "'");
  }
  Signature sig;
  sig.sorts_ = std::move(sorts);
  sig.operators_ = std::move(operators);
  return sig;
}

bool Signature::has_sort(const Sort& s) const {
  return std::find(sorts_.begin(), sorts_.end(), s) != sorts_.end();
}

bool Signature::has_operator(const std::string& name) const {
  return std::any_of(operators_.begin(), operators_.end(),
                     [&](const Operator& o) { return o.name == name; });
}

const Operator& Signature::op(const std::string& name) const {
  for (const auto& o : operators_)
    if (o.name == name) return o;
  throw Error(ErrorKind::PreconditionViolated, "unknown operator '" + name + "'");
}

std::vector<std::string> Signature::monadic_ops_from(const Sort& s) const {
  std::vector<std::string> out;
  for (const auto& o : operators_)
    if (o.domain.size() == 1 && o.domain[0] == s) out.push_back(o.name);
  return out;
}

bool Signature::is_graph_structure() const {
  return std::all_of(operators_.begin(), operators_.end(),
                     [](const Operator& o) { return o.domain.size() == 1; });
}

Algebra Algebra::make(Signature signature, std::map<Sort, std::set<Element>> carriers,
                      std::map<std::string, OpTable> tables) {
  for (const auto& kv : carriers)
    if (!signature.has_sort(kv.first))
      throw Error(ErrorKind::InvalidAlgebra, "carrier for unknown sort '" + kv.first + "'");
  for (const auto& s : signature.sorts()) carriers[s];
  for (const auto& kv : tables)
    if (!signature.has_operator(kv.first))
      throw Error(ErrorKind::InvalidAlgebra, "table for unknown operator '" + kv.first + "'");
  for (const auto& o : signature.operators()) {
    OpTable& table = tables[o.name];
    std::size_t expected = 1;
    for (const auto& s : o.domain) expected *= carriers[s].size();
    for (const auto& [args, value] : table) {
      if (args.size() != o.domain.size())
        throw Error(ErrorKind::InvalidAlgebra, "wrong arity in table of '" + o.name + "'");
      for (std::size_t i = 0; i < args.size(); ++i)
        if (carriers[o.domain[i]].count(args[i]) == 0)
          throw Error(ErrorKind::InvalidAlgebra, "argument '" + args[i] + "' of '" + o.name +
                                                     "' is not in carrier '" + o.domain[i] + "'");
      if (carriers[o.range].count(value) == 0)
        throw Error(ErrorKind::InvalidAlgebra,
                    "value '" + value + "' of '" + o.name + "' is not in carrier '" + o.range + "'");
    }
    if (table.size() != expected)
      throw Error(ErrorKind::InvalidAlgebra, "table of '" + o.name + "' is not total");
  }
  Algebra a;
  a.signature_ = std::move(signature);
  a.carriers_ = std::move(carriers);
  a.tables_ = std::move(tables);
  return a;
}

const std::set<Element>& Algebra::carrier(const Sort& s) const {
  auto it = carriers_.find(s);
  if (it == carriers_.end()) throw Error(ErrorKind::PreconditionViolated, "unknown sort '" + s + "'");
  return it->second;
}

const Element& Algebra::apply(const std::string& op, const std::vector<Element>& args) const {
  auto t = tables_.find(op);
  if (t == tables_.end()) throw Error(ErrorKind::PreconditionViolated, "unknown operator '" + op + "'");
  auto it = t->second.find(args);
  if (it == t->second.end())
    throw Error(ErrorKind::PreconditionViolated, "arguments outside the carriers of '" + op + "'");
  return it->second;
}

namespace {

bool op_respected(const Operator& o, const Algebra& a, const Algebra& b, const SortedMap& h) {
  for (const auto& [args, value] : a.tables().at(o.name)) {
    std::vector<Element> mapped;
    for (std::size_t i = 0; i < args.size(); ++i) mapped.push_back(h.at(o.domain[i]).at(args[i]));
    if (b.apply(o.name, mapped) != h.at(o.range).at(value)) return false;
  }
  return true;
}

}  // namespace

bool is_homomorphism(const Algebra& a, const Algebra& b, const SortedMap& h) {
  if (!(a.signature() == b.signature())) return false;
  for (const auto& s : a.signature().sorts()) {
    auto it = h.find(s);
    if (it == h.end() || it->second.size() != a.carrier(s).size()) return false;
    for (const auto& [x, y] : it->second)
      if (a.carrier(s).count(x) == 0 || b.carrier(s).count(y) == 0) return false;
  }
  for (const auto& o : a.signature().operators())
    if (!op_respected(o, a, b, h)) return false;
  return true;
}

std::optional<SortedMap> find_algebra_isomorphism(const Algebra& a, const Algebra& b) {
  if (!(a.signature() == b.signature())) return std::nullopt;
  const auto& sorts = a.signature().sorts();
  for (const auto& s : sorts)
    if (a.carrier(s).size() != b.carrier(s).size()) return std::nullopt;
  SortedMap h;
  std::set<Sort> assigned;
  // Operators are checked as soon as all their sorts carry a bijection.
  auto ready_ops_ok = [&](const Sort& just) {
    for (const auto& o : a.signature().operators()) {
      bool mentions = o.range == just ||
                      std::find(o.domain.begin(), o.domain.end(), just) != o.domain.end();
      if (!mentions) continue;
      bool ready = assigned.count(o.range) != 0;
      for (const auto& s : o.domain) ready = ready && assigned.count(s) != 0;
      if (ready && !op_respected(o, a, b, h)) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == sorts.size()) return true;
    const Sort& s = sorts[i];
    std::vector<Element> from(a.carrier(s).begin(), a.carrier(s).end());
    std::vector<Element> to(b.carrier(s).begin(), b.carrier(s).end());
    assigned.insert(s);
    do {
      auto& m = h[s];
      m.clear();
      for (std::size_t k = 0; k < from.size(); ++k) m.emplace(from[k], to[k]);
      if (ready_ops_ok(s) && search(i + 1)) return true;
    } while (std::next_permutation(to.begin(), to.end()));
    assigned.erase(s);
    h.erase(s);
    return false;
  };
  if (search(0)) return h;
  return std::nullopt;
}

bool is_sig_morphism(const Signature& from, const Signature& to, const SigMorphism& r) {
  for (const auto& s : from.sorts()) {
    auto it = r.sort_map.find(s);
    if (it == r.sort_map.end() || !to.has_sort(it->second)) return false;
  }
  for (const auto& o : from.operators()) {
    auto it = r.op_map.find(o.name);
    if (it == r.op_map.end() || !to.has_operator(it->second)) return false;
    const Operator& image = to.op(it->second);
    if (image.domain.size() != o.domain.size()) return false;
    for (std::size_t i = 0; i < o.domain.size(); ++i)
      if (image.domain[i] != r.sort_map.at(o.domain[i])) return false;
    if (image.range != r.sort_map.at(o.range)) return false;
  }
  return true;
}

SigMorphism compose(const SigMorphism& second, const SigMorphism& first) {
  SigMorphism out;
  for (const auto& [o, p] : first.op_map) out.op_map.emplace(o, second.op_map.at(p));
  for (const auto& [s, t] : first.sort_map) out.sort_map.emplace(s, second.sort_map.at(t));
  return out;
}

std::string position_op(const EdgeId& e, std::size_t i) { return e + "." + std::to_string(i); }

Signature sig_of_monograph(const Monograph& t) {
  std::vector<Sort> sorts;
  std::vector<Operator> ops;
  for (const auto& [e, seq] : t.adjacency()) {
    sorts.push_back(e);
    for (std::size_t i = 0; i < seq.size(); ++i) ops.push_back(Operator{position_op(e, i), {e}, seq[i]});
  }
  return Signature::make(std::move(sorts), std::move(ops));
}

SigMorphism sig_of_morphism(const Morphism& f) {
  SigMorphism r;
  for (const auto& [e, seq] : f.dom().adjacency()) {
    r.sort_map.emplace(e, f(e));
    for (std::size_t i = 0; i < seq.size(); ++i) r.op_map.emplace(position_op(e, i), position_op(f(e), i));
  }
  return r;
}

TypeMonograph type_monograph_of_sig(const Signature& g,
                                    const std::map<Sort, std::vector<std::string>>& orderings) {
  for (const auto& o : g.operators())
    if (o.domain.size() != 1)
      throw Error(ErrorKind::NotMonadic, "operator '" + o.name + "' is not monadic");
  for (const auto& kv : orderings)
    if (!g.has_sort(kv.first))
      throw Error(ErrorKind::PreconditionViolated, "ordering for unknown sort '" + kv.first + "'");
  Adjacency adj;
  std::map<std::string, std::string> bijection;
  for (const auto& s : g.sorts()) {
    std::vector<std::string> ops = g.monadic_ops_from(s);
    auto it = orderings.find(s);
    if (it != orderings.end()) {
      std::vector<std::string> a = ops, b = it->second;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b)
        throw Error(ErrorKind::PreconditionViolated,
                    "ordering for '" + s + "' is not a permutation of its operators");
      ops = it->second;
    }
    EdgeSeq seq;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      seq.push_back(g.op(ops[i]).range);
      bijection.emplace(position_op(s, i), ops[i]);
    }
    adj.emplace(s, std::move(seq));
  }
  return TypeMonograph{Monograph::validate(std::move(adj)), std::move(bijection)};
}

std::vector<Monograph> all_type_monographs(const Signature& g) {
  std::vector<std::vector<std::string>> per_sort;
  for (const auto& s : g.sorts()) {
    auto ops = g.monadic_ops_from(s);
    std::sort(ops.begin(), ops.end());
    per_sort.push_back(ops);
  }
  std::vector<Monograph> out;
  std::function<void(std::size_t, std::map<Sort, std::vector<std::string>>&)> walk =
      [&](std::size_t i, std::map<Sort, std::vector<std::string>>& chosen) {
        if (i == per_sort.size()) {
          Monograph t = type_monograph_of_sig(g, chosen).type;
          if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
          return;
        }
        std::vector<std::string> perm = per_sort[i];
        do {
          chosen[g.sorts()[i]] = perm;
          walk(i + 1, chosen);
        } while (std::next_permutation(perm.begin(), perm.end()));
        chosen.erase(g.sorts()[i]);
      };
  std::map<Sort, std::vector<std::string>> chosen;
  walk(0, chosen);
  return out;
}

namespace {

// Visits each sort-fixed isomorphism; the visitor returns false to stop.
void for_each_sig_iso(const Signature& a, const Signature& b,
                      const std::function<bool(const SigMorphism&)>& visit) {
  std::set<Sort> sa(a.sorts().begin(), a.sorts().end());
  std::set<Sort> sb(b.sorts().begin(), b.sorts().end());
  if (sa != sb || a.operators().size() != b.operators().size()) return;
  SigMorphism r;
  for (const auto& s : sa) r.sort_map.emplace(s, s);
  std::set<std::string> used;
  const auto& ops = a.operators();
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == ops.size()) return visit(r);
    for (const auto& cand : b.operators()) {
      if (used.count(cand.name) != 0) continue;
      if (cand.domain != ops[i].domain || cand.range != ops[i].range) continue;
      used.insert(cand.name);
      r.op_map[ops[i].name] = cand.name;
      bool more = search(i + 1);
      r.op_map.erase(ops[i].name);
      used.erase(cand.name);
      if (!more) return false;
    }
    return true;
  };
  search(0);
}

}  // namespace

std::optional<SigMorphism> sig_iso_over_sorts(const Signature& a, const Signature& b) {
  std::optional<SigMorphism> found;
  for_each_sig_iso(a, b, [&](const SigMorphism& r) {
    found = r;
    return false;
  });
  return found;
}

std::size_t count_sig_isos_over_sorts(const Signature& a, const Signature& b) {
  std::size_t n = 0;
  for_each_sig_iso(a, b, [&](const SigMorphism&) {
    ++n;
    return true;
  });
  return n;
}

Algebra algebra_of_typed(const Morphism& typing) {
  const Monograph& t = typing.cod();
  const Monograph& a = typing.dom();
  std::map<Sort, std::set<Element>> carriers;
  std::map<std::string, OpTable> tables;
  for (const auto& kv : t.adjacency()) carriers[kv.first];
  for (const auto& [x, e] : typing.map()) carriers[e].insert(x);
  for (const auto& [e, seq] : t.adjacency())
    for (std::size_t i = 0; i < seq.size(); ++i) {
      OpTable& table = tables[position_op(e, i)];
      for (const auto& x : carriers[e]) table.emplace(std::vector<Element>{x}, a.at(x)[i]);
    }
  return Algebra::make(sig_of_monograph(t), std::move(carriers), std::move(tables));
}

Morphism typed_of_algebra(const Algebra& c, const Monograph& t) {
  if (!(c.signature() == sig_of_monograph(t)))
    throw Error(ErrorKind::SignatureMismatch, "algebra is not over the signature of the type");
  Adjacency adj;
  EdgeMap typing;
  for (const auto& [e, seq] : t.adjacency())
    for (const auto& x : c.carrier(e)) {
      EdgeSeq entries;
      for (std::size_t i = 0; i < seq.size(); ++i)
        entries.push_back(c.apply(position_op(e, i), {x}) + "@" + seq[i]);
      EdgeId name = x + "@" + e;
      adj.emplace(name, std::move(entries));
      typing.emplace(name, e);
    }
  return Morphism::check(Monograph::validate(std::move(adj)), t, std::move(typing));
}

SortedMap homomorphism_of_slice(const Morphism& f, const Morphism& typing_dom) {
  SortedMap h;
  for (const auto& kv : typing_dom.cod().adjacency()) h[kv.first];
  for (const auto& [x, e] : typing_dom.map()) h[e].emplace(x, f(x));
  return h;
}

}  // namespace monograph
