#include "monograph/attributed.hpp"

#include <sstream>

namespace monograph {

CombinedSignature combine_signatures(const Signature& graph, const Signature& data) {
  for (const auto& o : data.operators())
    if (graph.has_operator(o.name))
      throw Error(ErrorKind::OperatorClash, "operator '" + o.name + "' occurs in both signatures");
  std::vector<Sort> sorts = graph.sorts();
  std::set<Sort> shared;
  for (const auto& s : data.sorts()) {
    if (graph.has_sort(s))
      shared.insert(s);
    else
      sorts.push_back(s);
  }
  std::vector<Operator> ops = graph.operators();
  ops.insert(ops.end(), data.operators().begin(), data.operators().end());
  return CombinedSignature{graph, data, Signature::make(std::move(sorts), std::move(ops)),
                           std::move(shared)};
}

namespace {

std::string render(const std::set<Element>& xs) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& x : xs) {
    out << (first ? "" : ",") << x;
    first = false;
  }
  out << "}";
  return out.str();
}

std::set<Element> fiber(const Morphism& typing, const EdgeId& e) {
  std::set<Element> out;
  for (const auto& [x, t] : typing.map())
    if (t == e) out.insert(x);
  return out;
}

}  // namespace

Atm Atm::validate(Morphism typing, Algebra data) {
  for (const auto& s : data.signature().sorts()) {
    if (!typing.cod().contains(s)) continue;
    std::set<Element> expected = fiber(typing, s);
    if (data.carrier(s) != expected)
      throw Error(ErrorKind::CarrierMismatch, "sort '" + s + "': typing gives " + render(expected) +
                                                  ", data carrier is " + render(data.carrier(s)));
  }
  return Atm(std::move(typing), std::move(data));
}

std::set<Sort> Atm::shared_sorts() const {
  std::set<Sort> out;
  for (const auto& s : data_.signature().sorts())
    if (type().contains(s)) out.insert(s);
  return out;
}

EdgeSet Atm::attributes() const {
  EdgeSet out;
  for (const auto& s : shared_sorts()) out.insert(data_.carrier(s).begin(), data_.carrier(s).end());
  return out;
}

Algebra atm_to_algebra(const Atm& x) {
  CombinedSignature sig = combine_signatures(sig_of_monograph(x.type()), x.data().signature());
  Algebra graph_part = algebra_of_typed(x.typing());
  std::map<Sort, std::set<Element>> carriers = graph_part.carriers();
  for (const auto& [s, c] : x.data().carriers()) carriers[s] = c;
  std::map<std::string, OpTable> tables = graph_part.tables();
  for (const auto& [o, t] : x.data().tables()) tables[o] = t;
  return Algebra::make(sig.merged, std::move(carriers), std::move(tables));
}

Atm algebra_to_atm(const Algebra& combined, const Monograph& type, const Signature& data) {
  Signature graph_sig = sig_of_monograph(type);
  CombinedSignature sig = combine_signatures(graph_sig, data);
  if (!(combined.signature() == sig.merged))
    throw Error(ErrorKind::SignatureMismatch, "algebra is not over the combined signature");
  std::map<Sort, std::set<Element>> gc;
  std::map<std::string, OpTable> gt;
  for (const auto& s : graph_sig.sorts()) gc[s] = combined.carrier(s);
  for (const auto& o : graph_sig.operators()) gt[o.name] = combined.tables().at(o.name);
  Morphism typing = typed_of_algebra(Algebra::make(graph_sig, gc, gt), type);

  auto rename = [&](const Sort& s, const Element& x) {
    return sig.shared_sorts.count(s) != 0 ? x + "@" + s : x;
  };
  std::map<Sort, std::set<Element>> dc;
  std::map<std::string, OpTable> dt;
  for (const auto& s : data.sorts())
    for (const auto& x : combined.carrier(s)) dc[s].insert(rename(s, x));
  for (const auto& o : data.operators())
    for (const auto& [args, value] : combined.tables().at(o.name)) {
      std::vector<Element> renamed;
      for (std::size_t i = 0; i < args.size(); ++i) renamed.push_back(rename(o.domain[i], args[i]));
      dt[o.name].emplace(std::move(renamed), rename(o.range, value));
    }
  return Atm::validate(typing, Algebra::make(data, std::move(dc), std::move(dt)));
}

bool stabilizes(const Morphism& f, const EdgeSet& attributes) {
  for (const auto& a : attributes) {
    auto it = f.map().find(a);
    if (it == f.map().end() || it->second != a) return false;
    for (const auto& [x, y] : f.map())
      if (y == a && x != a) return false;
  }
  return true;
}

bool is_atm_morphism(const Atm& from, const Atm& to, const Morphism& f, const SortedMap& data_map) {
  if (!is_slice_morphism(f, from.typing(), to.typing())) return false;
  if (!is_homomorphism(from.data(), to.data(), data_map)) return false;
  SortedMap induced = homomorphism_of_slice(f, from.typing());
  for (const auto& s : from.shared_sorts())
    if (induced.at(s) != data_map.at(s)) return false;
  return true;
}

namespace {

void require_stabilizing(const Morphism& f, const EdgeSet& attributes, const std::string& which) {
  for (const auto& a : attributes)
    if (!stabilizes(f, {a}))
      throw Error(ErrorKind::NotStabilizing,
                  "morphism '" + which + "' does not stabilize attribute '" + a + "'");
}

void require_slice(const Morphism& f, const Atm& from, const Atm& to, const std::string& which) {
  if (!is_slice_morphism(f, from.typing(), to.typing()))
    throw Error(ErrorKind::PreconditionViolated, "morphism '" + which + "' does not respect typings");
}

EdgeMap typing_through(const EdgeMap& leg, const Morphism& source_typing, EdgeMap& out) {
  for (const auto& [x, n] : leg) out.emplace(n, source_typing(x));
  return out;
}

}  // namespace

Atm atm_rewrite_gate(const AtmRule& rule, const Morphism& match, const Atm& host, RewriteMode mode) {
  for (const Atm* x : {&rule.interface, &rule.left, &rule.right})
    if (!(x->data() == host.data()))
      throw Error(ErrorKind::PreconditionViolated, "rule and host carry different data algebras");
  require_slice(rule.l, rule.interface, rule.left, "l");
  require_slice(rule.r, rule.interface, rule.right, "r");
  require_slice(match, rule.left, host, "match");
  EdgeSet attributes = host.attributes();
  require_stabilizing(rule.l, attributes, "l");
  require_stabilizing(rule.r, attributes, "r");
  require_stabilizing(match, attributes, "match");

  SpanRule span = SpanRule::make(rule.name, rule.l, rule.r);
  EdgeMap types;
  Monograph result;
  if (mode == RewriteMode::Dpo) {
    DpoResult res = dpo_apply(span, match);
    typing_through(res.context.map(), host.typing(), types);
    typing_through(res.comatch.map(), rule.right.typing(), types);
    result = res.result;
  } else {
    PartialRule partial = span_to_partial(span);
    SpoResult res = spo_apply(partial, match);
    // R' keeps the names of R, so R's typing applies.
    typing_through(res.host.total().map(), host.typing(), types);
    typing_through(res.comatch.total().map(), rule.right.typing(), types);
    result = res.result;
  }
  return Atm::validate(Morphism::check(result, host.type(), std::move(types)), host.data());
}

Atm atm_rewrite_gate(const AtmPartialRule& rule, const Morphism& match, const Atm& host) {
  const Submonograph& k = rule.morphism.domain();
  EdgeMap k_types;
  for (const auto& e : k.edges()) k_types.emplace(e, rule.left.typing()(e));
  Atm interface =
      Atm::validate(Morphism::check(k.induced(), rule.left.type(), std::move(k_types)), rule.left.data());
  AtmRule span{rule.name, interface, rule.left, rule.right, Morphism::inclusion(k), rule.morphism.total()};
  return atm_rewrite_gate(span, match, host, RewriteMode::Spo);
}

}  // namespace monograph
