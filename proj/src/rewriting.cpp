#include "monograph/rewriting.hpp"

#include <sstream>

namespace monograph {

SpanRule SpanRule::make(std::string name, Morphism left, Morphism right) {
  if (!(left.dom() == right.dom()))
    throw Error(ErrorKind::PreconditionViolated, "rule morphisms must share their domain");
  return SpanRule{std::move(name), std::move(left), std::move(right)};
}

GluingReport gluing_condition(const Morphism& l, const Morphism& m) {
  if (!(l.cod() == m.dom()))
    throw Error(ErrorKind::CompositionMismatch, "match must start at the left-hand side");
  GluingReport report;
  EdgeSet kept;
  for (const auto& kv : l.map()) kept.insert(kv.second);
  EdgeSet removed;
  for (const auto& kv : m.map())
    if (kept.count(kv.first) == 0) removed.insert(kv.first);
  for (const auto& x : removed) report.deleted.insert(m(x));

  for (const auto& x : removed)
    for (const auto& [other, image] : m.map())
      if (other != x && image == m(x))
        report.violations.push_back({GluingClause::Identification, x, other});

  for (const auto& [e, seq] : m.cod().adjacency()) {
    if (report.deleted.count(e) != 0) continue;
    for (const auto& x : seq)
      if (report.deleted.count(x) != 0) {
        report.violations.push_back({GluingClause::Dangling, x, e});
        break;
      }
  }
  report.holds = report.violations.empty();
  return report;
}

std::string describe(const GluingReport& report) {
  if (report.holds) return "gluing condition holds";
  std::ostringstream out;
  bool first = true;
  for (const auto& v : report.violations) {
    if (!first) out << "; ";
    first = false;
    if (v.clause == GluingClause::Identification)
      out << "deleted edge '" << v.first << "' is identified with '" << v.second << "'";
    else
      out << "edge '" << v.second << "' refers to deleted edge '" << v.first << "'";
  }
  return out.str();
}

PushoutComplement pushout_complement(const Morphism& l, const Morphism& m) {
  GluingReport report = gluing_condition(l, m);
  if (!report.holds) throw Error(ErrorKind::GluingViolated, describe(report));
  EdgeSet keep;
  for (const auto& kv : m.cod().adjacency())
    if (report.deleted.count(kv.first) == 0) keep.insert(kv.first);
  Submonograph d = Submonograph::of(m.cod(), std::move(keep));
  Morphism k = restrict(compose(m, l), Submonograph::whole(l.dom()), d);
  return PushoutComplement{d.induced(), k, Morphism::inclusion(d)};
}

namespace {

// Renames the result of a rewrite: edges hit by the host leg take their
// least host name, the rest are fresh "<rule>.<edge>.<n>".
Morphism name_result(const Monograph& q, const EdgeMap& host_leg, const EdgeMap& rule_leg,
                     const std::string& rule_name) {
  EdgeMap names;
  EdgeSet used;
  for (const auto& [h, image] : host_leg)
    if (names.count(image) == 0) {
      names.emplace(image, h);
      used.insert(h);
    }
  const std::string prefix = rule_name.empty() ? "rule" : rule_name;
  for (const auto& [r, image] : rule_leg) {
    if (names.count(image) != 0) continue;
    for (std::size_t n = 0;; ++n) {
      std::string candidate = prefix + "." + r + "." + std::to_string(n);
      if (used.insert(candidate).second) {
        names.emplace(image, candidate);
        break;
      }
    }
  }
  return relabel(q, names);
}

}  // namespace

DpoResult dpo_apply(const SpanRule& rule, const Morphism& match) {
  PushoutComplement pc = pushout_complement(rule.left, match);
  Pushout po = pushout(pc.k, rule.right);
  // Host map iterates D in order, so each class takes its least host name.
  Morphism rename = name_result(po.object, po.left.map(), po.right.map(), rule.name);
  return DpoResult{pc, rename.cod(), compose(rename, po.right), compose(rename, po.left)};
}

PartialRule span_to_partial(const SpanRule& rule) {
  Submonograph lk = image(rule.left);
  Morphism l_onto = restrict(rule.left, Submonograph::whole(rule.interface()), lk);
  Pushout po = pushout(rule.right, l_onto);
  // Every class meets R, so R' is R up to identification; keep R's names.
  EdgeMap names;
  for (const auto& [r, image] : po.left.map())
    if (names.count(image) == 0) names.emplace(image, r);
  Morphism rename = relabel(po.object, names);
  return PartialRule{rule.name, PartialMorphism::make(lk, compose(rename, po.right))};
}

SpoResult spo_apply(const PartialRule& rule, const Morphism& match) {
  if (!(match.dom() == rule.lhs()))
    throw Error(ErrorKind::CompositionMismatch, "match must start at the left-hand side");
  PartialPushout pp = pushout_partial(rule.morphism, PartialMorphism::from_total(match));
  Morphism rename =
      name_result(pp.object, pp.right.total().map(), pp.left.total().map(), rule.name);
  PartialMorphism iso = PartialMorphism::from_total(rename);
  return SpoResult{pp, rename.cod(), compose_partial(iso, pp.left), compose_partial(iso, pp.right)};
}

}  // namespace monograph
