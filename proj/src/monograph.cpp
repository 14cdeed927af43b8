#include "monograph/monograph.hpp"

#include <algorithm>
#include <deque>

namespace monograph {

Monograph::Monograph() : rep_(std::make_shared<const Rep>()) {}

std::shared_ptr<const Monograph::Rep> Monograph::make_rep(Adjacency adjacency, std::string name) {
  auto rep = std::make_shared<Rep>();
  for (const auto& [e, seq] : adjacency) {
    rep->edges.insert(rep->edges.end(), e);
    if (seq.empty()) rep->nodes.insert(rep->nodes.end(), e);
    rep->trace.insert(seq.size());
  }
  rep->adjacency = std::move(adjacency);
  rep->name = std::move(name);
  return rep;
}

Monograph Monograph::validate(Adjacency raw, std::string name) {
  for (const auto& [e, seq] : raw) {
    if (e.empty()) throw Error(ErrorKind::EmptyEdgeId, "edge identifiers must be non-empty");
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (raw.count(seq[i]) == 0) {
        throw Error(ErrorKind::DanglingEdge,
                    "edge '" + e + "' position " + std::to_string(i) + " refers to unknown edge '" +
                        seq[i] + "'");
      }
    }
  }
  return Monograph(make_rep(std::move(raw), std::move(name)));
}

Monograph Monograph::with_name(std::string name) const {
  auto rep = std::make_shared<Rep>(*rep_);
  rep->name = std::move(name);
  return Monograph(std::move(rep));
}

const EdgeSeq& Monograph::at(const EdgeId& e) const {
  auto it = rep_->adjacency.find(e);
  if (it == rep_->adjacency.end()) {
    throw Error(ErrorKind::PreconditionViolated, "unknown edge '" + e + "'");
  }
  return it->second;
}

bool Monograph::is_standard() const {
  for (const auto& kv : rep_->adjacency)
    for (const auto& x : kv.second)
      if (!rep_->adjacency.at(x).empty()) return false;
  return true;
}

bool Monograph::is_o_monograph(const Trace& allowed) const {
  for (const auto& kv : rep_->adjacency)
    if (allowed.count(kv.second.size()) == 0) return false;
  return true;
}

EdgeSet Monograph::users(const EdgeId& e) const {
  EdgeSet out;
  for (const auto& [x, seq] : rep_->adjacency)
    if (std::find(seq.begin(), seq.end(), e) != seq.end()) out.insert(out.end(), x);
  return out;
}

bool operator==(const Monograph& a, const Monograph& b) {
  return a.rep_ == b.rep_ || a.rep_->adjacency == b.rep_->adjacency;
}

Classification classify(const Monograph& m) {
  return Classification{m.trace(), m.nodes(), m.is_standard()};
}

bool is_closed(const Monograph& m, const EdgeSet& subset) {
  for (const auto& e : subset) {
    if (!m.contains(e)) return false;
    for (const auto& x : m.at(e))
      if (subset.count(x) == 0) return false;
  }
  return true;
}

Submonograph Submonograph::whole(const Monograph& parent) {
  return Submonograph(parent, parent.edges());
}

Submonograph Submonograph::none(const Monograph& parent) { return Submonograph(parent, {}); }

Submonograph Submonograph::of(const Monograph& parent, EdgeSet keep) {
  for (const auto& e : keep)
    if (!parent.contains(e))
      throw Error(ErrorKind::PreconditionViolated, "edge '" + e + "' is not in the parent");
  for (const auto& e : keep)
    for (const auto& x : parent.at(e))
      if (keep.count(x) == 0)
        throw Error(ErrorKind::NotClosed,
                    "edge '" + e + "' refers to '" + x + "' outside the subset");
  return Submonograph(parent, std::move(keep));
}

Submonograph Submonograph::close_down(const Monograph& parent, const EdgeSet& keep) {
  for (const auto& e : keep)
    if (!parent.contains(e))
      throw Error(ErrorKind::PreconditionViolated, "edge '" + e + "' is not in the parent");
  // Reverse adjacency lets removals propagate in one pass.
  std::map<EdgeId, EdgeSet> users;
  for (const auto& [e, seq] : parent.adjacency())
    for (const auto& x : seq) users[x].insert(e);
  EdgeSet kept = keep;
  std::deque<EdgeId> removed;
  for (const auto& e : keep)
    for (const auto& x : parent.at(e))
      if (keep.count(x) == 0) {
        removed.push_back(e);
        break;
      }
  for (const auto& e : removed) kept.erase(e);
  while (!removed.empty()) {
    EdgeId e = removed.front();
    removed.pop_front();
    for (const auto& u : users[e])
      if (kept.erase(u) != 0) removed.push_back(u);
  }
  return Submonograph(parent, std::move(kept));
}

Monograph Submonograph::induced() const {
  Adjacency adj;
  for (const auto& e : edges_) adj.emplace_hint(adj.end(), e, parent_.at(e));
  return Monograph::validate(std::move(adj));
}

bool Submonograph::is_subset_of(const Submonograph& other) const {
  return parent_ == other.parent_ &&
         std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

bool operator==(const Submonograph& a, const Submonograph& b) {
  return a.edges_ == b.edges_ && a.parent_ == b.parent_;
}

namespace {
void require_same_parent(const Submonograph& a, const Submonograph& b) {
  if (!(a.parent() == b.parent()))
    throw Error(ErrorKind::ParentMismatch, "submonographs of different parents");
}
}  // namespace

Submonograph unite(const Submonograph& a, const Submonograph& b) {
  require_same_parent(a, b);
  EdgeSet u = a.edges();
  u.insert(b.edges().begin(), b.edges().end());
  return Submonograph::of(a.parent(), std::move(u));
}

Submonograph intersect(const Submonograph& a, const Submonograph& b) {
  require_same_parent(a, b);
  EdgeSet i;
  std::set_intersection(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                        std::inserter(i, i.end()));
  return Submonograph::of(a.parent(), std::move(i));
}

}  // namespace monograph
