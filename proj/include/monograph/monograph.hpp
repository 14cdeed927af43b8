#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "monograph/error.hpp"

namespace monograph {

// Edge identifiers are ordered lexicographically; every iteration in the
// library follows that order so results are deterministic.
using EdgeId = std::string;
using EdgeSeq = std::vector<EdgeId>;
using EdgeSet = std::set<EdgeId>;
using Adjacency = std::map<EdgeId, EdgeSeq>;
using Trace = std::set<std::size_t>;

// A finite monograph: every edge maps to a finite sequence of its own edges.
// Immutable; copies share storage.
class Monograph {
 public:
  Monograph();

  // Throws DanglingEdge (first offending edge and position) or EmptyEdgeId.
  static Monograph validate(Adjacency raw, std::string name = {});

  const Adjacency& adjacency() const { return rep_->adjacency; }
  const std::string& name() const { return rep_->name; }
  Monograph with_name(std::string name) const;

  bool contains(const EdgeId& e) const { return rep_->adjacency.count(e) != 0; }
  // Throws PreconditionViolated for an unknown edge.
  const EdgeSeq& at(const EdgeId& e) const;
  std::size_t length(const EdgeId& e) const { return at(e).size(); }
  std::size_t size() const { return rep_->adjacency.size(); }
  bool empty() const { return rep_->adjacency.empty(); }

  const EdgeSet& edges() const { return rep_->edges; }
  const EdgeSet& nodes() const { return rep_->nodes; }
  const Trace& trace() const { return rep_->trace; }
  bool is_standard() const;
  bool is_o_monograph(const Trace& allowed) const;

  // Edges x with e occurring in at(x).
  EdgeSet users(const EdgeId& e) const;

  // Equality ignores the display name.
  friend bool operator==(const Monograph& a, const Monograph& b);

 private:
  struct Rep {
    Adjacency adjacency;
    std::string name;
    // Derived from adjacency once, at construction.
    EdgeSet edges;
    EdgeSet nodes;
    Trace trace;
  };
  static std::shared_ptr<const Rep> make_rep(Adjacency adjacency, std::string name);
  explicit Monograph(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

struct Classification {
  Trace trace;
  EdgeSet nodes;
  bool is_standard = false;
};

Classification classify(const Monograph& m);

// Adjacency-closed subset of a parent monograph.
class Submonograph {
 public:
  static Submonograph whole(const Monograph& parent);
  static Submonograph none(const Monograph& parent);
  // Throws NotClosed if keep is not adjacency closed.
  static Submonograph of(const Monograph& parent, EdgeSet keep);
  // Greatest closed subset of keep.
  static Submonograph close_down(const Monograph& parent, const EdgeSet& keep);

  const Monograph& parent() const { return parent_; }
  const EdgeSet& edges() const { return edges_; }
  bool contains(const EdgeId& e) const { return edges_.count(e) != 0; }
  std::size_t size() const { return edges_.size(); }
  Monograph induced() const;
  bool is_subset_of(const Submonograph& other) const;

  friend bool operator==(const Submonograph& a, const Submonograph& b);

 private:
  Submonograph(Monograph parent, EdgeSet edges)
      : parent_(std::move(parent)), edges_(std::move(edges)) {}
  Monograph parent_;
  EdgeSet edges_;
};

// Both throw ParentMismatch when parents differ.
Submonograph unite(const Submonograph& a, const Submonograph& b);
Submonograph intersect(const Submonograph& a, const Submonograph& b);

bool is_closed(const Monograph& m, const EdgeSet& subset);

}  // namespace monograph
