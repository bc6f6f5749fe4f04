#ifndef PGREV_PGRAPH_HPP
#define PGREV_PGRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgrev/formula.hpp"
#include "pgrev/relation.hpp"
#include "pgrev/semantics.hpp"

namespace pgrev {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotRepresentable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GraphNode {
  std::string id;
  Formula label;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Priority graph: formula-labelled nodes under a strict order. An edge
/// (a, b) reads "a is strictly more preferred than b". The stored edge set
/// need not be transitively closed; precedes() answers on the closure.
class PGraph {
 public:
  explicit PGraph(Signature sig) : sig_(std::move(sig)) {}

  PGraph(Signature sig, std::vector<GraphNode> nodes, std::vector<Edge> edges)
      : sig_(std::move(sig)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
    const std::uint64_t allowed = (std::uint64_t{1} << sig_.size()) - 1;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].label.atoms() & ~allowed)
        throw GraphError("node '" + nodes_[i].id + "' uses atoms outside the signature");
      for (std::size_t j = 0; j < i; ++j)
        if (nodes_[i].id == nodes_[j].id) throw GraphError("duplicate node id '" + nodes_[i].id + "'");
    }
    prec_ = Relation::from_pairs(nodes_.size(), edges_).transitive_closure();
  }

  /// Nodes get ids n0, n1, ...; edges are given by position.
  static PGraph from_labels(Signature sig, const std::vector<Formula>& labels, std::vector<Edge> edges = {}) {
    std::vector<GraphNode> nodes;
    nodes.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) nodes.push_back({"n" + std::to_string(i), labels[i]});
    return PGraph(std::move(sig), std::move(nodes), std::move(edges));
  }

  /// Labels in order, each strictly above the next (a chain).
  static PGraph chain(Signature sig, const std::vector<Formula>& labels) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < labels.size(); ++i) edges.emplace_back(i, i + 1);
    return from_labels(std::move(sig), labels, std::move(edges));
  }

  const Signature& signature() const noexcept { return sig_; }
  const std::vector<GraphNode>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const Formula& label(std::size_t i) const { return nodes_.at(i).label; }

  /// Closed precedence relation (a, b) = "a ≺ b".
  const Relation& precedence() const noexcept { return prec_; }
  bool precedes(std::size_t a, std::size_t b) const { return prec_.holds(a, b); }

  std::optional<std::size_t> index_of(const std::string& id) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].id == id) return i;
    return std::nullopt;
  }

  /// Same signature, node ids, labels (structurally) and closed precedence.
  friend bool operator==(const PGraph& a, const PGraph& b) {
    if (a.sig_ != b.sig_ || a.nodes_.size() != b.nodes_.size()) return false;
    for (std::size_t i = 0; i < a.nodes_.size(); ++i)
      if (a.nodes_[i].id != b.nodes_[i].id || !(a.nodes_[i].label == b.nodes_[i].label)) return false;
    return a.prec_ == b.prec_;
  }

 private:
  Signature sig_;
  std::vector<GraphNode> nodes_;
  std::vector<Edge> edges_;
  Relation prec_;
};

struct GraphVerdict {
  bool valid = true;
  std::string message;
  /// Offending node indices: a single node for a self-loop, a cycle otherwise.
  std::vector<std::size_t> offenders;
};

/// Checks that the closure of the stored edges is irreflexive (hence a
/// strict partial order, transitivity being given by the closure).
inline GraphVerdict validate(const PGraph& g) {
  for (auto [a, b] : g.edges())
    if (a == b)
      return {false, "self-loop on node '" + g.nodes()[a].id + "'", {a}};
  if (auto cycle = Relation::from_pairs(g.size(), g.edges()).find_cycle()) {
    std::string msg = "cycle";
    for (std::size_t v : *cycle) msg += " " + g.nodes()[v].id + " <";
    msg += " " + g.nodes()[cycle->front()].id;
    return {false, msg, *cycle};
  }
  return {};
}

inline void require_valid(const PGraph& g) {
  if (auto v = validate(g); !v.valid) throw GraphError(v.message);
}

/// w ≤_G w' iff for every node φ: w' ⊨ φ implies w ⊨ φ, or some ψ ≺ φ has
/// w ⊨ ψ and w' ⊭ ψ.
inline Relation induced_order(const PGraph& g, std::span<const World> worlds) {
  require_valid(g);
  const std::size_t n = worlds.size(), k = g.size();
  // sat[w * k + i]: world w satisfies node i.
  std::vector<bool> sat(n * k);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t i = 0; i < k; ++i) sat[w * k + i] = eval(g.label(i), worlds[w].valuation);

  Relation leq(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool ok = true;
      for (std::size_t phi = 0; phi < k && ok; ++phi) {
        if (!sat[b * k + phi] || sat[a * k + phi]) continue;
        bool escaped = false;
        for (std::size_t psi = 0; psi < k && !escaped; ++psi)
          escaped = g.precedes(psi, phi) && sat[a * k + psi] && !sat[b * k + psi];
        ok = escaped;
      }
      leq.set(a, b, ok);
    }
  return leq;
}

inline PreferenceModel induce_model(const PGraph& g, std::vector<World> worlds) {
  Relation leq = induced_order(g, worlds);
  return PreferenceModel(g.signature(), std::move(worlds), std::move(leq));
}

inline bool is_induced_by(const PreferenceModel& m, const PGraph& g) {
  return m.signature() == g.signature() && induced_order(g, m.worlds()) == m.order();
}

/// Model over one world per valuation of the graph's signature.
inline PreferenceModel canonical_model(const PGraph& g) {
  return induce_model(g, canonical_worlds(g.signature()));
}

inline PreferenceModel canonical_model(const PGraph& g, const Signature& sig) {
  if (!(g.signature() == sig)) throw GraphError("graph signature differs from the requested one");
  return canonical_model(g);
}

inline bool graphs_equivalent(const PGraph& a, const PGraph& b) {
  if (!(a.signature() == b.signature())) throw GraphError("graphs use different signatures");
  return canonical_model(a).order() == canonical_model(b).order();
}

inline bool graphs_equivalent(const PGraph& a, const PGraph& b, const Signature& sig) {
  return canonical_model(a, sig).order() == canonical_model(b, sig).order();
}

/// Worlds sharing a valuation must be tied; induced orders cannot separate
/// them.
inline std::optional<std::pair<std::size_t, std::size_t>> valuation_respect_violation(const PreferenceModel& m) {
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b)
      if (a != b && m.world(a).valuation == m.world(b).valuation && !m.leq(a, b)) return std::pair{a, b};
  return std::nullopt;
}

/// Antichain with one node per world w, labelled by the characteristic
/// formula of the valuations in the down-set {u | u ≤ w}. Its induced order
/// reproduces m exactly.
inline PGraph graph_from_preorder(const PreferenceModel& m) {
  if (auto bad = valuation_respect_violation(m))
    throw NotRepresentable("worlds '" + m.world(bad->first).id + "' and '" + m.world(bad->second).id +
                           "' share a valuation but are not tied");
  std::vector<GraphNode> nodes;
  nodes.reserve(m.size());
  for (std::size_t w = 0; w < m.size(); ++w) {
    std::vector<Valuation> down;
    for (std::size_t u = 0; u < m.size(); ++u)
      if (m.leq(u, w)) down.push_back(m.world(u).valuation);
    nodes.push_back({"d_" + m.world(w).id, characteristic_formula(m.signature(), std::move(down))});
  }
  return PGraph(m.signature(), std::move(nodes), {});
}

}  // namespace pgrev

#endif  // PGREV_PGRAPH_HPP
