#ifndef PGREV_TRANSFORMS_HPP
#define PGREV_TRANSFORMS_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgrev/formula.hpp"
#include "pgrev/pgraph.hpp"
#include "pgrev/semantics.hpp"

namespace pgrev {

/// Prefixing: a fresh node labelled f placed above every existing node. Existing
/// nodes keep their indices; the new node is appended.
inline PGraph prefix(const PGraph& g, const Formula& f) {
  std::string id = "rev";
  for (int k = 1; g.index_of(id); ++k) id = "rev" + std::to_string(k);
  std::vector<GraphNode> nodes = g.nodes();
  std::vector<Edge> edges = g.edges();
  const std::size_t fresh = nodes.size();
  nodes.push_back({std::move(id), f});
  for (std::size_t i = 0; i < fresh; ++i) edges.emplace_back(fresh, i);
  return PGraph(g.signature(), std::move(nodes), std::move(edges));
}

inline PGraph null_transform(const PGraph& g, const Formula&) { return g; }

struct GraphTransformation {
  std::string name;
  std::function<PGraph(const PGraph&, const Formula&)> apply;

  PGraph operator()(const PGraph& g, const Formula& f) const { return apply(g, f); }
};

/// Named transformations. Built once, then only read.
class TransformationRegistry {
 public:
  TransformationRegistry() = default;

  static const TransformationRegistry& builtin() {
    static const TransformationRegistry reg = [] {
      TransformationRegistry r;
      r.add({"prefix", prefix});
      r.add({"null", null_transform});
      return r;
    }();
    return reg;
  }

  void add(GraphTransformation t) {
    const std::string name = t.name;
    if (!by_name_.emplace(name, std::move(t)).second)
      throw std::invalid_argument("transformation '" + name + "' already registered");
  }

  const GraphTransformation& get(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw std::out_of_range("unknown transformation '" + name + "'");
    return it->second;
  }

  bool contains(const std::string& name) const { return by_name_.count(name) != 0; }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : by_name_) out.push_back(k);
    return out;
  }

 private:
  std::map<std::string, GraphTransformation> by_name_;
};

/// Operator induced by `t` on a representable model: pick a graph inducing
/// m (graph_from_preorder unless `inducing` is given), transform it, and
/// induce an order on m's worlds.
inline RevisionOutcome apply_induced(const GraphTransformation& t, const PreferenceModel& m, const Formula& f,
                                     const std::optional<PGraph>& inducing = std::nullopt) {
  PGraph g = inducing ? *inducing : graph_from_preorder(m);
  if (inducing && !is_induced_by(m, g)) throw GraphError("supplied graph does not induce the model");
  PGraph out = t(g, f);
  require_valid(out);
  return {induce_model(out, m.worlds()), t.name, f};
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of small graphs.

/// All strict partial orders on k labelled elements (k ≤ 4).
inline std::vector<Relation> strict_partial_orders(std::size_t k) {
  if (k > 4) throw std::length_error("strict partial order enumeration limited to 4 elements");
  std::vector<Edge> slots;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (a != b) slots.emplace_back(a, b);
  std::vector<Relation> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    Relation r(k);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1u) r.set(slots[s].first, slots[s].second);
    if (r.is_transitive() && r.is_irreflexive()) out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<Edge> pairs_of(const Relation& r) {
  std::vector<Edge> out;
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b)
      if (r.holds(a, b)) out.emplace_back(a, b);
  return out;
}

/// Every graph with at most `max_nodes` nodes whose labels are drawn (with
/// repetition, as ordered tuples) from `pool`, under every strict partial
/// order. Deterministic order: by node count, then label tuple, then order.
inline std::vector<PGraph> enumerate_graphs(const Signature& sig, const std::vector<Formula>& pool,
                                            std::size_t max_nodes) {
  std::vector<PGraph> out;
  for (std::size_t k = 0; k <= max_nodes; ++k) {
    if (k > 0 && pool.empty()) break;
    const auto orders = strict_partial_orders(k);
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      std::vector<Formula> labels;
      for (std::size_t i : pick) labels.push_back(pool.at(i));
      for (const auto& r : orders) out.push_back(PGraph::from_labels(sig, labels, pairs_of(r)));
      std::size_t pos = 0;
      while (pos < k && ++pick[pos] == pool.size()) pick[pos++] = 0;
      if (pos == k) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bounded relevance refutation.

struct RelevanceWitness {
  PGraph first;
  PGraph second;
  Formula formula;
};

struct RelevanceVerdict {
  enum class Status { ConsistentOnSample, Counterexample };
  Status status = Status::ConsistentOnSample;
  std::optional<RelevanceWitness> witness;
  std::size_t pairs_checked = 0;
  std::size_t graphs_swept = 0;

  bool consistent() const noexcept { return status == Status::ConsistentOnSample; }
};

class NonEquivalentPair : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Searches for equivalent graphs that `t` maps to inequivalent graphs:
/// first among `pairs`, then among all graphs over `formulas` with at most
/// `node_bound` nodes. A counterexample refutes relevance; finding none is
/// inconclusive.
inline RelevanceVerdict relevance_check(const GraphTransformation& t,
                                        const std::vector<std::pair<PGraph, PGraph>>& pairs,
                                        const std::vector<Formula>& formulas, const Signature& sig,
                                        std::size_t node_bound = 2) {
  RelevanceVerdict verdict;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!graphs_equivalent(pairs[i].first, pairs[i].second, sig))
      throw NonEquivalentPair("pair " + std::to_string(i) + " consists of inequivalent graphs");

  auto found = [&](const PGraph& a, const PGraph& b, const Formula& f) {
    verdict.status = RelevanceVerdict::Status::Counterexample;
    verdict.witness = RelevanceWitness{a, b, f};
  };

  for (const auto& [a, b] : pairs)
    for (const auto& f : formulas) {
      ++verdict.pairs_checked;
      if (!graphs_equivalent(t(a, f), t(b, f), sig)) {
        found(a, b, f);
        return verdict;
      }
    }

  // Group the swept graphs by canonical order; within a class every output
  // must agree with the class representative's output.
  const auto graphs = enumerate_graphs(sig, formulas, node_bound);
  verdict.graphs_swept = graphs.size();
  std::vector<std::pair<Relation, std::size_t>> classes;
  std::vector<std::size_t> class_of(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    Relation key = canonical_model(graphs[i], sig).order();
    std::size_t c = 0;
    while (c < classes.size() && !(classes[c].first == key)) ++c;
    if (c == classes.size()) classes.emplace_back(std::move(key), i);
    class_of[i] = c;
  }
  for (const auto& f : formulas) {
    std::vector<std::optional<Relation>> rep_output(classes.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      Relation out = canonical_model(t(graphs[i], f), sig).order();
      auto& rep = rep_output[class_of[i]];
      if (!rep) {
        rep = std::move(out);
      } else if (!(*rep == out)) {
        found(graphs[classes[class_of[i]].second], graphs[i], f);
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace pgrev

#endif  // PGREV_TRANSFORMS_HPP
