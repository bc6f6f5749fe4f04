#ifndef PGREV_HARNESS_HPP
#define PGREV_HARNESS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgrev/formula.hpp"
#include "pgrev/pgraph.hpp"
#include "pgrev/postulates.hpp"
#include "pgrev/semantics.hpp"
#include "pgrev/transforms.hpp"

namespace pgrev {

class ResourceBoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// ---------------------------------------------------------------------------
// Fixtures

inline Signature two_atoms() { return Signature({"p", "q"}); }

inline Formula atom_p() { return Formula::atom(0); }
inline Formula atom_q() { return Formula::atom(1); }

/// {p, q, ~p, p & q, p | q} over two_atoms().
inline std::vector<Formula> default_pool() {
  const Formula p = atom_p(), q = atom_q();
  return {p, q, ~p, p & q, p | q};
}

/// Worlds w_pq, w_p, w_q, w_0 totally ordered in that sequence.
inline PreferenceModel chain_model() {
  const Signature sig = two_atoms();
  auto worlds = canonical_worlds(sig);
  Relation leq(worlds.size());
  for (std::size_t a = 0; a < worlds.size(); ++a)
    for (std::size_t b = a; b < worlds.size(); ++b) leq.set(a, b);
  return PreferenceModel(sig, std::move(worlds), std::move(leq));
}

/// Model whose order is `sequence` (world indices, most preferred first)
/// as a strict chain.
inline Relation chain_relation(std::size_t n, const std::vector<std::size_t>& sequence) {
  Relation leq = Relation::identity(n);
  for (std::size_t i = 0; i < sequence.size(); ++i)
    for (std::size_t j = i; j < sequence.size(); ++j) leq.set(sequence[i], sequence[j]);
  return leq;
}

/// Every reflexive transitive relation on n elements (n ≤ 4).
inline std::vector<Relation> preorders(std::size_t n) {
  if (n > 4) throw ResourceBoundExceeded("preorder enumeration limited to 4 elements");
  std::vector<Edge> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) slots.emplace_back(a, b);
  std::vector<Relation> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    Relation r = Relation::identity(n);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1u) r.set(slots[s].first, slots[s].second);
    if (r.is_transitive()) out.push_back(std::move(r));
  }
  return out;
}

/// Every preorder over every choice of `k` distinct canonical worlds of
/// `sig`. Choices in increasing lexicographic order of world indices.
inline std::vector<PreferenceModel> all_preorder_models(const Signature& sig, std::size_t k) {
  const auto canon = canonical_worlds(sig);
  const auto orders = preorders(k);
  std::vector<PreferenceModel> out;
  std::vector<std::size_t> pick(k);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == k) {
      std::vector<World> worlds;
      for (std::size_t i : pick) worlds.push_back(canon[i]);
      for (const auto& r : orders) out.emplace_back(sig, worlds, r);
      return;
    }
    for (std::size_t i = start; i < canon.size(); ++i) {
      pick[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// One formula per subset of valuations: every truth table over `sig`.
inline std::vector<Formula> all_truth_tables(const Signature& sig) {
  const std::size_t n = sig.valuation_count();
  if (n > 16) throw ResourceBoundExceeded("truth-table enumeration limited to 4 atoms");
  std::vector<Formula> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Valuation> vals;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) vals.push_back(valuation_at(sig, i));
    out.push_back(characteristic_formula(sig, std::move(vals)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct Assertion {
  std::string text;
  bool holds;
};

struct DemoReport {
  std::string id;
  std::vector<std::string> steps;
  std::vector<Assertion> assertions;
  std::vector<std::pair<std::string, std::size_t>> counts;

  bool verdict() const {
    if (assertions.empty()) return false;
    for (const auto& a : assertions)
      if (!a.holds) return false;
    return true;
  }

  void step(std::string s) { steps.push_back(std::move(s)); }
  void check(std::string text, bool holds) { assertions.push_back({std::move(text), holds}); }
};

/// "a < b ~ c < d" for total preorders, listing tie classes from most to
/// least preferred; nullopt when some pair is incomparable.
inline std::optional<std::string> chain_string(const PreferenceModel& m) {
  if (!m.order().is_total()) return std::nullopt;
  auto classes = m.order().tie_classes();
  std::sort(classes.begin(), classes.end(), [&](const auto& x, const auto& y) { return m.less(x.front(), y.front()); });
  std::string out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (c) out += " < ";
    for (std::size_t i = 0; i < classes[c].size(); ++i) {
      if (i) out += " ~ ";
      out += m.world(classes[c][i]).id;
    }
  }
  return out;
}

inline std::string order_text(const PreferenceModel& m) {
  if (auto s = chain_string(m)) return *s;
  std::string out;
  for (auto [a, b] : m.order().covering_pairs()) {
    if (!out.empty()) out += ", ";
    out += m.world(a).id + " < " + m.world(b).id;
  }
  for (const auto& cls : m.order().tie_classes())
    for (std::size_t i = 1; i < cls.size(); ++i) {
      if (!out.empty()) out += ", ";
      out += m.world(cls[0]).id + " ~ " + m.world(cls[i]).id;
    }
  std::string ws;
  for (const auto& w : m.worlds()) ws += (ws.empty() ? "" : " ") + w.id;
  return "{" + ws + "}" + (out.empty() ? " all incomparable" : ": " + out);
}

// ---------------------------------------------------------------------------
// Demos

/// No graph transformation satisfying Faith and CB can be relevant: the same
/// graph induces a 3-world model and its 2-world restriction, yet natural
/// revision by p must order the shared valuations oppositely in the two.
inline DemoReport demo_fact_cb() {
  DemoReport r;
  r.id = "fact-cb";
  const Signature sig = two_atoms();
  const Formula p = atom_p();
  Valuation v1, v2, v3;  // ~p & q, p & ~q, p & q
  v1.set(1, true);
  v2.set(0, true);
  v3.set(0, true);
  v3.set(1, true);
  const World w1{"w1", v1}, w2{"w2", v2}, w3{"w3", v3};

  const PreferenceModel m(sig, {w1, w2, w3}, chain_relation(3, {0, 1, 2}));
  const PreferenceModel m_small(sig, {w1, w3}, chain_relation(2, {0, 1}));
  r.step("M: " + order_text(m) + "; M': " + order_text(m_small));

  const PGraph g = graph_from_preorder(m);
  r.step("shared graph G has " + std::to_string(g.size()) + " antichain nodes built from M's down-sets");
  r.check("G induces both M and M'", is_induced_by(m, g) && is_induced_by(m_small, g));

  const PreferenceModel t1 = natural_revise(m, p).model;
  const PreferenceModel t2 = natural_revise(m_small, p).model;
  r.step("natural revision by p: M -> " + order_text(t1) + ", M' -> " + order_text(t2));
  r.check("revised M is w2 < w1 < w3", t1.order() == chain_relation(3, {1, 0, 2}));
  r.check("revised M' is w3 < w1", t2.order() == chain_relation(2, {1, 0}));

  // Any output graph H orders w1, w3 through their valuations only. Sweep
  // every graph with at most two nodes over all 16 truth tables (plus the
  // representation graph of the first target) and confirm that each one
  // orders the pair identically in both world sets, so none realises both
  // targets.
  std::vector<PGraph> candidates = enumerate_graphs(sig, all_truth_tables(sig), 2);
  candidates.push_back(graph_from_preorder(t1));
  candidates.push_back(graph_from_preorder(t2));
  std::size_t determined = 0, induce_first = 0, induce_second = 0, induce_both = 0;
  for (const auto& h : candidates) {
    const Relation big = induced_order(h, m.worlds());
    const Relation small = induced_order(h, m_small.worlds());
    if (big.holds(0, 2) == small.holds(0, 1) && big.holds(2, 0) == small.holds(1, 0)) ++determined;
    const bool a = big == t1.order(), b = small == t2.order();
    induce_first += a;
    induce_second += b;
    induce_both += a && b;
  }
  r.counts = {{"candidate graphs", candidates.size()},
              {"valuation-determined", determined},
              {"induce revised M", induce_first},
              {"induce revised M'", induce_second},
              {"induce both", induce_both}};
  r.step("swept " + std::to_string(candidates.size()) + " candidate output graphs: " + std::to_string(induce_first) +
         " induce revised M, " + std::to_string(induce_second) + " induce revised M', " +
         std::to_string(induce_both) + " induce both");
  r.check("targets conflict on the valuation pair (~p & q, p & q) and no graph induces both",
          t1.less(0, 2) && t2.less(1, 0) && w1.valuation == m_small.world(0).valuation &&
              w3.valuation == m_small.world(1).valuation && determined == candidates.size() && induce_both == 0);

  const bool faith_cb = check_faith(m, p, t1).holds && check_cb(m, p, t1).holds &&
                        check_faith(m_small, p, t2).holds && check_cb(m_small, p, t2).holds;
  r.check("natural revision satisfies Faith and CB on both models", faith_cb);
  return r;
}

struct MinSetWitness {
  std::vector<std::size_t> first_worlds;   // canonical world indices of M1
  std::vector<std::size_t> second_worlds;  // canonical world indices of M2
  std::vector<Valuation> first_min;
  std::vector<Valuation> second_min;
  Valuation pivot;  // present in both, minimal in exactly one
};

/// Searches two models induced by g (world subsets of the canonical model)
/// whose minimal f-worlds cannot be carved out by a single formula. M1 is
/// the full canonical set; M2 ranges over all non-empty subsets when there
/// are at most 8 canonical worlds, over singletons otherwise (a witness
/// exists iff one of the form (full, singleton) does).
inline DemoReport demo_fact_min(const PGraph& g, const Formula& f, const Signature& sig,
                                std::optional<MinSetWitness>* witness_out = nullptr) {
  DemoReport r;
  r.id = "fact-min";
  require_valid(g);
  if (!(g.signature() == sig)) throw GraphError("graph signature differs from the requested one");
  const auto canon = canonical_worlds(sig);
  const std::size_t n = canon.size();
  auto induced = [&](const std::vector<std::size_t>& idx) {
    std::vector<World> ws;
    for (std::size_t i : idx) ws.push_back(canon[i]);
    return induce_model(g, std::move(ws));
  };
  auto min_vals = [&](const PreferenceModel& m) {
    std::vector<Valuation> out;
    for (std::size_t w : min_worlds(m, f)) out.push_back(m.world(w).valuation);
    return out;
  };

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  const PreferenceModel m1 = induced(all);
  const auto min1 = min_vals(m1);
  auto in = [](const std::vector<Valuation>& s, Valuation v) { return std::find(s.begin(), s.end(), v) != s.end(); };

  std::vector<std::vector<std::size_t>> subsets;
  if (n <= 8) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1u) idx.push_back(i);
      subsets.push_back(std::move(idx));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) subsets.push_back({i});
  }

  std::optional<MinSetWitness> found;
  for (const auto& idx : subsets) {
    const PreferenceModel m2 = induced(idx);
    const auto min2 = min_vals(m2);
    for (std::size_t i : idx) {
      const Valuation v = canon[i].valuation;
      if (in(min1, v) != in(min2, v)) {
        found = MinSetWitness{all, idx, min1, min2, v};
        break;
      }
    }
    if (found) break;
  }
  r.counts = {{"candidate world subsets", subsets.size()}};
  if (!found) {
    r.step("no pair of induced models separates the minimal f-valuations (not-found)");
    r.check("witness found", false);
    if (witness_out) *witness_out = std::nullopt;
    return r;
  }

  auto names = [&](const std::vector<std::size_t>& idx) {
    std::string s;
    for (std::size_t i : idx) s += (s.empty() ? "" : " ") + canon[i].id;
    return "{" + s + "}";
  };
  auto vals = [&](const std::vector<Valuation>& vs) {
    std::string s;
    for (Valuation v : vs) s += (s.empty() ? "" : ", ") + to_string(minterm(sig, v), sig);
    return "{" + s + "}";
  };
  r.step("M1 worlds " + names(found->first_worlds) + ", minimal f-valuations " + vals(found->first_min));
  r.step("M2 worlds " + names(found->second_worlds) + ", minimal f-valuations " + vals(found->second_min));
  r.check("M1 is induced by G", is_induced_by(m1, g));
  r.check("M2 is induced by G", is_induced_by(induced(found->second_worlds), g));
  r.check("minimal f-valuation sets differ", found->first_min != found->second_min);

  // A formula's extension is a set of valuations. Enumerate every such set
  // and confirm none cuts out both minimal sets within the two world sets.
  std::size_t selecting = 0;
  if (n <= 16) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      auto selects = [&](const std::vector<std::size_t>& idx, const std::vector<Valuation>& mins) {
        for (std::size_t i : idx)
          if ((((mask >> i) & 1u) != 0) != in(mins, canon[i].valuation)) return false;
        return true;
      };
      if (selects(found->first_worlds, found->first_min) && selects(found->second_worlds, found->second_min))
        ++selecting;
    }
    r.counts.emplace_back("truth tables selecting both", selecting);
  }
  r.step("shared valuation " + to_string(minterm(sig, found->pivot), sig) + " is minimal in exactly one model");
  r.check("no formula over the signature selects both minimal sets", selecting == 0);
  if (witness_out) *witness_out = found;
  return r;
}

/// Checks prefix-then-induce against induce-then-lex over every graph with
/// at most `bound` nodes labelled from `pool`, for every pool formula.
inline DemoReport sweep_harmony(std::size_t bound, const Signature& sig, const std::vector<Formula>& pool) {
  if (bound > 3) throw ResourceBoundExceeded("harmony sweep limited to 3 nodes");
  if (sig.size() > 4) throw ResourceBoundExceeded("harmony sweep limited to 4 atoms");
  DemoReport r;
  r.id = "harmony";
  const auto graphs = enumerate_graphs(sig, pool, bound);
  std::size_t instances = 0, mismatches = 0;
  for (const auto& g : graphs) {
    const PreferenceModel base = canonical_model(g, sig);
    for (const auto& f : pool) {
      ++instances;
      const bool agree = canonical_model(prefix(g, f), sig).order() == lex_revise(base, f).model.order();
      if (!agree && mismatches++ == 0) r.step("first mismatch at revision by " + to_string(f, sig));
    }
  }
  r.counts = {{"graphs", graphs.size()}, {"instances", instances}, {"mismatches", mismatches}};
  r.step(std::to_string(graphs.size()) + " graphs with at most " + std::to_string(bound) + " nodes, " +
         std::to_string(pool.size()) + " revision formulas");
  r.check("prefixing induces lexicographic revision in all " + std::to_string(instances) + " instances",
          mismatches == 0 && instances > 0);
  return r;
}

// ---------------------------------------------------------------------------
// Experiment sweeps

struct SuiteRow {
  Postulate postulate;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::optional<std::string> first_witness;
};

/// "{n0: p, n1: q | n0 < n1}" listing labels and the closed precedence.
inline std::string graph_text(const PGraph& g) {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + g.nodes()[i].id + ": " + to_string(g.label(i), g.signature());
  std::string e;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b)
      if (g.precedes(a, b)) e += (e.empty() ? "" : ", ") + g.nodes()[a].id + " < " + g.nodes()[b].id;
  return "{" + s + (e.empty() ? "" : " | " + e) + "}";
}

using ModelOperator = std::function<PreferenceModel(const PreferenceModel&, const Formula&)>;

inline std::string describe_witness(const PreferenceModel& m, const Formula& f, const PostulateWitness& w) {
  std::string s = "model [" + order_text(m) + "] by " + to_string(f, m.signature()) + ": (" + m.world(w.first).id;
  if (w.second != w.first) s += ", " + m.world(w.second).id;
  return s + ") " + w.reason;
}

/// Runs each postulate over every (model, formula) with `op` producing the
/// revised model.
inline std::vector<SuiteRow> run_postulate_suite(const std::vector<PreferenceModel>& models,
                                                 const std::vector<Formula>& pool, const ModelOperator& op,
                                                 const std::vector<Postulate>& postulates) {
  std::vector<SuiteRow> rows;
  for (Postulate p : postulates) rows.push_back({p, 0, 0, std::nullopt});
  for (const auto& m : models)
    for (const auto& f : pool) {
      const PreferenceModel after = op(m, f);
      for (auto& row : rows) {
        ++row.checked;
        const auto rep = check(row.postulate, m, f, after);
        if (!rep.holds) {
          if (!row.first_witness) row.first_witness = describe_witness(m, f, rep.witnesses.front());
          ++row.violations;
        }
      }
    }
  return rows;
}

struct SoundnessRow {
  std::string transformation;
  Condition condition;
  std::size_t instances = 0;
  std::size_t accepted = 0;
  std::size_t violations = 0;         // condition accepted, postulate failed
  std::size_t converse_failures = 0;  // condition rejected, postulate held
  bool accepted_everywhere = true;
  std::optional<std::string> first_violation;
};

/// For each transformation and condition: over every graph (bounded, from
/// `pool`) and pool formula, whether an accepted condition is followed by
/// the postulate on the canonical models of G and t(G, f).
inline std::vector<SoundnessRow> sweep_soundness(std::size_t bound, const Signature& sig,
                                                 const std::vector<Formula>& pool,
                                                 const std::vector<GraphTransformation>& transformations) {
  if (bound > 3) throw ResourceBoundExceeded("soundness sweep limited to 3 nodes");
  std::vector<SoundnessRow> rows;
  const auto graphs = enumerate_graphs(sig, pool, bound);
  for (const auto& t : transformations) {
    std::vector<SoundnessRow> local;
    for (Condition c : kAllConditions) local.push_back({t.name, c, 0, 0, 0, 0, true, std::nullopt});
    for (const auto& g : graphs) {
      const PreferenceModel before = canonical_model(g, sig);
      for (const auto& f : pool) {
        const PGraph h = t(g, f);
        const PreferenceModel after = induce_model(h, before.worlds());
        for (auto& row : local) {
          ++row.instances;
          const bool cond = check_condition(row.condition, g, f, h, sig).holds;
          const bool sem = check(guarded_postulate(row.condition), before, f, after).holds;
          row.accepted += cond;
          row.accepted_everywhere = row.accepted_everywhere && cond;
          if (cond && !sem) {
            if (!row.first_violation) row.first_violation = "graph " + graph_text(g) + ", revision by " + to_string(f, sig);
            ++row.violations;
          }
          if (!cond && sem) ++row.converse_failures;
        }
      }
    }
    rows.insert(rows.end(), local.begin(), local.end());
  }
  return rows;
}

}  // namespace pgrev

#endif  // PGREV_HARNESS_HPP
