#ifndef PGREV_SEMANTICS_HPP
#define PGREV_SEMANTICS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgrev/formula.hpp"
#include "pgrev/relation.hpp"

namespace pgrev {

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct World {
  std::string id;
  Valuation valuation;

  friend bool operator==(const World&, const World&) = default;
};

/// One world per valuation of `sig`, in truth-table order, named w_<true
/// atoms> (w_0 when no atom is true).
inline std::vector<World> canonical_worlds(const Signature& sig) {
  if (sig.size() > kMaxAtoms) throw SignatureTooLarge(sig.size());
  std::vector<World> worlds;
  worlds.reserve(sig.valuation_count());
  for (std::size_t i = 0; i < sig.valuation_count(); ++i) {
    const Valuation v = valuation_at(sig, i);
    std::string id = "w_";
    for (std::size_t a = 0; a < sig.size(); ++a)
      if (v[a]) id += sig.name(a);
    if (id == "w_") id += '0';
    worlds.push_back({std::move(id), v});
  }
  return worlds;
}

/// Finite preference model: worlds with valuations and a preorder `leq`
/// whose strict part is acyclic. Smaller means more preferred.
class PreferenceModel {
 public:
  PreferenceModel(Signature sig, std::vector<World> worlds, Relation leq)
      : sig_(std::move(sig)), worlds_(std::move(worlds)), leq_(std::move(leq)) {
    if (leq_.size() != worlds_.size()) throw ModelError("order size does not match world count");
    for (std::size_t i = 0; i < worlds_.size(); ++i) {
      if (worlds_[i].valuation.bits >> sig_.size())
        throw ModelError("world '" + worlds_[i].id + "' assigns atoms outside the signature");
      for (std::size_t j = 0; j < i; ++j)
        if (worlds_[i].id == worlds_[j].id) throw ModelError("duplicate world id '" + worlds_[i].id + "'");
    }
    if (!leq_.is_reflexive()) throw ModelError("preference relation is not reflexive");
    if (!leq_.is_transitive()) throw ModelError("preference relation is not transitive");
    if (!leq_.strict_part_acyclic()) throw ModelError("strict preference has a cycle");
  }

  const Signature& signature() const noexcept { return sig_; }
  const std::vector<World>& worlds() const noexcept { return worlds_; }
  const World& world(std::size_t i) const { return worlds_.at(i); }
  std::size_t size() const noexcept { return worlds_.size(); }
  const Relation& order() const noexcept { return leq_; }

  bool leq(std::size_t a, std::size_t b) const { return leq_.holds(a, b); }
  bool less(std::size_t a, std::size_t b) const { return leq_.strictly(a, b); }

  bool satisfies(std::size_t w, const Formula& f) const { return eval(f, worlds_.at(w).valuation); }

  /// Indices of the worlds satisfying f, ascending.
  std::vector<std::size_t> satisfying(const Formula& f) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < worlds_.size(); ++i)
      if (satisfies(i, f)) out.push_back(i);
    return out;
  }

  std::optional<std::size_t> index_of(const std::string& id) const {
    for (std::size_t i = 0; i < worlds_.size(); ++i)
      if (worlds_[i].id == id) return i;
    return std::nullopt;
  }

  /// Same worlds and order; the relation is compared index by index.
  friend bool operator==(const PreferenceModel&, const PreferenceModel&) = default;

 private:
  Signature sig_;
  std::vector<World> worlds_;
  Relation leq_;
};

inline bool same_worlds(const PreferenceModel& a, const PreferenceModel& b) {
  return a.signature() == b.signature() && a.worlds() == b.worlds();
}

/// Model where every world is as preferred as every other.
inline PreferenceModel flat_model(const Signature& sig, std::vector<World> worlds) {
  const std::size_t n = worlds.size();
  return PreferenceModel(sig, std::move(worlds), Relation(n, true));
}

/// The ≤-minimal f-worlds: f-worlds w with no f-world strictly below w.
inline std::vector<std::size_t> min_worlds(const PreferenceModel& m, const Formula& f) {
  const auto sat = m.satisfying(f);
  std::vector<std::size_t> out;
  for (std::size_t w : sat) {
    const bool dominated =
        std::any_of(sat.begin(), sat.end(), [&](std::size_t u) { return m.less(u, w); });
    if (!dominated) out.push_back(w);
  }
  return out;
}

struct RevisionOutcome {
  PreferenceModel model;
  std::string op;
  Formula input;
};

/// f-worlds moved below all other worlds; order inside each block kept.
inline RevisionOutcome lex_revise(const PreferenceModel& m, const Formula& f) {
  const std::size_t n = m.size();
  Relation leq(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const bool fa = m.satisfies(a, f), fb = m.satisfies(b, f);
      leq.set(a, b, fa == fb ? m.leq(a, b) : fa);
    }
  return {PreferenceModel(m.signature(), m.worlds(), std::move(leq)), "lex", f};
}

/// Minimal f-worlds promoted to the top; everything else unchanged.
inline RevisionOutcome natural_revise(const PreferenceModel& m, const Formula& f) {
  const std::size_t n = m.size();
  std::vector<bool> in_min(n, false);
  for (std::size_t w : min_worlds(m, f)) in_min[w] = true;
  Relation leq(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      leq.set(a, b, in_min[a] || (m.leq(a, b) && !in_min[b]));
  return {PreferenceModel(m.signature(), m.worlds(), std::move(leq)), "natural", f};
}

inline RevisionOutcome null_change(const PreferenceModel& m, const Formula& f) {
  return {m, "null", f};
}

}  // namespace pgrev

#endif  // PGREV_SEMANTICS_HPP
