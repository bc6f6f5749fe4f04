#ifndef PGREV_RELATION_HPP
#define PGREV_RELATION_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pgrev {

/// Binary relation over {0, ..., n-1} stored as a dense boolean matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n, bool value = false) : n_(n), cells_(n * n, value) {}

  static Relation identity(std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) r.set(i, i);
    return r;
  }

  static Relation from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    Relation r(n);
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) throw std::out_of_range("relation pair out of range");
      r.set(a, b);
    }
    return r;
  }

  std::size_t size() const noexcept { return n_; }

  bool holds(std::size_t a, std::size_t b) const { return cells_[a * n_ + b]; }
  void set(std::size_t a, std::size_t b, bool value = true) { cells_[a * n_ + b] = value; }

  /// a is related to b but not conversely.
  bool strictly(std::size_t a, std::size_t b) const { return holds(a, b) && !holds(b, a); }

  Relation transitive_closure() const {
    Relation r = *this;
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        if (r.holds(i, k))
          for (std::size_t j = 0; j < n_; ++j)
            if (r.holds(k, j)) r.set(i, j);
    return r;
  }

  Relation reflexive_transitive_closure() const {
    Relation r = *this;
    for (std::size_t i = 0; i < n_; ++i) r.set(i, i);
    return r.transitive_closure();
  }

  bool is_reflexive() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (!holds(i, i)) return false;
    return true;
  }

  bool is_irreflexive() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (holds(i, i)) return false;
    return true;
  }

  bool is_transitive() const { return transitive_closure() == *this; }

  bool is_total() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (!holds(i, j) && !holds(j, i)) return false;
    return true;
  }

  /// Strict part {(a,b) | a R b and not b R a}.
  Relation strict_part() const {
    Relation r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r.set(i, j, strictly(i, j));
    return r;
  }

  /// A closed walk v0 -> v1 -> ... -> v0 (first vertex not repeated), if any.
  std::optional<std::vector<std::size_t>> find_cycle() const {
    enum class Mark { Fresh, Active, Done };
    std::vector<Mark> mark(n_, Mark::Fresh);
    std::vector<std::size_t> stack;
    std::optional<std::vector<std::size_t>> found;

    auto visit = [&](auto&& self, std::size_t u) -> void {
      mark[u] = Mark::Active;
      stack.push_back(u);
      for (std::size_t v = 0; v < n_ && !found; ++v) {
        if (!holds(u, v)) continue;
        if (mark[v] == Mark::Active) {
          auto it = stack.begin();
          while (*it != v) ++it;
          found.emplace(it, stack.end());
        } else if (mark[v] == Mark::Fresh) {
          self(self, v);
        }
      }
      stack.pop_back();
      mark[u] = Mark::Done;
    };
    for (std::size_t u = 0; u < n_ && !found; ++u)
      if (mark[u] == Mark::Fresh) visit(visit, u);
    return found;
  }

  bool strict_part_acyclic() const { return !strict_part().find_cycle().has_value(); }

  /// Restriction to `indices`, renumbered in the given order.
  Relation restricted(const std::vector<std::size_t>& indices) const {
    Relation r(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i)
      for (std::size_t j = 0; j < indices.size(); ++j) r.set(i, j, holds(indices[i], indices[j]));
    return r;
  }

  /// Equivalence classes of the symmetric part, each sorted, ordered by
  /// smallest member. Meaningful for preorders.
  std::vector<std::vector<std::size_t>> tie_classes() const {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool> seen(n_, false);
    for (std::size_t i = 0; i < n_; ++i) {
      if (seen[i]) continue;
      std::vector<std::size_t> cls{i};
      seen[i] = true;
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!seen[j] && holds(i, j) && holds(j, i)) {
          seen[j] = true;
          cls.push_back(j);
        }
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  /// Covering pairs of the strict part: a < b with no c such that a < c < b.
  /// Only tie-class representatives (smallest index) appear. Meaningful for
  /// preorders.
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const {
    std::vector<std::size_t> reps;
    for (const auto& cls : tie_classes()) reps.push_back(cls.front());
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a : reps)
      for (std::size_t b : reps) {
        if (!strictly(a, b)) continue;
        bool covered = true;
        for (std::size_t c : reps)
          if (strictly(a, c) && strictly(c, b)) {
            covered = false;
            break;
          }
        if (covered) out.emplace_back(a, b);
      }
    return out;
  }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> cells_;
};

}  // namespace pgrev

#endif  // PGREV_RELATION_HPP
