#ifndef PGREV_POSTULATES_HPP
#define PGREV_POSTULATES_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgrev/formula.hpp"
#include "pgrev/pgraph.hpp"
#include "pgrev/semantics.hpp"

namespace pgrev {

class WorldSetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Postulate { DP1, DP2, DP3, DP4, Rec, Ind, Faith, CB };

inline constexpr std::array<Postulate, 8> kAllPostulates = {Postulate::DP1, Postulate::DP2, Postulate::DP3,
                                                            Postulate::DP4, Postulate::Rec, Postulate::Ind,
                                                            Postulate::Faith, Postulate::CB};

inline std::string_view name(Postulate p) {
  switch (p) {
    case Postulate::DP1: return "DP-1";
    case Postulate::DP2: return "DP-2";
    case Postulate::DP3: return "DP-3";
    case Postulate::DP4: return "DP-4";
    case Postulate::Rec: return "Rec";
    case Postulate::Ind: return "Ind";
    case Postulate::Faith: return "Faith";
    case Postulate::CB: return "CB";
  }
  return "?";
}

/// Accepts "DP-1", "dp1", "rec", "Faith", ... (case and '-' insensitive).
inline std::optional<Postulate> postulate_from_name(std::string_view text) {
  std::string key;
  for (char c : text)
    if (c != '-' && c != '_') key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (Postulate p : kAllPostulates) {
    std::string candidate;
    for (char c : name(p))
      if (c != '-') candidate += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (candidate == key) return p;
  }
  return std::nullopt;
}

/// A falsifying world pair (indices into the shared world list). Faith
/// witnesses use first == second.
struct PostulateWitness {
  std::size_t first;
  std::size_t second;
  std::string reason;

  friend bool operator==(const PostulateWitness& a, const PostulateWitness& b) {
    return a.first == b.first && a.second == b.second;
  }
};

struct PostulateReport {
  Postulate postulate;
  bool holds = true;
  std::vector<PostulateWitness> witnesses;
};

namespace detail {

inline void require_same_worlds(const PreferenceModel& before, const PreferenceModel& after) {
  if (!same_worlds(before, after))
    throw WorldSetMismatch("models before and after revision have different worlds or valuations");
}

/// Sweeps all ordered world pairs in index order; `violates` returns a
/// reason string for a falsifying pair.
template <class Violates>
PostulateReport sweep_pairs(Postulate p, const PreferenceModel& before, const PreferenceModel& after,
                            Violates violates) {
  require_same_worlds(before, after);
  PostulateReport r{p, true, {}};
  for (std::size_t a = 0; a < before.size(); ++a)
    for (std::size_t b = 0; b < before.size(); ++b)
      if (std::optional<std::string> why = violates(a, b)) r.witnesses.push_back({a, b, std::move(*why)});
  r.holds = r.witnesses.empty();
  return r;
}

inline std::string iff_reason(bool before, bool after) {
  return std::string("w <= w' is ") + (before ? "true" : "false") + " before but " + (after ? "true" : "false") +
         " after";
}

}  // namespace detail

/// DP-1: order among f-worlds unchanged.
inline PostulateReport check_dp1(const PreferenceModel& m, const Formula& f, const PreferenceModel& m2) {
  return detail::sweep_pairs(Postulate::DP1, m, m2, [&](std::size_t a, std::size_t b) -> std::optional<std::string> {
    if (m.satisfies(a, f) && m.satisfies(b, f) && m.leq(a, b) != m2.leq(a, b))
      return detail::iff_reason(m.leq(a, b), m2.leq(a, b));
    return std::nullopt;
  });
}

/// DP-2: order among non-f-worlds unchanged.
inline PostulateReport check_dp2(const PreferenceModel& m, const Formula& f, const PreferenceModel& m2) {
  return detail::sweep_pairs(Postulate::DP2, m, m2, [&](std::size_t a, std::size_t b) -> std::optional<std::string> {
    if (!m.satisfies(a, f) && !m.satisfies(b, f) && m.leq(a, b) != m2.leq(a, b))
      return detail::iff_reason(m.leq(a, b), m2.leq(a, b));
    return std::nullopt;
  });
}

/// DP-3: f-world strictly below non-f-world stays strictly below.
inline PostulateReport check_dp3(const PreferenceModel& m, const Formula& f, const PreferenceModel& m2) {
  return detail::sweep_pairs(Postulate::DP3, m, m2, [&](std::size_t a, std::size_t b) -> std::optional<std::string> {
    if (m.satisfies(a, f) && !m.satisfies(b, f) && m.less(a, b) && !m2.less(a, b))
      return "w < w' before but not after";
    return std::nullopt;
  });
}

/// DP-4: f-world weakly below non-f-world stays weakly below.
inline PostulateReport check_dp4(const PreferenceModel& m, const Formula& f, const PreferenceModel& m2) {
  return detail::sweep_pairs(Postulate::DP4, m, m2, [&](std::size_t a, std::size_t b) -> std::optional<std::string> {
    if (m.satisfies(a, f) && !m.satisfies(b, f) && m.leq(a, b) && !m2.leq(a, b))
      return "w <= w' before but not after";
    return std::nullopt;
  });
}

/// Rec: every f-world strictly below every non-f-world afterwards.
inline PostulateReport check_rec(const PreferenceModel& m, const Formula& f, const PreferenceModel& m2) {
  return detail::sweep_pairs(Postulate::Rec, m, m2, [&](std::size_t a, std::size_t b) -> std::optional<std::string> {
    if (m.satisfies(a, f) && !m.satisfies(b, f) && !m2.less(a, b)) return "f-world not strictly below non-f-world";
    return std::nullopt;
  });
}

/// Ind: f-world weakly below non-f-world becomes strictly below.
inline PostulateReport check_ind(const PreferenceModel& m, const Formula& f, const PreferenceModel& m2) {
  return detail::sweep_pairs(Postulate::Ind, m, m2, [&](std::size_t a, std::size_t b) -> std::optional<std::string> {
    if (m.satisfies(a, f) && !m.satisfies(b, f) && m.leq(a, b) && !m2.less(a, b))
      return "w <= w' before but not w < w' after";
    return std::nullopt;
  });
}

/// Faith: when f is satisfiable, the minimal f-worlds before are exactly the
/// minimal worlds after. Witnesses are single worlds (first == second).
inline PostulateReport check_faith(const PreferenceModel& m, const Formula& f, const PreferenceModel& m2) {
  detail::require_same_worlds(m, m2);
  PostulateReport r{Postulate::Faith, true, {}};
  if (m.satisfying(f).empty()) return r;
  const auto before = min_worlds(m, f);
  const auto after = min_worlds(m2, Formula::top());
  for (std::size_t w = 0; w < m.size(); ++w) {
    const bool in_before = std::binary_search(before.begin(), before.end(), w);
    const bool in_after = std::binary_search(after.begin(), after.end(), w);
    if (in_before && !in_after) r.witnesses.push_back({w, w, "minimal f-world before, not minimal after"});
    if (!in_before && in_after) r.witnesses.push_back({w, w, "minimal after, not a minimal f-world before"});
  }
  r.holds = r.witnesses.empty();
  return r;
}

/// CB: order among worlds outside Min(f) unchanged.
inline PostulateReport check_cb(const PreferenceModel& m, const Formula& f, const PreferenceModel& m2) {
  detail::require_same_worlds(m, m2);
  std::vector<bool> in_min(m.size(), false);
  for (std::size_t w : min_worlds(m, f)) in_min[w] = true;
  return detail::sweep_pairs(Postulate::CB, m, m2, [&](std::size_t a, std::size_t b) -> std::optional<std::string> {
    if (!in_min[a] && !in_min[b] && m.leq(a, b) != m2.leq(a, b))
      return detail::iff_reason(m.leq(a, b), m2.leq(a, b));
    return std::nullopt;
  });
}

inline PostulateReport check(Postulate p, const PreferenceModel& m, const Formula& f, const PreferenceModel& m2) {
  switch (p) {
    case Postulate::DP1: return check_dp1(m, f, m2);
    case Postulate::DP2: return check_dp2(m, f, m2);
    case Postulate::DP3: return check_dp3(m, f, m2);
    case Postulate::DP4: return check_dp4(m, f, m2);
    case Postulate::Rec: return check_rec(m, f, m2);
    case Postulate::Ind: return check_ind(m, f, m2);
    case Postulate::Faith: return check_faith(m, f, m2);
    case Postulate::CB: return check_cb(m, f, m2);
  }
  throw std::invalid_argument("unknown postulate");
}

// ---------------------------------------------------------------------------
// Syntactic sufficient conditions over (G, f, G†).

enum class Condition { P1, P2, P3, P4, Rec, Ind };

inline constexpr std::array<Condition, 6> kAllConditions = {Condition::P1, Condition::P2,  Condition::P3,
                                                            Condition::P4, Condition::Rec, Condition::Ind};

inline std::string_view name(Condition c) {
  switch (c) {
    case Condition::P1: return "cond-DP-1";
    case Condition::P2: return "cond-DP-2";
    case Condition::P3: return "cond-DP-3";
    case Condition::P4: return "cond-DP-4";
    case Condition::Rec: return "cond-Rec";
    case Condition::Ind: return "cond-Ind";
  }
  return "?";
}

/// Postulate a condition is sufficient for.
inline Postulate guarded_postulate(Condition c) {
  switch (c) {
    case Condition::P1: return Postulate::DP1;
    case Condition::P2: return Postulate::DP2;
    case Condition::P3: return Postulate::DP3;
    case Condition::P4: return Postulate::DP4;
    case Condition::Rec: return Postulate::Rec;
    case Condition::Ind: return Postulate::Ind;
  }
  throw std::invalid_argument("unknown condition");
}

/// A node at which a universally quantified clause fails. `revised` tells
/// whether `node` indexes the revised graph; npos means the failing clause
/// is existential over the whole graph.
struct ConditionWitness {
  std::string clause;
  std::size_t node;
  bool revised;
};

struct ConditionReport {
  Condition condition;
  bool holds = true;
  std::vector<ConditionWitness> witnesses;
};

namespace detail {

/// Node extensions of a (G, f, G†) triple, precomputed once.
struct ConditionContext {
  const PGraph& g;
  const PGraph& h;
  std::vector<Extension> ext_g;
  std::vector<Extension> ext_h;
  Extension phi;
  Extension not_phi;

  ConditionContext(const PGraph& before, const Formula& f, const PGraph& after, const Signature& sig)
      : g(before), h(after) {
    if (!(before.signature() == sig) || !(after.signature() == sig))
      throw GraphError("graphs and condition signature differ");
    require_valid(before);
    require_valid(after);
    for (const auto& n : before.nodes()) ext_g.emplace_back(n.label, sig);
    for (const auto& n : after.nodes()) ext_h.emplace_back(n.label, sig);
    phi = Extension(f, sig);
    not_phi = ~phi;
  }

  /// ctx ∧ a ≡ ctx ∧ b
  static bool same_within(const Extension& ctx, const Extension& a, const Extension& b) {
    return (ctx & a) == (ctx & b);
  }
  /// ctx ∧ a ⊢ b
  static bool entails_within(const Extension& ctx, const Extension& a, const Extension& b) {
    return (ctx & a).subset_of(b);
  }
};

template <class Pred>
bool exists(std::size_t n, Pred p) {
  for (std::size_t i = 0; i < n; ++i)
    if (p(i)) return true;
  return false;
}

/// Records a witness for every i in [0, n) failing `p`.
template <class Pred>
void for_all(std::size_t n, Pred p, ConditionReport& r, const char* clause, bool revised) {
  for (std::size_t i = 0; i < n; ++i)
    if (!p(i)) r.witnesses.push_back({clause, i, revised});
}

inline ConditionReport finish(ConditionReport r) {
  r.holds = r.witnesses.empty();
  return r;
}

}  // namespace detail

inline ConditionReport cond_p1(const PGraph& g, const Formula& f, const PGraph& h, const Signature& sig) {
  detail::ConditionContext c(g, f, h, sig);
  using detail::exists;
  const auto& P = c.phi;
  const std::size_t ng = g.size(), nh = h.size();
  ConditionReport r{Condition::P1, true, {}};
  detail::for_all(ng, [&](std::size_t xi) {
    return exists(nh, [&](std::size_t xi2) {
      if (!c.same_within(P, c.ext_g[xi], c.ext_h[xi2])) return false;
      for (std::size_t psi2 = 0; psi2 < nh; ++psi2) {
        if (!h.precedes(psi2, xi2) || c.ext_h[psi2] == P) continue;
        if (!exists(ng, [&](std::size_t psi) {
              return c.same_within(P, c.ext_g[psi], c.ext_h[psi2]) && g.precedes(psi, xi);
            }))
          return false;
      }
      return true;
    });
  }, r, "1", false);
  detail::for_all(nh, [&](std::size_t xi) {
    if (c.ext_h[xi] == P) return true;
    return exists(ng, [&](std::size_t xi2) {
      if (!c.same_within(P, c.ext_h[xi], c.ext_g[xi2])) return false;
      for (std::size_t psi2 = 0; psi2 < ng; ++psi2) {
        if (!g.precedes(psi2, xi2)) continue;
        if (!exists(nh, [&](std::size_t psi) {
              return c.same_within(P, c.ext_h[psi], c.ext_g[psi2]) && h.precedes(psi, xi);
            }))
          return false;
      }
      return true;
    });
  }, r, "2", true);
  return detail::finish(std::move(r));
}

inline ConditionReport cond_p2(const PGraph& g, const Formula& f, const PGraph& h, const Signature& sig) {
  detail::ConditionContext c(g, f, h, sig);
  using detail::exists;
  const auto& N = c.not_phi;
  const std::size_t ng = g.size(), nh = h.size();
  ConditionReport r{Condition::P2, true, {}};
  detail::for_all(ng, [&](std::size_t xi) {
    return exists(nh, [&](std::size_t xi2) {
      if (!c.same_within(N, c.ext_g[xi], c.ext_h[xi2])) return false;
      for (std::size_t psi = 0; psi < ng; ++psi) {
        if (!g.precedes(psi, xi)) continue;
        if (!exists(nh, [&](std::size_t psi2) {
              return c.same_within(N, c.ext_g[psi], c.ext_h[psi2]) && h.precedes(psi2, xi2);
            }))
          return false;
      }
      return true;
    });
  }, r, "1", false);
  detail::for_all(nh, [&](std::size_t xi) {
    if (c.ext_h[xi] == c.phi) return true;
    return exists(ng, [&](std::size_t xi2) {
      if (!c.same_within(N, c.ext_h[xi], c.ext_g[xi2])) return false;
      for (std::size_t psi = 0; psi < nh; ++psi) {
        if (!h.precedes(psi, xi) || c.ext_h[psi] == c.phi) continue;
        if (!exists(ng, [&](std::size_t psi2) {
              return c.same_within(N, c.ext_h[psi], c.ext_g[psi2]) && g.precedes(psi2, xi2);
            }))
          return false;
      }
      return true;
    });
  }, r, "2", true);
  return detail::finish(std::move(r));
}

/// Read as "for all ξ in G there is some ξ' in G†".
inline ConditionReport cond_p3(const PGraph& g, const Formula& f, const PGraph& h, const Signature& sig) {
  detail::ConditionContext c(g, f, h, sig);
  using detail::exists;
  const auto &P = c.phi, &N = c.not_phi;
  const std::size_t ng = g.size(), nh = h.size();
  ConditionReport r{Condition::P3, true, {}};
  detail::for_all(ng, [&](std::size_t xi) {
    return exists(nh, [&](std::size_t xi2) {
      if (!c.entails_within(P, c.ext_g[xi], c.ext_h[xi2])) return false;
      if (!c.entails_within(N, c.ext_h[xi2], c.ext_g[xi])) return false;
      for (std::size_t psi2 = 0; psi2 < nh; ++psi2) {
        if (!h.precedes(psi2, xi2) || c.ext_h[psi2] == P) continue;
        if (!exists(ng, [&](std::size_t psi) {
              return c.entails_within(P, c.ext_g[psi], c.ext_h[psi2]) &&
                     c.entails_within(N, c.ext_h[psi2], c.ext_g[psi]) && g.precedes(psi, xi);
            }))
          return false;
      }
      return true;
    });
  }, r, "1", false);
  return detail::finish(std::move(r));
}

/// Clause (c) compares two revised-graph nodes, so it uses the revised order.
inline ConditionReport cond_p4(const PGraph& g, const Formula& f, const PGraph& h, const Signature& sig) {
  detail::ConditionContext c(g, f, h, sig);
  using detail::exists;
  const auto &P = c.phi, &N = c.not_phi;
  const std::size_t ng = g.size(), nh = h.size();
  ConditionReport r{Condition::P4, true, {}};
  detail::for_all(nh, [&](std::size_t xi) {
    if (c.ext_h[xi] == P) return true;
    return exists(ng, [&](std::size_t xi2) {
      if (!c.entails_within(P, c.ext_g[xi2], c.ext_h[xi])) return false;
      if (!c.entails_within(N, c.ext_h[xi], c.ext_g[xi2])) return false;
      for (std::size_t psi2 = 0; psi2 < ng; ++psi2) {
        if (!g.precedes(psi2, xi2)) continue;
        if (!exists(nh, [&](std::size_t psi) {
              return c.entails_within(P, c.ext_g[psi2], c.ext_h[psi]) &&
                     c.entails_within(N, c.ext_h[psi], c.ext_g[psi2]) && h.precedes(psi, xi);
            }))
          return false;
      }
      return true;
    });
  }, r, "1", true);
  return detail::finish(std::move(r));
}

inline ConditionReport cond_rec(const PGraph& g, const Formula& f, const PGraph& h, const Signature& sig) {
  detail::ConditionContext c(g, f, h, sig);
  const auto& P = c.phi;
  const std::size_t ng = g.size(), nh = h.size();
  ConditionReport r{Condition::Rec, true, {}};
  detail::for_all(nh, [&](std::size_t xi) {
    const Extension& x = c.ext_h[xi];
    if (x.full() || x.empty() || x.subset_of(P)) return true;
    return detail::exists(nh, [&](std::size_t psi) {
      return h.precedes(psi, xi) && !c.ext_h[psi].empty() && c.ext_h[psi].subset_of(P);
    });
  }, r, "1", true);
  if (!detail::exists(ng, [&](std::size_t xi) { return c.ext_g[xi].subset_of(P); }))
    r.witnesses.push_back({"2", static_cast<std::size_t>(-1), false});
  return detail::finish(std::move(r));
}

/// Clause (c) uses the original order between original nodes; clause (d)
/// requires a revised-order predecessor equivalent to f.
inline ConditionReport cond_ind(const PGraph& g, const Formula& f, const PGraph& h, const Signature& sig) {
  detail::ConditionContext c(g, f, h, sig);
  using detail::exists;
  const auto &P = c.phi, &N = c.not_phi;
  const std::size_t ng = g.size(), nh = h.size();
  ConditionReport r{Condition::Ind, true, {}};
  detail::for_all(nh, [&](std::size_t xi2) {
    if (c.ext_h[xi2] == P) return true;
    const bool clause_d = c.ext_h[xi2].subset_of(P) ||
                          exists(nh, [&](std::size_t psi2) { return h.precedes(psi2, xi2) && c.ext_h[psi2] == P; });
    if (!clause_d) return false;
    return exists(ng, [&](std::size_t xi) {
      if (!c.entails_within(P, c.ext_g[xi], c.ext_h[xi2])) return false;
      if (!c.entails_within(N, c.ext_h[xi2], c.ext_g[xi])) return false;
      for (std::size_t psi2 = 0; psi2 < nh; ++psi2) {
        if (!h.precedes(psi2, xi2)) continue;
        if (!exists(ng, [&](std::size_t psi) {
              return c.entails_within(P, c.ext_g[psi], c.ext_h[psi2]) &&
                     c.entails_within(N, c.ext_h[psi2], c.ext_g[psi]) && g.precedes(psi, xi);
            }))
          return false;
      }
      return true;
    });
  }, r, "1", true);
  return detail::finish(std::move(r));
}

inline ConditionReport check_condition(Condition k, const PGraph& g, const Formula& f, const PGraph& h,
                                       const Signature& sig) {
  switch (k) {
    case Condition::P1: return cond_p1(g, f, h, sig);
    case Condition::P2: return cond_p2(g, f, h, sig);
    case Condition::P3: return cond_p3(g, f, h, sig);
    case Condition::P4: return cond_p4(g, f, h, sig);
    case Condition::Rec: return cond_rec(g, f, h, sig);
    case Condition::Ind: return cond_ind(g, f, h, sig);
  }
  throw std::invalid_argument("unknown condition");
}

}  // namespace pgrev

#endif  // PGREV_POSTULATES_HPP
