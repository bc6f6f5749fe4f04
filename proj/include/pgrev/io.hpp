#ifndef PGREV_IO_HPP
#define PGREV_IO_HPP

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgrev/formula.hpp"
#include "pgrev/pgraph.hpp"
#include "pgrev/semantics.hpp"

// Text formats.
//
// Graph file:                       Model file:
//   atoms: p q                        atoms: p q
//   node a: p                         world w1: p & ~q
//   node b: q                         world w2: ~p & q
//   a < b                             w1 <= w2
//
// '#' starts a comment. Graph edges read "left strictly preferred to
// right"; model order lines list pairs of the preorder, whose reflexive
// transitive closure is taken.

namespace pgrev {

class FileError : public std::runtime_error {
 public:
  FileError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class FileKind { Graph, Model };

namespace detail {

struct Line {
  std::size_t number;
  std::string text;
};

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++number;
    std::string_view raw = text.substr(pos, nl - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
    pos = nl + 1;
  }
  return out;
}

inline bool starts_with_word(const std::string& s, std::string_view word) {
  return s.size() > word.size() && s.compare(0, word.size(), word) == 0 &&
         (s[word.size()] == ' ' || s[word.size()] == '\t');
}

inline Signature read_atoms(const std::vector<Line>& lines) {
  if (lines.empty()) throw FileError(1, "missing 'atoms:' header");
  const Line& first = lines.front();
  if (first.text.rfind("atoms:", 0) != 0) throw FileError(first.number, "expected 'atoms:' header");
  std::istringstream in(first.text.substr(6));
  std::vector<std::string> atoms;
  for (std::string a; in >> a;) atoms.push_back(a);
  try {
    return Signature(std::move(atoms));
  } catch (const std::exception& e) {
    throw FileError(first.number, e.what());
  }
}

/// "<keyword> <id>: <formula>" -> (id, formula text)
inline std::pair<std::string, std::string> split_declaration(const Line& line, std::string_view keyword) {
  const std::string rest = trim(std::string_view(line.text).substr(keyword.size()));
  const auto colon = rest.find(':');
  if (colon == std::string::npos) throw FileError(line.number, "expected '" + std::string(keyword) + " <id>: <formula>'");
  std::string id = trim(std::string_view(rest).substr(0, colon));
  if (!is_identifier(id)) throw FileError(line.number, "invalid identifier '" + id + "'");
  return {std::move(id), trim(std::string_view(rest).substr(colon + 1))};
}

/// "<id> <op> <id>" -> (left, right), or nullopt-like failure via throw.
inline std::pair<std::string, std::string> split_relation(const Line& line, std::string_view op) {
  const auto at = line.text.find(op);
  if (at == std::string::npos) throw FileError(line.number, "malformed line '" + line.text + "'");
  std::string left = trim(std::string_view(line.text).substr(0, at));
  std::string right = trim(std::string_view(line.text).substr(at + op.size()));
  if (!is_identifier(left) || !is_identifier(right))
    throw FileError(line.number, "malformed order line '" + line.text + "'; expected '<id> " + std::string(op) + " <id>'");
  return {std::move(left), std::move(right)};
}

inline Formula parse_at(const Line& line, const std::string& text, const Signature& sig) {
  try {
    return parse(text, sig);
  } catch (const ParseError& e) {
    throw FileError(line.number, e.what());
  }
}

/// Valuation described by a conjunction of literals mentioning every atom
/// exactly once.
inline Valuation literal_conjunction(const Line& line, const Formula& f, const Signature& sig) {
  std::vector<Formula> conjuncts;
  std::vector<const Formula*> todo{&f};
  while (!todo.empty()) {
    const Formula* cur = todo.back();
    todo.pop_back();
    if (cur->kind() == Formula::Kind::And) {
      todo.push_back(&cur->rhs());
      todo.push_back(&cur->lhs());
    } else {
      conjuncts.push_back(*cur);
    }
  }
  Valuation v;
  std::vector<bool> seen(sig.size(), false);
  for (const auto& c : conjuncts) {
    const bool positive = c.kind() == Formula::Kind::Atom;
    const bool negative = c.kind() == Formula::Kind::Not && c.lhs().kind() == Formula::Kind::Atom;
    if (!positive && !negative) throw FileError(line.number, "world description must be a conjunction of literals");
    const std::size_t a = positive ? c.atom_index() : c.lhs().atom_index();
    if (seen[a]) throw FileError(line.number, "atom '" + sig.name(a) + "' assigned twice");
    seen[a] = true;
    v.set(a, positive);
  }
  for (std::size_t a = 0; a < sig.size(); ++a)
    if (!seen[a]) throw FileError(line.number, "atom '" + sig.name(a) + "' not assigned");
  return v;
}

}  // namespace detail

inline FileKind detect_kind(std::string_view text) {
  for (const auto& l : detail::content_lines(text)) {
    if (detail::starts_with_word(l.text, "world")) return FileKind::Model;
    if (detail::starts_with_word(l.text, "node")) return FileKind::Graph;
  }
  return FileKind::Graph;
}

inline PGraph parse_graph_file(std::string_view text) {
  const auto lines = detail::content_lines(text);
  const Signature sig = detail::read_atoms(lines);
  std::vector<GraphNode> nodes;
  std::vector<Edge> edges;
  auto node_index = [&](const detail::Line& line, const std::string& id) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].id == id) return i;
    throw FileError(line.number, "unknown node '" + id + "'");
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (detail::starts_with_word(line.text, "node")) {
      auto [id, body] = detail::split_declaration(line, "node");
      for (const auto& n : nodes)
        if (n.id == id) throw FileError(line.number, "duplicate node '" + id + "'");
      nodes.push_back({id, detail::parse_at(line, body, sig)});
    } else {
      auto [a, b] = detail::split_relation(line, "<");
      edges.emplace_back(node_index(line, a), node_index(line, b));
    }
  }
  PGraph g(sig, std::move(nodes), std::move(edges));
  if (auto v = validate(g); !v.valid) throw FileError(lines.back().number, v.message);
  return g;
}

inline PreferenceModel parse_model_file(std::string_view text) {
  const auto lines = detail::content_lines(text);
  const Signature sig = detail::read_atoms(lines);
  std::vector<World> worlds;
  std::vector<Edge> pairs;
  auto world_index = [&](const detail::Line& line, const std::string& id) {
    for (std::size_t i = 0; i < worlds.size(); ++i)
      if (worlds[i].id == id) return i;
    throw FileError(line.number, "unknown world '" + id + "'");
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (detail::starts_with_word(line.text, "world")) {
      auto [id, body] = detail::split_declaration(line, "world");
      for (const auto& w : worlds)
        if (w.id == id) throw FileError(line.number, "duplicate world '" + id + "'");
      const Formula f = detail::parse_at(line, body, sig);
      worlds.push_back({id, detail::literal_conjunction(line, f, sig)});
    } else {
      auto [a, b] = detail::split_relation(line, "<=");
      pairs.emplace_back(world_index(line, a), world_index(line, b));
    }
  }
  if (worlds.empty()) throw FileError(lines.back().number, "model has no worlds");
  Relation leq = Relation::from_pairs(worlds.size(), pairs).reflexive_transitive_closure();
  return PreferenceModel(sig, std::move(worlds), std::move(leq));
}

// ---------------------------------------------------------------------------
// Dumps

/// Covering pairs of a strict partial order (its transitive reduction).
inline std::vector<Edge> strict_order_cover(const Relation& prec) {
  std::vector<Edge> out;
  const std::size_t n = prec.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!prec.holds(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c) covered = !(prec.holds(a, c) && prec.holds(c, b));
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

/// Covering pairs of a model's strict part, most preferred first: sorted by
/// how many worlds lie strictly below each endpoint, so chains read in order.
inline std::vector<Edge> ordered_cover(const PreferenceModel& m) {
  auto depth = [&](std::size_t w) {
    std::size_t d = 0;
    for (std::size_t u = 0; u < m.size(); ++u) d += m.less(u, w);
    return d;
  };
  auto pairs = m.order().covering_pairs();
  std::stable_sort(pairs.begin(), pairs.end(), [&](const Edge& x, const Edge& y) {
    return std::pair(depth(x.first), depth(x.second)) < std::pair(depth(y.first), depth(y.second));
  });
  return pairs;
}

inline std::string atoms_line(const Signature& sig) {
  std::string s = "atoms:";
  for (const auto& a : sig.atoms()) s += " " + a;
  return s;
}

inline std::string dump_graph(const PGraph& g) {
  std::string out = atoms_line(g.signature()) + "\n";
  for (const auto& n : g.nodes()) out += "node " + n.id + ": " + to_string(n.label, g.signature()) + "\n";
  for (auto [a, b] : strict_order_cover(g.precedence())) out += g.nodes()[a].id + " < " + g.nodes()[b].id + "\n";
  return out;
}

/// Parseable model dump: worlds, covering pairs of the strict part between
/// tie-class representatives, then each tie class as a cycle of `<=` lines.
inline std::string dump_model(const PreferenceModel& m) {
  const auto& sig = m.signature();
  std::string out = atoms_line(sig) + "\n";
  for (const auto& w : m.worlds()) out += "world " + w.id + ": " + to_string(minterm(sig, w.valuation), sig) + "\n";
  for (auto [a, b] : ordered_cover(m)) out += m.world(a).id + " <= " + m.world(b).id + "\n";
  for (const auto& cls : m.order().tie_classes()) {
    if (cls.size() < 2) continue;
    std::string names;
    for (std::size_t w : cls) names += " " + m.world(w).id;
    out += "# tie:" + names + "\n";
    for (std::size_t i = 0; i < cls.size(); ++i)
      out += m.world(cls[i]).id + " <= " + m.world(cls[(i + 1) % cls.size()]).id + "\n";
  }
  return out;
}

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

/// Graphviz rendering: covering edges of the strict part point from more
/// to less preferred; ties are dashed and undirected.
inline std::string to_dot(const PreferenceModel& m) {
  using detail::dot_quote;
  const auto& sig = m.signature();
  std::string out = "digraph model {\n  rankdir=TB;\n";
  for (const auto& w : m.worlds())
    out += "  " + dot_quote(w.id) + " [label=" + dot_quote(w.id + "\\n" + to_string(minterm(sig, w.valuation), sig)) +
           "];\n";
  for (auto [a, b] : ordered_cover(m))
    out += "  " + dot_quote(m.world(a).id) + " -> " + dot_quote(m.world(b).id) + ";\n";
  for (const auto& cls : m.order().tie_classes())
    for (std::size_t i = 1; i < cls.size(); ++i)
      out += "  " + dot_quote(m.world(cls[0]).id) + " -> " + dot_quote(m.world(cls[i]).id) +
             " [dir=none, style=dashed];\n";
  return out + "}\n";
}

inline std::string to_dot(const PGraph& g) {
  using detail::dot_quote;
  std::string out = "digraph pgraph {\n  rankdir=TB;\n";
  for (const auto& n : g.nodes())
    out += "  " + dot_quote(n.id) + " [label=" + dot_quote(to_string(n.label, g.signature())) + "];\n";
  for (auto [a, b] : strict_order_cover(g.precedence()))
    out += "  " + dot_quote(g.nodes()[a].id) + " -> " + dot_quote(g.nodes()[b].id) + ";\n";
  return out + "}\n";
}

}  // namespace pgrev

#endif  // PGREV_IO_HPP
