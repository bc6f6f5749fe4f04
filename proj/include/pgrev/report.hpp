#ifndef PGREV_REPORT_HPP
#define PGREV_REPORT_HPP

// JSON records for models, graphs and reports. Requires nlohmann/json
// (single header "json.hpp") on the include path.

#include <string>

#include "json.hpp"
#include "pgrev/harness.hpp"
#include "pgrev/io.hpp"
#include "pgrev/postulates.hpp"

namespace pgrev {

using json = nlohmann::json;

inline json to_json(const PreferenceModel& m) {
  const auto& sig = m.signature();
  json worlds = json::array();
  for (const auto& w : m.worlds()) worlds.push_back({{"id", w.id}, {"valuation", to_string(minterm(sig, w.valuation), sig)}});
  json strict = json::array();
  for (auto [a, b] : ordered_cover(m)) strict.push_back({m.world(a).id, m.world(b).id});
  json ties = json::array();
  for (const auto& cls : m.order().tie_classes()) {
    if (cls.size() < 2) continue;
    json c = json::array();
    for (std::size_t w : cls) c.push_back(m.world(w).id);
    ties.push_back(std::move(c));
  }
  return {{"atoms", sig.atoms()}, {"worlds", worlds}, {"strict", strict}, {"ties", ties}, {"order", order_text(m)}};
}

inline json to_json(const PGraph& g) {
  json nodes = json::array();
  for (const auto& n : g.nodes()) nodes.push_back({{"id", n.id}, {"label", to_string(n.label, g.signature())}});
  json edges = json::array();
  for (auto [a, b] : strict_order_cover(g.precedence())) edges.push_back({g.nodes()[a].id, g.nodes()[b].id});
  return {{"atoms", g.signature().atoms()}, {"nodes", nodes}, {"edges", edges}};
}

inline json to_json(const PostulateReport& r, const PreferenceModel& m) {
  json ws = json::array();
  for (const auto& w : r.witnesses)
    ws.push_back({{"first", m.world(w.first).id}, {"second", m.world(w.second).id}, {"reason", w.reason}});
  return {{"postulate", std::string(name(r.postulate))}, {"holds", r.holds}, {"witnesses", ws}};
}

inline json to_json(const ConditionReport& r, const PGraph& before, const PGraph& after) {
  json ws = json::array();
  for (const auto& w : r.witnesses) {
    json entry = {{"clause", w.clause}};
    if (w.node != static_cast<std::size_t>(-1)) {
      const PGraph& g = w.revised ? after : before;
      entry["node"] = g.nodes()[w.node].id;
      entry["graph"] = w.revised ? "after" : "before";
    }
    ws.push_back(std::move(entry));
  }
  return {{"condition", std::string(name(r.condition))}, {"holds", r.holds}, {"witnesses", ws}};
}

inline json to_json(const DemoReport& r) {
  json as = json::array();
  for (const auto& a : r.assertions) as.push_back({{"text", a.text}, {"holds", a.holds}});
  json counts = json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  return {{"demo", r.id}, {"verdict", r.verdict()}, {"steps", r.steps}, {"assertions", as}, {"counts", counts}};
}

/// Numbered plain-text rendering of a demo report.
inline std::string render(const DemoReport& r) {
  std::string out = "demo " + r.id + "\n";
  for (const auto& s : r.steps) out += "  " + s + "\n";
  for (const auto& [k, v] : r.counts) out += "  " + k + ": " + std::to_string(v) + "\n";
  for (std::size_t i = 0; i < r.assertions.size(); ++i)
    out += "  " + std::to_string(i + 1) + ". [" + (r.assertions[i].holds ? "ok" : "FAILED") + "] " +
           r.assertions[i].text + "\n";
  out += std::string("verdict: ") + (r.verdict() ? "true" : "false") + "\n";
  return out;
}

inline std::string render(const PostulateReport& r, const PreferenceModel& m) {
  std::string out = std::string(name(r.postulate)) + ": " + (r.holds ? "holds" : "violated") + "\n";
  for (const auto& w : r.witnesses) {
    out += "  (" + m.world(w.first).id;
    if (w.second != w.first) out += ", " + m.world(w.second).id;
    out += ") " + w.reason + "\n";
  }
  return out;
}

inline std::string render(const ConditionReport& r, const PGraph& before, const PGraph& after) {
  std::string out = std::string(name(r.condition)) + ": " + (r.holds ? "met" : "not met") + "\n";
  for (const auto& w : r.witnesses) {
    out += "  clause " + w.clause;
    if (w.node != static_cast<std::size_t>(-1))
      out += " fails at " + std::string(w.revised ? "revised" : "original") + " node " +
             (w.revised ? after : before).nodes()[w.node].id;
    else
      out += " has no satisfying node";
    out += "\n";
  }
  return out;
}

}  // namespace pgrev

#endif  // PGREV_REPORT_HPP
