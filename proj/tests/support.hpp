#ifndef PGREV_TESTS_SUPPORT_HPP
#define PGREV_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "oracle.hpp"
#include "pgrev/harness.hpp"

namespace support {

inline oracle::Matrix matrix(const pgrev::Relation& r) {
  oracle::Matrix m = oracle::square(r.size());
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b) m[a][b] = r.holds(a, b);
  return m;
}

inline std::vector<bool> extension(const pgrev::PreferenceModel& m, const pgrev::Formula& f) {
  std::vector<bool> out;
  for (const auto& w : m.worlds()) out.push_back(pgrev::eval(f, w.valuation));
  return out;
}

/// Oracle induced order of g over `worlds`.
inline oracle::Matrix oracle_induced(const pgrev::PGraph& g, const std::vector<pgrev::World>& worlds) {
  oracle::Sat sat;
  for (const auto& w : worlds) {
    std::vector<bool> row;
    for (std::size_t i = 0; i < g.size(); ++i) row.push_back(pgrev::eval(g.label(i), w.valuation));
    sat.push_back(row);
  }
  oracle::Matrix prec = oracle::square(g.size());
  for (auto [a, b] : g.edges()) prec[a][b] = true;
  return oracle::induced(sat, oracle::close(prec));
}

inline pgrev::Formula f(const std::string& text) { return pgrev::parse(text, pgrev::two_atoms()); }

inline std::string order(const pgrev::PreferenceModel& m) { return pgrev::order_text(m); }

inline std::vector<std::string> ids(const pgrev::PreferenceModel& m, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(m.world(i).id);
  return out;
}

/// Models used by the exhaustive suites: every preorder over every three
/// canonical {p,q}-worlds, plus the 4-world chain.
inline std::vector<pgrev::PreferenceModel> fixture_models() {
  auto models = pgrev::all_preorder_models(pgrev::two_atoms(), 3);
  models.push_back(pgrev::chain_model());
  return models;
}

}  // namespace support

#endif  // PGREV_TESTS_SUPPORT_HPP
