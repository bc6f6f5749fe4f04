#include <gtest/gtest.h>

#include "support.hpp"

using namespace pgrev;
using support::f;

namespace {

const Signature sig = two_atoms();

PGraph p_over_q() { return PGraph::chain(sig, {f("p"), f("q")}); }

PreferenceModel reversed_chain() {
  return PreferenceModel(sig, canonical_worlds(sig), chain_relation(4, {3, 2, 1, 0}));
}

using OracleCheck = bool (*)(const oracle::Matrix&, const std::vector<bool>&, const oracle::Matrix&);

OracleCheck oracle_for(Postulate p) {
  switch (p) {
    case Postulate::DP1: return oracle::dp1;
    case Postulate::DP2: return oracle::dp2;
    case Postulate::DP3: return oracle::dp3;
    case Postulate::DP4: return oracle::dp4;
    case Postulate::Rec: return oracle::rec;
    case Postulate::Ind: return oracle::ind;
    case Postulate::Faith: return oracle::faith;
    case Postulate::CB: return oracle::cb;
  }
  return nullptr;
}

/// Does the single witness falsify the definition on its own?
bool witness_falsifies(Postulate p, const PreferenceModel& m, const Formula& phi, const PreferenceModel& r,
                       const PostulateWitness& w) {
  const std::size_t a = w.first, b = w.second;
  const bool fa = m.satisfies(a, phi), fb = m.satisfies(b, phi);
  const auto mins = min_worlds(m, phi);
  auto in_min = [&](std::size_t x) { return std::find(mins.begin(), mins.end(), x) != mins.end(); };
  switch (p) {
    case Postulate::DP1: return fa && fb && m.leq(a, b) != r.leq(a, b);
    case Postulate::DP2: return !fa && !fb && m.leq(a, b) != r.leq(a, b);
    case Postulate::DP3: return fa && !fb && m.less(a, b) && !r.less(a, b);
    case Postulate::DP4: return fa && !fb && m.leq(a, b) && !r.leq(a, b);
    case Postulate::Rec: return fa && !fb && !r.less(a, b);
    case Postulate::Ind: return fa && !fb && m.leq(a, b) && !r.less(a, b);
    case Postulate::Faith: {
      const auto top = min_worlds(r, Formula::top());
      const bool in_top = std::find(top.begin(), top.end(), a) != top.end();
      return in_min(a) != in_top;
    }
    case Postulate::CB: return !in_min(a) && !in_min(b) && m.leq(a, b) != r.leq(a, b);
  }
  return false;
}

}  // namespace

TEST(Names, RoundTrip) {
  for (Postulate p : kAllPostulates) EXPECT_EQ(postulate_from_name(name(p)), p);
  EXPECT_EQ(postulate_from_name("dp1"), Postulate::DP1);
  EXPECT_EQ(postulate_from_name("faith"), Postulate::Faith);
  EXPECT_FALSE(postulate_from_name("DP-9"));
  EXPECT_EQ(guarded_postulate(Condition::P3), Postulate::DP3);
  EXPECT_EQ(guarded_postulate(Condition::Ind), Postulate::Ind);
}

TEST(CheckDp1, Examples) {
  const auto m = chain_model();
  EXPECT_TRUE(check_dp1(m, f("~p"), lex_revise(m, f("~p")).model).holds);
  const auto rep = check_dp1(m, Formula::top(), reversed_chain());
  ASSERT_FALSE(rep.holds);
  EXPECT_EQ(m.world(rep.witnesses.front().first).id, "w_pq");
  EXPECT_EQ(m.world(rep.witnesses.front().second).id, "w_p");
  EXPECT_TRUE(check_dp1(m, f("q"), m).holds);
}

TEST(CheckDp234, Examples) {
  const auto m = chain_model();
  const auto lex = lex_revise(m, f("~p")).model;
  EXPECT_TRUE(check_dp2(m, f("~p"), lex).holds);
  EXPECT_TRUE(check_dp3(m, f("~p"), lex).holds);
  EXPECT_TRUE(check_dp4(m, f("~p"), lex).holds);
  const auto nat = natural_revise(m, f("~p")).model;
  EXPECT_EQ(support::order(nat), "w_q < w_pq < w_p < w_0");
  EXPECT_TRUE(check_dp3(m, f("~p"), nat).holds);
  EXPECT_TRUE(check_dp4(m, Formula::bottom(), m).holds);
}

TEST(CheckRec, Examples) {
  const auto m = chain_model();
  EXPECT_TRUE(check_rec(m, f("~p"), lex_revise(m, f("~p")).model).holds);
  const auto rep = check_rec(m, f("~p"), natural_revise(m, f("~p")).model);
  ASSERT_FALSE(rep.holds);
  EXPECT_EQ(m.world(rep.witnesses.front().first).id, "w_0");
  EXPECT_EQ(m.world(rep.witnesses.front().second).id, "w_pq");
  EXPECT_TRUE(check_rec(m, Formula::top(), reversed_chain()).holds);
}

TEST(CheckInd, Examples) {
  const auto m = chain_model();
  EXPECT_TRUE(check_ind(m, f("~p"), lex_revise(m, f("~p")).model).holds);
  // In the chain every ~p-world sits below no p-world, so the antecedent
  // never fires and the null result passes.
  EXPECT_TRUE(check_ind(m, f("~p"), null_change(m, f("~p")).model).holds);
  const auto flat = flat_model(sig, canonical_worlds(sig));
  const auto rep = check_ind(flat, f("~p"), null_change(flat, f("~p")).model);
  ASSERT_FALSE(rep.holds);
  EXPECT_EQ(flat.world(rep.witnesses.front().first).id, "w_q");
  EXPECT_EQ(flat.world(rep.witnesses.front().second).id, "w_pq");
  EXPECT_TRUE(check_ind(m, Formula::bottom(), reversed_chain()).holds);
}

TEST(CheckFaith, Examples) {
  const auto m = chain_model();
  EXPECT_TRUE(check_faith(m, f("~p"), natural_revise(m, f("~p")).model).holds);
  EXPECT_TRUE(check_faith(m, f("~p"), lex_revise(m, f("~p")).model).holds);
  EXPECT_TRUE(check_faith(m, Formula::bottom(), reversed_chain()).holds);
  const auto rep = check_faith(m, f("~p"), m);
  ASSERT_FALSE(rep.holds);
  EXPECT_EQ(rep.witnesses.front().first, rep.witnesses.front().second);
}

TEST(CheckCb, Examples) {
  const auto m = chain_model();
  EXPECT_TRUE(check_cb(m, f("p"), natural_revise(m, f("p")).model).holds);
  const auto rep = check_cb(m, f("~p"), lex_revise(m, f("~p")).model);
  ASSERT_FALSE(rep.holds);
  EXPECT_EQ(m.world(rep.witnesses.front().first).id, "w_pq");
  EXPECT_EQ(m.world(rep.witnesses.front().second).id, "w_0");
  EXPECT_TRUE(check_cb(m, f("q"), m).holds);
}

TEST(Check, MismatchedWorldsRejected) {
  const auto m = chain_model();
  const auto smaller = induce_model(p_over_q(), {m.world(0), m.world(1)});
  for (Postulate p : kAllPostulates) EXPECT_THROW(check(p, m, f("p"), smaller), WorldSetMismatch);
}

// Checkers agree with the oracle on every fixture, operator and truth table,
// and every witness of a failing report falsifies the definition by itself.
TEST(Check, AgreeWithOracleAndWitnessesReverify) {
  const auto formulas = all_truth_tables(sig);
  for (const auto& m : support::fixture_models())
    for (const auto& phi : formulas)
      for (const auto& r : {lex_revise(m, phi).model, natural_revise(m, phi).model, m, reversed_chain()}) {
        if (!same_worlds(m, r)) continue;
        const auto leq = support::matrix(m.order());
        const auto out = support::matrix(r.order());
        const auto in = support::extension(m, phi);
        for (Postulate p : kAllPostulates) {
          const auto rep = check(p, m, phi, r);
          ASSERT_EQ(rep.holds, oracle_for(p)(leq, in, out)) << name(p);
          EXPECT_EQ(rep.holds, rep.witnesses.empty());
          for (const auto& w : rep.witnesses) EXPECT_TRUE(witness_falsifies(p, m, phi, r, w)) << name(p);
          for (std::size_t i = 1; i < rep.witnesses.size(); ++i)
            EXPECT_LT(std::pair(rep.witnesses[i - 1].first, rep.witnesses[i - 1].second),
                      std::pair(rep.witnesses[i].first, rep.witnesses[i].second));
        }
      }
}

TEST(CondP1, Examples) {
  const PGraph g = p_over_q();
  EXPECT_TRUE(cond_p1(g, f("~p"), prefix(g, f("~p")), sig).holds);
  EXPECT_TRUE(cond_p1(g, f("q"), g, sig).holds);
  const PGraph flipped = PGraph::chain(sig, {f("q"), f("p")});
  const auto rep = cond_p1(g, f("p"), flipped, sig);
  ASSERT_FALSE(rep.holds);
  bool clause2_at_q = false;
  for (const auto& w : rep.witnesses)
    if (w.clause == "2" && w.revised && flipped.label(w.node) == f("q")) clause2_at_q = true;
  EXPECT_TRUE(clause2_at_q);
}

TEST(CondP2, Examples) {
  const PGraph g = p_over_q();
  EXPECT_TRUE(cond_p2(g, f("~p"), prefix(g, f("~p")), sig).holds);
  EXPECT_TRUE(cond_p2(g, f("~p"), g, sig).holds);
}

TEST(CondP3P4, PrefixAndIdentity) {
  const PGraph g = p_over_q();
  for (const auto& phi : default_pool()) {
    EXPECT_TRUE(cond_p3(g, phi, prefix(g, phi), sig).holds);
    EXPECT_TRUE(cond_p4(g, phi, prefix(g, phi), sig).holds);
    EXPECT_TRUE(cond_p3(g, phi, g, sig).holds);
    EXPECT_TRUE(cond_p4(g, phi, g, sig).holds);
  }
}

TEST(CondRec, Examples) {
  const PGraph g = p_over_q();
  EXPECT_TRUE(cond_rec(g, f("p"), prefix(g, f("p")), sig).holds);
  const PGraph only_q = PGraph::from_labels(sig, {f("q")});
  const auto rep = cond_rec(only_q, f("p"), null_transform(only_q, f("p")), sig);
  ASSERT_FALSE(rep.holds);
  bool clause2 = false;
  for (const auto& w : rep.witnesses) clause2 = clause2 || w.clause == "2";
  EXPECT_TRUE(clause2);
}

TEST(CondInd, PrefixByNodeLabel) {
  const PGraph g = p_over_q();
  EXPECT_TRUE(cond_ind(g, f("p"), prefix(g, f("p")), sig).holds);
}

// The accepted conditions for prefixing are always followed by the
// postulate they guard.
TEST(Soundness, PrefixHasNoViolations) {
  const auto rows = sweep_soundness(2, sig, default_pool(), {TransformationRegistry::builtin().get("prefix")});
  ASSERT_EQ(rows.size(), kAllConditions.size());
  for (const auto& row : rows) {
    EXPECT_EQ(row.instances, 405u);
    EXPECT_EQ(row.violations, 0u) << name(row.condition);
  }
}

// The Rec and Ind conditions, checked on a single (G, f, G†) triple, accept
// the null transformation on instances where the postulate fails.
TEST(Soundness, RecConditionAcceptsNullOnFailingInstance) {
  const PGraph g = PGraph::from_labels(sig, {f("p")});
  const Formula phi = f("p | q");
  const PGraph h = null_transform(g, phi);
  EXPECT_TRUE(cond_rec(g, phi, h, sig).holds);
  const auto before = canonical_model(g);
  const auto rep = check_rec(before, phi, induce_model(h, before.worlds()));
  ASSERT_FALSE(rep.holds);
  EXPECT_EQ(before.world(rep.witnesses.front().first).id, "w_q");
  EXPECT_EQ(before.world(rep.witnesses.front().second).id, "w_0");
}

TEST(Soundness, IndConditionAcceptsNullOnEmptyGraph) {
  const PGraph g(sig);
  const Formula phi = f("p");
  EXPECT_TRUE(cond_ind(g, phi, null_transform(g, phi), sig).holds);
  const auto before = canonical_model(g);
  EXPECT_FALSE(check_ind(before, phi, before).holds);
}
