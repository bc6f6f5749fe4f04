#include <gtest/gtest.h>

#include "support.hpp"

using namespace pgrev;
using support::f;
using support::order;

TEST(Model, ValidatesRelation) {
  const auto worlds = canonical_worlds(two_atoms());
  EXPECT_THROW(PreferenceModel(two_atoms(), worlds, Relation(4)), ModelError);
  EXPECT_THROW(PreferenceModel(two_atoms(), worlds, Relation(3, true)), ModelError);
  Relation not_transitive = Relation::identity(4);
  not_transitive.set(0, 1);
  not_transitive.set(1, 2);
  EXPECT_THROW(PreferenceModel(two_atoms(), worlds, not_transitive), ModelError);
  auto dup = worlds;
  dup[1].id = dup[0].id;
  EXPECT_THROW(PreferenceModel(two_atoms(), dup, Relation(4, true)), ModelError);
}

TEST(Model, ChainFixture) {
  const auto m = chain_model();
  EXPECT_EQ(order(m), "w_pq < w_p < w_q < w_0");
}

TEST(MinWorlds, Examples) {
  const auto m = chain_model();
  EXPECT_EQ(support::ids(m, min_worlds(m, f("~p"))), std::vector<std::string>{"w_q"});
  EXPECT_TRUE(min_worlds(m, Formula::bottom()).empty());
  const auto flat = flat_model(two_atoms(), canonical_worlds(two_atoms()));
  EXPECT_EQ(min_worlds(flat, Formula::top()).size(), 4u);
}

TEST(LexRevise, Examples) {
  const auto m = chain_model();
  EXPECT_EQ(order(lex_revise(m, f("~p")).model), "w_q < w_0 < w_pq < w_p");
  EXPECT_EQ(lex_revise(m, Formula::top()).model, m);
  EXPECT_EQ(lex_revise(m, Formula::bottom()).model, m);
  EXPECT_EQ(lex_revise(m, f("p")).op, "lex");
}

TEST(NaturalRevise, Examples) {
  const auto m = chain_model();
  EXPECT_EQ(order(natural_revise(m, f("~p")).model), "w_q < w_pq < w_p < w_0");
  EXPECT_EQ(natural_revise(m, Formula::bottom()).model, m);

  Valuation v1, v2, v3;
  v1.set(1, true);
  v2.set(0, true);
  v3.set(0, true);
  v3.set(1, true);
  const PreferenceModel three(two_atoms(), {{"w1", v1}, {"w2", v2}, {"w3", v3}}, chain_relation(3, {0, 1, 2}));
  EXPECT_EQ(order(natural_revise(three, f("p")).model), "w2 < w1 < w3");
  const PreferenceModel two(two_atoms(), {{"w1", v1}, {"w3", v3}}, chain_relation(2, {0, 1}));
  EXPECT_EQ(order(natural_revise(two, f("p")).model), "w3 < w1");
}

TEST(NullChange, Examples) {
  const auto m = chain_model();
  EXPECT_EQ(null_change(m, f("p")).model, m);
  EXPECT_EQ(null_change(m, Formula::bottom()).model, m);
  EXPECT_EQ(null_change(m, f("~p")).model, m);
}

// Every operator against its oracle over every fixture model and truth table.
TEST(Operators, AgreeWithOracles) {
  const auto formulas = all_truth_tables(two_atoms());
  for (const auto& m : support::fixture_models())
    for (const auto& phi : formulas) {
      const auto leq = support::matrix(m.order());
      const auto in = support::extension(m, phi);
      EXPECT_EQ(support::matrix(lex_revise(m, phi).model.order()), oracle::lex(leq, in));
      EXPECT_EQ(support::matrix(natural_revise(m, phi).model.order()), oracle::natural(leq, in));
      std::vector<std::size_t> mins;
      const auto om = oracle::minimal(leq, in);
      for (std::size_t i = 0; i < om.size(); ++i)
        if (om[i]) mins.push_back(i);
      EXPECT_EQ(min_worlds(m, phi), mins);
    }
}

TEST(Operators, OutputsAreModelsOverTheSameWorlds) {
  const auto formulas = all_truth_tables(two_atoms());
  for (const auto& m : support::fixture_models())
    for (const auto& phi : formulas)
      for (const auto& out : {lex_revise(m, phi), natural_revise(m, phi), null_change(m, phi)}) {
        EXPECT_TRUE(same_worlds(m, out.model));
        EXPECT_TRUE(out.model.order().is_reflexive());
        EXPECT_TRUE(out.model.order().is_transitive());
        EXPECT_TRUE(out.model.order().strict_part_acyclic());
      }
}

TEST(LexRevise, Idempotent) {
  const auto formulas = all_truth_tables(two_atoms());
  for (const auto& m : support::fixture_models())
    for (const auto& phi : formulas) {
      const auto once = lex_revise(m, phi).model;
      EXPECT_EQ(lex_revise(once, phi).model, once);
    }
}

TEST(NaturalRevise, NewBeliefsAreOldMinimalFWorlds) {
  const auto formulas = all_truth_tables(two_atoms());
  for (const auto& m : support::fixture_models())
    for (const auto& phi : formulas) {
      if (m.satisfying(phi).empty()) continue;
      EXPECT_EQ(min_worlds(natural_revise(m, phi).model, Formula::top()), min_worlds(m, phi));
    }
}
