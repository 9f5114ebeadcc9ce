#include <gtest/gtest.h>

#include "mf/order.hpp"
#include "mf/simplex.hpp"
#include "mf/sicrep.hpp"
#include "support.hpp"

namespace mf {
namespace {

TEST(Simplex, FeasibleAndInfeasibleSystems) {
  RealMatrix a(2, 3);
  a << 1, 1, 1, 1, -1, 0;
  RealVector b(2);
  b << 1, 0.2;
  const LpFeasibility ok = find_feasible_point(a, b, 1e-10);
  ASSERT_TRUE(ok.feasible);
  EXPECT_LT((a * ok.x - b).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_GE(ok.x.minCoeff(), 0.0);

  RealMatrix c(1, 2);
  c << 1, 1;
  RealVector d(1);
  d << -1;
  EXPECT_FALSE(find_feasible_point(c, d, 1e-10).feasible);
}

TEST(Bayes, Examples) {
  EXPECT_NEAR(bayes_update(0.3, 0.6, 0.6), 0.3, 1e-15);
  EXPECT_NEAR(bayes_update(0.5, 0.5, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(bayes_update(0.3, 0.6, 0.5), 0.25, 1e-15);
  EXPECT_THROW(bayes_update(0.3, 0.0, 0.5), DomainError);
}

TEST(PovmGeq, Examples) {
  Rng rng(70);
  const Povm z = random_povm(2, 4, rng);
  const Povm merged = post_process(z, StochasticMatrix::deterministic({0, 1, 0, 1}, 2));
  const GeqResult m = povm_geq(z, merged, 1e-8);
  ASSERT_TRUE(m.holds);
  EXPECT_LT(testing::povm_distance(post_process(z, *m.witness), merged), 1e-8);

  const GeqResult t = povm_geq(z, trivial_povm(2), 1e-8);
  ASSERT_TRUE(t.holds);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR((*t.witness)(0, i), 1.0, 1e-12);
}

TEST(PovmGeq, ZAndXBasesAgreeWithGridOracle) {
  const Povm zb = computational_basis(2), xb = testing::x_basis();
  EXPECT_FALSE(povm_geq(zb, xb, 1e-8).holds);
  EXPECT_FALSE(povm_geq(xb, zb, 1e-8).holds);
  EXPECT_GT(testing::grid_best_residual(zb, xb, 0.01), 0.4);
  EXPECT_GT(testing::grid_best_residual(xb, zb, 0.01), 0.4);
  // The oracle does find witnesses where they exist.
  EXPECT_LT(testing::grid_best_residual(zb, zb, 0.01), 1e-15);
}

TEST(Compare, Examples) {
  Rng rng(71);
  const Povm z = random_povm(3, 3, rng);
  Povm permuted = z;
  std::swap(permuted.effects[0], permuted.effects[2]);
  EXPECT_EQ(compare(z, permuted, 1e-8).relation, Relation::equivalent);

  const Povm zb = computational_basis(2);
  const OrderVerdict v = compare(zb, trivial_povm(2), 1e-8);
  EXPECT_EQ(v.relation, Relation::geq);
  EXPECT_TRUE(v.witness_forward.has_value());
  EXPECT_FALSE(v.witness_backward.has_value());
  EXPECT_EQ(compare(trivial_povm(2), zb, 1e-8).relation, Relation::leq);

  const Povm sic = build_sic(2).povm;
  EXPECT_EQ(compare(zb, sic, 1e-8).relation, Relation::incomparable);
}

TEST(Compare, WitnessesAreSound) {
  Rng rng(72);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 2;
    const Povm z = random_povm(d, 3 + trial % 3, rng);
    const Povm x = post_process(z, random_stochastic(2 + trial % 2, z.size(), rng));
    const OrderVerdict v = compare(z, x, 1e-8);
    ASSERT_TRUE(v.relation == Relation::geq || v.relation == Relation::equivalent);
    EXPECT_LT(testing::povm_distance(post_process(z, *v.witness_forward), x), 1e-8);
    if (v.witness_backward)
      EXPECT_LT(testing::povm_distance(post_process(x, *v.witness_backward), z), 1e-8);
  }
}

TEST(PovmGeq, ReflexiveAndTransitive) {
  Rng rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const Povm a = random_povm(2, 4, rng);
    EXPECT_TRUE(povm_geq(a, a, 1e-8).holds);
    const Povm b = post_process(a, random_stochastic(3, 4, rng));
    const Povm c = post_process(b, random_stochastic(2, 3, rng));
    const GeqResult ab = povm_geq(a, b, 1e-8), bc = povm_geq(b, c, 1e-8);
    ASSERT_TRUE(ab.holds && bc.holds);
    const StochasticMatrix composed = compose(*bc.witness, *ab.witness);
    EXPECT_LT(testing::povm_distance(post_process(a, composed), c), 1e-8);
    EXPECT_TRUE(povm_geq(a, c, 1e-8).holds);
  }
}

TEST(Classes, TrivialAndRankOne) {
  const ComplexMatrix half = identity(2) / 2.0;
  const Povm coin = Povm::from_matrices({half, half});
  EXPECT_TRUE(is_trivial_class(trivial_povm(2), 1e-9));
  EXPECT_TRUE(is_trivial_class(coin, 1e-9));
  EXPECT_FALSE(is_trivial_class(computational_basis(2), 1e-9));

  EXPECT_TRUE(is_rank_one_povm(computational_basis(2), 1e-9));
  EXPECT_TRUE(is_rank_one_povm(build_sic(2).povm, 1e-9));
  EXPECT_FALSE(is_rank_one_povm(coin, 1e-9));

  EXPECT_EQ(compare(coin, trivial_povm(2), 1e-8).relation, Relation::equivalent);
}

TEST(SetOrder, SingleMemberSemantics) {
  const Povm zb = computational_basis(2), xb = testing::x_basis();
  EXPECT_TRUE(set_geq({zb, xb}, {zb}, 1e-8));
  EXPECT_FALSE(set_geq({zb}, {zb, xb}, 1e-8));
  EXPECT_EQ(compare_sets({zb, xb}, {xb}, 1e-8), Relation::geq);
  EXPECT_EQ(compare_sets({zb}, {xb}, 1e-8), Relation::incomparable);
  EXPECT_EQ(compare_sets({zb}, {trivial_povm(2)}, 1e-8), Relation::geq);
}

TEST(Umax, Examples) {
  DecisionModel perfect{{0.5, 0.5}, StochasticMatrix::identity(2), RealMatrix::Identity(2, 2)};
  EXPECT_NEAR(u_max(perfect).value, 1.0, 1e-15);

  RealMatrix q(2, 2);
  q << 0.9, 0.2, 0.1, 0.8;
  DecisionModel noisy{{0.5, 0.5}, StochasticMatrix(q), RealMatrix::Identity(2, 2)};
  const UmaxResult r = u_max(noisy);
  EXPECT_NEAR(r.value, 0.85, 1e-15);
  EXPECT_EQ(r.choice, (std::vector<int>{0, 1}));
  EXPECT_NEAR(expected_utility(noisy, r.strategy), 0.85, 1e-15);

  RealMatrix flat(2, 2);
  flat << 0.3, 0.3, 0.7, 0.7;
  RealMatrix u(2, 2);
  u << 1, -1, 0.2, 0.4;
  DecisionModel worthless{{0.25, 0.75}, StochasticMatrix(flat), u};
  const double direct = std::max(1 * 0.25 - 1 * 0.75, 0.2 * 0.25 + 0.4 * 0.75);
  EXPECT_NEAR(u_max(worthless).value, direct, 1e-15);
}

TEST(Umax, TiesPickLowestGuess) {
  DecisionModel m{{0.5, 0.5}, StochasticMatrix(RealMatrix::Constant(1, 2, 1.0)),
                  RealMatrix::Constant(3, 2, 1.0)};
  EXPECT_EQ(u_max(m).choice[0], 0);
}

TEST(Umax, MatchesBruteForceAndBeatsRandomStrategies) {
  Rng rng(74);
  std::uniform_real_distribution<double> unif(-1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const int nw = 1 + trial % 4, nx = 1 + (trial / 4) % 4;
    const StochasticMatrix prior_col = random_stochastic(nw, 1, rng);
    std::vector<double> prior(nw);
    for (int w = 0; w < nw; ++w) prior[w] = prior_col(w, 0);
    RealMatrix u(nw, nw);
    for (int i = 0; i < nw; ++i)
      for (int j = 0; j < nw; ++j) u(i, j) = unif(rng);
    const DecisionModel m{prior, random_stochastic(nx, nw, rng), u};
    ASSERT_TRUE(validate_model(m).ok());
    const double value = u_max(m).value;
    EXPECT_NEAR(value, testing::brute_force_umax(prior, m.channel.entries(), u), 1e-12);
    EXPECT_LE(expected_utility(m, random_stochastic(nw, nx, rng)), value + 1e-12);
  }
}

TEST(Blackwell, Examples) {
  const Povm zb = computational_basis(2);
  const Povm merged = post_process(zb, StochasticMatrix::deterministic({0, 0}, 1));
  std::vector<DensityMatrix> family;
  const SicPovm sic = build_sic(2);
  for (int i = 0; i < 4; ++i) family.push_back({2, sic.projector(i)});

  const BlackwellReport down = blackwell_consistency(zb, merged, family, 50, 1, 1e-9);
  EXPECT_TRUE(down.geq_holds);
  EXPECT_EQ(down.monotonicity_violations, 0);
  EXPECT_TRUE(down.consistent);

  const BlackwellReport inc = blackwell_consistency(zb, testing::x_basis(), family, 200, 2, 1e-9);
  EXPECT_FALSE(inc.geq_holds);
  EXPECT_GT(inc.reversals, 0);
  EXPECT_EQ(inc.inconsistencies, 0);
  EXPECT_TRUE(inc.consistent);

  EXPECT_TRUE(blackwell_consistency(zb, merged, family, 0, 1, 1e-9).vacuous);
}

TEST(Relation, StringRoundTrip) {
  for (Relation r : {Relation::geq, Relation::leq, Relation::equivalent, Relation::incomparable})
    EXPECT_EQ(relation_from_string(to_string(r)), r);
}

}  // namespace
}  // namespace mf
