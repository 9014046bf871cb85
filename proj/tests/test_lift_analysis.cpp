#include <gtest/gtest.h>

#include "pilift/builtins.hpp"
#include "pilift/lift_analysis.hpp"
#include "pilift/verification.hpp"

using namespace pilift;

namespace {

NormalPiSeries series(const GroupContext& ctx, const PrimeSet& pi, std::vector<std::size_t> orders) {
  for (const auto& s : enumerate_normal_pi_series(ctx.top(), pi).series) {
    std::vector<std::size_t> o;
    for (const auto& m : s.chain) o.push_back(m.order());
    if (o == orders) return s;
  }
  throw std::runtime_error("series not found");
}

struct S3Pi3 : ::testing::Test {
  GroupContext ctx{builtin::symmetric(3)};
  PiAnalyzer pa{ctx, PrimeSet({3})};
  SeriesAnalyzer sa{pa, series(ctx, pa.pi(), {1, 3, 6})};
  LiftAnalyzer la{sa};
  SubId g = ctx.whole();
  SubId a3 = sa.levels()[1];
};

}  // namespace

TEST_F(S3Pi3, PiLifts) {
  EXPECT_TRUE(la.is_pi_lift({g, 0}));
  EXPECT_TRUE(la.is_chain_pi_lift(0));
  const auto& c = la.chain_lift(0);
  ASSERT_EQ(c.levels.size(), 3u);
  EXPECT_EQ(c.levels[1].constituents, std::vector<std::size_t>{ctx.table(a3).trivial_row()});
}

TEST(LiftAnalysis, Chi2IsNoLiftForPi2) {
  GroupContext ctx(builtin::symmetric(3));
  PiAnalyzer pa(ctx, PrimeSet({2}));
  EXPECT_FALSE(pa.is_pi_lift({ctx.whole(), 2}));
}

TEST_F(S3Pi3, InductivePairs) {
  const auto& tau = sa.self_stabilizing_pair(2, 2).pair;
  EXPECT_EQ(tau.subgroup, a3);
  const auto c = la.is_inductive_pair(tau);
  EXPECT_TRUE(c.inductive);
  EXPECT_EQ(c.levels.size(), 3u);
  EXPECT_EQ(c.levels.back().induced, 2u);
  // (G, chi2) restricts to A3 with two constituents
  const auto d = la.is_inductive_pair({g, 2});
  EXPECT_FALSE(d.inductive);
  EXPECT_EQ(d.failed_level, std::optional<std::size_t>(1));
}

TEST_F(S3Pi3, InductiveSources) {
  EXPECT_TRUE(is_inductive_source(ctx, {a3, 0}, g));
  EXPECT_TRUE(is_inductive_source(ctx, {g, 2}, g));
  const SubId c2 = ctx.intern(generate(ctx.top(), std::vector<Elem>{*ctx.top().find(Permutation::from_cycles("(1 2)", 3))}));
  EXPECT_TRUE(is_inductive_source(ctx, {c2, 0}, g));
}

TEST_F(S3Pi3, Main1) {
  const auto r2 = la.check_main1(2);
  EXPECT_TRUE(r2.condition1 && r2.condition2 && r2.condition3);
  const auto r0 = la.check_main1(0);
  EXPECT_TRUE(r0.condition1 && r0.condition2 && r0.condition3);
  ASSERT_TRUE(r0.factorization.has_value());
  EXPECT_EQ(r0.factorization->alpha.row, ctx.table(g).trivial_row());
  EXPECT_EQ(r0.factorization->beta.row, 0u);
  EXPECT_TRUE(r0.beta_linear);
  const auto j = main1_json(la, r0);
  for (const char* k : {"condition1", "condition2", "condition3", "pair", "agree"}) EXPECT_TRUE(j.contains(k)) << k;
}

TEST_F(S3Pi3, Main2Equality) {
  const std::size_t one = *pa.ipi(g).member_of_row[ctx.table(g).trivial_row()];
  const auto r = la.main2_lift_family(one);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.pair.subgroup, g);
  EXPECT_EQ(r.bound, 2u);
  EXPECT_EQ(r.lift_count, 2u);
  std::set<std::size_t> images;
  for (const auto& i : r.images) images.insert(*i);
  EXPECT_EQ(images, (std::set<std::size_t>{0, 1}));
}

TEST(LiftAnalysis, Main2EqualityOnA4) {
  GroupContext ctx(builtin::alternating(4));
  PiAnalyzer pa(ctx, PrimeSet({2}));
  SeriesAnalyzer sa(pa, series(ctx, pa.pi(), {1, 4, 12}));
  LiftAnalyzer la(sa);
  const std::size_t one = *pa.ipi(ctx.whole()).member_of_row[ctx.table(ctx.whole()).trivial_row()];
  const auto r = la.main2_lift_family(one);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.bound, 3u);
  EXPECT_EQ(r.lift_count, 3u);
  for (const auto& i : r.images) EXPECT_EQ(ctx.table(ctx.whole()).degree(*i), 1u);
}

TEST(LiftAnalysis, PiPrimeLinearRows) {
  GroupContext ctx(builtin::cyclic(6));
  EXPECT_EQ(pi_prime_linear_rows(ctx, PrimeSet({3}), ctx.whole()).size(), 2u);
  EXPECT_EQ(pi_prime_linear_rows(ctx, PrimeSet({2}), ctx.whole()).size(), 3u);
  EXPECT_EQ(pi_prime_linear_rows(ctx, PrimeSet({2, 3}), ctx.whole()).size(), 1u);
}

class Section4 : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    ctx_ = new GroupContext(builtin::section4_group());
    report_ = new Section4Report(section4_report(*ctx_));
  }
  static void TearDownTestSuite() {
    delete report_;
    delete ctx_;
  }
  static GroupContext* ctx_;
  static Section4Report* report_;
};

GroupContext* Section4::ctx_ = nullptr;
Section4Report* Section4::report_ = nullptr;

TEST_F(Section4, EveryClaimHolds) {
  for (const auto& [name, ok] : report_->claims) EXPECT_TRUE(ok) << name;
  EXPECT_TRUE(report_->all_pass());
}

TEST_F(Section4, LiftsAndFamilies) {
  const auto& r = *report_;
  EXPECT_EQ(r.lifts.size(), 13u);
  EXPECT_NE(ctx_->order(r.sub.g) % 13, 0u);
  EXPECT_EQ(r.family1.size(), 7u);
  EXPECT_EQ(r.family2.size(), 7u);
  EXPECT_EQ(r.intersection, std::vector<std::size_t>{r.chi});
  EXPECT_EQ(r.union_count, 13u);
}

TEST_F(Section4, Main1FailsOnFamilyForOtherSeries) {
  const auto& r = *report_;
  const PrimeSet pi({3});
  PiAnalyzer pa(*ctx_, pi);
  const auto n2 = make_series(pi, {ctx_->subgroup(ctx_->trivial()), ctx_->subgroup(r.sub.v),
                                   ctx_->subgroup(r.sub.m2v), ctx_->subgroup(r.sub.g)});
  SeriesAnalyzer sa(pa, n2);
  LiftAnalyzer la(sa);
  for (auto psi : r.family1) {
    const auto m = la.check_main1(psi);
    EXPECT_TRUE(m.agree());
    EXPECT_EQ(m.condition1, psi == r.chi);
  }
  EXPECT_FALSE(la.is_inductive_pair(r.pair_n1).inductive);
  EXPECT_TRUE(la.is_inductive_pair(r.pair_n2).inductive);
}

TEST_F(Section4, Main2OnFirstSeries) {
  const auto& r = *report_;
  const PrimeSet pi({3});
  PiAnalyzer pa(*ctx_, pi);
  const auto n1 = make_series(pi, {ctx_->subgroup(ctx_->trivial()), ctx_->subgroup(r.sub.v),
                                   ctx_->subgroup(r.sub.m1v), ctx_->subgroup(r.sub.g)});
  SeriesAnalyzer sa(pa, n1);
  LiftAnalyzer la(sa);
  const auto m = la.main2_lift_family(r.phi);
  EXPECT_TRUE(m.ok());
  EXPECT_EQ(m.pair.subgroup, r.sub.m1v);
  EXPECT_EQ(m.bound, 7u);
  EXPECT_EQ(pi_prime_index_of_abelianization(ctx_->top(), ctx_->subgroup(r.sub.m1v), pi), 7u);
  EXPECT_EQ(ctx_->derived(r.sub.m1v), r.sub.v2);
}
