#include <gtest/gtest.h>

#include "pilift/builtins.hpp"
#include "pilift/verification.hpp"

using namespace pilift;

namespace {

std::vector<CorpusEntry> entries(std::initializer_list<const char*> names) {
  std::vector<CorpusEntry> out;
  for (const char* n : names) {
    std::string s = n;
    out.push_back({s, [s] { return builtin::by_name(s); }, {}});
  }
  return out;
}

}  // namespace

TEST(Verification, PrimeSubsets) {
  const auto s = prime_subsets(30);
  ASSERT_EQ(s.size(), 7u);
  EXPECT_EQ(s[0], PrimeSet({2}));
  EXPECT_EQ(s[3], PrimeSet({2, 3}));
  EXPECT_EQ(s[6], PrimeSet({2, 3, 5}));
  EXPECT_TRUE(prime_subsets(1).empty());
}

TEST(Verification, SmallSuitesHaveNoAnomalies) {
  for (const char* name : {"s3", "a4"}) {
    GroupContext ctx(builtin::by_name(name));
    for (const auto& pi : prime_subsets(ctx.top().order())) {
      const auto rep = run_property_suite(ctx, name, pi, {});
      EXPECT_EQ(rep.anomaly_count(), 0u) << name << " " << pi.to_string();
      for (const char* p : {"main1", "main2", "pair_search", "bpi_bijection", "selfind"}) {
        EXPECT_GT(rep.properties.at(p).pass, 0u) << p;
      }
    }
  }
}

TEST(Verification, AbelianCorpusIsTrivial) {
  const auto rep = run_corpus(entries({"c2", "c4", "c6", "c12", "c2xc2"}), {}, 2);
  EXPECT_EQ(rep.anomaly_count(), 0u);
}

TEST(Verification, AllPrimesMakeLiftsUnique) {
  auto corpus = entries({"s3", "s4", "dic12", "f20"});
  for (auto& c : corpus) c.pis = {PrimeSet({2, 3, 5, 7})};
  const auto rep = run_corpus(corpus, {}, 1);
  EXPECT_EQ(rep.anomaly_count(), 0u);
  for (const char* name : {"s3", "s4", "dic12", "f20"}) {
    GroupContext ctx(builtin::by_name(name));
    PiAnalyzer pa(ctx, PrimeSet({2, 3, 5, 7}));
    for (std::size_t j = 0; j < pa.ipi(ctx.whole()).size(); ++j) EXPECT_EQ(pa.lifts_of(ctx.whole(), j).size(), 1u);
  }
}

TEST(Verification, Section4SelectedSeries) {
  GroupContext ctx(builtin::section4_group());
  const auto s = section4_report(ctx);
  const auto en = enumerate_normal_pi_series(ctx.top(), PrimeSet({3}));
  SuiteOptions opt;
  for (std::size_t i = 0; i < en.series.size(); ++i) {
    std::vector<SubId> ids;
    for (const auto& m : en.series[i].chain) ids.push_back(ctx.intern(m));
    const std::vector<SubId> n{ctx.trivial(), s.sub.v, ctx.whole()};
    const std::vector<SubId> n1{ctx.trivial(), s.sub.v, s.sub.m1v, ctx.whole()};
    const std::vector<SubId> n2{ctx.trivial(), s.sub.v, s.sub.m2v, ctx.whole()};
    if (ids == n || ids == n1 || ids == n2) opt.series_indices.push_back(i);
  }
  ASSERT_EQ(opt.series_indices.size(), 3u);
  const auto rep = run_property_suite(ctx, "section4", PrimeSet({3}), opt);
  EXPECT_EQ(rep.anomaly_count(), 0u);
  EXPECT_EQ(rep.properties.at("main1").pass, 3 * 59u);
}

TEST(Verification, ReportDoesNotDependOnParallelism) {
  auto corpus = entries({"s3", "d8", "a4", "dic12"});
  const auto a = run_corpus(corpus, {}, 1).to_json().dump();
  const auto b = run_corpus(corpus, {}, 3).to_json().dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("seconds"), std::string::npos);
}

TEST(Verification, AnomaliesCarryWitnesses) {
  VerificationReport rep;
  rep.record("demo", true, nullptr);
  rep.record("demo", false, [] { return nlohmann::json{{"group", "x"}}; });
  EXPECT_EQ(rep.properties.at("demo").pass, 1u);
  EXPECT_EQ(rep.properties.at("demo").fail, 1u);
  ASSERT_EQ(rep.anomaly_count(), 1u);
  EXPECT_EQ(rep.anomalies[0]["property"], "demo");
  EXPECT_EQ(rep.anomalies[0]["group"], "x");
}

TEST(Verification, TableSuite) {
  GroupContext ctx(builtin::by_name("gl23"));
  SuiteOptions opt;
  opt.frobenius_triples = 20;
  const auto rep = run_table_suite(ctx, "gl23", opt);
  EXPECT_EQ(rep.anomaly_count(), 0u);
  EXPECT_EQ(rep.properties.at("frobenius_reciprocity").pass, 20u);
}
