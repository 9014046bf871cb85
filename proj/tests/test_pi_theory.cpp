#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pilift/builtins.hpp"
#include "pilift/pi_theory.hpp"

using namespace pilift;

namespace {

SubId sub(const GroupContext& ctx, std::initializer_list<const char*> gens) {
  std::vector<Elem> es;
  for (const char* g : gens) es.push_back(*ctx.top().find(Permutation::from_cycles(g, ctx.top().degree())));
  return ctx.intern(generate(ctx.top(), es));
}

std::vector<Cyc> ints(std::initializer_list<long> v, int n) {
  std::vector<Cyc> out;
  for (long x : v) out.emplace_back(x, n);
  return out;
}

std::set<std::vector<Cyc>> member_set(const PartialTable& t) {
  std::set<std::vector<Cyc>> out;
  for (const auto& m : t.members) out.insert(m.values);
  return out;
}

/// A nontrivial linear character of the cyclic group C3 = <(1 2 3)> in S3.
std::size_t omega_row(const GroupContext& ctx, SubId a3) {
  const auto& t = ctx.table(a3);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i != t.trivial_row()) return i;
  }
  return 0;
}

}  // namespace

TEST(PiClasses, Symmetric3) {
  GroupContext ctx(builtin::symmetric(3));
  EXPECT_EQ(pi_classes(ctx, ctx.whole(), PrimeSet({3})).classes, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(pi_classes(ctx, ctx.whole(), PrimeSet({2, 3})).classes, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(pi_classes(ctx, ctx.whole(), PrimeSet({5})).classes, (std::vector<std::size_t>{0}));
}

TEST(PiRestriction, Symmetric3) {
  GroupContext ctx(builtin::symmetric(3));
  PiAnalyzer pa(ctx, PrimeSet({3}));
  EXPECT_EQ(pa.restrict_to_pi({ctx.whole(), 0}).values, ints({1, 1}, 6));
  EXPECT_EQ(pa.restrict_to_pi({ctx.whole(), 2}).values, ints({2, -1}, 6));
  PiAnalyzer all(ctx, PrimeSet({2, 3}));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(all.restrict_to_pi({ctx.whole(), i}).values, ctx.table(ctx.whole()).row(i));
}

TEST(Ipi, Examples) {
  GroupContext s3(builtin::symmetric(3));
  PiAnalyzer p3(s3, PrimeSet({3}));
  EXPECT_EQ(member_set(p3.ipi(s3.whole())), (std::set<std::vector<Cyc>>{ints({1, 1}, 6), ints({2, -1}, 6)}));
  EXPECT_EQ(p3.ipi(s3.whole()).member_of_row[0], p3.ipi(s3.whole()).member_of_row[1]);

  GroupContext a4(builtin::alternating(4));
  PiAnalyzer p2(a4, PrimeSet({2}));
  EXPECT_EQ(member_set(p2.ipi(a4.whole())), (std::set<std::vector<Cyc>>{ints({1, 1}, 6), ints({3, -1}, 6)}));

  PiAnalyzer q2(s3, PrimeSet({2}));
  const auto& ip = q2.ipi(s3.whole());
  EXPECT_EQ(member_set(ip), (std::set<std::vector<Cyc>>{ints({1, 1}, 6), ints({1, -1}, 6)}));
  EXPECT_EQ(ip.decomposition[2], (std::vector<long>{1, 1}));
  EXPECT_FALSE(ip.member_of_row[2].has_value());
}

TEST(Ipi, DecomposePartial) {
  GroupContext s3(builtin::symmetric(3));
  PiAnalyzer pa(s3, PrimeSet({2}));
  const auto& ip = pa.ipi(s3.whole());
  EXPECT_EQ(pa.decompose_partial(pa.restrict_to_pi({s3.whole(), 2})), (std::vector<long>{1, 1}));
  for (std::size_t j = 0; j < ip.size(); ++j) {
    std::vector<long> e(ip.size(), 0);
    e[j] = 1;
    EXPECT_EQ(pa.decompose_partial(ip.members[j]), e);
    auto twice = ip.members[j];
    for (auto& v : twice.values) v = v + v;
    twice.degree *= 2;
    e[j] = 2;
    EXPECT_EQ(pa.decompose_partial(twice), e);
  }
  auto bad = ip.members[0];
  for (auto& v : bad.values) v = -v;
  EXPECT_THROW(pa.decompose_partial(bad), std::invalid_argument);
}

TEST(Lifts, Examples) {
  GroupContext s3(builtin::symmetric(3));
  PiAnalyzer pa(s3, PrimeSet({3}));
  const auto& ip = pa.ipi(s3.whole());
  const std::size_t one = *ip.member_of_row[s3.table(s3.whole()).trivial_row()];
  EXPECT_EQ(pa.lifts_of(s3.whole(), one), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(pa.is_pi_lift({s3.whole(), 0}));

  PiAnalyzer p2(s3, PrimeSet({2}));
  EXPECT_FALSE(p2.is_pi_lift({s3.whole(), 2}));

  PiAnalyzer all(s3, PrimeSet({2, 3}));
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(all.lifts_of(s3.whole(), j).size(), 1u);
}

TEST(Lifts, Section4PhiHasThirteen) {
  GroupContext ctx(builtin::section4_group());
  PiAnalyzer pa(ctx, PrimeSet({3}));
  const auto& ip = pa.ipi(ctx.whole());
  EXPECT_EQ(ip.size(), pi_classes(ctx, ctx.whole(), PrimeSet({3})).classes.size());
  std::size_t thirteen = 0;
  for (std::size_t j = 0; j < ip.size(); ++j) {
    if (ip.members[j].degree == 3 && pa.lifts_of(ctx.whole(), j).size() == 13) ++thirteen;
  }
  EXPECT_GT(thirteen, 0u);
}

TEST(Special, Examples) {
  GroupContext c3(builtin::cyclic(3));
  PiAnalyzer p3(c3, PrimeSet({3}));
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != c3.table(c3.whole()).trivial_row()) EXPECT_TRUE(p3.is_pi_special({c3.whole(), i}));
  }
  GroupContext s3(builtin::symmetric(3));
  PiAnalyzer q3(s3, PrimeSet({3}));
  EXPECT_FALSE(q3.is_pi_special({s3.whole(), 0}));
  EXPECT_TRUE(q3.is_pi_prime_special({s3.whole(), 0}));
  PiAnalyzer q2(s3, PrimeSet({2}));
  EXPECT_FALSE(q2.is_pi_special({s3.whole(), 2}));
  EXPECT_TRUE(q2.is_pi_special({s3.whole(), 0}));
}

TEST(Factorize, Examples) {
  GroupContext s3(builtin::symmetric(3));
  PiAnalyzer pa(s3, PrimeSet({3}));
  const auto f = pa.factorize({s3.whole(), 0});
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->alpha.row, s3.table(s3.whole()).trivial_row());
  EXPECT_EQ(f->beta.row, 0u);
  EXPECT_FALSE(pa.factorize({s3.whole(), 2}).has_value());

  // lambda of order 6 on C6 = lambda^4 * lambda^3
  GroupContext c6(builtin::cyclic(6));
  PiAnalyzer p6(c6, PrimeSet({3}));
  const auto& t = c6.table(c6.whole());
  const SubId g = c6.whole();
  for (std::size_t lam = 0; lam < t.size(); ++lam) {
    if (t.determinant_order(lam) != 6) continue;
    auto power = [&](int k) {
      ClassFunction f = c6.character({g, t.trivial_row()});
      for (int i = 0; i < k; ++i) f = c6.product(f, c6.character({g, lam}));
      return *c6.find_row(f);
    };
    const auto fac = p6.factorize({g, lam});
    ASSERT_TRUE(fac.has_value());
    EXPECT_EQ(fac->alpha.row, power(4));
    EXPECT_EQ(fac->beta.row, power(3));
  }
}

TEST(PiProperty, IpiMatchesExhaustiveOracle) {
  for (const auto& name : oracle::small_corpus()) {
    GroupContext ctx(builtin::by_name(name));
    for (const auto& p : prime_factors(ctx.top().order())) {
      for (const auto& pi : {PrimeSet({p}), PrimeSet(prime_factors(ctx.top().order()))}) {
        if (!is_pi_separable(ctx.top(), pi).separable) continue;
        PiAnalyzer pa(ctx, pi);
        const auto& ip = pa.ipi(ctx.whole());
        EXPECT_EQ(oracle::sorted_members(ip), oracle::ipi(ctx, ctx.whole(), pi)) << name << " pi=" << pi.to_string();
        EXPECT_EQ(ip.size(), oracle::pi_class_ids(ctx, ctx.whole(), pi).size()) << name;
      }
    }
  }
}

TEST(PiProperty, DecompositionsAndFactorizations) {
  for (const auto& name : oracle::small_corpus()) {
    GroupContext ctx(builtin::by_name(name));
    const auto& t = ctx.table(ctx.whole());
    for (const auto& pi : {PrimeSet({2}), PrimeSet({3}), PrimeSet({2, 3}), PrimeSet({5, 7})}) {
      PiAnalyzer pa(ctx, pi);
      const auto& ip = pa.ipi(ctx.whole());
      for (std::size_t i = 0; i < t.size(); ++i) {
        // chi^0 is the stated combination
        auto target = pa.restrict_to_pi({ctx.whole(), i});
        std::vector<Cyc> acc(target.values.size(), Cyc(0L, ctx.conductor()));
        for (std::size_t j = 0; j < ip.size(); ++j) {
          EXPECT_GE(ip.decomposition[i][j], 0);
          for (std::size_t c = 0; c < acc.size(); ++c) {
            acc[c] += ip.members[j].values[c] * Rational(ip.decomposition[i][j]);
          }
        }
        EXPECT_EQ(acc, target.values);
        if (t.degree(i) == 1) EXPECT_TRUE(pa.is_pi_lift({ctx.whole(), i}));
        if (const auto f = pa.factorize({ctx.whole(), i})) {
          const auto da = t.degree(f->alpha.row), db = t.degree(f->beta.row);
          EXPECT_EQ(da * db, t.degree(i));
          EXPECT_TRUE(pi.is_pi_number(da));
          EXPECT_TRUE(pi.is_pi_prime_number(db));
        }
      }
      const auto primes = prime_factors(ctx.top().order());
      const bool covers = std::all_of(primes.begin(), primes.end(), [&](auto q) { return pi.contains(q); });
      const bool disjoint = std::none_of(primes.begin(), primes.end(), [&](auto q) { return pi.contains(q); });
      if (covers) {
        EXPECT_EQ(ip.size(), t.size());
      }
      if (disjoint) {
        ASSERT_EQ(ip.size(), 1u);
        std::vector<std::size_t> linear;
        for (std::size_t i = 0; i < t.size(); ++i) {
          if (t.degree(i) == 1) linear.push_back(i);
        }
        EXPECT_EQ(pa.lifts_of(ctx.whole(), 0), linear);
      }
    }
  }
}

TEST(PiProperty, SpecialCharactersOfSubgroups) {
  GroupContext ctx(builtin::symmetric(3));
  const SubId a3 = sub(ctx, {"(1 2 3)"});
  PiAnalyzer pa(ctx, PrimeSet({3}));
  EXPECT_TRUE(pa.is_pi_special({a3, omega_row(ctx, a3)}));
  EXPECT_TRUE(pa.is_pi_special({a3, ctx.table(a3).trivial_row()}));
  EXPECT_TRUE(pa.is_pi_prime_special({a3, ctx.table(a3).trivial_row()}));
}
