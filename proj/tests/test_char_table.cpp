#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "pilift/builtins.hpp"
#include "pilift/context.hpp"

using namespace pilift;

namespace {

Cyc z(int n, long k) { return Cyc::root_of_unity(n, k); }

std::vector<Cyc> ints(std::initializer_list<long> v, int n) {
  std::vector<Cyc> out;
  for (long x : v) out.emplace_back(x, n);
  return out;
}

/// The subgroup generated by the given 1-based cycle strings.
SubId sub(const GroupContext& ctx, std::initializer_list<const char*> gens) {
  std::vector<Elem> es;
  for (const char* g : gens) es.push_back(*ctx.top().find(Permutation::from_cycles(g, ctx.top().degree())));
  return ctx.intern(generate(ctx.top(), es));
}

std::map<std::uint64_t, std::size_t> histogram(const CharTable& t) {
  std::map<std::uint64_t, std::size_t> h;
  for (std::size_t i = 0; i < t.size(); ++i) ++h[t.degree(i)];
  return h;
}

}  // namespace

TEST(CharTable, Cyclic3) {
  GroupContext ctx(builtin::cyclic(3));
  const auto& t = ctx.table(ctx.whole());
  ASSERT_EQ(t.size(), 3u);
  std::set<std::vector<Cyc>> rows;
  for (std::size_t i = 0; i < 3; ++i) rows.insert(t.row(i));
  const Cyc w = z(3, 1), w2 = z(3, 2), one(1L, 3);
  EXPECT_EQ(rows, (std::set<std::vector<Cyc>>{{one, one, one}, {one, w, w2}, {one, w2, w}}));
  EXPECT_EQ(t.row(t.trivial_row()), (std::vector<Cyc>{one, one, one}));
}

TEST(CharTable, Symmetric3) {
  GroupContext ctx(builtin::symmetric(3));
  const auto& t = ctx.table(ctx.whole());
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t.degree(0), 1u);
  EXPECT_EQ(t.degree(1), 1u);
  EXPECT_EQ(t.degree(2), 2u);
  // classes are (e, transpositions, 3-cycles)
  EXPECT_EQ(t.class_size(1), 3u);
  EXPECT_EQ(t.row(2), ints({2, 0, -1}, 6));
  EXPECT_FALSE(t.verify_orthogonality().has_value());
}

TEST(CharTable, RowOrderIsDegreeThenValues) {
  for (const char* name : {"s4", "d8", "dic12", "a5"}) {
    GroupContext ctx(builtin::by_name(name));
    const auto& t = ctx.table(ctx.whole());
    for (std::size_t i = 1; i < t.size(); ++i) {
      EXPECT_TRUE(t.degree(i - 1) < t.degree(i) || (t.degree(i - 1) == t.degree(i) && t.row(i - 1) < t.row(i)))
          << name;
    }
  }
}

TEST(CharTable, KnownDegrees) {
  GroupContext s4(builtin::symmetric(4));
  EXPECT_EQ(histogram(s4.table(s4.whole())), (std::map<std::uint64_t, std::size_t>{{1, 2}, {2, 1}, {3, 2}}));
  GroupContext a5(builtin::alternating(5));
  EXPECT_EQ(histogram(a5.table(a5.whole())),
            (std::map<std::uint64_t, std::size_t>{{1, 1}, {3, 2}, {4, 1}, {5, 1}}));
  GroupContext sl(builtin::sl2_3());
  EXPECT_EQ(histogram(sl.table(sl.whole())), (std::map<std::uint64_t, std::size_t>{{1, 3}, {2, 3}, {3, 1}}));
}

TEST(CharTable, Section4DegreeHistogram) {
  GroupContext ctx(builtin::section4_group());
  const auto& t = ctx.table(ctx.whole());
  EXPECT_EQ(t.size(), 59u);
  EXPECT_EQ(histogram(t), (std::map<std::uint64_t, std::size_t>{{1, 9}, {3, 38}, {9, 12}}));
  EXPECT_FALSE(t.verify_orthogonality().has_value());
}

TEST(CharTable, PowerMaps) {
  GroupContext s3(builtin::symmetric(3));
  const auto& t = s3.table(s3.whole());
  EXPECT_EQ(t.power_map(2), (std::vector<std::size_t>{0, 0, 2}));
  EXPECT_EQ(t.power_map(1), (std::vector<std::size_t>{0, 1, 2}));
  GroupContext c4(builtin::cyclic(4));
  const auto& u = c4.table(c4.whole());
  for (std::size_t c = 0; c < u.size(); ++c) {
    if (u.class_element_order(c) == 4) EXPECT_EQ(u.class_element_order(u.power_class(c, 2)), 2u);
  }
}

TEST(CharTable, InnerProducts) {
  GroupContext ctx(builtin::symmetric(3));
  const SubId g = ctx.whole();
  const auto chi2 = ctx.character({g, 2});
  const auto one = ctx.character({g, ctx.table(g).trivial_row()});
  const auto sgn = ctx.character({g, 0});
  EXPECT_EQ(ctx.inner_product(chi2, chi2), Cyc(1L, 6));
  EXPECT_EQ(ctx.inner_product(one, sgn), Cyc(0L, 6));
  const auto reg = ctx.induce(ctx.character({ctx.trivial(), 0}), g);
  EXPECT_EQ(reg.values[0], Cyc(6L, 6));
  EXPECT_EQ(ctx.inner_product(reg, chi2), Cyc(2L, 6));
}

TEST(CharTable, InductionFromA3) {
  GroupContext ctx(builtin::symmetric(3));
  const SubId g = ctx.whole();
  const SubId a3 = sub(ctx, {"(1 2 3)"});
  const auto& ta = ctx.table(a3);
  std::size_t omega = 0;
  while (ta.degree(omega) != 1 || omega == ta.trivial_row()) ++omega;
  const auto ind = ctx.induce(ctx.character({a3, omega}), g);
  EXPECT_EQ(ctx.find_row(ind), std::optional<std::size_t>(2));
  const auto triv = ctx.induce(ctx.character({a3, ta.trivial_row()}), g);
  EXPECT_EQ(triv, ctx.sum(ctx.character({g, 0}), ctx.character({g, 1})));
  EXPECT_EQ(ctx.induce(ctx.character({a3, omega}), g).values, oracle::induce(ctx, ctx.character({a3, omega})));
}

TEST(CharTable, RestrictionConstituents) {
  GroupContext ctx(builtin::symmetric(3));
  const SubId g = ctx.whole();
  const SubId a3 = sub(ctx, {"(1 2 3)"});
  const auto& c2 = ctx.restriction_constituents({g, 2}, a3);
  ASSERT_EQ(c2.size(), 2u);
  for (const auto& [row, m] : c2) {
    EXPECT_EQ(m, 1);
    EXPECT_NE(row, ctx.table(a3).trivial_row());
  }
  const auto& sg = ctx.restriction_constituents({g, 0}, a3);
  ASSERT_EQ(sg.size(), 1u);
  EXPECT_EQ(sg[0], std::make_pair(ctx.table(a3).trivial_row(), 1L));
}

TEST(CharTable, DeterminantOrders) {
  GroupContext s3(builtin::symmetric(3));
  const auto& t = s3.table(s3.whole());
  EXPECT_EQ(t.determinant_order(0), 2u);  // sgn
  EXPECT_EQ(t.determinant_order(1), 1u);
  EXPECT_EQ(t.determinant_order(2), 2u);  // det of the 2-dimensional is sgn
  GroupContext c6(builtin::cyclic(6));
  const auto& u = c6.table(c6.whole());
  std::multiset<std::uint64_t> ords;
  for (std::size_t i = 0; i < u.size(); ++i) ords.insert(u.determinant_order(i));
  EXPECT_EQ(ords, (std::multiset<std::uint64_t>{1, 2, 3, 3, 6, 6}));
  GroupContext q8(builtin::quaternion8());
  const auto& q = q8.table(q8.whole());
  EXPECT_EQ(q.determinant_order(q.size() - 1), 1u);  // SL(2) representation
}

TEST(CharTableProperty, LinearDeterminantIsMultiplicativeOrder) {
  for (const auto& name : oracle::small_corpus()) {
    GroupContext ctx(builtin::by_name(name));
    const auto& t = ctx.table(ctx.whole());
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_EQ(ctx.top().exponent() % t.determinant_order(i), 0u);
      if (t.degree(i) != 1) continue;
      std::uint64_t order = 1;
      for (std::uint64_t k = 1; k <= ctx.top().exponent(); ++k) {
        bool trivial = true;
        for (std::size_t c = 0; c < t.size(); ++c) {
          Cyc p(1L, ctx.conductor());
          for (std::uint64_t e = 0; e < k; ++e) p = p * t.value(i, c);
          trivial = trivial && p == Cyc(1L, ctx.conductor());
        }
        if (trivial) {
          order = k;
          break;
        }
      }
      EXPECT_EQ(t.determinant_order(i), order) << name << " row " << i;
    }
  }
}

TEST(CharTableProperty, OrthogonalityAndDegreeSum) {
  for (const auto& name : oracle::small_corpus()) {
    GroupContext ctx(builtin::by_name(name));
    const auto& t = ctx.table(ctx.whole());
    EXPECT_FALSE(t.verify_orthogonality().has_value()) << name;
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < t.size(); ++i) s += t.degree(i) * t.degree(i);
    EXPECT_EQ(s, ctx.top().order()) << name;
    EXPECT_EQ(t.size(), conjugacy_classes(ctx.top()).size());
  }
}

TEST(CharTableProperty, InductionMatchesFrobeniusFormulaAndReciprocity) {
  std::mt19937_64 rng(3);
  for (const auto& name : oracle::small_corpus()) {
    GroupContext ctx(builtin::by_name(name));
    const auto& top = ctx.top();
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(top.order() - 1));
    for (int trial = 0; trial < 4; ++trial) {
      const Elem gens[] = {pick(rng), pick(rng)};
      const SubId h = ctx.intern(generate(top, std::span<const Elem>(gens, trial % 2 + 1)));
      const std::size_t theta = rng() % ctx.table(h).size();
      const auto th = ctx.character({h, theta});
      const auto ind = ctx.induce(th, ctx.whole());
      EXPECT_EQ(ind.values, oracle::induce(ctx, th)) << name;
      for (std::size_t chi = 0; chi < ctx.table(ctx.whole()).size(); ++chi) {
        const auto ch = ctx.character({ctx.whole(), chi});
        EXPECT_EQ(ctx.inner_product(ind, ch), ctx.inner_product(th, ctx.restrict(ch, h)));
      }
    }
  }
}

TEST(CharTableProperty, InductionIsTransitive) {
  GroupContext ctx(builtin::symmetric(4));
  const SubId h = sub(ctx, {"(1 2)"});
  const SubId k = sub(ctx, {"(1 2)", "(3 4)", "(1 3)(2 4)"});
  for (std::size_t row = 0; row < ctx.table(h).size(); ++row) {
    const auto th = ctx.character({h, row});
    EXPECT_EQ(ctx.induce(ctx.induce(th, k), ctx.whole()), ctx.induce(th, ctx.whole()));
  }
}

TEST(CharTableProperty, RestrictionConstituentsReconstruct) {
  for (const char* name : {"s4", "gl23", "f20", "c3xs3"}) {
    GroupContext ctx(builtin::by_name(name));
    const auto& top = ctx.top();
    for (Elem x = 1; x < top.order(); x += 5) {
      const Elem gens[] = {x};
      const SubId h = ctx.intern(generate(top, gens));
      for (std::size_t chi = 0; chi < ctx.table(ctx.whole()).size(); ++chi) {
        ClassFunction acc{h, std::vector<Cyc>(ctx.table(h).size(), Cyc(0L, ctx.conductor()))};
        for (const auto& [row, m] : ctx.restriction_constituents({ctx.whole(), chi}, h)) {
          EXPECT_GT(m, 0);
          acc = ctx.sum(acc, ctx.scaled(ctx.character({h, row}), m));
        }
        EXPECT_EQ(acc, ctx.restrict(ctx.character({ctx.whole(), chi}), h));
      }
    }
  }
}

TEST(CharTable, JsonRoundTrip) {
  GroupContext ctx(builtin::by_name("f21"));
  const auto& t = ctx.table(ctx.whole());
  const auto j = nlohmann::json::parse(t.to_json().dump());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t c = 0; c < t.size(); ++c) {
      EXPECT_EQ(cyc_from_json(j["characters"][i]["values"][c]), t.value(i, c));
    }
  }
}
