#include "pilift/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "pilift/builtins.hpp"

namespace pilift {

using nlohmann::json;

// ---------------------------------------------------------------------------
// The order-1323 example

namespace {

SubId find_sylow(const GroupContext& ctx, std::uint64_t p) {
  const Group& top = ctx.top();
  std::uint64_t target = 1;
  for (std::uint64_t n = top.order(); n % p == 0; n /= p) target *= p;
  Subgroup s = trivial_subgroup(top);
  while (s.order() < target) {
    bool grown = false;
    for (Elem x = 1; x < top.order() && !grown; ++x) {
      if (s.contains(x) || !PrimeSet({p}).is_pi_number(top.element_order(x))) continue;
      const Elem extra[] = {x};
      Subgroup t = generate(top, s, extra);
      if (PrimeSet({p}).is_pi_number(t.order())) {
        s = std::move(t);
        grown = true;
      }
    }
    if (!grown) throw std::runtime_error("Sylow search stalled");
  }
  return ctx.intern(s);
}

SubId centralizer_in(const GroupContext& ctx, SubId h, SubId of) {
  const Group& top = ctx.top();
  const auto gens = generating_set(top, ctx.subgroup(of));
  std::vector<Elem> out;
  for (Elem g : ctx.subgroup(h).members()) {
    if (std::all_of(gens.begin(), gens.end(), [&](Elem x) { return top.mul(g, x) == top.mul(x, g); })) {
      out.push_back(g);
    }
  }
  return ctx.intern(Subgroup(top.order(), std::move(out)));
}

bool in_kernel(const GroupContext& ctx, CharRef chi, SubId n) {
  const auto& cons = ctx.restriction_constituents(chi, n);
  return cons.size() == 1 && cons.front().first == ctx.table(n).trivial_row();
}

std::vector<std::size_t> orbit_sizes(const GroupContext& ctx, SubId n, std::vector<std::size_t>* orbit_of) {
  const auto& action = ctx.row_action(n);
  const std::size_t r = ctx.table(n).size();
  std::vector<std::size_t> orbit(r, SIZE_MAX), sizes;
  for (std::size_t i = 0; i < r; ++i) {
    if (orbit[i] != SIZE_MAX) continue;
    std::set<std::size_t> o;
    for (const auto& a : action) o.insert(a[i]);
    for (auto j : o) orbit[j] = sizes.size();
    sizes.push_back(o.size());
  }
  if (orbit_of) *orbit_of = orbit;
  return sizes;
}

}  // namespace

Section4Subgroups build_section4_group(const GroupContext& ctx) {
  const Group& top = ctx.top();
  if (top.order() != 1323) throw std::runtime_error("the example has order 1323");
  Section4Subgroups s{};
  s.g = ctx.whole();
  std::vector<SubId> sevens;
  for (SubId n : ctx.normal_subgroups(s.g)) {
    if (ctx.order(n) == 7) sevens.push_back(n);
    if (ctx.order(n) == 49) s.v = n;
  }
  if (sevens.size() != 2 || ctx.order(s.v) != 49) throw std::runtime_error("expected V = V1 x V2 of order 49");
  s.v1 = sevens[0];
  s.v2 = sevens[1];
  s.e = find_sylow(ctx, 3);
  s.m1 = centralizer_in(ctx, s.e, s.v1);
  s.m2 = centralizer_in(ctx, s.e, s.v2);
  s.z = centralizer_in(ctx, s.g, s.g);
  s.x = ctx.join(s.z, s.v);
  s.m1v = ctx.join(s.m1, s.v);
  s.m2v = ctx.join(s.m2, s.v);
  if (ctx.order(s.m1) != 9 || ctx.order(s.m2) != 9 || s.m1 == s.m2) {
    throw std::runtime_error("kernels of the action on V1 and V2 are not distinct maximal subgroups");
  }
  if (ctx.order(s.z) != 3) throw std::runtime_error("centre of G is not of order 3");
  return s;
}

bool Section4Report::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.second; });
}

json Section4Report::to_json(const GroupContext& ctx) const {
  json hist = json::object();
  for (const auto& [d, n] : degree_histogram) hist[std::to_string(d)] = n;
  json orders{{"G", ctx.order(sub.g)},   {"E", ctx.order(sub.e)},     {"V", ctx.order(sub.v)},
              {"V1", ctx.order(sub.v1)}, {"V2", ctx.order(sub.v2)},   {"M1", ctx.order(sub.m1)},
              {"M2", ctx.order(sub.m2)}, {"X", ctx.order(sub.x)},     {"Z", ctx.order(sub.z)},
              {"M1V", ctx.order(sub.m1v)}, {"M2V", ctx.order(sub.m2v)}};
  json flags = json::object();
  for (const auto& [name, ok] : claims) flags[name] = ok;
  return {{"order", ctx.order(sub.g)},
          {"class_count", class_count},
          {"subgroup_orders", orders},
          {"degree_histogram", hist},
          {"chi", chi},
          {"phi", phi},
          {"lifts", lifts},
          {"lift_count", lifts.size()},
          {"orbit_sizes", orbit_sizes},
          {"pair_n", pair_json(ctx, pair_n)["row"]},
          {"pair_n_order", ctx.order(pair_n.subgroup)},
          {"pair_n1_order", ctx.order(pair_n1.subgroup)},
          {"pair_n2_order", ctx.order(pair_n2.subgroup)},
          {"family1", family1},
          {"family2", family2},
          {"b_count", b_count},
          {"intersection", intersection},
          {"union_count", union_count},
          {"claims", flags},
          {"all_pass", all_pass()}};
}

Section4Report section4_report(const GroupContext& ctx) {
  Section4Report r;
  r.sub = build_section4_group(ctx);
  const auto& s = r.sub;
  auto claim = [&](const std::string& name, bool ok) { r.claims.emplace_back(name, ok); };
  const PrimeSet pi({3});
  PiAnalyzer pa(ctx, pi);
  const auto& t = ctx.table(s.g);

  r.class_count = t.size();
  for (std::size_t i = 0; i < t.size(); ++i) ++r.degree_histogram[t.degree(i)];
  claim("order_is_1323", ctx.order(s.g) == 1323);
  claim("class_count_59", r.class_count == 59);
  claim("degree_histogram", r.degree_histogram == std::map<std::uint64_t, std::size_t>{{1, 9}, {3, 38}, {9, 12}});
  claim("x_is_z_times_v", ctx.order(s.x) == 147 && ctx.intersect(s.z, s.v) == ctx.trivial() &&
                              ctx.group(s.x).is_abelian() && ctx.is_subgroup_of(s.z, s.e));

  // G-orbits on the nontrivial characters of V
  std::vector<std::size_t> orbit_of;
  auto sizes = orbit_sizes(ctx, s.v, &orbit_of);
  const std::size_t triv_v = ctx.table(s.v).trivial_row();
  for (std::size_t o = 0; o < sizes.size(); ++o) {
    if (o != orbit_of[triv_v]) r.orbit_sizes.push_back(sizes[o]);
  }
  std::sort(r.orbit_sizes.begin(), r.orbit_sizes.end());
  claim("orbit_structure", r.orbit_sizes == std::vector<std::size_t>{3, 3, 3, 3, 9, 9, 9, 9});
  std::vector<std::size_t> b_rows;
  bool b_small_orbits = true;
  for (std::size_t row = 0; row < ctx.table(s.v).size(); ++row) {
    if (row == triv_v) continue;
    const bool in_b = in_kernel(ctx, {s.v, row}, s.v1) || in_kernel(ctx, {s.v, row}, s.v2);
    if (in_b) b_rows.push_back(row);
    if (in_b != (sizes[orbit_of[row]] == 3)) b_small_orbits = false;
  }
  r.b_count = b_rows.size();
  claim("b_has_12_in_4_orbits", r.b_count == 12 && b_small_orbits);

  // Irr(G/V) restricts bijectively onto I_pi(G)
  const auto& ip = pa.ipi(s.g);
  std::vector<std::size_t> mod_v;
  for (std::size_t row = 0; row < t.size(); ++row) {
    if (in_kernel(ctx, {s.g, row}, s.v)) mod_v.push_back(row);
  }
  {
    std::set<std::size_t> hit;
    bool ok = true;
    for (auto row : mod_v) {
      const auto m = ip.member_of_row[row];
      if (!m || !hit.insert(*m).second) ok = false;
    }
    claim("bpi_candidates_restrict_bijectively", ok && hit.size() == ip.size() && mod_v.size() == 11);
  }
  r.chi = SIZE_MAX;
  for (auto row : mod_v) {
    if (t.degree(row) == 3) {
      r.chi = row;
      break;
    }
  }
  if (r.chi == SIZE_MAX) throw std::runtime_error("no degree-3 character of G/V");
  r.phi = *ip.member_of_row[r.chi];
  r.lifts = pa.lifts_of(s.g, r.phi);
  claim("lift_count_13", r.lifts.size() == 13);
  claim("lift_count_does_not_divide_order", ctx.order(s.g) % r.lifts.size() != 0);

  // chi is fully ramified over X with constituent lambda-hat, V in its kernel
  {
    const auto& cons = ctx.restriction_constituents({s.g, r.chi}, s.x);
    claim("chi_fully_ramified_over_x",
          cons.size() == 1 && cons.front().second == 3 && in_kernel(ctx, {s.x, cons.front().first}, s.v));
  }
  // lifts other than chi lie over B, three for each orbit
  {
    std::map<std::size_t, std::size_t> per_orbit;
    bool ok = true;
    const std::set<std::size_t> bset(b_rows.begin(), b_rows.end());
    for (auto psi : r.lifts) {
      if (psi == r.chi) continue;
      const auto& cons = ctx.restriction_constituents({s.g, psi}, s.v);
      if (!bset.count(cons.front().first)) ok = false;
      ++per_orbit[orbit_of[cons.front().first]];
    }
    for (const auto& [o, n] : per_orbit) ok = ok && n == 3;
    claim("each_b_orbit_gives_3_lifts", ok && per_orbit.size() == 4);
  }

  const auto n = make_series(pi, {ctx.subgroup(ctx.trivial()), ctx.subgroup(s.v), ctx.subgroup(s.g)});
  const auto n1 =
      make_series(pi, {ctx.subgroup(ctx.trivial()), ctx.subgroup(s.v), ctx.subgroup(s.m1v), ctx.subgroup(s.g)});
  const auto n2 =
      make_series(pi, {ctx.subgroup(ctx.trivial()), ctx.subgroup(s.v), ctx.subgroup(s.m2v), ctx.subgroup(s.g)});
  SeriesAnalyzer sa(pa, n), sa1(pa, n1), sa2(pa, n2);
  LiftAnalyzer la(sa), la1(sa1), la2(sa2);

  claim("lifts_are_chain_lifts_for_n",
        std::all_of(r.lifts.begin(), r.lifts.end(), [&](std::size_t psi) { return la.is_chain_pi_lift(psi); }));

  r.pair_n = sa.self_stabilizing_pair(sa.top_level(), r.chi).pair;
  r.pair_n1 = sa1.self_stabilizing_pair(sa1.top_level(), r.chi).pair;
  r.pair_n2 = sa2.self_stabilizing_pair(sa2.top_level(), r.chi).pair;
  claim("pair_for_n_is_g_chi", r.pair_n == CharacterPair{s.g, r.chi});
  auto is_delta = [&](const CharacterPair& p, SubId mv) {
    if (p.subgroup != mv || ctx.table(mv).degree(p.row) != 1) return false;
    const auto induced = ctx.find_row(ctx.induce(ctx.character(p.character()), s.g));
    return induced == r.chi && in_kernel(ctx, p.character(), s.v);
  };
  claim("pair_for_n1_is_m1v_delta1", is_delta(r.pair_n1, s.m1v));
  claim("pair_for_n2_is_m2v_delta2", is_delta(r.pair_n2, s.m2v));
  const CharacterPair d1 = r.pair_n1, d2 = r.pair_n2;

  claim("delta1_inductive_for_n", la.is_inductive_pair(d1).inductive);
  claim("delta2_inductive_for_n", la.is_inductive_pair(d2).inductive);
  claim("delta1_inductive_for_n1", la1.is_inductive_pair(d1).inductive);
  claim("delta2_inductive_for_n2", la2.is_inductive_pair(d2).inductive);
  claim("delta1_not_inductive_for_n2", !la2.is_inductive_pair(d1).inductive);
  claim("delta2_not_inductive_for_n1", !la1.is_inductive_pair(d2).inductive);
  claim("deltas_not_self_stabilizing_for_n",
        !conjugating_element(ctx, d1, r.pair_n) && !conjugating_element(ctx, d2, r.pair_n));

  claim("derived_m1v_is_v2", ctx.derived(s.m1v) == s.v2);
  claim("derived_m2v_is_v1", ctx.derived(s.m2v) == s.v1);
  auto bound = [&](SubId mv) { return pi.pi_prime_part(ctx.order(mv) / ctx.order(ctx.derived(mv))); };
  claim("bound_m1v_is_7", bound(s.m1v) == 7);
  claim("bound_m2v_is_7", bound(s.m2v) == 7);

  const auto f1 = la1.main2_lift_family(r.phi);
  const auto f2 = la2.main2_lift_family(r.phi);
  for (const auto& i : f1.images) {
    if (i) r.family1.push_back(*i);
  }
  for (const auto& i : f2.images) {
    if (i) r.family2.push_back(*i);
  }
  std::sort(r.family1.begin(), r.family1.end());
  std::sort(r.family2.begin(), r.family2.end());
  claim("family1_from_m1v_delta1", f1.chi == r.chi && f1.pair == d1);
  claim("family2_from_m2v_delta2", f2.chi == r.chi && f2.pair == d2);
  claim("family1_has_7", f1.ok() && r.family1.size() == 7 && f1.bound == 7);
  claim("family2_has_7", f2.ok() && r.family2.size() == 7 && f2.bound == 7);

  auto only_chi = [&](const std::vector<std::size_t>& fam, const LiftAnalyzer& other) {
    std::vector<std::size_t> hits;
    for (auto psi : fam) {
      if (other.is_chain_pi_lift(psi)) hits.push_back(psi);
    }
    return hits == std::vector<std::size_t>{r.chi};
  };
  claim("only_chi_in_family1_is_n2_lift", only_chi(r.family1, la2));
  claim("only_chi_in_family2_is_n1_lift", only_chi(r.family2, la1));

  {
    // (delta_1 zeta)^G with zeta != 1: degree-3 constituents on M_2 V that are no pi-lifts,
    // and all three conditions of the equivalence fail for N_2.
    bool degrees = true, conditions = true;
    for (auto psi : r.family1) {
      if (psi == r.chi) continue;
      for (const auto& [row, mult] : ctx.restriction_constituents({s.g, psi}, s.m2v)) {
        if (ctx.table(s.m2v).degree(row) != 3 || pa.is_pi_lift({s.m2v, row})) degrees = false;
      }
      const auto m = la2.check_main1(psi);
      if (m.condition1 || m.condition2 || m.condition3) conditions = false;
    }
    claim("family1_degree3_constituents_on_m2v", degrees);
    claim("family1_main1_fails_for_n2", conditions);
  }

  std::set_intersection(r.family1.begin(), r.family1.end(), r.family2.begin(), r.family2.end(),
                        std::back_inserter(r.intersection));
  std::vector<std::size_t> uni;
  std::set_union(r.family1.begin(), r.family1.end(), r.family2.begin(), r.family2.end(), std::back_inserter(uni));
  r.union_count = uni.size();
  auto sorted_lifts = r.lifts;
  std::sort(sorted_lifts.begin(), sorted_lifts.end());
  claim("families_meet_in_chi", r.intersection == std::vector<std::size_t>{r.chi});
  claim("families_union_13", r.union_count == 13);
  claim("families_union_is_all_lifts", uni == sorted_lifts);
  claim("bpi_chain_for_n_is_irr_g_mod_v", sa.bpi(sa.top_level()).rows == mod_v);
  return r;
}

// ---------------------------------------------------------------------------
// Reports

void VerificationReport::record(const std::string& property, bool ok, const std::function<json()>& witness) {
  auto& tally = properties[property];
  if (ok) {
    ++tally.pass;
    return;
  }
  ++tally.fail;
  json w = witness ? witness() : json::object();
  w["property"] = property;
  anomalies.push_back(std::move(w));
}

void VerificationReport::merge(const VerificationReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  for (const auto& [name, t] : other.properties) {
    properties[name].pass += t.pass;
    properties[name].fail += t.fail;
  }
  anomalies.insert(anomalies.end(), other.anomalies.begin(), other.anomalies.end());
  seconds += other.seconds;
}

json VerificationReport::to_json() const {
  json props = json::object();
  for (const auto& [name, t] : properties) props[name] = {{"pass", t.pass}, {"fail", t.fail}};
  return {{"entries", entries}, {"properties", props}, {"anomalies", anomalies}, {"anomaly_count", anomalies.size()}};
}

// ---------------------------------------------------------------------------
// Suites

VerificationReport run_table_suite(const GroupContext& ctx, const std::string& name, const SuiteOptions& opt) {
  VerificationReport rep;
  const auto& top = ctx.top();
  const auto& t = ctx.table(ctx.whole());
  const auto err = t.verify_orthogonality();
  rep.record("orthogonality", !err, [&] { return json{{"group", name}, {"detail", *err}}; });
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < t.size(); ++i) sum += t.degree(i) * t.degree(i);
  rep.record("degree_sum", sum == top.order(), [&] { return json{{"group", name}, {"sum", sum}}; });

  std::mt19937_64 rng(opt.seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  for (std::size_t k = 0; k < opt.frobenius_triples; ++k) {
    std::vector<Elem> gens{static_cast<Elem>(pick(top.order()))};
    if (pick(2) == 1) gens.push_back(static_cast<Elem>(pick(top.order())));
    const SubId h = ctx.intern(generate(top, gens));
    const std::size_t theta = pick(ctx.table(h).size());
    const std::size_t chi = pick(t.size());
    const auto th = ctx.character({h, theta});
    const auto ch = ctx.character({ctx.whole(), chi});
    const Cyc lhs = ctx.inner_product(ctx.induce(th, ctx.whole()), ch);
    const Cyc rhs = ctx.inner_product(th, ctx.restrict(ch, h));
    rep.record("frobenius_reciprocity", lhs == rhs, [&] {
      return json{{"group", name}, {"subgroup_order", ctx.order(h)}, {"theta", theta}, {"chi", chi}};
    });
  }
  return rep;
}

namespace {

/// Row ids of a subgroup's table grouped by exact equality on pi-classes.
class PartialIds {
 public:
  explicit PartialIds(const PiAnalyzer& pa) : pa_(pa) {}
  const std::vector<std::size_t>& of(SubId h) {
    auto it = ids_.find(h);
    if (it != ids_.end()) return it->second;
    const auto& t = pa_.context().table(h);
    const auto pcs = pi_classes(pa_.context(), h, pa_.pi()).classes;
    std::map<std::vector<Cyc>, std::size_t> seen;
    std::vector<std::size_t> out(t.size());
    for (std::size_t r = 0; r < t.size(); ++r) {
      std::vector<Cyc> key;
      for (auto c : pcs) key.push_back(t.value(r, c));
      out[r] = seen.emplace(std::move(key), seen.size()).first->second;
    }
    return ids_.emplace(h, std::move(out)).first->second;
  }

 private:
  const PiAnalyzer& pa_;
  std::map<SubId, std::vector<std::size_t>> ids_;
};

bool homogeneous_along(const GroupContext& ctx, const CharacterPair& p, const std::vector<SubId>& levels) {
  for (SubId n : levels) {
    if (ctx.restriction_constituents(p.character(), ctx.intersect(p.subgroup, n)).size() != 1) return false;
  }
  return true;
}

std::optional<std::size_t> product_row(const GroupContext& ctx, SubId v, std::size_t a, std::size_t b) {
  return ctx.find_row(ctx.product(ctx.character({v, a}), ctx.character({v, b})));
}

void series_suite(VerificationReport& rep, const SeriesAnalyzer& sa, const json& where) {
  const auto& ctx = sa.context();
  const auto& pa = sa.pi_analyzer();
  const LiftAnalyzer la(sa);
  const SubId g = ctx.whole();
  const std::size_t top_level = sa.top_level();
  const auto& t = ctx.table(g);
  const auto& pi = pa.pi();
  auto at = [&](json extra) {
    json w = where;
    for (auto& [k, v] : extra.items()) w[k] = v;
    return w;
  };

  // Self-stabilizing pairs
  std::vector<const SelfStabilizingPair*> pairs(t.size(), nullptr);
  for (std::size_t row = 0; row < t.size(); ++row) {
    try {
      pairs[row] = &sa.self_stabilizing_pair(top_level, row);
    } catch (const AnomalyError& e) {
      rep.record("pair_search", false, [&] { return at({{"chi", row}, {"detail", e.what()}}); });
      continue;
    }
    const auto& ssp = *pairs[row];
    rep.record("pair_search", true, nullptr);
    bool towers_ok = ssp.nonconjugate_towers.empty();
    for (const auto& o : ssp.outcomes) towers_ok = towers_ok && o.candidates.size() == 1;
    rep.record("tower_pairs_conjugate", towers_ok, [&] {
      json counts = json::array();
      for (const auto& o : ssp.outcomes) counts.push_back(o.candidates.size());
      return at({{"chi", row}, {"candidates_per_tower", counts}, {"nonconjugate", ssp.nonconjugate_towers}});
    });
    const std::uint64_t deg = ctx.table(ssp.pair.subgroup).degree(ssp.pair.row);
    rep.record("pair_degree", deg * (ctx.order(g) / ctx.order(ssp.pair.subgroup)) == t.degree(row),
               [&] { return at({{"chi", row}}); });
    rep.record("pair_factored", ssp.factorization.has_value(), [&] { return at({{"chi", row}}); });
  }

  // B_pi(G:N) and the lift system it generates
  const auto& bpi = sa.bpi(top_level);
  rep.record("bpi_bijection", bpi.bijective, [&] { return at({{"bpi_rows", bpi.rows}}); });
  const auto system = lift_system_bpi(sa);
  const auto compat = check_compatible_lift_set(pa, system);
  std::map<std::string, std::size_t> failed;
  for (const auto& f : compat.failures) {
    failed[f["check"].get<std::string>()]++;
    rep.anomalies.push_back(at({{"property", "compatible_" + f["check"].get<std::string>()}, {"detail", f}}));
  }
  for (const auto& [name, n] : compat.checks) {
    auto& tally = rep.properties["compatible_" + name];
    tally.fail += failed[name];
    tally.pass += n - failed[name];
  }

  // Main1 for every character
  for (std::size_t row = 0; row < t.size(); ++row) {
    if (!pairs[row]) continue;
    const auto m = la.check_main1(row);
    rep.record("main1", m.agree(), [&] { return at({{"report", main1_json(la, m)}}); });
  }

  // Main2 for every partial character
  const auto& ip = pa.ipi(g);
  for (std::size_t j = 0; j < ip.size(); ++j) {
    try {
      const auto m = la.main2_lift_family(j);
      rep.record("main2", m.ok(), [&] { return at({{"report", main2_json(la, m)}}); });
    } catch (const AnomalyError& e) {
      rep.record("main2", false, [&] { return at({{"phi", j}, {"detail", e.what()}}); });
    }
  }

  // Lemma degree and commonchains, with L = B_pi(. : N)
  PartialIds pids(pa);
  const std::set<std::size_t> bset(bpi.rows.begin(), bpi.rows.end());
  std::map<std::pair<std::size_t, std::size_t>, SubId> stab_cache;
  auto stab = [&](std::size_t row, std::size_t idx, const CharacterTower& tw) {
    auto key = std::make_pair(row, idx);
    auto it = stab_cache.find(key);
    if (it != stab_cache.end()) return it->second;
    return stab_cache[key] = sa.tower_stabilizer(top_level, tw);
  };
  for (std::size_t jb = 0; jb < bpi.rows.size(); ++jb) {
    const std::size_t psi = bpi.rows[jb];
    if (!pairs[psi] || !bpi.member[jb]) continue;
    const auto& ssp = *pairs[psi];
    const auto& tau = ssp.pair;
    const std::uint64_t tdeg = ctx.table(tau.subgroup).degree(tau.row);
    rep.record("degree", pi.is_pi_number(tdeg) && pa.is_pi_special(tau.character()) &&
                             ip.member_of_row[psi] == bpi.member[jb],
               [&] { return at({{"chi", psi}}); });

    const auto& tpsi = sa.towers(top_level, psi);
    for (std::size_t chi : pa.lifts_of(g, *bpi.member[jb])) {
      if (!la.is_chain_pi_lift(chi)) continue;
      const auto& tchi = sa.towers(top_level, chi);
      for (std::size_t a = 0; a < std::min(tchi.size(), kTowerConjugacyCap); ++a) {
        for (std::size_t b = 0; b < std::min(tpsi.size(), kTowerConjugacyCap); ++b) {
          bool matches = true;
          for (std::size_t i = 0; i <= top_level && matches; ++i) {
            const auto& ids = pids.of(sa.levels()[i]);
            matches = ids[tchi[a].rows[i]] == ids[tpsi[b].rows[i]];
          }
          if (!matches) continue;
          const SubId su = stab(chi, a, tchi[a]), st = stab(psi, b, tpsi[b]);
          rep.record("commonchains", ctx.is_subgroup_of(su, st), [&] {
            return at({{"psi", psi}, {"chi", chi}, {"tower_chi", tchi[a].rows}, {"tower_psi", tpsi[b].rows}});
          });
        }
      }
    }
  }

  // Corollary selfind, Lemma indself and Corollary map
  for (std::size_t row = 0; row < t.size(); ++row) {
    if (!pairs[row]) continue;
    const auto& p = pairs[row]->pair;
    if (!pa.is_pi_special(p.character())) continue;
    rep.record("selfind", la.is_inductive_pair(p).inductive, [&] { return at({{"chi", row}}); });

    const SubId v = p.subgroup;
    const auto& tv = ctx.table(v);
    std::set<std::size_t> images;
    bool injective = true;
    for (std::size_t beta = 0; beta < tv.size(); ++beta) {
      if (!pa.is_pi_prime_special({v, beta})) continue;
      const auto ab = product_row(ctx, v, p.row, beta);
      const auto induced = ab ? ctx.find_row(ctx.induce(ctx.character({v, *ab}), g)) : std::nullopt;
      if (!induced || !images.insert(*induced).second) injective = false;

      if (!homogeneous_along(ctx, {v, beta}, sa.levels())) continue;
      bool ok = ab.has_value() && induced.has_value();
      if (ok) {
        const auto& other = sa.self_stabilizing_pair(top_level, *induced).pair;
        ok = conjugating_element(ctx, other, {v, *ab}).has_value();
      }
      rep.record("indself", ok, [&] { return at({{"chi", row}, {"beta", beta}}); });
    }
    rep.record("map_injection", injective, [&] { return at({{"chi", row}}); });
  }

  // Inductive pairs on every pair subgroup: Lemma inductive, factored, containment
  std::set<SubId> subgroups;
  for (const auto* p : pairs) {
    if (p) subgroups.insert(p->pair.subgroup);
  }
  for (SubId v : subgroups) {
    const auto& tv = ctx.table(v);
    for (std::size_t row = 0; row < tv.size(); ++row) {
      const CharacterPair p{v, row};
      const auto check = la.is_inductive_pair(p);
      const auto fac = pa.factorize(p.character());
      if (fac) {
        const bool linear = ctx.table(v).degree(fac->beta.row) == 1;
        const bool alpha = la.is_inductive_pair({v, fac->alpha.row}).inductive;
        rep.record("factored", check.inductive == (linear && alpha), [&] {
          return at({{"pair", pair_json(ctx, p)}, {"beta_linear", linear}, {"alpha_inductive", alpha}});
        });
      }
      if (!check.inductive) continue;
      const auto chi = ctx.find_row(ctx.induce(ctx.character(p.character()), g));
      const bool lemma = chi && la.is_chain_pi_lift(*chi) && fac.has_value();
      rep.record("inductive", lemma, [&] { return at({{"pair", pair_json(ctx, p)}}); });
      if (!chi || !pairs[*chi]) continue;
      const bool contained = conjugate_containing(ctx, v, pairs[*chi]->pair.subgroup).has_value();
      rep.record("containment", contained, [&] { return at({{"pair", pair_json(ctx, p)}, {"chi", *chi}}); });
    }
  }
}

}  // namespace

VerificationReport run_property_suite(const GroupContext& ctx, const std::string& name, const PrimeSet& pi,
                                      const SuiteOptions& opt) {
  VerificationReport rep;
  const auto start = std::chrono::steady_clock::now();
  PiAnalyzer pa(ctx, pi);
  const SubId g = ctx.whole();
  json entry{{"group", name}, {"order", ctx.top().order()}, {"pi", pi.to_string()}};
  try {
    const auto& ip = pa.ipi(g);
    rep.record("ipi_count", ip.size() == ip.classes.classes.size(), [&] {
      return json{{"group", name}, {"pi", pi.to_string()}, {"ipi", ip.size()}};
    });
    entry["ipi_size"] = ip.size();
  } catch (const AnomalyError& e) {
    rep.record("ipi_count", false, [&] { return json{{"group", name}, {"pi", pi.to_string()}, {"detail", e.what()}}; });
    rep.entries.push_back(entry);
    return rep;
  }

  const auto en = enumerate_normal_pi_series(ctx.top(), pi, opt.series_cap);
  std::vector<std::size_t> chosen = opt.series_indices;
  if (chosen.empty()) {
    for (std::size_t i = 0; i < en.series.size(); ++i) chosen.push_back(i);
  }
  json sers = json::array();
  for (std::size_t i : chosen) {
    if (i >= en.series.size()) throw std::out_of_range("series index " + std::to_string(i) + " out of range");
    const auto& s = en.series[i];
    const json where{{"group", name}, {"pi", pi.to_string()}, {"series", s.describe()}, {"series_index", i}};
    SeriesAnalyzer sa(pa, s);
    const std::size_t before = rep.anomalies.size();
    series_suite(rep, sa, where);
    sers.push_back({{"index", i}, {"series", s.describe()}, {"anomalies", rep.anomalies.size() - before}});
  }
  entry["series_count"] = en.series.size();
  entry["series_truncated"] = en.truncated;
  entry["series"] = sers;
  rep.entries.push_back(entry);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<PrimeSet> prime_subsets(std::uint64_t n) {
  const auto ps = prime_factors(n);
  std::vector<PrimeSet> out;
  for (std::uint64_t mask = 1; mask < (1ULL << ps.size()); ++mask) {
    std::vector<std::uint64_t> sel;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (mask >> i & 1) sel.push_back(ps[i]);
    }
    out.emplace_back(std::move(sel));
  }
  std::stable_sort(out.begin(), out.end(), [](const PrimeSet& a, const PrimeSet& b) {
    if (a.primes().size() != b.primes().size()) return a.primes().size() < b.primes().size();
    return a.primes() < b.primes();
  });
  return out;
}

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> out;
  for (const char* name : {"c2", "c3", "c4", "c5", "c6", "c7", "c12", "c2xc2", "d8", "d10", "d12", "q8", "s3", "s4",
                           "a4", "f20", "f21", "dic12", "sl23", "gl23", "c3xs3", "s3xs3", "c2xa4", "e27",
                           "section4"}) {
    std::string n = name;
    out.push_back({n, [n] { return builtin::by_name(n); }, {}});
  }
  return out;
}

VerificationReport run_corpus(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opt, std::size_t jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<VerificationReport> parts(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      const auto& c = corpus[i];
      GroupContext ctx(c.make());
      SuiteOptions o = opt;
      o.seed = opt.seed + i;
      VerificationReport rep = run_table_suite(ctx, c.name, o);
      const auto pis = c.pis.empty() ? prime_subsets(ctx.top().order()) : c.pis;
      for (const auto& pi : pis) {
        if (!is_pi_separable(ctx.top(), pi).separable) continue;
        rep.merge(run_property_suite(ctx, c.name, pi, o));
      }
      parts[i] = std::move(rep);
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t j = 1; j < std::max<std::size_t>(jobs, 1); ++j) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();
  VerificationReport out;
  for (const auto& p : parts) out.merge(p);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace pilift
