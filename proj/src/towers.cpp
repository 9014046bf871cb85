#include "pilift/towers.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pilift {

namespace {

std::vector<std::uint64_t> moved_residues(const GroupContext& ctx, CharacterPair p, SubId target, Elem g) {
  const Group& top = ctx.top();
  const Elem g_inv = top.inverse(g);
  const auto& res = ctx.table(p.subgroup).row_residues(p.row);
  const std::size_t r = ctx.classes(target).size();
  std::vector<std::uint64_t> out(r);
  for (std::size_t c = 0; c < r; ++c) {
    // theta^g(y) = theta(g y g^-1)
    const Elem x = top.conjugate(ctx.class_rep(target, c), g_inv);
    out[c] = res[ctx.class_in(p.subgroup, x)];
  }
  return out;
}

bool conjugates_into(const GroupContext& ctx, const std::vector<Elem>& gens, SubId k, Elem g) {
  const auto& target = ctx.subgroup(k);
  for (Elem x : gens) {
    if (!target.contains(ctx.top().conjugate(x, g))) return false;
  }
  return true;
}

}  // namespace

CharacterPair conjugate_pair(const GroupContext& ctx, CharacterPair p, Elem g) {
  const SubId target = ctx.conjugate(p.subgroup, g);
  const auto moved = moved_residues(ctx, p, target, g);
  const auto& t = ctx.table(target);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.row_residues(i) == moved) return {target, i};
  }
  throw CharTableError("conjugate character not found in table");
}

std::optional<Elem> conjugating_element(const GroupContext& ctx, CharacterPair p, CharacterPair q,
                                        const std::vector<Elem>& within) {
  if (ctx.order(p.subgroup) != ctx.order(q.subgroup)) return std::nullopt;
  if (ctx.table(p.subgroup).degree(p.row) != ctx.table(q.subgroup).degree(q.row)) return std::nullopt;
  const auto gens = generating_set(ctx.top(), ctx.subgroup(p.subgroup));
  const auto& want = ctx.table(q.subgroup).row_residues(q.row);
  auto test = [&](Elem g) {
    return conjugates_into(ctx, gens, q.subgroup, g) && moved_residues(ctx, p, q.subgroup, g) == want;
  };
  if (within.empty()) {
    for (Elem g = 0; g < ctx.top().order(); ++g) {
      if (test(g)) return g;
    }
  } else {
    for (Elem g : within) {
      if (test(g)) return g;
    }
  }
  return std::nullopt;
}

std::optional<Elem> conjugate_containing(const GroupContext& ctx, SubId h, SubId k) {
  if (ctx.order(k) % ctx.order(h) != 0) return std::nullopt;
  const auto gens = generating_set(ctx.top(), ctx.subgroup(h));
  const Group& top = ctx.top();
  for (Elem g = 0; g < top.order(); ++g) {
    // H <= g^-1 K g  iff  g H g^-1 <= K
    if (conjugates_into(ctx, gens, k, top.inverse(g))) return g;
  }
  return std::nullopt;
}

SeriesAnalyzer::SeriesAnalyzer(const PiAnalyzer& pa, const NormalPiSeries& series)
    : pa_(pa), ctx_(pa.context()), series_(series) {
  for (const auto& s : series_.chain) levels_.push_back(ctx_.intern(s));
  if (levels_.empty() || levels_.front() != ctx_.trivial()) throw std::invalid_argument("series must start at 1");
}

const Constituents& SeriesAnalyzer::down(std::size_t i, std::size_t row) const {
  return down_cache_.get({i, row}, [&] { return ctx_.restriction_constituents({levels_[i], row}, levels_[i - 1]); });
}

const std::vector<CharacterTower>& SeriesAnalyzer::towers(std::size_t k, std::size_t row) const {
  return tower_cache_.get({k, row}, [&] {
    std::vector<CharacterTower> partial{CharacterTower{std::vector<std::size_t>(k + 1, 0)}};
    partial[0].rows[k] = row;
    for (std::size_t i = k; i > 0; --i) {
      std::vector<CharacterTower> next;
      for (const auto& t : partial) {
        for (const auto& [r, mult] : down(i, t.rows[i])) {
          CharacterTower u = t;
          u.rows[i - 1] = r;
          next.push_back(std::move(u));
        }
      }
      partial = std::move(next);
    }
    std::sort(partial.begin(), partial.end());
    return partial;
  });
}

SubId SeriesAnalyzer::tower_stabilizer(std::size_t k, const CharacterTower& t) const {
  std::vector<const std::vector<std::vector<std::uint16_t>>*> actions;
  for (std::size_t i = 1; i <= k; ++i) actions.push_back(&ctx_.row_action(levels_[i]));
  std::vector<Elem> out;
  for (Elem g : ctx_.subgroup(levels_[k]).members()) {
    bool fixed = true;
    for (std::size_t i = 1; i <= k && fixed; ++i) fixed = (*actions[i - 1])[g][t.rows[i]] == t.rows[i];
    if (fixed) out.push_back(g);
  }
  return ctx_.intern(Subgroup(ctx_.top().order(), std::move(out)));
}

bool SeriesAnalyzer::level_conditions(std::size_t k, const CharacterPair& p, const CharacterTower& t,
                                      std::vector<PairLevel>* out) const {
  std::vector<PairLevel> levels;
  for (std::size_t i = 0; i <= k; ++i) {
    const SubId s = ctx_.intersect(p.subgroup, levels_[i]);
    const auto& cons = ctx_.restriction_constituents(p.character(), s);
    if (cons.size() != 1) return false;
    const auto [row, mult] = cons.front();
    // (tau_i)^{N_i} = nu_i: equal degrees and tau_i under nu_i.
    const std::uint64_t index = ctx_.order(levels_[i]) / ctx_.order(s);
    if (ctx_.table(s).degree(row) * index != ctx_.table(levels_[i]).degree(t.rows[i])) return false;
    const auto below = ctx_.restriction_constituents({levels_[i], t.rows[i]}, s);
    if (std::none_of(below.begin(), below.end(), [&](const auto& e) { return e.first == row; })) return false;
    levels.push_back({s, row, mult});
  }
  if (out) *out = std::move(levels);
  return true;
}

TowerOutcome SeriesAnalyzer::tau_search(std::size_t k, const CharacterTower& t) const {
  TowerOutcome out{t, tower_stabilizer(k, t), {}};
  const SubId ambient = levels_[k];
  const CharRef chi{ambient, t.rows[k]};
  const std::uint64_t index = ctx_.order(ambient) / ctx_.order(out.stabilizer);
  const std::uint64_t chi_degree = ctx_.table(ambient).degree(chi.row);
  if (chi_degree % index != 0) return out;
  const auto& tt = ctx_.table(out.stabilizer);
  // tau^G = chi iff tau lies under chi with tau(1) |G:T| = chi(1).
  for (const auto& [row, mult] : ctx_.restriction_constituents(chi, out.stabilizer)) {
    if (tt.degree(row) * index != chi_degree) continue;
    if (level_conditions(k, {out.stabilizer, row}, t, nullptr)) out.candidates.push_back(row);
  }
  return out;
}

const SelfStabilizingPair& SeriesAnalyzer::self_stabilizing_pair(std::size_t k, std::size_t row) const {
  return pair_cache_.get({k, row}, [&] {
    const auto& all = towers(k, row);
    SelfStabilizingPair ssp;
    ssp.tower_count = all.size();
    const std::size_t limit = std::min(all.size(), kTowerConjugacyCap);
    for (std::size_t j = 0; j < limit; ++j) ssp.outcomes.push_back(tau_search(k, all[j]));
    const auto& first = ssp.outcomes.front();
    if (first.candidates.size() != 1) {
      throw AnomalyError("canonical tower of row " + std::to_string(row) + " on level " + std::to_string(k) +
                         " yields " + std::to_string(first.candidates.size()) + " candidates for tau");
    }
    ssp.tower = first.tower;
    ssp.pair = {first.stabilizer, first.candidates.front()};
    level_conditions(k, ssp.pair, ssp.tower, &ssp.levels);
    ssp.factorization = pa_.factorize(ssp.pair.character());
    ssp.conjugacy_checked = all.size() <= kTowerConjugacyCap;
    const auto& members = ctx_.subgroup(levels_[k]).members();
    for (std::size_t j = 1; j < ssp.outcomes.size(); ++j) {
      const auto& o = ssp.outcomes[j];
      if (o.candidates.size() != 1) continue;
      if (!conjugating_element(ctx_, ssp.pair, {o.stabilizer, o.candidates.front()}, members)) {
        ssp.nonconjugate_towers.push_back(j);
      }
    }
    return ssp;
  });
}

const BpiChain& SeriesAnalyzer::bpi(std::size_t k) const {
  return bpi_cache_.get(k, [&] {
    BpiChain out;
    const SubId n = levels_[k];
    const auto& ip = pa_.ipi(n);
    for (std::size_t row = 0; row < ctx_.table(n).size(); ++row) {
      if (pa_.is_pi_special(self_stabilizing_pair(k, row).pair.character())) {
        out.rows.push_back(row);
        out.member.push_back(ip.member_of_row[row]);
      }
    }
    std::set<std::size_t> hit;
    bool all = true;
    for (const auto& m : out.member) {
      if (!m || !hit.insert(*m).second) all = false;
    }
    out.bijective = all && hit.size() == ip.size();
    return out;
  });
}

LiftSystem lift_system_bpi(const SeriesAnalyzer& sa) {
  LiftSystem out;
  out.levels = sa.levels();
  for (std::size_t k = 0; k < out.levels.size(); ++k) out.members.push_back(sa.bpi(k).rows);
  return out;
}

CompatibilityReport check_compatible_lift_set(const PiAnalyzer& pa, const LiftSystem& system) {
  const GroupContext& ctx = pa.context();
  CompatibilityReport rep;
  auto fail = [&](const char* check, std::size_t level, std::size_t row, nlohmann::json extra = {}) {
    nlohmann::json j{{"check", check}, {"level", level}, {"row", row}};
    if (!extra.is_null()) j["detail"] = std::move(extra);
    rep.failures.push_back(std::move(j));
  };

  for (std::size_t k = 0; k < system.levels.size(); ++k) {
    const SubId n = system.levels[k];
    const auto& ip = pa.ipi(n);
    const std::set<std::size_t> members(system.members[k].begin(), system.members[k].end());

    // (1) restriction is a bijection onto I_pi(N)
    ++rep.checks["axiom1"];
    std::set<std::size_t> hit;
    bool bijective = true;
    for (std::size_t row : system.members[k]) {
      const auto m = ip.member_of_row[row];
      if (!m || !hit.insert(*m).second) bijective = false;
    }
    if (!bijective || hit.size() != ip.size()) fail("axiom1", k, 0);

    // (2) constituents on lower members lie in L(M)
    for (std::size_t j = 0; j < k; ++j) {
      const std::set<std::size_t> lower(system.members[j].begin(), system.members[j].end());
      for (std::size_t row : system.members[k]) {
        ++rep.checks["axiom2"];
        for (const auto& [r, mult] : ctx.restriction_constituents({n, row}, system.levels[j])) {
          if (!lower.count(r)) {
            fail("axiom2", k, row, {{"lower_level", j}, {"constituent", r}});
            break;
          }
        }
      }
    }

    const auto& action = ctx.row_action(n);
    const auto& t = ctx.table(n);
    const auto& pcs = ip.classes.classes;
    std::map<std::vector<Cyc>, std::size_t> partial_id;
    std::vector<std::size_t> pid(t.size());
    for (std::size_t r = 0; r < t.size(); ++r) {
      std::vector<Cyc> key;
      for (auto c : pcs) key.push_back(t.value(r, c));
      pid[r] = partial_id.emplace(std::move(key), partial_id.size()).first->second;
    }
    for (std::size_t row : system.members[k]) {
      ++rep.checks["conjugacy"];
      ++rep.checks["stabilizer"];
      bool closed = true, same = true;
      for (Elem g = 0; g < ctx.top().order(); ++g) {
        const std::size_t moved = action[g][row];
        if (!members.count(moved)) closed = false;
        // g fixes alpha^0 exactly when it fixes alpha
        if ((moved == row) != (pid[moved] == pid[row])) same = false;
      }
      if (!closed) fail("conjugacy", k, row);
      if (!same) fail("stabilizer", k, row);
    }
  }
  return rep;
}

nlohmann::json pair_json(const GroupContext& ctx, const CharacterPair& p) {
  return {{"subgroup_order", ctx.order(p.subgroup)},
          {"members", ctx.subgroup(p.subgroup).members()},
          {"row", p.row},
          {"degree", ctx.table(p.subgroup).degree(p.row)}};
}

nlohmann::json tower_json(const SeriesAnalyzer& sa, std::size_t k, const CharacterTower& t) {
  nlohmann::json levels = nlohmann::json::array();
  for (std::size_t i = 0; i <= k; ++i) {
    const SubId n = sa.levels()[i];
    levels.push_back({{"order", sa.context().order(n)},
                      {"row", t.rows[i]},
                      {"degree", sa.context().table(n).degree(t.rows[i])}});
  }
  return levels;
}

nlohmann::json self_stabilizing_pair_json(const SeriesAnalyzer& sa, const SelfStabilizingPair& ssp) {
  const auto& ctx = sa.context();
  const std::size_t k = ssp.tower.rows.size() - 1;
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : ssp.levels) {
    levels.push_back({{"order", ctx.order(l.subgroup)}, {"row", l.row}, {"multiplicity", l.multiplicity}});
  }
  nlohmann::json out{{"tower", tower_json(sa, k, ssp.tower)},
                     {"pair", pair_json(ctx, ssp.pair)},
                     {"levels", levels},
                     {"tower_count", ssp.tower_count},
                     {"conjugacy_checked", ssp.conjugacy_checked},
                     {"nonconjugate_towers", ssp.nonconjugate_towers}};
  nlohmann::json outcomes = nlohmann::json::array();
  for (const auto& o : ssp.outcomes) outcomes.push_back({{"rows", o.tower.rows}, {"candidates", o.candidates}});
  out["outcomes"] = outcomes;
  if (ssp.factorization) {
    out["factorization"] = {{"alpha", ssp.factorization->alpha.row}, {"beta", ssp.factorization->beta.row}};
  } else {
    out["factorization"] = nullptr;
  }
  return out;
}

}  // namespace pilift
