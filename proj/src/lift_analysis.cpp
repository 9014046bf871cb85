#include "pilift/lift_analysis.hpp"

#include <algorithm>
#include <set>

namespace pilift {

LiftAnalyzer::LiftAnalyzer(const SeriesAnalyzer& sa) : sa_(sa) {}

const ChainLiftCheck& LiftAnalyzer::chain_lift(std::size_t row) const {
  return chain_cache_.get(row, [&] {
    const auto& ctx = context();
    const auto& levels = sa_.levels();
    const CharRef chi{levels.back(), row};
    ChainLiftCheck out;
    out.is_lift = true;
    for (SubId n : levels) {
      ChainLiftLevel lvl;
      for (const auto& [r, mult] : ctx.restriction_constituents(chi, n)) {
        lvl.constituents.push_back(r);
        const bool ok = is_pi_lift({n, r});
        lvl.is_lift.push_back(ok);
        out.is_lift = out.is_lift && ok;
      }
      out.levels.push_back(std::move(lvl));
    }
    return out;
  });
}

InductiveCheck LiftAnalyzer::is_inductive_pair(const CharacterPair& p) const {
  const auto& ctx = context();
  const auto& levels = sa_.levels();
  InductiveCheck out{p, {}, false, std::nullopt, {}};
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const SubId n = levels[i];
    const SubId s = ctx.intersect(p.subgroup, n);
    auto failed = [&](std::string why) {
      out.failed_level = i;
      out.reason = std::move(why);
      return out;
    };
    const auto& cons = ctx.restriction_constituents(p.character(), s);
    if (cons.size() != 1) return failed("restriction is not homogeneous");
    const auto [eta, a] = cons.front();
    const auto induced = ctx.induce(ctx.character({s, eta}), n);
    const auto row = ctx.find_row(induced);
    if (!row) return failed("eta^N is reducible");
    const auto member = pi_analyzer().ipi(n).member_of_row[*row];
    if (!member) return failed("(eta^N)^0 is reducible");
    out.levels.push_back({s, eta, a, *row, *member});
  }
  out.inductive = true;
  return out;
}

Main1Report LiftAnalyzer::check_main1(std::size_t row) const {
  const auto& ssp = sa_.self_stabilizing_pair(sa_.top_level(), row);
  Main1Report r;
  r.chi = {sa_.levels().back(), row};
  r.pair = ssp.pair;
  r.factorization = ssp.factorization;
  r.condition1 = is_chain_pi_lift(row);
  r.gamma_check = is_inductive_pair(ssp.pair);
  r.condition2 = r.gamma_check.inductive;
  if (r.factorization) {
    const auto& ctx = context();
    r.beta_linear = ctx.table(r.factorization->beta.domain).degree(r.factorization->beta.row) == 1;
    r.alpha_check = is_inductive_pair({r.factorization->alpha.domain, r.factorization->alpha.row});
    r.alpha_inductive = r.alpha_check->inductive;
    r.condition3 = r.beta_linear && r.alpha_inductive;
  }
  return r;
}

std::vector<std::size_t> pi_prime_linear_rows(const GroupContext& ctx, const PrimeSet& pi, SubId v) {
  const auto& t = ctx.table(v);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.degree(i) == 1 && pi.is_pi_prime_number(t.determinant_order(i))) out.push_back(i);
  }
  return out;
}

Main2Report LiftAnalyzer::main2_lift_family(std::size_t member) const {
  const auto& ctx = context();
  const auto& pa = pi_analyzer();
  const SubId g = sa_.levels().back();
  Main2Report r;
  r.member = member;
  const auto& b = sa_.bpi(sa_.top_level());
  for (std::size_t j = 0; j < b.rows.size(); ++j) {
    if (b.member[j] == member) {
      if (r.chi) r.failures.push_back("several B_pi(G:N) characters restrict to phi");
      r.chi = b.rows[j];
    }
  }
  if (!r.chi) {
    r.failures.push_back("no B_pi(G:N) character restricts to phi");
    return r;
  }
  r.pair = sa_.self_stabilizing_pair(sa_.top_level(), *r.chi).pair;
  const SubId v = r.pair.subgroup;
  r.betas = pi_prime_linear_rows(ctx, pa.pi(), v);
  r.bound = pa.pi().pi_prime_part(ctx.order(v) / ctx.order(ctx.derived(v)));
  if (r.bound != r.betas.size()) r.failures.push_back("pi'-order linear characters do not number |V:V'|_{pi'}");

  const auto gamma = ctx.character(r.pair.character());
  std::set<std::size_t> seen;
  for (std::size_t beta : r.betas) {
    const auto induced = ctx.induce(ctx.product(gamma, ctx.character({v, beta})), g);
    const auto row = ctx.find_row(induced);
    r.images.push_back(row);
    if (!row) {
      r.failures.push_back("image of beta " + std::to_string(beta) + " is reducible");
      continue;
    }
    if (!seen.insert(*row).second) r.failures.push_back("images are not pairwise distinct");
    if (pa.ipi(g).member_of_row[*row] != member) r.failures.push_back("image " + std::to_string(*row) + " is no lift of phi");
    if (!is_chain_pi_lift(*row)) r.failures.push_back("image " + std::to_string(*row) + " is no N-pi-lift");
  }
  for (std::size_t row : pa.lifts_of(g, member)) {
    if (is_chain_pi_lift(row)) r.chain_lifts.push_back(row);
  }
  r.lift_count = r.chain_lifts.size();
  if (r.lift_count < r.bound) r.failures.push_back("N-pi-lift count is below |V:V'|_{pi'}");
  return r;
}

bool is_inductive_source(const GroupContext& ctx, const CharacterPair& p, SubId ambient) {
  const auto& top = ctx.top();
  const auto& h = ctx.subgroup(p.subgroup);
  const auto gens = generating_set(top, h);
  std::vector<Elem> stab;
  for (Elem g : ctx.subgroup(ambient).members()) {
    bool normalizes = true;
    for (Elem x : gens) {
      if (!h.contains(top.conjugate(x, g))) {
        normalizes = false;
        break;
      }
    }
    if (!normalizes) continue;
    if (ctx.conjugate_row(p.character(), g) == p.row) stab.push_back(g);
  }
  const SubId t = ctx.intern(Subgroup(top.order(), std::move(stab)));
  std::set<std::vector<Cyc>> images;
  const auto& tt = ctx.table(t);
  for (std::size_t row = 0; row < tt.size(); ++row) {
    const auto below = ctx.restriction_constituents({t, row}, p.subgroup);
    if (std::none_of(below.begin(), below.end(), [&](const auto& e) { return e.first == p.row; })) continue;
    if (!images.insert(ctx.induce(ctx.character({t, row}), ambient).values).second) return false;
  }
  return true;
}

nlohmann::json inductive_json(const GroupContext& ctx, const InductiveCheck& c) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : c.levels) {
    levels.push_back({{"intersection_order", ctx.order(l.intersection)},
                      {"eta", l.eta},
                      {"multiplicity", l.multiplicity},
                      {"induced_row", l.induced},
                      {"ipi_member", l.member}});
  }
  nlohmann::json out{{"pair", pair_json(ctx, c.pair)}, {"inductive", c.inductive}, {"levels", levels}};
  if (c.failed_level) {
    out["failed_level"] = *c.failed_level;
    out["reason"] = c.reason;
  }
  return out;
}

nlohmann::json main1_json(const LiftAnalyzer& la, const Main1Report& r) {
  const auto& ctx = la.context();
  nlohmann::json out{{"chi", r.chi.row},
                     {"degree", ctx.table(r.chi.domain).degree(r.chi.row)},
                     {"series", la.series().series().describe()},
                     {"pair", pair_json(ctx, r.pair)},
                     {"condition1", r.condition1},
                     {"condition2", r.condition2},
                     {"condition3", r.condition3},
                     {"beta_linear", r.beta_linear},
                     {"alpha_inductive", r.alpha_inductive},
                     {"agree", r.agree()},
                     {"gamma_check", inductive_json(ctx, r.gamma_check)}};
  if (r.factorization) {
    out["factorization"] = {{"alpha", r.factorization->alpha.row}, {"beta", r.factorization->beta.row}};
  } else {
    out["factorization"] = nullptr;
  }
  if (r.alpha_check) out["alpha_check"] = inductive_json(ctx, *r.alpha_check);
  return out;
}

nlohmann::json main2_json(const LiftAnalyzer& la, const Main2Report& r) {
  const auto& ctx = la.context();
  nlohmann::json images = nlohmann::json::array();
  for (const auto& i : r.images) images.push_back(i ? nlohmann::json(*i) : nlohmann::json(nullptr));
  nlohmann::json out{{"phi", r.member},
                     {"series", la.series().series().describe()},
                     {"chi", r.chi ? nlohmann::json(*r.chi) : nlohmann::json(nullptr)},
                     {"betas", r.betas},
                     {"images", images},
                     {"bound", r.bound},
                     {"lift_count", r.lift_count},
                     {"chain_lifts", r.chain_lifts},
                     {"failures", r.failures},
                     {"ok", r.ok()}};
  if (r.chi) out["pair"] = pair_json(ctx, r.pair);
  return out;
}

}  // namespace pilift
