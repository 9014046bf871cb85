#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pilift/builtins.hpp"
#include "pilift/verification.hpp"

using namespace pilift;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kAnomaly = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string group;
  std::string pi;
  std::string series;
  std::string format = "text";
  std::string output;
  std::size_t jobs = 1;
  std::size_t series_cap = kDefaultSeriesCap;
  std::size_t frobenius_triples = 8;
  std::optional<std::size_t> chi, phi, theta;
  std::string gens;
};

std::size_t order_cap() {
  const char* env = std::getenv("PILIFT_ORDER_CAP");
  if (!env || !*env) return kDefaultOrderCap;
  try {
    const auto v = std::stoull(env);
    if (v == 0 || v > kMaxOrderCap) throw std::out_of_range("cap");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("PILIFT_ORDER_CAP must be in 1..") + std::to_string(kMaxOrderCap));
  }
}

std::string group_label(const std::string& source) {
  return source.rfind("builtin:", 0) == 0 ? source.substr(8) : source;
}

Group load_group(const std::string& source) {
  if (source.empty()) throw UsageError("--group is required");
  const std::size_t cap = order_cap();
  if (source.rfind("builtin:", 0) == 0) {
    Group g = [&] {
      try {
        return builtin::by_name(source.substr(8));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }();
    if (g.order() > cap) throw UsageError("group order " + std::to_string(g.order()) + " exceeds the order cap");
    return g;
  }
  std::ifstream probe(source);
  if (!probe) throw UsageError("cannot read " + source);
  try {
    return load_perm_file(source, cap);
  } catch (const std::exception& e) {
    throw UsageError(source + ": " + e.what());
  }
}

PrimeSet parse_pi(const std::string& text) {
  if (text.empty()) throw UsageError("--pi is required");
  try {
    return PrimeSet::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid pi: ") + e.what());
  }
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad number '" + item + "'");
    }
  }
  return out;
}

/// A single number is an index into the enumerated series; a comma list is the
/// sequence of member orders, and the first matching series is taken.
NormalPiSeries select_series(const Group& g, const PrimeSet& pi, const Config& cfg, std::size_t* index = nullptr) {
  const auto en = enumerate_normal_pi_series(g, pi, cfg.series_cap);
  const auto want = parse_list(cfg.series.empty() ? "0" : cfg.series);
  for (std::size_t i = 0; i < en.series.size(); ++i) {
    const auto& s = en.series[i];
    bool match;
    if (want.size() == 1) {
      match = want[0] == i;
    } else {
      match = s.chain.size() == want.size();
      for (std::size_t k = 0; match && k < want.size(); ++k) match = s.chain[k].order() == want[k];
    }
    if (match) {
      if (index) *index = i;
      return s;
    }
  }
  throw UsageError("no series matches --series " + cfg.series + " (" + std::to_string(en.series.size()) + " enumerated)");
}

std::size_t check_row(std::optional<std::size_t> v, std::size_t limit, const char* what) {
  if (!v) throw UsageError(std::string("--") + what + " is required");
  if (*v >= limit) throw UsageError(std::string("--") + what + " must be below " + std::to_string(limit));
  return *v;
}

class Emitter {
 public:
  explicit Emitter(const Config& cfg) : cfg_(cfg) {}
  bool json_mode() const { return cfg_.format == "json"; }
  std::ostringstream& text() { return text_; }
  void finish(const json& j) {
    const std::string body = json_mode() ? j.dump(2) + "\n" : text_.str();
    if (cfg_.output.empty()) {
      std::cout << body;
    } else {
      std::ofstream f(cfg_.output);
      if (!f) throw UsageError("cannot write " + cfg_.output);
      f << body;
    }
  }

 private:
  const Config& cfg_;
  std::ostringstream text_;
};

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

int cmd_chartab(const Config& cfg) {
  GroupContext ctx(load_group(cfg.group));
  const auto& t = ctx.table(ctx.whole());
  Emitter em(cfg);
  em.text() << t.render_text();
  em.finish(t.to_json());
  return kOk;
}

int cmd_ipi(const Config& cfg) {
  GroupContext ctx(load_group(cfg.group));
  PiAnalyzer pa(ctx, parse_pi(cfg.pi));
  const auto& ip = pa.ipi(ctx.whole());
  Emitter em(cfg);
  em.text() << ip.size() << " irreducible " << pa.pi().to_string() << "-partial characters on "
            << ip.classes.classes.size() << " pi-classes\n";
  for (std::size_t j = 0; j < ip.size(); ++j) {
    em.text() << "  phi." << j << " degree " << ip.members[j].degree << ":";
    for (const auto& v : ip.members[j].values) em.text() << " " << v.to_string();
    em.text() << "\n";
  }
  em.text() << "decomposition matrix:\n";
  for (std::size_t r = 0; r < ip.decomposition.size(); ++r) {
    em.text() << "  X." << r << ":";
    for (long d : ip.decomposition[r]) em.text() << " " << d;
    em.text() << "\n";
  }
  em.finish(pa.partial_table_json(ctx.whole()));
  return kOk;
}

int cmd_lifts(const Config& cfg) {
  GroupContext ctx(load_group(cfg.group));
  PiAnalyzer pa(ctx, parse_pi(cfg.pi));
  const std::size_t phi = check_row(cfg.phi, pa.ipi(ctx.whole()).size(), "phi");
  const auto lifts = pa.lifts_of(ctx.whole(), phi);
  Emitter em(cfg);
  em.text() << lifts.size() << " lifts of phi." << phi << ": " << join(lifts) << "\n";
  em.finish({{"phi", phi}, {"lifts", lifts}, {"lift_count", lifts.size()}});
  return kOk;
}

int cmd_series(const Config& cfg) {
  const Group g = load_group(cfg.group);
  const PrimeSet pi = parse_pi(cfg.pi);
  const auto en = [&] {
    try {
      return enumerate_normal_pi_series(g, pi, cfg.series_cap);
    } catch (const GroupError& e) {
      throw UsageError(e.what());
    }
  }();
  Emitter em(cfg);
  json list = json::array();
  for (std::size_t i = 0; i < en.series.size(); ++i) {
    std::vector<std::size_t> orders;
    for (const auto& s : en.series[i].chain) orders.push_back(s.order());
    list.push_back({{"index", i}, {"orders", orders}, {"series", en.series[i].describe()}});
    em.text() << i << ": " << en.series[i].describe() << "\n";
  }
  if (en.truncated) em.text() << "truncated at " << cfg.series_cap << " series\n";
  em.finish({{"pi", pi.to_string()}, {"series", list}, {"truncated", en.truncated}});
  return kOk;
}

struct SeriesSession {
  GroupContext ctx;
  PiAnalyzer pa;
  NormalPiSeries series;
  SeriesAnalyzer sa;
  LiftAnalyzer la;

  explicit SeriesSession(const Config& cfg)
      : ctx(load_group(cfg.group)),
        pa(ctx, parse_pi(cfg.pi)),
        series(pick(ctx, pa, cfg)),
        sa(pa, series),
        la(sa) {}

  static NormalPiSeries pick(const GroupContext& ctx, const PiAnalyzer& pa, const Config& cfg) {
    try {
      return select_series(ctx.top(), pa.pi(), cfg);
    } catch (const GroupError& e) {
      throw UsageError(e.what());
    }
  }
};

int cmd_pair(const Config& cfg) {
  SeriesSession s(cfg);
  const std::size_t chi = check_row(cfg.chi, s.ctx.table(s.ctx.whole()).size(), "chi");
  const auto& ssp = s.sa.self_stabilizing_pair(s.sa.top_level(), chi);
  Emitter em(cfg);
  const auto j = self_stabilizing_pair_json(s.sa, ssp);
  em.text() << "series " << s.series.describe() << "\n"
            << "chi X." << chi << " has self-stabilizing pair (T, tau) with |T| = " << s.ctx.order(ssp.pair.subgroup)
            << ", tau row " << ssp.pair.row << " of degree " << s.ctx.table(ssp.pair.subgroup).degree(ssp.pair.row)
            << "\n"
            << "towers: " << ssp.tower_count << ", conjugacy checked: " << (ssp.conjugacy_checked ? "yes" : "no")
            << "\n";
  if (ssp.factorization) {
    em.text() << "tau = alpha beta with alpha row " << ssp.factorization->alpha.row << ", beta row "
              << ssp.factorization->beta.row << "\n";
  }
  em.finish(j);
  return kOk;
}

int cmd_inductive(const Config& cfg) {
  SeriesSession s(cfg);
  CharacterPair p;
  if (!cfg.gens.empty()) {
    std::vector<Elem> gens;
    std::stringstream ss(cfg.gens);
    std::string item;
    while (std::getline(ss, item, ';')) {
      try {
        const auto perm = Permutation::from_cycles(item, s.ctx.top().degree());
        const auto e = s.ctx.top().find(perm);
        if (!e) throw UsageError("generator " + item + " is not in G");
        gens.push_back(*e);
      } catch (const GroupError& e) {
        throw UsageError(e.what());
      }
    }
    p.subgroup = s.ctx.intern(generate(s.ctx.top(), gens));
    p.row = check_row(cfg.theta, s.ctx.table(p.subgroup).size(), "theta");
  } else {
    const std::size_t chi = check_row(cfg.chi, s.ctx.table(s.ctx.whole()).size(), "chi");
    p = s.sa.self_stabilizing_pair(s.sa.top_level(), chi).pair;
  }
  const auto c = s.la.is_inductive_pair(p);
  Emitter em(cfg);
  em.text() << "pair with |V| = " << s.ctx.order(p.subgroup) << ", row " << p.row << ": "
            << (c.inductive ? "inductive" : "not inductive");
  if (c.failed_level) em.text() << " (level " << *c.failed_level << ": " << c.reason << ")";
  em.text() << "\n";
  em.finish(inductive_json(s.ctx, c));
  return kOk;
}

int cmd_main1(const Config& cfg) {
  SeriesSession s(cfg);
  const std::size_t n = s.ctx.table(s.ctx.whole()).size();
  std::vector<std::size_t> rows;
  if (cfg.chi) {
    rows.push_back(check_row(cfg.chi, n, "chi"));
  } else {
    for (std::size_t i = 0; i < n; ++i) rows.push_back(i);
  }
  Emitter em(cfg);
  json out = json::array();
  bool all = true;
  em.text() << "series " << s.series.describe() << "\n";
  for (auto row : rows) {
    const auto r = s.la.check_main1(row);
    all = all && r.agree();
    out.push_back(main1_json(s.la, r));
    em.text() << "X." << row << ": lift " << r.condition1 << ", gamma inductive " << r.condition2
              << ", beta linear and alpha inductive " << r.condition3 << (r.agree() ? "" : "  DISAGREE") << "\n";
  }
  em.finish({{"series", s.series.describe()}, {"reports", out}, {"all_agree", all}});
  return all ? kOk : kAnomaly;
}

int cmd_main2(const Config& cfg) {
  SeriesSession s(cfg);
  const std::size_t n = s.pa.ipi(s.ctx.whole()).size();
  std::vector<std::size_t> members;
  if (cfg.phi) {
    members.push_back(check_row(cfg.phi, n, "phi"));
  } else {
    for (std::size_t i = 0; i < n; ++i) members.push_back(i);
  }
  Emitter em(cfg);
  json out = json::array();
  bool all = true;
  em.text() << "series " << s.series.describe() << "\n";
  for (auto m : members) {
    const auto r = s.la.main2_lift_family(m);
    all = all && r.ok();
    out.push_back(main2_json(s.la, r));
    em.text() << "phi." << m << ": bound " << r.bound << ", N-pi-lifts " << r.lift_count << (r.ok() ? "" : "  FAIL")
              << "\n";
    for (const auto& f : r.failures) em.text() << "  " << f << "\n";
  }
  em.finish({{"series", s.series.describe()}, {"reports", out}, {"all_ok", all}});
  return all ? kOk : kAnomaly;
}

int cmd_verify(const Config& cfg) {
  std::vector<CorpusEntry> corpus;
  if (cfg.group.empty()) {
    corpus = default_corpus();
  } else {
    const Group g = load_group(cfg.group);
    corpus.push_back({group_label(cfg.group), [g] { return g; }, {}});
  }
  if (!cfg.pi.empty()) {
    const PrimeSet pi = parse_pi(cfg.pi);
    for (auto& c : corpus) c.pis = {pi};
  }
  SuiteOptions opt;
  opt.series_cap = cfg.series_cap;
  opt.frobenius_triples = cfg.frobenius_triples;
  if (!cfg.group.empty() && !cfg.series.empty()) opt.series_indices = parse_list(cfg.series);
  const auto rep = run_corpus(corpus, opt, cfg.jobs);
  Emitter em(cfg);
  for (const auto& [name, t] : rep.properties) {
    em.text() << name << ": " << t.pass << " pass, " << t.fail << " fail\n";
  }
  em.text() << rep.entries.size() << " (group, pi) entries, " << rep.anomaly_count() << " anomalies, "
            << rep.seconds << " s\n";
  for (const auto& a : rep.anomalies) em.text() << "  " << a.dump() << "\n";
  em.finish(rep.to_json());
  return rep.anomaly_count() == 0 ? kOk : kAnomaly;
}

int cmd_section4(const Config& cfg) {
  GroupContext ctx(builtin::section4_group());
  const auto r = section4_report(ctx);
  Emitter em(cfg);
  em.text() << "|G| = " << ctx.order(r.sub.g) << ", " << r.class_count << " classes, degrees";
  for (const auto& [d, n] : r.degree_histogram) em.text() << " " << d << ":" << n;
  em.text() << "\nchi = X." << r.chi << ", phi = phi." << r.phi << ", " << r.lifts.size() << " lifts\n";
  for (const auto& [name, ok] : r.claims) em.text() << (ok ? "PASS " : "FAIL ") << name << "\n";
  em.finish(r.to_json(ctx));
  return r.all_pass() ? kOk : kAnomaly;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial characters, pi-lifts and self-stabilizing pairs of finite pi-separable groups"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub, bool needs_pi, bool needs_series) {
    sub->add_option("--group", cfg.group, "builtin:NAME or a .perm file");
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
    if (needs_pi) sub->add_option("--pi", cfg.pi, "comma-separated primes");
    if (needs_series) {
      sub->add_option("--series", cfg.series, "series index, or comma-separated member orders");
      sub->add_option("--series-cap", cfg.series_cap, "maximum number of series enumerated")
          ->check(CLI::PositiveNumber);
    }
  };
  auto* chartab = app.add_subcommand("chartab", "print the character table");
  common(chartab, false, false);
  auto* ipi = app.add_subcommand("ipi", "print I_pi and the decomposition matrix");
  common(ipi, true, false);
  auto* lifts = app.add_subcommand("lifts", "lifts of a partial character");
  common(lifts, true, false);
  lifts->add_option("--phi", cfg.phi, "I_pi index");
  auto* series = app.add_subcommand("series", "enumerate normal pi-series");
  common(series, true, true);
  auto* pair = app.add_subcommand("pair", "self-stabilizing pair of a character");
  common(pair, true, true);
  pair->add_option("--chi", cfg.chi, "row of Irr(G)");
  auto* inductive = app.add_subcommand("inductive", "test whether a pair is inductive");
  common(inductive, true, true);
  inductive->add_option("--chi", cfg.chi, "test the self-stabilizing pair of this row");
  inductive->add_option("--gens", cfg.gens, "generators of V as ';'-separated 1-based cycles");
  inductive->add_option("--theta", cfg.theta, "row of Irr(V)");
  auto* main1 = app.add_subcommand("main1", "equivalence of lift conditions");
  common(main1, true, true);
  main1->add_option("--chi", cfg.chi, "row of Irr(G); all rows if omitted");
  auto* main2 = app.add_subcommand("main2", "lift families and their lower bound");
  common(main2, true, true);
  main2->add_option("--phi", cfg.phi, "I_pi index; all if omitted");
  auto* verify = app.add_subcommand("verify", "run the property suites");
  common(verify, true, true);
  verify->add_option("--jobs,-j", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--frobenius-triples", cfg.frobenius_triples, "random reciprocity checks per group");
  auto* section4 = app.add_subcommand("section4", "report on the order-1323 example");
  section4->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  section4->add_option("--output,-o", cfg.output, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*chartab) return cmd_chartab(cfg);
    if (*ipi) return cmd_ipi(cfg);
    if (*lifts) return cmd_lifts(cfg);
    if (*series) return cmd_series(cfg);
    if (*pair) return cmd_pair(cfg);
    if (*inductive) return cmd_inductive(cfg);
    if (*main1) return cmd_main1(cfg);
    if (*main2) return cmd_main2(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*section4) return cmd_section4(cfg);
  } catch (const UsageError& e) {
    std::cerr << "pilift: " << e.what() << "\n";
    return kUsage;
  } catch (const AnomalyError& e) {
    std::cerr << "pilift: anomaly: " << e.what() << "\n";
    return kAnomaly;
  } catch (const std::exception& e) {
    std::cerr << "pilift: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
