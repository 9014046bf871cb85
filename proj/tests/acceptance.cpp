// Acceptance suite: one PASS/FAIL line per criterion. Exit status is non-zero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "oracles.hpp"
#include "pilift/builtins.hpp"
#include "pilift/verification.hpp"

#ifndef PILIFT_CLI
#error "PILIFT_CLI must name the pilift executable"
#endif

using namespace pilift;
using nlohmann::json;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << detail << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

/// Runs `pilift verify` on the default corpus, returning the exit status.
int run_verify(const std::filesystem::path& out, int jobs) {
  const std::string cmd = std::string("\"") + PILIFT_CLI + "\" verify --format json --jobs " + std::to_string(jobs) +
                          " --output \"" + out.string() + "\"";
  const int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

struct Tally {
  std::size_t pass = 0, fail = 0;
};

Tally tally(const json& rep, const std::string& name) {
  if (!rep["properties"].contains(name)) return {};
  return {rep["properties"][name]["pass"].get<std::size_t>(), rep["properties"][name]["fail"].get<std::size_t>()};
}

std::string describe(const json& rep, std::initializer_list<const char*> names, bool* ok) {
  std::ostringstream s;
  *ok = true;
  for (const char* n : names) {
    const auto t = tally(rep, n);
    s << n << " " << t.pass << "/" << t.pass + t.fail << "; ";
    *ok = *ok && t.fail == 0 && t.pass > 0;
  }
  return s.str();
}

void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  GroupContext ctx(builtin::section4_group());
  const auto r = section4_report(ctx);
  const double secs = seconds_since(start);
  std::ostringstream s;
  std::size_t passed = 0;
  for (const auto& [name, ok] : r.claims) {
    if (ok) {
      ++passed;
    } else {
      s << " failed " << name;
    }
  }
  s << " " << passed << "/" << r.claims.size() << " claims, " << r.lifts.size() << " lifts, " << secs << " s";
  report(1, r.all_pass() && r.lifts.size() == 13 && secs < 300, "order-1323 example:" + s.str());
}

void criterion3(const json& rep) {
  bool ok = false;
  std::string detail = describe(rep, {"main2"}, &ok);
  auto equality = [&](const char* name, const PrimeSet& pi, std::vector<std::size_t> orders, std::uint64_t expect) {
    GroupContext ctx(builtin::by_name(name));
    PiAnalyzer pa(ctx, pi);
    for (const auto& s : enumerate_normal_pi_series(ctx.top(), pi).series) {
      std::vector<std::size_t> o;
      for (const auto& m : s.chain) o.push_back(m.order());
      if (o != orders) continue;
      SeriesAnalyzer sa(pa, s);
      LiftAnalyzer la(sa);
      const auto one = *pa.ipi(ctx.whole()).member_of_row[ctx.table(ctx.whole()).trivial_row()];
      const auto m = la.main2_lift_family(one);
      detail += std::string(name) + " bound " + std::to_string(m.bound) + " count " + std::to_string(m.lift_count) + "; ";
      return m.ok() && m.bound == expect && m.lift_count == expect;
    }
    return false;
  };
  ok = equality("s3", PrimeSet({3}), {1, 3, 6}, 2) && ok;
  ok = equality("a4", PrimeSet({2}), {1, 4, 12}, 3) && ok;
  report(3, ok, "lift families: " + detail);
}

void criterion4(const json& rep) {
  bool ok = false;
  std::string detail = describe(rep, {"orthogonality", "degree_sum", "frobenius_reciprocity"}, &ok);
  ok = ok && tally(rep, "frobenius_reciprocity").pass >= 100;
  report(4, ok, "character tables: " + detail);
}

void criterion5(const json& rep) {
  bool ok = false;
  std::string detail = describe(rep, {"ipi_count"}, &ok);
  std::size_t cases = 0, agree = 0;
  for (const auto& name : oracle::small_corpus()) {
    GroupContext ctx(builtin::by_name(name));
    if (ctx.top().order() > 48) continue;
    for (const auto& pi : prime_subsets(ctx.top().order())) {
      if (!is_pi_separable(ctx.top(), pi).separable) continue;
      PiAnalyzer pa(ctx, pi);
      ++cases;
      if (oracle::sorted_members(pa.ipi(ctx.whole())) == oracle::ipi(ctx, ctx.whole(), pi)) {
        ++agree;
      } else {
        detail += "oracle disagrees on " + name + " pi=" + pi.to_string() + "; ";
      }
    }
  }
  detail += "exhaustive oracle " + std::to_string(agree) + "/" + std::to_string(cases);
  report(5, ok && cases > 0 && agree == cases, "I_pi: " + detail);
}

}  // namespace

int main() {
  const auto dir = std::filesystem::temp_directory_path() / ("pilift-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);

  criterion1();

  const auto start = std::chrono::steady_clock::now();
  const int rc1 = run_verify(dir / "first.json", 1);
  const double t1 = seconds_since(start);
  const int rc2 = run_verify(dir / "second.json", 2);
  const std::string first = slurp(dir / "first.json"), second = slurp(dir / "second.json");
  json rep;
  try {
    rep = json::parse(first);
  } catch (const std::exception& e) {
    std::cout << "verify produced no report: " << e.what() << std::endl;
    rep = {{"properties", json::object()}, {"anomaly_count", -1}};
  }
  std::cout << "verify exit statuses " << rc1 << ", " << rc2 << "; " << rep["entries"].size()
            << " (group, pi) entries in " << t1 << " s, " << rep["anomaly_count"] << " anomalies" << std::endl;

  bool ok = false;
  std::string d = describe(rep, {"main1", "pair_search"}, &ok);
  report(2, ok && rc1 == 0, "lift equivalence: " + d);
  criterion3(rep);
  criterion4(rep);
  criterion5(rep);
  d = describe(rep,
               {"tower_pairs_conjugate", "pair_degree", "pair_factored", "compatible_axiom1", "compatible_axiom2",
                "compatible_conjugacy", "compatible_stabilizer", "commonchains", "degree", "inductive", "factored",
                "containment", "selfind", "indself", "map_injection", "bpi_bijection"},
               &ok);
  report(6, ok && rep["anomaly_count"] == 0, "lemma suites: " + d);
  report(7, rc1 == rc2 && !first.empty() && first == second,
         "two verify runs (1 and 2 jobs), " + std::to_string(first.size()) + " bytes, " +
             (first == second ? "identical" : "different"));

  std::filesystem::remove_all(dir);
  return failures == 0 ? 0 : 1;
}
