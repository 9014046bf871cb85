#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "pilift/lift_analysis.hpp"

namespace pilift {

/// The named subgroups of the order-1323 example, as ids of one context.
struct Section4Subgroups {
  SubId g, e, v, v1, v2, m1, m2, x, z, m1v, m2v;
};

struct Section4Report {
  Section4Subgroups sub{};
  std::map<std::uint64_t, std::size_t> degree_histogram;
  std::size_t class_count = 0;
  std::size_t chi = 0;  // row of G
  std::size_t phi = 0;  // Ipi(G) index
  std::vector<std::size_t> lifts;
  std::vector<std::size_t> orbit_sizes;  // G-orbits on Irr(V) \ {1}
  CharacterPair pair_n, pair_n1, pair_n2;
  std::vector<std::size_t> family1, family2;  // M_1, M_2 as rows of G
  std::size_t b_count = 0;  // characters of V with kernel V_1 or V_2
  std::size_t union_count = 0;
  std::vector<std::size_t> intersection;
  /// One flag per claim, in a fixed order.
  std::vector<std::pair<std::string, bool>> claims;

  bool all_pass() const;
  nlohmann::json to_json(const GroupContext& ctx) const;
};

/// Builds the example in the given context and identifies its subgroups.
/// Throws std::runtime_error if the structure is not as constructed.
Section4Subgroups build_section4_group(const GroupContext& ctx);
/// Evaluates every claim about the example, with pi = {3}.
Section4Report section4_report(const GroupContext& ctx);

struct PropertyTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
};

struct VerificationReport {
  std::vector<nlohmann::json> entries;
  std::map<std::string, PropertyTally> properties;
  std::vector<nlohmann::json> anomalies;
  double seconds = 0;  // kept out of the JSON so reports compare byte for byte

  void record(const std::string& property, bool ok, const std::function<nlohmann::json()>& witness);
  void merge(const VerificationReport& other);
  std::size_t anomaly_count() const { return anomalies.size(); }
  nlohmann::json to_json() const;
};

struct SuiteOptions {
  std::size_t series_cap = kDefaultSeriesCap;
  /// Indices into the enumerated series; empty means all.
  std::vector<std::size_t> series_indices;
  /// Randomized Frobenius reciprocity triples per group.
  std::size_t frobenius_triples = 8;
  std::uint64_t seed = 1;
};

/// Group-level checks: exact orthogonality, degree sum, Frobenius reciprocity
/// on random triples.
VerificationReport run_table_suite(const GroupContext& ctx, const std::string& name, const SuiteOptions& opt);
/// Every lemma-level property for one (G, pi), over the selected series.
VerificationReport run_property_suite(const GroupContext& ctx, const std::string& name, const PrimeSet& pi,
                                      const SuiteOptions& opt);

struct CorpusEntry {
  std::string name;
  std::function<Group()> make;
  /// Empty means every non-empty set of primes dividing |G|.
  std::vector<PrimeSet> pis;
};

std::vector<CorpusEntry> default_corpus();
/// Runs the table and property suites over the corpus with `jobs` threads.
/// The merged report does not depend on `jobs`.
VerificationReport run_corpus(const std::vector<CorpusEntry>& corpus, const SuiteOptions& opt, std::size_t jobs);

/// Every non-empty subset of the primes dividing n, ordered by (size, primes).
std::vector<PrimeSet> prime_subsets(std::uint64_t n);

}  // namespace pilift
