#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pilift/towers.hpp"

namespace pilift {

struct InductiveLevel {
  SubId intersection = 0;  // V cap N
  std::size_t eta = 0;
  long multiplicity = 0;  // a
  std::size_t induced = 0;  // row of eta^N in N's table
  std::size_t member = 0;  // Ipi(N) index of (eta^N)^0
};

struct InductiveCheck {
  CharacterPair pair;
  std::vector<InductiveLevel> levels;  // complete only when inductive
  bool inductive = false;
  std::optional<std::size_t> failed_level;
  std::string reason;
};

struct ChainLiftLevel {
  std::vector<std::size_t> constituents;
  std::vector<bool> is_lift;
};

struct ChainLiftCheck {
  bool is_lift = false;
  std::vector<ChainLiftLevel> levels;
};

struct Main1Report {
  CharRef chi;
  CharacterPair pair;
  std::optional<SpecialFactorization> factorization;
  bool condition1 = false;  // chi is an N-pi-lift
  bool condition2 = false;  // (V, gamma) inductive
  bool condition3 = false;  // beta linear and (V, alpha) inductive
  bool beta_linear = false;
  bool alpha_inductive = false;
  InductiveCheck gamma_check;
  std::optional<InductiveCheck> alpha_check;
  bool agree() const { return condition1 == condition2 && condition2 == condition3; }
};

struct Main2Report {
  std::size_t member = 0;  // phi as an Ipi(G) index
  std::optional<std::size_t> chi;  // row of the B_pi(G:N) lift
  CharacterPair pair;
  std::vector<std::size_t> betas;  // linear pi'-order rows of V
  std::vector<std::optional<std::size_t>> images;  // (gamma beta)^G rows
  std::uint64_t bound = 0;  // |V:V'|_{pi'}
  std::size_t lift_count = 0;  // N-pi-lifts of phi
  std::vector<std::size_t> chain_lifts;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Decision procedures for one series of the context's top group G.
class LiftAnalyzer {
 public:
  explicit LiftAnalyzer(const SeriesAnalyzer& sa);

  const SeriesAnalyzer& series() const { return sa_; }
  const PiAnalyzer& pi_analyzer() const { return sa_.pi_analyzer(); }
  const GroupContext& context() const { return sa_.context(); }

  bool is_pi_lift(CharRef chi) const { return pi_analyzer().is_pi_lift(chi); }
  /// Every constituent of chi on every member of the series is a pi-lift.
  const ChainLiftCheck& chain_lift(std::size_t row) const;
  bool is_chain_pi_lift(std::size_t row) const { return chain_lift(row).is_lift; }
  InductiveCheck is_inductive_pair(const CharacterPair& p) const;

  Main1Report check_main1(std::size_t row) const;
  Main2Report main2_lift_family(std::size_t member) const;

 private:
  const SeriesAnalyzer& sa_;
  OnceCache<std::size_t, ChainLiftCheck> chain_cache_;
};

/// Induction from the stabilizer T of (H, theta) in `ambient` is injective on
/// Irr(T | theta).
bool is_inductive_source(const GroupContext& ctx, const CharacterPair& p, SubId ambient);

/// Linear characters of V whose order is a pi'-number.
std::vector<std::size_t> pi_prime_linear_rows(const GroupContext& ctx, const PrimeSet& pi, SubId v);

nlohmann::json inductive_json(const GroupContext& ctx, const InductiveCheck& c);
nlohmann::json main1_json(const LiftAnalyzer& la, const Main1Report& r);
nlohmann::json main2_json(const LiftAnalyzer& la, const Main2Report& r);

}  // namespace pilift
