#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pilift/pi_theory.hpp"

namespace pilift {

/// A subgroup together with an irreducible character of it.
struct CharacterPair {
  SubId subgroup = 0;
  std::size_t row = 0;

  CharRef character() const { return {subgroup, row}; }
  friend bool operator==(const CharacterPair&, const CharacterPair&) = default;
  friend auto operator<=>(const CharacterPair&, const CharacterPair&) = default;
};

/// The pair (H^g, theta^g), where H^g = g^-1 H g.
CharacterPair conjugate_pair(const GroupContext& ctx, CharacterPair p, Elem g);
/// Some g in `within` (all of G when empty) with p^g = q, if one exists.
std::optional<Elem> conjugating_element(const GroupContext& ctx, CharacterPair p, CharacterPair q,
                                        const std::vector<Elem>& within = {});
/// Some g with H <= K^g (K^g = g^-1 K g), if one exists.
std::optional<Elem> conjugate_containing(const GroupContext& ctx, SubId h, SubId k);

/// nu_0 = 1, ..., nu_n = chi with nu_i in Irr(N_i) under nu_{i+1}.
struct CharacterTower {
  std::vector<std::size_t> rows;  // rows[i] is a row of the table of level i

  friend bool operator==(const CharacterTower&, const CharacterTower&) = default;
  friend auto operator<=>(const CharacterTower&, const CharacterTower&) = default;
};

struct PairLevel {
  SubId subgroup = 0;  // T cap N_i
  std::size_t row = 0;  // tau_i
  long multiplicity = 0;  // t_i
};

/// Result of the tau search for one tower.
struct TowerOutcome {
  CharacterTower tower;
  SubId stabilizer = 0;
  std::vector<std::size_t> candidates;  // rows of T satisfying every condition
};

struct SelfStabilizingPair {
  CharacterTower tower;
  CharacterPair pair;
  std::vector<PairLevel> levels;
  std::optional<SpecialFactorization> factorization;
  std::vector<TowerOutcome> outcomes;  // canonical first, at most kTowerConjugacyCap
  std::size_t tower_count = 0;
  bool conjugacy_checked = false;
  /// Towers with a unique tau whose pair is not G-conjugate to `pair`.
  std::vector<std::size_t> nonconjugate_towers;
};

inline constexpr std::size_t kTowerConjugacyCap = 32;

/// B_pi(N : series truncated at N) with its restriction map.
struct BpiChain {
  std::vector<std::size_t> rows;
  /// member[j] = Ipi index of rows[j]^0, or nullopt if it is no pi-lift.
  std::vector<std::optional<std::size_t>> member;
  bool bijective = false;
};

/// One normal pi-series of the context's top group, with cached tower data.
/// Level k addresses the series truncated at N_k, whose ambient group is N_k.
class SeriesAnalyzer {
 public:
  SeriesAnalyzer(const PiAnalyzer& pa, const NormalPiSeries& series);

  const PiAnalyzer& pi_analyzer() const { return pa_; }
  const GroupContext& context() const { return ctx_; }
  const NormalPiSeries& series() const { return series_; }
  const std::vector<SubId>& levels() const { return levels_; }
  std::size_t top_level() const { return levels_.size() - 1; }
  SubId ambient(std::size_t k) const { return levels_[k]; }

  /// Irreducible constituents of nu restricted to level i-1, cached.
  const Constituents& down(std::size_t i, std::size_t row) const;

  /// Every tower for row `row` of level k, sorted by (level, row).
  const std::vector<CharacterTower>& towers(std::size_t k, std::size_t row) const;
  /// Elements of N_k fixing each member of the tower.
  SubId tower_stabilizer(std::size_t k, const CharacterTower& t) const;
  /// Every tau for the tower: tau^{N_k} = chi and the per-level conditions.
  TowerOutcome tau_search(std::size_t k, const CharacterTower& t) const;
  /// The pair of the canonical tower. Throws AnomalyError when the canonical
  /// tower does not yield exactly one tau.
  const SelfStabilizingPair& self_stabilizing_pair(std::size_t k, std::size_t row) const;
  /// B_pi(N_k : N truncated at k). Propagates AnomalyError from the pair
  /// search; a failed bijection is reported in the result.
  const BpiChain& bpi(std::size_t k) const;

  /// Checks tau restricts homogeneously to every level and that the
  /// constituents induce to the given tower members; fills `out` if so.
  bool level_conditions(std::size_t k, const CharacterPair& p, const CharacterTower& t,
                        std::vector<PairLevel>* out) const;

 private:
  const PiAnalyzer& pa_;
  const GroupContext& ctx_;
  NormalPiSeries series_;
  std::vector<SubId> levels_;

  OnceCache<std::pair<std::size_t, std::size_t>, Constituents> down_cache_;
  OnceCache<std::pair<std::size_t, std::size_t>, std::vector<CharacterTower>> tower_cache_;
  OnceCache<std::pair<std::size_t, std::size_t>, SelfStabilizingPair> pair_cache_;
  OnceCache<std::size_t, BpiChain> bpi_cache_;
};

/// L(N) for every member N of the series.
struct LiftSystem {
  std::vector<SubId> levels;
  std::vector<std::vector<std::size_t>> members;  // rows of each level's table
};

LiftSystem lift_system_bpi(const SeriesAnalyzer& sa);

struct CompatibilityReport {
  /// Checks run, by name: axiom1, axiom2, conjugacy, stabilizer.
  std::map<std::string, std::size_t> checks;
  /// One entry per failed check: {"check", "level", "row", ...}.
  std::vector<nlohmann::json> failures;
  bool ok() const { return failures.empty(); }
};

/// Axioms (1) and (2), closure under G-conjugation and
/// stab_G(alpha) = stab_G(alpha^0), for every member of every level.
CompatibilityReport check_compatible_lift_set(const PiAnalyzer& pa, const LiftSystem& system);

nlohmann::json tower_json(const SeriesAnalyzer& sa, std::size_t k, const CharacterTower& t);
nlohmann::json pair_json(const GroupContext& ctx, const CharacterPair& p);
nlohmann::json self_stabilizing_pair_json(const SeriesAnalyzer& sa, const SelfStabilizingPair& ssp);

}  // namespace pilift
