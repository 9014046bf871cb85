#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pilift/context.hpp"
#include "pilift/primes.hpp"

namespace pilift {

/// Raised when a computed object contradicts a fact the theory guarantees.
/// Harness code catches it and records an anomaly.
class AnomalyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PiClassSet {
  PrimeSet pi;
  /// Class ids (of the subgroup's own table) whose elements are pi-elements.
  std::vector<std::size_t> classes;
};

PiClassSet pi_classes(const GroupContext& ctx, SubId h, const PrimeSet& pi);

/// A class function on the pi-classes of `domain`.
struct PartialCharacter {
  SubId domain = 0;
  std::vector<Cyc> values;  // aligned with PiClassSet::classes
  std::uint64_t degree = 0;
  std::optional<std::size_t> origin;  // a row whose restriction this is
};

/// I_pi(H): the irreducible pi-partial characters and the decomposition of
/// every chi^0 into them.
struct PartialTable {
  SubId domain = 0;
  PiClassSet classes;
  std::vector<PartialCharacter> members;
  /// decomposition[row][j] = multiplicity of members[j] in chi_row^0.
  std::vector<std::vector<long>> decomposition;
  /// member_of_row[row] = j if chi_row^0 = members[j].
  std::vector<std::optional<std::size_t>> member_of_row;

  std::size_t size() const { return members.size(); }
};

struct SpecialFactorization {
  CharRef alpha;  // pi-special
  CharRef beta;   // pi'-special
  CharRef gamma;  // alpha * beta
};

/// Finds x >= 0 integral with sum_j x_j basis[j] = target, exactly.
/// basis must be linearly independent. Returns nullopt when no such x exists.
std::optional<std::vector<long>> nonnegative_integral_solution(const std::vector<std::vector<Cyc>>& basis,
                                                               const std::vector<Cyc>& target);
/// Rank of a family of value vectors over Q, computed exactly.
std::size_t exact_rank(const std::vector<std::vector<Cyc>>& vectors);

/// Pi-theory queries over one context and one prime set, with per-subgroup
/// caches. Thread-safe.
class PiAnalyzer {
 public:
  PiAnalyzer(const GroupContext& ctx, PrimeSet pi);

  const GroupContext& context() const { return ctx_; }
  const PrimeSet& pi() const { return pi_; }

  PartialCharacter restrict_to_pi(const ClassFunction& f) const;
  PartialCharacter restrict_to_pi(CharRef chi) const { return restrict_to_pi(ctx_.character(chi)); }
  /// I_pi(H). Throws AnomalyError if the final assertions fail.
  const PartialTable& ipi(SubId h) const;
  /// Coordinates of psi over I_pi(domain); throws std::invalid_argument when
  /// they are not non-negative integers.
  std::vector<long> decompose_partial(const PartialCharacter& psi) const;
  /// Rows chi of H's table with chi^0 = members[member].
  std::vector<std::size_t> lifts_of(SubId h, std::size_t member) const;

  bool is_pi_lift(CharRef chi) const;
  bool is_pi_special(CharRef chi) const { return special_flags(chi.domain).pi[chi.row]; }
  bool is_pi_prime_special(CharRef chi) const { return special_flags(chi.domain).pi_prime[chi.row]; }
  /// The unique (pi-special) x (pi'-special) factorization, if any. Throws
  /// AnomalyError if two factorizations exist.
  std::optional<SpecialFactorization> factorize(CharRef chi) const;
  bool is_pi_factored(CharRef chi) const { return factorize(chi).has_value(); }

  nlohmann::json partial_table_json(SubId h) const;

 private:
  struct SpecialFlags {
    std::vector<bool> pi;
    std::vector<bool> pi_prime;
  };
  const SpecialFlags& special_flags(SubId h) const;
  PartialTable build_ipi(SubId h) const;

  const GroupContext& ctx_;
  PrimeSet pi_;
  OnceCache<SubId, PartialTable> ipi_cache_;
  OnceCache<SubId, SpecialFlags> special_cache_;
  OnceCache<CharRef, std::optional<SpecialFactorization>> factor_cache_;
};

}  // namespace pilift
