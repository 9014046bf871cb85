#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "pilift/char_table.hpp"
#include "pilift/group.hpp"
#include "pilift/once_cache.hpp"

namespace pilift {

/// Handle of a subgroup of the context's top group, interned by member set.
using SubId = std::uint32_t;

/// A class function on the subgroup `domain`, one value per class of that
/// subgroup (in the class order of its own table).
struct ClassFunction {
  SubId domain = 0;
  std::vector<Cyc> values;

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

/// An irreducible character: row `row` of the table of `domain`.
struct CharRef {
  SubId domain = 0;
  std::size_t row = 0;

  friend bool operator==(const CharRef&, const CharRef&) = default;
  friend auto operator<=>(const CharRef&, const CharRef&) = default;
};

/// Multiplicity list of irreducible constituents, by row index.
using Constituents = std::vector<std::pair<std::size_t, long>>;

/// Owns a top group G and lazily built data for its subgroups: standalone
/// groups, classes, character tables, normal and subnormal subgroup lists.
/// Every subgroup table uses the exponent of G as conductor, so values of
/// different subgroups can be compared directly. All methods are safe to call
/// concurrently.
class GroupContext {
 public:
  explicit GroupContext(Group top);
  GroupContext(const GroupContext&) = delete;
  GroupContext& operator=(const GroupContext&) = delete;

  const Group& top() const { return *top_; }
  int conductor() const { return conductor_; }
  SubId whole() const { return whole_; }
  SubId trivial() const { return trivial_; }

  SubId intern(const Subgroup& s) const;
  const Subgroup& subgroup(SubId id) const { return entry(id).members; }
  const Group& group(SubId id) const { return *entry(id).group; }
  const ConjClassSet& classes(SubId id) const { return entry(id).classes; }
  const CharTable& table(SubId id) const;
  std::size_t order(SubId id) const { return entry(id).members.order(); }
  std::size_t subgroup_count() const;

  /// Class of H containing the parent element x (x must lie in H).
  std::size_t class_in(SubId h, Elem x) const;
  /// Class representative of H in parent indexing.
  Elem class_rep(SubId h, std::size_t c) const { return entry(h).rep_top[c]; }
  /// fusion[c] = class of K containing class c of H, for H <= K.
  std::vector<std::size_t> fusion(SubId h, SubId k) const;

  bool is_subgroup_of(SubId a, SubId b) const { return subgroup(a).is_subset_of(subgroup(b)); }
  bool is_normal_in(SubId a, SubId b) const;
  SubId intersect(SubId a, SubId b) const;
  SubId join(SubId a, SubId b) const;
  /// g^-1 H g.
  SubId conjugate(SubId h, Elem g) const;
  SubId derived(SubId h) const;
  /// Normal subgroups of H, ordered by (order, members).
  const std::vector<SubId>& normal_subgroups(SubId h) const;
  /// Subnormal subgroups of H, ordered by (order, members).
  const std::vector<SubId>& subnormal_subgroups(SubId h) const;
  /// Elements of G normalizing H.
  std::vector<Elem> normalizer(SubId h) const;

  ClassFunction character(CharRef chi) const;
  ClassFunction restrict(const ClassFunction& f, SubId to) const;
  ClassFunction induce(const ClassFunction& f, SubId to) const;
  ClassFunction product(const ClassFunction& a, const ClassFunction& b) const;
  ClassFunction scaled(const ClassFunction& f, long k) const;
  ClassFunction sum(const ClassFunction& a, const ClassFunction& b) const;
  /// f^g(x) = f(g x g^-1); g must normalize the domain.
  ClassFunction conjugate(const ClassFunction& f, Elem g) const;
  Cyc inner_product(const ClassFunction& f, const ClassFunction& g) const;
  std::optional<std::size_t> find_row(const ClassFunction& f) const;
  /// Irreducible constituents with multiplicities (non-zero only). Throws
  /// std::invalid_argument if f is not an integral combination.
  Constituents constituents(const ClassFunction& f) const;
  /// Constituents of a class function known to be a character, read off from
  /// residues (see CharTable::character_multiplicities).
  Constituents character_constituents(const ClassFunction& f) const;
  /// Constituents of chi restricted to `to`, cached.
  const Constituents& restriction_constituents(CharRef chi, SubId to) const;
  /// Row of chi^g for g normalizing chi's domain.
  std::size_t conjugate_row(CharRef chi, Elem g) const;
  /// For N normal in G: action[g][row] = row of chi_row^g, over all g in G.
  const std::vector<std::vector<std::uint16_t>>& row_action(SubId n) const;
  /// {g in G : chi^g = chi} for chi on a normal subgroup of G.
  Subgroup inertia_group(CharRef chi) const;

 private:
  struct Entry {
    Subgroup members;
    std::shared_ptr<const Group> group;
    ConjClassSet classes;
    std::vector<Elem> rep_top;
    std::vector<std::int32_t> local;  // parent element -> local index or -1
    std::once_flag table_once;
    std::unique_ptr<CharTable> table;
  };

  const Entry& entry(SubId id) const;

  std::shared_ptr<const Group> top_;
  int conductor_;
  SubId whole_ = 0;
  SubId trivial_ = 0;

  mutable std::mutex mutex_;
  mutable std::deque<std::unique_ptr<Entry>> entries_;
  mutable std::map<std::vector<Elem>, SubId> index_;

  OnceCache<SubId, std::vector<SubId>> normal_cache_;
  OnceCache<SubId, std::vector<SubId>> subnormal_cache_;
  OnceCache<SubId, std::vector<std::vector<std::uint16_t>>> action_cache_;
  OnceCache<std::tuple<SubId, std::size_t, SubId>, Constituents> restriction_cache_;
};

}  // namespace pilift
