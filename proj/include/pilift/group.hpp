#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pilift/primes.hpp"

namespace pilift {

inline constexpr std::size_t kDefaultOrderCap = 5000;
/// Element indices are stored in 16-bit multiplication tables.
inline constexpr std::size_t kMaxOrderCap = 65535;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bijection of {0, ..., degree-1}. Products compose left to right:
/// (p * q)[i] = q[p[i]], i.e. apply p first.
class Permutation {
 public:
  using Point = std::uint16_t;

  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  /// Parses disjoint cycles on 1-based points, e.g. "(1 2 3)(4 5)". "()" is
  /// the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;
  /// 1-based cycle notation; "()" for the identity.
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

/// Index of an element in its group's sorted element list. Index 0 is the
/// identity.
using Elem = std::uint32_t;

/// Finite permutation group with all elements enumerated. Elements are kept
/// in lexicographic order of their image lists, so indices are independent of
/// the generating set.
class Group {
 public:
  static Group from_generators(std::size_t degree, std::vector<Permutation> generators,
                               std::size_t order_cap = kDefaultOrderCap);
  static Group from_cycle_text(std::size_t degree, const std::vector<std::string>& generators,
                               std::size_t order_cap = kDefaultOrderCap);
  /// The subgroup of parent on the given sorted member indices, as a group in
  /// its own right. Local index i corresponds to parent index members[i].
  static Group from_members(const Group& parent, std::span<const Elem> members);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Elem>& generator_elements() const { return generator_elems_; }
  const Permutation& element(Elem e) const { return elements_[e]; }
  std::optional<Elem> find(const Permutation& p) const;

  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const {
    return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  }
  Elem inverse(Elem a) const { return inverse_[a]; }
  /// x^g = g^-1 x g.
  Elem conjugate(Elem x, Elem g) const { return mul(mul(inverse_[g], x), g); }
  Elem commutator(Elem a, Elem b) const { return mul(mul(inverse_[a], inverse_[b]), mul(a, b)); }
  Elem power(Elem x, long k) const;
  std::size_t element_order(Elem e) const { return orders_[e]; }
  std::size_t exponent() const { return exponent_; }
  bool is_abelian() const;

 private:
  Group() = default;
  void finish(std::vector<Permutation> elements);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Elem> generator_elems_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Elem, PermutationHash> index_;
  std::vector<std::uint16_t> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> orders_;
  std::size_t exponent_ = 1;
};

/// Member set of a subgroup of some parent group, kept sorted.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::size_t parent_order, std::vector<Elem> members);

  std::size_t order() const { return members_.size(); }
  std::size_t parent_order() const { return mask_.size(); }
  const std::vector<Elem>& members() const { return members_; }
  bool contains(Elem e) const { return e < mask_.size() && mask_[e]; }
  bool is_subset_of(const Subgroup& other) const;

  /// Ordered by (order, member list).
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b);

 private:
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

Subgroup whole_group(const Group& g);
Subgroup trivial_subgroup(const Group& g);
Subgroup generate(const Group& g, std::span<const Elem> generators);
/// Closure of generators together with an existing subgroup.
Subgroup generate(const Group& g, const Subgroup& base, std::span<const Elem> extra);
Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Group& g, const Subgroup& a, const Subgroup& b);
Subgroup conjugate_subgroup(const Group& g, const Subgroup& h, Elem by);
bool is_closed_subgroup(const Group& g, std::span<const Elem> members);
bool is_normal(const Group& g, const Subgroup& h);
/// Normal subgroup h in ambient k (h <= k <= g).
bool is_normal_in(const Group& g, const Subgroup& h, const Subgroup& k);
/// A small generating set, chosen greedily in member order.
std::vector<Elem> generating_set(const Group& g, const Subgroup& h);

struct ConjugacyClass {
  Elem representative;
  std::vector<Elem> members;
  std::size_t size() const { return members.size(); }
};

/// Conjugacy classes ordered by (representative order, class size, minimal
/// member permutation); the representative is the minimal member, so the
/// identity class comes first.
class ConjClassSet {
 public:
  ConjClassSet() = default;
  ConjClassSet(std::vector<ConjugacyClass> classes, std::size_t group_order);

  std::size_t size() const { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(Elem e) const { return class_of_[e]; }

 private:
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

ConjClassSet conjugacy_classes(const Group& g);

/// All normal subgroups, ordered by (order, member list).
std::vector<Subgroup> normal_subgroups(const Group& g);
/// Every subgroup reachable from g by repeatedly taking normal subgroups.
std::vector<Subgroup> subnormal_subgroups(const Group& g);
Subgroup derived_subgroup(const Group& g);
/// Derived subgroup of a subgroup h of g, in g's indexing.
Subgroup derived_subgroup(const Group& g, const Subgroup& h);
/// Maps member-local indices of a standalone subgroup group back to the parent.
Subgroup lift_subgroup(const Subgroup& parent_subgroup, const Subgroup& local, std::size_t parent_order);

struct QuotientGroup {
  Group group;
  /// projection[e] = image of parent element e in the quotient.
  std::vector<Elem> projection;
};

/// G/N realised by the right multiplication action on the cosets of N.
QuotientGroup quotient_group(const Group& g, const Subgroup& n);

struct PiSeparability {
  bool separable = false;
  /// A chief series 1 = C_0 < ... < C_k = G, present when separable.
  std::vector<Subgroup> chief_series;
};

PiSeparability is_pi_separable(const Group& g, const PrimeSet& pi);

enum class FactorKind { kPi, kPiPrime };

struct NormalPiSeries {
  PrimeSet pi;
  std::vector<Subgroup> chain;
  /// kinds[i] describes chain[i+1] / chain[i].
  std::vector<FactorKind> kinds;

  std::size_t length() const { return chain.size(); }
  /// Orders of the chain members, e.g. "1<3<6".
  std::string describe() const;
  /// The initial segment chain[0..i] as a series of chain[i].
  NormalPiSeries truncated(std::size_t i) const;
};

/// Checks the normal pi-series axioms for g; returns a reason on failure.
std::optional<std::string> validate_series(const Group& g, const NormalPiSeries& series);
/// Builds a series from a strictly increasing chain; tags are derived.
NormalPiSeries make_series(const PrimeSet& pi, std::vector<Subgroup> chain);

struct SeriesEnumeration {
  std::vector<NormalPiSeries> series;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultSeriesCap = 64;

/// Every strictly increasing chain of normal subgroups from 1 to G whose
/// factors are pi- or pi'-groups. Throws GroupError if g is not pi-separable.
SeriesEnumeration enumerate_normal_pi_series(const Group& g, const PrimeSet& pi,
                                             std::size_t cap = kDefaultSeriesCap);

/// |V : V'| with its pi-part removed.
std::uint64_t pi_prime_index_of_abelianization(const Group& g, const Subgroup& v, const PrimeSet& pi);

/// An automorphism of a group given by the images of its generators.
struct Automorphism {
  std::vector<Permutation> generator_images;
};

/// N x| A on |N| + deg(A) points: N acts on its own elements by right
/// translation, A acts on them through the given automorphisms and on its own
/// points by its permutation action. action[i] is the automorphism attached to
/// acting.generators()[i].
Group semidirect_product(const Group& normal_part, const Group& acting_part,
                         const std::vector<Automorphism>& action,
                         std::size_t order_cap = kDefaultOrderCap);

/// Reads the ".perm" format: "degree N" then one generator per line; '#' starts
/// a comment.
Group parse_perm_text(const std::string& text, std::size_t order_cap = kDefaultOrderCap);
Group load_perm_file(const std::string& path, std::size_t order_cap = kDefaultOrderCap);

}  // namespace pilift
