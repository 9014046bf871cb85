#include "pilift/group.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace pilift {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto p : images_) {
    if (p >= images_.size() || seen[p]) throw GroupError("image list is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0 || degree > 65535) throw GroupError("degree out of range");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw GroupError("empty generator text");
  while (pos < text.size()) {
    if (text[pos] != '(') throw GroupError("malformed cycle text '" + std::string(text) + "'");
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (start == pos) throw GroupError("malformed cycle text '" + std::string(text) + "'");
      const auto point = std::stoull(std::string(text.substr(start, pos - start)));
      if (point < 1 || point > degree) {
        throw GroupError("point " + std::to_string(point) + " out of range 1.." + std::to_string(degree));
      }
      if (used[point - 1]) throw GroupError("cycles are not disjoint in '" + std::string(text) + "'");
      used[point - 1] = true;
      cycle.push_back(point - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
    }
    skip_space();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& other) const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = other.images_[images_[i]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Group

Group Group::from_generators(std::size_t degree, std::vector<Permutation> generators, std::size_t order_cap) {
  if (order_cap > kMaxOrderCap) throw GroupError("order cap exceeds " + std::to_string(kMaxOrderCap));
  for (const auto& gen : generators) {
    if (gen.degree() != degree) throw GroupError("generator degree does not match group degree");
  }
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements;
  Permutation id(degree);
  seen.insert(id);
  elements.push_back(id);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next = elements[head] * gen;
      if (seen.insert(next).second) {
        elements.push_back(std::move(next));
        if (elements.size() > order_cap) {
          throw GroupError("group order exceeds cap " + std::to_string(order_cap));
        }
      }
    }
  }
  Group g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  g.finish(std::move(elements));
  return g;
}

Group Group::from_cycle_text(std::size_t degree, const std::vector<std::string>& generators, std::size_t order_cap) {
  std::vector<Permutation> perms;
  for (const auto& text : generators) perms.push_back(Permutation::from_cycles(text, degree));
  return from_generators(degree, std::move(perms), order_cap);
}

void Group::finish(std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements_ = std::move(elements);
  const std::size_t n = elements_.size();
  index_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], static_cast<Elem>(i));

  // Drop identity and duplicate generators.
  std::vector<Permutation> gens;
  for (auto& gen : generators_) {
    const Elem e = index_.at(gen);
    if (e == 0 || std::find(generator_elems_.begin(), generator_elems_.end(), e) != generator_elems_.end()) continue;
    generator_elems_.push_back(e);
    gens.push_back(gen);
  }
  generators_ = std::move(gens);
  const std::size_t k = generators_.size();

  // Right multiplication by generators, then a BFS spanning tree h = parent * gen.
  std::vector<Elem> right(n * k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < k; ++s) right[i * k + s] = index_.at(elements_[i] * generators_[s]);
  }
  std::vector<Elem> bfs_order{0};
  std::vector<std::int64_t> parent(n, -1), via(n, -1);
  std::vector<bool> reached(n, false);
  reached[0] = true;
  for (std::size_t head = 0; head < bfs_order.size(); ++head) {
    const Elem x = bfs_order[head];
    for (std::size_t s = 0; s < k; ++s) {
      const Elem y = right[x * k + s];
      if (!reached[y]) {
        reached[y] = true;
        parent[y] = x;
        via[y] = static_cast<std::int64_t>(s);
        bfs_order.push_back(y);
      }
    }
  }
  if (bfs_order.size() != n) throw GroupError("internal: generators do not span the element set");

  table_.assign(n * n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    std::uint16_t* row = &table_[g * n];
    row[0] = static_cast<std::uint16_t>(g);
    for (std::size_t idx = 1; idx < n; ++idx) {
      const Elem h = bfs_order[idx];
      row[h] = static_cast<std::uint16_t>(right[row[parent[h]] * k + static_cast<std::size_t>(via[h])]);
    }
  }
  inverse_.assign(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (table_[g * n + h] == 0) {
        inverse_[g] = static_cast<Elem>(h);
        break;
      }
    }
  }
  orders_.assign(n, 1);
  exponent_ = 1;
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t ord = 1;
    Elem x = static_cast<Elem>(g);
    while (x != 0) {
      x = mul(x, static_cast<Elem>(g));
      ++ord;
    }
    orders_[g] = ord;
    exponent_ = std::lcm(exponent_, ord);
  }
}

Group Group::from_members(const Group& parent, std::span<const Elem> members) {
  if (members.empty() || members[0] != 0) throw GroupError("subgroup member list must start with the identity");
  Group g;
  g.degree_ = parent.degree_;
  const std::size_t n = members.size();
  std::vector<std::int64_t> local(parent.order(), -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && members[i] <= members[i - 1]) throw GroupError("subgroup members must be sorted and distinct");
    local[members[i]] = static_cast<std::int64_t>(i);
  }
  g.elements_.reserve(n);
  for (auto m : members) g.elements_.push_back(parent.element(m));
  g.index_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) g.index_.emplace(g.elements_[i], static_cast<Elem>(i));
  g.table_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto p = local[parent.mul(members[i], members[j])];
      if (p < 0) throw GroupError("member list is not closed under multiplication");
      g.table_[i * n + j] = static_cast<std::uint16_t>(p);
    }
  }
  g.inverse_.resize(n);
  g.orders_.resize(n);
  g.exponent_ = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto inv = local[parent.inverse(members[i])];
    if (inv < 0) throw GroupError("member list is not closed under inversion");
    g.inverse_[i] = static_cast<Elem>(inv);
    g.orders_[i] = parent.element_order(members[i]);
    g.exponent_ = std::lcm(g.exponent_, g.orders_[i]);
  }
  // Greedy generating set in member order.
  std::vector<bool> in_span(n, false);
  in_span[0] = true;
  std::vector<Elem> span_list{0};
  for (std::size_t i = 1; i < n; ++i) {
    if (in_span[i]) continue;
    g.generator_elems_.push_back(static_cast<Elem>(i));
    g.generators_.push_back(g.elements_[i]);
    for (std::size_t head = 0; head < span_list.size(); ++head) {
      for (auto s : g.generator_elems_) {
        const Elem y = g.mul(span_list[head], s);
        if (!in_span[y]) {
          in_span[y] = true;
          span_list.push_back(y);
        }
      }
    }
  }
  return g;
}

std::optional<Elem> Group::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem Group::power(Elem x, long k) const {
  const long ord = static_cast<long>(orders_[x]);
  long e = k % ord;
  if (e < 0) e += ord;
  Elem result = 0;
  Elem base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool Group::is_abelian() const {
  for (auto a : generator_elems_) {
    for (auto b : generator_elems_) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup::Subgroup(std::size_t parent_order, std::vector<Elem> members)
    : members_(std::move(members)), mask_(parent_order, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto m : members_) {
    if (m >= parent_order) throw GroupError("subgroup member out of range");
    mask_[m] = true;
  }
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (order() > other.order()) return false;
  for (auto m : members_) {
    if (!other.contains(m)) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
  if (auto c = a.order() <=> b.order(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(), b.members_.begin(),
                                                b.members_.end());
}

Subgroup whole_group(const Group& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(g.order(), std::move(all));
}

Subgroup trivial_subgroup(const Group& g) { return Subgroup(g.order(), {0}); }

namespace {

// Closure of the generators by BFS from the identity, starting from an
// already closed member list.
void close_under(const Group& g, std::vector<Elem>& members, std::vector<bool>& in, const std::vector<Elem>& gens) {
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto s : gens) {
      const Elem y = g.mul(members[head], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
}

}  // namespace

Subgroup generate(const Group& g, std::span<const Elem> candidates) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> members{0};
  in[0] = true;
  std::vector<Elem> gens;
  for (auto c : candidates) {
    if (in[c]) continue;
    gens.push_back(c);
    close_under(g, members, in, gens);
  }
  return Subgroup(g.order(), std::move(members));
}

Subgroup generate(const Group& g, const Subgroup& base, std::span<const Elem> extra) {
  std::vector<Elem> cands = generating_set(g, base);
  cands.insert(cands.end(), extra.begin(), extra.end());
  return generate(g, cands);
}

std::vector<Elem> generating_set(const Group& g, const Subgroup& h) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> members{0};
  in[0] = true;
  std::vector<Elem> gens;
  for (auto c : h.members()) {
    if (in[c]) continue;
    gens.push_back(c);
    close_under(g, members, in, gens);
  }
  return gens;
}

Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> cands = generating_set(g, a);
  auto gb = generating_set(g, b);
  cands.insert(cands.end(), gb.begin(), gb.end());
  return generate(g, cands);
}

Subgroup intersect(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  for (auto m : a.members()) {
    if (b.contains(m)) out.push_back(m);
  }
  return Subgroup(g.order(), std::move(out));
}

Subgroup conjugate_subgroup(const Group& g, const Subgroup& h, Elem by) {
  std::vector<Elem> out;
  out.reserve(h.order());
  for (auto m : h.members()) out.push_back(g.conjugate(m, by));
  return Subgroup(g.order(), std::move(out));
}

bool is_closed_subgroup(const Group& g, std::span<const Elem> members) {
  if (members.empty()) return false;
  std::vector<bool> in(g.order(), false);
  for (auto m : members) in[m] = true;
  if (!in[0]) return false;
  for (auto a : members) {
    if (!in[g.inverse(a)]) return false;
    for (auto b : members) {
      if (!in[g.mul(a, b)]) return false;
    }
  }
  return true;
}

bool is_normal_in(const Group& g, const Subgroup& h, const Subgroup& k) {
  const auto hgens = generating_set(g, h);
  const auto kgens = generating_set(g, k);
  for (auto x : hgens) {
    for (auto s : kgens) {
      if (!h.contains(g.conjugate(x, s))) return false;
    }
  }
  return true;
}

bool is_normal(const Group& g, const Subgroup& h) {
  for (auto x : generating_set(g, h)) {
    for (auto s : g.generator_elements()) {
      if (!h.contains(g.conjugate(x, s))) return false;
    }
  }
  return true;
}

Subgroup lift_subgroup(const Subgroup& parent_subgroup, const Subgroup& local, std::size_t parent_order) {
  std::vector<Elem> out;
  out.reserve(local.order());
  for (auto m : local.members()) out.push_back(parent_subgroup.members()[m]);
  return Subgroup(parent_order, std::move(out));
}

// ---------------------------------------------------------------------------
// Conjugacy classes

ConjClassSet::ConjClassSet(std::vector<ConjugacyClass> classes, std::size_t group_order)
    : classes_(std::move(classes)), class_of_(group_order, 0) {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (auto m : classes_[c].members) class_of_[m] = c;
  }
}

ConjClassSet conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  std::vector<bool> done(n, false);
  std::vector<ConjugacyClass> classes;
  for (Elem x = 0; x < n; ++x) {
    if (done[x]) continue;
    ConjugacyClass cls;
    cls.members.push_back(x);
    done[x] = true;
    for (std::size_t head = 0; head < cls.members.size(); ++head) {
      for (auto s : g.generator_elements()) {
        const Elem y = g.conjugate(cls.members[head], s);
        if (!done[y]) {
          done[y] = true;
          cls.members.push_back(y);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [&g](const ConjugacyClass& a, const ConjugacyClass& b) {
    const auto ka = std::make_tuple(g.element_order(a.representative), a.size(), a.representative);
    const auto kb = std::make_tuple(g.element_order(b.representative), b.size(), b.representative);
    return ka < kb;
  });
  return ConjClassSet(std::move(classes), n);
}

// ---------------------------------------------------------------------------
// Normal structure

namespace {

Subgroup product_of_normals(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> out;
  for (auto x : a.members()) {
    for (auto y : b.members()) {
      const Elem z = g.mul(x, y);
      if (!in[z]) {
        in[z] = true;
        out.push_back(z);
      }
    }
  }
  return Subgroup(g.order(), std::move(out));
}

}  // namespace

std::vector<Subgroup> normal_subgroups(const Group& g) {
  const auto classes = conjugacy_classes(g);
  std::set<Subgroup> found;
  found.insert(trivial_subgroup(g));
  for (const auto& cls : classes.classes()) found.insert(generate(g, cls.members));
  std::vector<Subgroup> list(found.begin(), found.end());
  // Close under joins; the product of two normal subgroups is their join.
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (list[j].is_subset_of(list[i]) || list[i].is_subset_of(list[j])) continue;
      Subgroup p = product_of_normals(g, list[i], list[j]);
      if (found.insert(p).second) list.push_back(std::move(p));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<Subgroup> subnormal_subgroups(const Group& g) {
  std::set<Subgroup> found;
  std::deque<Subgroup> queue;
  const Subgroup whole = whole_group(g);
  found.insert(whole);
  queue.push_back(whole);
  while (!queue.empty()) {
    Subgroup s = std::move(queue.front());
    queue.pop_front();
    if (s.order() == 1) continue;
    const Group local = Group::from_members(g, s.members());
    for (const auto& n : normal_subgroups(local)) {
      Subgroup lifted = lift_subgroup(s, n, g.order());
      if (found.insert(lifted).second) queue.push_back(std::move(lifted));
    }
  }
  return {found.begin(), found.end()};
}

Subgroup derived_subgroup(const Group& g, const Subgroup& h) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> comms;
  for (auto a : h.members()) {
    for (auto b : h.members()) {
      const Elem c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  }
  return generate(g, comms);
}

Subgroup derived_subgroup(const Group& g) { return derived_subgroup(g, whole_group(g)); }

QuotientGroup quotient_group(const Group& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw GroupError("quotient by a subgroup that is not normal");
  const std::size_t order = g.order();
  std::vector<std::int64_t> coset(order, -1);
  std::vector<Elem> coset_rep;
  for (Elem x = 0; x < order; ++x) {
    if (coset[x] >= 0) continue;
    const auto id = static_cast<std::int64_t>(coset_rep.size());
    coset_rep.push_back(x);
    for (auto m : n.members()) coset[g.mul(m, x)] = id;
  }
  const std::size_t index = coset_rep.size();
  auto action = [&](Elem e) {
    std::vector<Permutation::Point> images(index);
    for (std::size_t c = 0; c < index; ++c) {
      images[c] = static_cast<Permutation::Point>(coset[g.mul(coset_rep[c], e)]);
    }
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (auto s : g.generator_elements()) gens.push_back(action(s));
  QuotientGroup q{Group::from_generators(index, std::move(gens), std::max(index, kDefaultOrderCap)), {}};
  q.projection.resize(order);
  for (Elem x = 0; x < order; ++x) q.projection[x] = *q.group.find(action(x));
  return q;
}

// ---------------------------------------------------------------------------
// pi-separability and normal pi-series

namespace {

bool factor_ok(std::size_t big, std::size_t small, const PrimeSet& pi, FactorKind* kind) {
  const std::size_t index = big / small;
  if (pi.is_pi_number(index)) {
    if (kind) *kind = FactorKind::kPi;
    return true;
  }
  if (pi.is_pi_prime_number(index)) {
    if (kind) *kind = FactorKind::kPiPrime;
    return true;
  }
  return false;
}

}  // namespace

PiSeparability is_pi_separable(const Group& g, const PrimeSet& pi) {
  const auto normals = normal_subgroups(g);
  PiSeparability out;
  std::vector<Subgroup> chain{normals.front()};
  while (chain.back().order() != g.order()) {
    // The smallest normal subgroup strictly above the current term is a
    // minimal normal subgroup of the quotient.
    const Subgroup* next = nullptr;
    for (const auto& m : normals) {
      if (m.order() > chain.back().order() && chain.back().is_subset_of(m)) {
        next = &m;
        break;
      }
    }
    chain.push_back(*next);
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!factor_ok(chain[i + 1].order(), chain[i].order(), pi, nullptr)) return out;
  }
  out.separable = true;
  out.chief_series = std::move(chain);
  return out;
}

std::string NormalPiSeries::describe() const {
  std::string out;
  for (const auto& s : chain) {
    if (!out.empty()) out += "<";
    out += std::to_string(s.order());
  }
  return out;
}

NormalPiSeries NormalPiSeries::truncated(std::size_t i) const {
  NormalPiSeries out;
  out.pi = pi;
  out.chain.assign(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(i + 1));
  out.kinds.assign(kinds.begin(), kinds.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

NormalPiSeries make_series(const PrimeSet& pi, std::vector<Subgroup> chain) {
  NormalPiSeries out;
  out.pi = pi;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    FactorKind kind{};
    if (!chain[i].is_subset_of(chain[i + 1]) || !factor_ok(chain[i + 1].order(), chain[i].order(), pi, &kind)) {
      throw GroupError("chain is not a normal pi-series at position " + std::to_string(i));
    }
    out.kinds.push_back(kind);
  }
  out.chain = std::move(chain);
  return out;
}

std::optional<std::string> validate_series(const Group& g, const NormalPiSeries& series) {
  if (series.chain.empty()) return "empty chain";
  if (series.chain.front().order() != 1) return "first term is not trivial";
  if (series.chain.back().order() != g.order()) return "last term is not the whole group";
  if (series.kinds.size() + 1 != series.chain.size()) return "factor tag count mismatch";
  for (std::size_t i = 0; i < series.chain.size(); ++i) {
    if (!is_normal(g, series.chain[i])) return "term " + std::to_string(i) + " is not normal";
    if (i + 1 == series.chain.size()) break;
    if (!series.chain[i].is_subset_of(series.chain[i + 1])) return "terms not nested at " + std::to_string(i);
    FactorKind kind{};
    if (!factor_ok(series.chain[i + 1].order(), series.chain[i].order(), series.pi, &kind) ||
        kind != series.kinds[i]) {
      return "factor " + std::to_string(i) + " does not match its tag";
    }
  }
  return std::nullopt;
}

SeriesEnumeration enumerate_normal_pi_series(const Group& g, const PrimeSet& pi, std::size_t cap) {
  if (!is_pi_separable(g, pi).separable) throw GroupError("group is not pi-separable for pi = {" + pi.to_string() + "}");
  const auto normals = normal_subgroups(g);
  SeriesEnumeration out;
  std::vector<std::size_t> path{0};
  std::function<void()> extend = [&]() {
    if (out.truncated) return;
    const Subgroup& current = normals[path.back()];
    if (current.order() == g.order()) {
      if (out.series.size() == cap) {
        out.truncated = true;
        return;
      }
      std::vector<Subgroup> chain;
      for (auto idx : path) chain.push_back(normals[idx]);
      out.series.push_back(make_series(pi, std::move(chain)));
      return;
    }
    for (std::size_t j = path.back() + 1; j < normals.size(); ++j) {
      const Subgroup& next = normals[j];
      if (next.order() == current.order() || !current.is_subset_of(next)) continue;
      if (!factor_ok(next.order(), current.order(), pi, nullptr)) continue;
      path.push_back(j);
      extend();
      path.pop_back();
    }
  };
  extend();
  return out;
}

std::uint64_t pi_prime_index_of_abelianization(const Group& g, const Subgroup& v, const PrimeSet& pi) {
  const Subgroup d = derived_subgroup(g, v);
  return pi.pi_prime_part(v.order() / d.order());
}

// ---------------------------------------------------------------------------
// Semidirect products

namespace {

// Extends a map on generators of n to all of n; nullopt if it is not a
// well-defined bijective homomorphism.
std::optional<std::vector<Elem>> extend_automorphism(const Group& n, const Automorphism& aut) {
  const auto& gens = n.generator_elements();
  if (aut.generator_images.size() != gens.size()) return std::nullopt;
  std::vector<Elem> image_of_gen;
  for (const auto& p : aut.generator_images) {
    auto e = n.find(p);
    if (!e) return std::nullopt;
    image_of_gen.push_back(*e);
  }
  std::vector<std::int64_t> map(n.order(), -1);
  map[0] = 0;
  std::vector<Elem> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Elem y = n.mul(x, gens[s]);
      if (map[y] < 0) {
        map[y] = n.mul(static_cast<Elem>(map[x]), image_of_gen[s]);
        queue.push_back(y);
      }
    }
  }
  std::vector<Elem> out(n.order());
  std::vector<bool> hit(n.order(), false);
  for (Elem x = 0; x < n.order(); ++x) {
    out[x] = static_cast<Elem>(map[x]);
    if (hit[out[x]]) return std::nullopt;
    hit[out[x]] = true;
  }
  for (Elem x = 0; x < n.order(); ++x) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      if (out[n.mul(x, gens[s])] != n.mul(out[x], image_of_gen[s])) return std::nullopt;
    }
  }
  return out;
}

}  // namespace

Group semidirect_product(const Group& normal_part, const Group& acting_part, const std::vector<Automorphism>& action,
                         std::size_t order_cap) {
  const auto& agens = acting_part.generator_elements();
  if (action.size() != agens.size()) throw GroupError("one automorphism per acting generator is required");
  const std::size_t nn = normal_part.order();
  std::vector<std::vector<Elem>> auts;
  for (const auto& aut : action) {
    auto full = extend_automorphism(normal_part, aut);
    if (!full) throw GroupError("action image is not an automorphism of the normal part");
    auts.push_back(std::move(*full));
  }
  // The induced map acting_part -> Aut(normal_part) must be a homomorphism.
  std::vector<std::vector<Elem>> hom(acting_part.order());
  std::vector<Elem> ident(nn);
  std::iota(ident.begin(), ident.end(), Elem{0});
  hom[0] = ident;
  std::vector<Elem> queue{0};
  auto compose = [](const std::vector<Elem>& first, const std::vector<Elem>& second) {
    std::vector<Elem> out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
    return out;
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem a = queue[head];
    for (std::size_t s = 0; s < agens.size(); ++s) {
      const Elem b = acting_part.mul(a, agens[s]);
      if (hom[b].empty()) {
        hom[b] = compose(hom[a], auts[s]);
        queue.push_back(b);
      }
    }
  }
  for (Elem a = 0; a < acting_part.order(); ++a) {
    for (std::size_t s = 0; s < agens.size(); ++s) {
      if (hom[acting_part.mul(a, agens[s])] != compose(hom[a], auts[s])) {
        throw GroupError("action is not a homomorphism from the acting group");
      }
    }
  }

  const std::size_t degree = nn + acting_part.degree();
  std::vector<Permutation> gens;
  for (auto s : normal_part.generator_elements()) {
    std::vector<Permutation::Point> images(degree);
    for (std::size_t x = 0; x < nn; ++x) images[x] = static_cast<Permutation::Point>(normal_part.mul(static_cast<Elem>(x), s));
    for (std::size_t p = nn; p < degree; ++p) images[p] = static_cast<Permutation::Point>(p);
    gens.emplace_back(std::move(images));
  }
  for (std::size_t s = 0; s < agens.size(); ++s) {
    std::vector<Permutation::Point> images(degree);
    for (std::size_t x = 0; x < nn; ++x) images[x] = static_cast<Permutation::Point>(auts[s][x]);
    const auto& perm = acting_part.element(agens[s]);
    for (std::size_t p = 0; p < acting_part.degree(); ++p) images[nn + p] = static_cast<Permutation::Point>(nn + perm[p]);
    gens.emplace_back(std::move(images));
  }
  Group g = Group::from_generators(degree, std::move(gens), order_cap);
  if (g.order() != nn * acting_part.order()) throw GroupError("semidirect product action is not faithful");
  return g;
}

// ---------------------------------------------------------------------------
// .perm files

Group parse_perm_text(const std::string& text, std::size_t order_cap) {
  std::istringstream in(text);
  std::string line;
  std::size_t degree = 0;
  std::vector<std::string> gens;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (degree == 0) {
      std::istringstream head(line);
      std::string keyword;
      long long n = 0;
      if (!(head >> keyword >> n) || keyword != "degree" || n <= 0) {
        throw GroupError("line " + std::to_string(line_no) + ": expected 'degree N'");
      }
      std::string rest;
      if (head >> rest) throw GroupError("line " + std::to_string(line_no) + ": trailing text after degree");
      degree = static_cast<std::size_t>(n);
      continue;
    }
    gens.push_back(line);
  }
  if (degree == 0) throw GroupError("missing 'degree N' header");
  return Group::from_cycle_text(degree, gens, order_cap);
}

Group load_perm_file(const std::string& path, std::size_t order_cap) {
  std::ifstream in(path);
  if (!in) throw GroupError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_perm_text(buf.str(), order_cap);
}

}  // namespace pilift
