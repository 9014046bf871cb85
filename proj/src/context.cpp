#include "pilift/context.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pilift {

GroupContext::GroupContext(Group top)
    : top_(std::make_shared<const Group>(std::move(top))), conductor_(static_cast<int>(top_->exponent())) {
  whole_ = intern(whole_group(*top_));
  trivial_ = intern(trivial_subgroup(*top_));
}

SubId GroupContext::intern(const Subgroup& s) const {
  if (s.parent_order() != top_->order()) throw std::invalid_argument("subgroup belongs to a different group");
  {
    std::lock_guard lock(mutex_);
    auto it = index_.find(s.members());
    if (it != index_.end()) return it->second;
  }
  // Build outside the lock; a concurrent duplicate is discarded below.
  auto e = std::make_unique<Entry>();
  e->members = s;
  if (s.order() == top_->order()) {
    e->group = top_;
  } else {
    e->group = std::make_shared<const Group>(Group::from_members(*top_, s.members()));
  }
  e->classes = conjugacy_classes(*e->group);
  e->local.assign(top_->order(), -1);
  for (std::size_t i = 0; i < s.order(); ++i) e->local[s.members()[i]] = static_cast<std::int32_t>(i);
  for (const auto& c : e->classes.classes()) e->rep_top.push_back(s.members()[c.representative]);

  std::lock_guard lock(mutex_);
  auto it = index_.find(s.members());
  if (it != index_.end()) return it->second;
  const SubId id = static_cast<SubId>(entries_.size());
  entries_.push_back(std::move(e));
  index_.emplace(s.members(), id);
  return id;
}

const GroupContext::Entry& GroupContext::entry(SubId id) const {
  std::lock_guard lock(mutex_);
  if (id >= entries_.size()) throw std::out_of_range("unknown subgroup id");
  return *entries_[id];
}

std::size_t GroupContext::subgroup_count() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

const CharTable& GroupContext::table(SubId id) const {
  auto& e = const_cast<Entry&>(entry(id));
  std::call_once(e.table_once, [&] {
    e.table = std::make_unique<CharTable>(CharTable::compute(e.group, e.classes, conductor_));
  });
  return *e.table;
}

std::size_t GroupContext::class_in(SubId h, Elem x) const {
  const auto& e = entry(h);
  const auto local = e.local[x];
  if (local < 0) throw std::invalid_argument("element is not in the subgroup");
  return e.classes.class_of(static_cast<Elem>(local));
}

std::vector<std::size_t> GroupContext::fusion(SubId h, SubId k) const {
  const auto& eh = entry(h);
  std::vector<std::size_t> out(eh.rep_top.size());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = class_in(k, eh.rep_top[c]);
  return out;
}

bool GroupContext::is_normal_in(SubId a, SubId b) const {
  if (!is_subgroup_of(a, b)) return false;
  return pilift::is_normal_in(*top_, subgroup(a), subgroup(b));
}

SubId GroupContext::intersect(SubId a, SubId b) const {
  return intern(pilift::intersect(*top_, subgroup(a), subgroup(b)));
}

SubId GroupContext::join(SubId a, SubId b) const { return intern(pilift::join(*top_, subgroup(a), subgroup(b))); }

SubId GroupContext::conjugate(SubId h, Elem g) const {
  return intern(conjugate_subgroup(*top_, subgroup(h), g));
}

SubId GroupContext::derived(SubId h) const { return intern(derived_subgroup(*top_, subgroup(h))); }

namespace {

void sort_ids(const GroupContext& ctx, std::vector<SubId>& ids) {
  std::sort(ids.begin(), ids.end(), [&](SubId a, SubId b) { return ctx.subgroup(a) < ctx.subgroup(b); });
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

}  // namespace

const std::vector<SubId>& GroupContext::normal_subgroups(SubId h) const {
  return normal_cache_.get(h, [&] {
    const auto& e = entry(h);
    std::vector<SubId> out;
    for (const auto& local : pilift::normal_subgroups(*e.group)) {
      out.push_back(intern(lift_subgroup(e.members, local, top_->order())));
    }
    sort_ids(*this, out);
    return out;
  });
}

const std::vector<SubId>& GroupContext::subnormal_subgroups(SubId h) const {
  return subnormal_cache_.get(h, [&] {
    std::set<SubId> seen{h};
    std::vector<SubId> queue{h};
    while (!queue.empty()) {
      const SubId s = queue.back();
      queue.pop_back();
      for (SubId n : normal_subgroups(s)) {
        if (seen.insert(n).second) queue.push_back(n);
      }
    }
    std::vector<SubId> out(seen.begin(), seen.end());
    sort_ids(*this, out);
    return out;
  });
}

std::vector<Elem> GroupContext::normalizer(SubId h) const {
  const auto& s = subgroup(h);
  const auto gens = generating_set(*top_, s);
  std::vector<Elem> out;
  for (Elem g = 0; g < top_->order(); ++g) {
    bool ok = true;
    for (Elem x : gens) {
      if (!s.contains(top_->conjugate(x, g))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return out;
}

ClassFunction GroupContext::character(CharRef chi) const { return {chi.domain, table(chi.domain).row(chi.row)}; }

ClassFunction GroupContext::restrict(const ClassFunction& f, SubId to) const {
  if (!is_subgroup_of(to, f.domain)) throw std::invalid_argument("restriction target is not a subgroup");
  const auto fuse = fusion(to, f.domain);
  ClassFunction out{to, {}};
  out.values.reserve(fuse.size());
  for (auto c : fuse) out.values.push_back(f.values[c]);
  return out;
}

ClassFunction GroupContext::induce(const ClassFunction& f, SubId to) const {
  if (!is_subgroup_of(f.domain, to)) throw std::invalid_argument("induction source is not a subgroup");
  const auto fuse = fusion(f.domain, to);
  const auto& src = classes(f.domain);
  const auto& dst = classes(to);
  ClassFunction out{to, std::vector<Cyc>(dst.size(), Cyc(conductor_))};
  for (std::size_t d = 0; d < fuse.size(); ++d) {
    if (f.values[d].is_zero()) continue;
    out.values[fuse[d]] += f.values[d] * Rational(static_cast<long>(src[d].size()));
  }
  const long index = static_cast<long>(order(to) / order(f.domain));
  for (std::size_t c = 0; c < dst.size(); ++c) {
    if (out.values[c].is_zero()) continue;
    out.values[c] *= Rational(index, static_cast<long>(dst[c].size()));
  }
  return out;
}

ClassFunction GroupContext::product(const ClassFunction& a, const ClassFunction& b) const {
  if (a.domain != b.domain) throw std::invalid_argument("class functions on different subgroups");
  ClassFunction out{a.domain, {}};
  out.values.reserve(a.values.size());
  for (std::size_t c = 0; c < a.values.size(); ++c) out.values.push_back(a.values[c] * b.values[c]);
  return out;
}

ClassFunction GroupContext::scaled(const ClassFunction& f, long k) const {
  ClassFunction out = f;
  for (auto& v : out.values) v *= Rational(k);
  return out;
}

ClassFunction GroupContext::sum(const ClassFunction& a, const ClassFunction& b) const {
  if (a.domain != b.domain) throw std::invalid_argument("class functions on different subgroups");
  ClassFunction out = a;
  for (std::size_t c = 0; c < out.values.size(); ++c) out.values[c] += b.values[c];
  return out;
}

ClassFunction GroupContext::conjugate(const ClassFunction& f, Elem g) const {
  const auto& e = entry(f.domain);
  const Elem g_inv = top_->inverse(g);
  ClassFunction out{f.domain, {}};
  out.values.reserve(e.rep_top.size());
  for (Elem x : e.rep_top) {
    const Elem y = top_->conjugate(x, g_inv);
    if (e.local[y] < 0) throw std::invalid_argument("element does not normalize the domain");
    out.values.push_back(f.values[e.classes.class_of(static_cast<Elem>(e.local[y]))]);
  }
  return out;
}

Cyc GroupContext::inner_product(const ClassFunction& f, const ClassFunction& g) const {
  if (f.domain != g.domain) throw std::invalid_argument("class functions on different subgroups");
  return table(f.domain).inner_product(f.values, g.values);
}

std::optional<std::size_t> GroupContext::find_row(const ClassFunction& f) const {
  return table(f.domain).find_row(f.values);
}

Constituents GroupContext::constituents(const ClassFunction& f) const {
  const auto coords = table(f.domain).integral_coordinates(f.values);
  if (!coords) throw std::invalid_argument("class function is not an integral combination of irreducibles");
  Constituents out;
  for (std::size_t i = 0; i < coords->size(); ++i) {
    if ((*coords)[i] != 0) out.emplace_back(i, (*coords)[i]);
  }
  return out;
}

namespace {

Constituents nonzero(const std::vector<long>& mult) {
  Constituents out;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] != 0) out.emplace_back(i, mult[i]);
  }
  return out;
}

}  // namespace

Constituents GroupContext::character_constituents(const ClassFunction& f) const {
  const auto& t = table(f.domain);
  return nonzero(t.character_multiplicities(t.residues(f.values)));
}

const Constituents& GroupContext::restriction_constituents(CharRef chi, SubId to) const {
  return restriction_cache_.get({chi.domain, chi.row, to}, [&] {
    if (!is_subgroup_of(to, chi.domain)) throw std::invalid_argument("restriction target is not a subgroup");
    const auto& res = table(chi.domain).row_residues(chi.row);
    const auto fuse = fusion(to, chi.domain);
    std::vector<std::uint64_t> moved(fuse.size());
    for (std::size_t c = 0; c < fuse.size(); ++c) moved[c] = res[fuse[c]];
    return nonzero(table(to).character_multiplicities(moved));
  });
}

std::size_t GroupContext::conjugate_row(CharRef chi, Elem g) const {
  const auto& e = entry(chi.domain);
  const auto& t = table(chi.domain);
  const Elem g_inv = top_->inverse(g);
  const auto& res = t.row_residues(chi.row);
  std::vector<std::uint64_t> moved(res.size());
  for (std::size_t c = 0; c < res.size(); ++c) {
    const Elem y = top_->conjugate(e.rep_top[c], g_inv);
    if (e.local[y] < 0) throw std::invalid_argument("element does not normalize the domain");
    moved[c] = res[e.classes.class_of(static_cast<Elem>(e.local[y]))];
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.row_residues(i) == moved) return i;
  }
  throw CharTableError("conjugate character not found in table");
}

const std::vector<std::vector<std::uint16_t>>& GroupContext::row_action(SubId n) const {
  return action_cache_.get(n, [&] {
    if (!is_normal(*top_, subgroup(n))) throw std::invalid_argument("row action needs a normal subgroup");
    const auto& e = entry(n);
    const auto& t = table(n);
    const std::size_t r = t.size();
    std::map<std::vector<std::uint64_t>, std::uint16_t> lookup;
    for (std::size_t i = 0; i < r; ++i) lookup.emplace(t.row_residues(i), static_cast<std::uint16_t>(i));
    std::vector<std::vector<std::uint16_t>> action(top_->order(), std::vector<std::uint16_t>(r));
    std::vector<std::size_t> perm(r);
    std::vector<std::uint64_t> moved(r);
    for (Elem g = 0; g < top_->order(); ++g) {
      const Elem g_inv = top_->inverse(g);
      for (std::size_t c = 0; c < r; ++c) {
        const Elem y = top_->conjugate(e.rep_top[c], g_inv);
        perm[c] = e.classes.class_of(static_cast<Elem>(e.local[y]));
      }
      for (std::size_t i = 0; i < r; ++i) {
        const auto& res = t.row_residues(i);
        for (std::size_t c = 0; c < r; ++c) moved[c] = res[perm[c]];
        auto it = lookup.find(moved);
        if (it == lookup.end()) throw CharTableError("conjugate character not found in table");
        action[g][i] = it->second;
      }
    }
    return action;
  });
}

Subgroup GroupContext::inertia_group(CharRef chi) const {
  const auto& action = row_action(chi.domain);
  std::vector<Elem> out;
  for (Elem g = 0; g < top_->order(); ++g) {
    if (action[g][chi.row] == chi.row) out.push_back(g);
  }
  return Subgroup(top_->order(), std::move(out));
}

}  // namespace pilift
