#pragma once

// Brute-force reference implementations. They work element by element and
// share no algorithm with the engine beyond the group multiplication table.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pilift/builtins.hpp"
#include "pilift/char_table.hpp"
#include "pilift/context.hpp"
#include "pilift/pi_theory.hpp"

namespace oracle {

using namespace pilift;

inline std::vector<std::vector<Elem>> classes(const Group& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<Elem>> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<Elem> orbit;
    for (Elem y = 0; y < g.order(); ++y) orbit.insert(g.conjugate(x, y));
    for (Elem e : orbit) seen[e] = true;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

inline bool closed(const Group& g, const std::set<Elem>& s) {
  for (Elem a : s) {
    for (Elem b : s) {
      if (!s.count(g.mul(a, b))) return false;
    }
  }
  return s.count(0) == 1;
}

inline Subgroup to_subgroup(const Group& g, const std::set<Elem>& s) {
  return Subgroup(g.order(), std::vector<Elem>(s.begin(), s.end()));
}

inline std::set<Elem> closure(const Group& g, std::set<Elem> s) {
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur) {
      for (Elem b : cur) grew |= s.insert(g.mul(a, b)).second;
    }
  }
  return s;
}

/// Every subgroup, found by closing under one added element at a time.
inline std::vector<Subgroup> all_subgroups(const Group& g) {
  std::set<std::set<Elem>> found{{0}};
  std::vector<std::set<Elem>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::set<Elem>> next;
    for (const auto& h : frontier) {
      for (Elem x = 0; x < g.order(); ++x) {
        if (h.count(x)) continue;
        auto s = h;
        s.insert(x);
        s = closure(g, s);
        if (found.insert(s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (const auto& s : found) out.push_back(to_subgroup(g, s));
  std::sort(out.begin(), out.end());
  return out;
}

/// Normal subgroups as the unions of classes that are closed; feasible for
/// groups with few classes.
inline std::vector<Subgroup> normal_subgroups(const Group& g) {
  const auto cls = classes(g);
  std::vector<Subgroup> out;
  const std::size_t k = cls.size() - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::set<Elem> s{0};
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) s.insert(cls[i + 1].begin(), cls[i + 1].end());
    }
    if (closed(g, s)) out.push_back(to_subgroup(g, s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<Elem> normal_closure_in(const Group& g, const std::set<Elem>& h, const std::set<Elem>& k) {
  std::set<Elem> s;
  for (Elem x : h) {
    for (Elem y : k) s.insert(g.conjugate(x, y));
  }
  return closure(g, s);
}

/// H is subnormal iff the series of successive normal closures reaches H.
inline bool is_subnormal(const Group& g, const Subgroup& h) {
  const std::set<Elem> hs(h.members().begin(), h.members().end());
  std::set<Elem> k;
  for (Elem x = 0; x < g.order(); ++x) k.insert(x);
  while (true) {
    auto next = normal_closure_in(g, hs, k);
    if (next == k) return k == hs;
    k = std::move(next);
  }
}

inline Subgroup derived(const Group& g) {
  std::set<Elem> s;
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) s.insert(g.commutator(a, b));
  }
  return to_subgroup(g, closure(g, s));
}

/// Chains of normal subgroups from 1 to G with pi- or pi'-factors.
inline std::vector<std::vector<Subgroup>> normal_pi_series(const Group& g, const PrimeSet& pi) {
  const auto ns = oracle::normal_subgroups(g);
  std::vector<std::vector<Subgroup>> out;
  std::vector<Subgroup> chain{ns.front()};
  auto rec = [&](auto&& self) -> void {
    const Subgroup last = chain.back();
    if (last.order() == g.order()) {
      out.push_back(chain);
      return;
    }
    for (const auto& n : ns) {
      if (n.order() <= last.order() || !last.is_subset_of(n)) continue;
      const auto idx = n.order() / last.order();
      if (!pi.is_pi_number(idx) && !pi.is_pi_prime_number(idx)) continue;
      chain.push_back(n);
      self(self);
      chain.pop_back();
    }
  };
  rec(rec);
  return out;
}

/// theta^G by the Frobenius formula, summing over all elements of G.
inline std::vector<Cyc> induce(const GroupContext& ctx, const ClassFunction& theta) {
  const Group& g = ctx.top();
  const auto& h = ctx.subgroup(theta.domain);
  const auto& tg = ctx.table(ctx.whole());
  std::vector<Cyc> out;
  for (std::size_t c = 0; c < tg.size(); ++c) {
    const Elem x = ctx.class_rep(ctx.whole(), c);
    Cyc acc(0L, ctx.conductor());
    for (Elem y = 0; y < g.order(); ++y) {
      const Elem z = g.conjugate(x, y);
      if (h.contains(z)) acc += theta.values[ctx.class_in(theta.domain, z)];
    }
    out.push_back(acc / Rational(static_cast<long>(h.order())));
  }
  return out;
}

/// The classes of H (table order) whose representatives are pi-elements.
inline std::vector<std::size_t> pi_class_ids(const GroupContext& ctx, SubId h, const PrimeSet& pi) {
  const auto& t = ctx.table(h);
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < t.size(); ++c) {
    if (pi.is_pi_number(ctx.top().element_order(ctx.class_rep(h, c)))) out.push_back(c);
  }
  return out;
}

/// I_pi(H) as the chi^0 that are not a sum of two non-zero sums of chi^0's,
/// by exhaustive search over all non-negative combinations of smaller degree.
/// Candidates are matched on residues and every match is confirmed exactly.
inline std::vector<std::vector<Cyc>> ipi(const GroupContext& ctx, SubId h, const PrimeSet& pi) {
  const auto& t = ctx.table(h);
  const auto cls = pi_class_ids(ctx, h, pi);
  const auto& red = CycReducer::get(ctx.conductor());
  const std::uint64_t p = red.prime();

  std::vector<std::vector<Cyc>> r;  // distinct chi^0
  std::vector<std::uint64_t> rdeg;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<Cyc> v;
    for (auto c : cls) v.push_back(t.value(i, c));
    if (std::find(r.begin(), r.end(), v) == r.end()) {
      r.push_back(v);
      rdeg.push_back(t.degree(i));
    }
  }
  std::vector<std::vector<std::uint64_t>> rres;
  for (const auto& v : r) rres.push_back(t.residues(v));
  const std::uint64_t top = *std::max_element(rdeg.begin(), rdeg.end());

  using Key = std::vector<std::uint64_t>;
  // sums[d]: residue vector -> one multiset of r-indices with that sum
  std::vector<std::map<Key, std::vector<std::size_t>>> sums(top + 1);
  for (std::uint64_t d = 1; d <= top; ++d) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (rdeg[j] > d) continue;
      if (rdeg[j] == d) {
        sums[d].emplace(rres[j], std::vector<std::size_t>{j});
        continue;
      }
      for (const auto& [key, wit] : sums[d - rdeg[j]]) {
        Key k(key.size());
        for (std::size_t c = 0; c < k.size(); ++c) k[c] = (key[c] + rres[j][c]) % p;
        auto w = wit;
        w.push_back(j);
        sums[d].emplace(std::move(k), std::move(w));
      }
    }
  }
  auto exact = [&](const std::vector<std::size_t>& w) {
    std::vector<Cyc> v(cls.size(), Cyc(0L, ctx.conductor()));
    for (auto j : w) {
      for (std::size_t c = 0; c < v.size(); ++c) v[c] += r[j][c];
    }
    return v;
  };

  std::vector<std::vector<Cyc>> out;
  for (std::size_t j = 0; j < r.size(); ++j) {
    bool reducible = false;
    for (std::uint64_t d = 1; d < rdeg[j] && !reducible; ++d) {
      for (const auto& [key, wit] : sums[d]) {
        Key rest(key.size());
        for (std::size_t c = 0; c < key.size(); ++c) rest[c] = (rres[j][c] + p - key[c]) % p;
        auto it = sums[rdeg[j] - d].find(rest);
        if (it == sums[rdeg[j] - d].end()) continue;
        auto w = wit;
        w.insert(w.end(), it->second.begin(), it->second.end());
        if (exact(w) == r[j]) {
          reducible = true;
          break;
        }
      }
    }
    if (!reducible) out.push_back(r[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<Cyc>> sorted_members(const PartialTable& t) {
  std::vector<std::vector<Cyc>> out;
  for (const auto& m : t.members) out.push_back(m.values);
  std::sort(out.begin(), out.end());
  return out;
}

/// Corpus groups of order at most 48, for the I_pi oracle.
inline std::vector<std::string> small_corpus() {
  return {"c2", "c3", "c4", "c5", "c6", "c7", "c12", "c2xc2", "d8", "d10", "d12", "q8",
          "s3", "s4", "a4", "f20", "f21", "dic12", "sl23", "gl23", "c3xs3", "s3xs3", "c2xa4", "e27"};
}

}  // namespace oracle
