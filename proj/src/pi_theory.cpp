#include "pilift/pi_theory.hpp"

#include <algorithm>
#include <map>

#include "pilift/modular.hpp"

namespace pilift {

using modp::u64;

PiClassSet pi_classes(const GroupContext& ctx, SubId h, const PrimeSet& pi) {
  PiClassSet out{pi, {}};
  const auto& g = ctx.group(h);
  const auto& cls = ctx.classes(h);
  for (std::size_t c = 0; c < cls.size(); ++c) {
    if (pi.is_pi_number(g.element_order(cls[c].representative))) out.classes.push_back(c);
  }
  return out;
}

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Expands Cyc value vectors into rational coordinate columns: one matrix row
// per (position, power-basis coefficient).
RationalMatrix expand_columns(const std::vector<std::vector<Cyc>>& columns, int conductor) {
  const std::size_t len = columns.empty() ? 0 : columns.front().size();
  const std::size_t phi = static_cast<std::size_t>(euler_phi(conductor));
  RationalMatrix m(len * phi, std::vector<Rational>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < len; ++i) {
      const Cyc v = columns[j][i].in_conductor(conductor);
      for (std::size_t k = 0; k < phi; ++k) m[i * phi + k][j] = v.coefficient(k);
    }
  }
  return m;
}

int common_conductor(const std::vector<std::vector<Cyc>>& columns) {
  long n = 1;
  for (const auto& col : columns) {
    for (const auto& v : col) n = lcm_long(n, v.conductor());
  }
  return static_cast<int>(n);
}

// Row reduction in place; returns pivot columns among the first `cols`.
std::vector<std::size_t> rational_rref(RationalMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::optional<std::vector<Rational>> exact_solve(const std::vector<std::vector<Cyc>>& basis,
                                                 const std::vector<Cyc>& target) {
  auto cols = basis;
  cols.push_back(target);
  const int n = common_conductor(cols);
  auto m = expand_columns(cols, n);
  const auto pivots = rational_rref(m, basis.size() + 1);
  const bool inconsistent = !pivots.empty() && pivots.back() == basis.size();
  if (pivots.size() - (inconsistent ? 1 : 0) < basis.size()) {
    throw AnomalyError("basis of partial characters is linearly dependent");
  }
  if (inconsistent) return std::nullopt;
  std::vector<Rational> x(basis.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][basis.size()];
  return x;
}

}  // namespace

std::size_t exact_rank(const std::vector<std::vector<Cyc>>& vectors) {
  if (vectors.empty()) return 0;
  const int n = common_conductor(vectors);
  const auto& red = CycReducer::get(n);
  const u64 p = red.prime();
  const std::size_t len = vectors.front().size();
  modp::Matrix a(len, vectors.size());
  bool reducible = true;
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    for (std::size_t i = 0; i < len; ++i) {
      const auto& v = vectors[j][i];
      if (mpz_divisible_ui_p(v.denominator().get_mpz_t(), p)) reducible = false;
      else a.at(i, j) = red.reduce(v);
    }
  }
  // Full rank modulo p implies full rank over Q.
  if (reducible && vectors.size() - modp::null_space(a, p).size() == vectors.size()) return vectors.size();
  auto m = expand_columns(vectors, n);
  return rational_rref(m, vectors.size()).size();
}

std::optional<std::vector<long>> nonnegative_integral_solution(const std::vector<std::vector<Cyc>>& basis,
                                                               const std::vector<Cyc>& target) {
  const std::size_t m = basis.size();
  const std::size_t len = target.size();
  if (m == 0) {
    if (std::all_of(target.begin(), target.end(), [](const Cyc& v) { return v.is_zero(); })) return std::vector<long>{};
    return std::nullopt;
  }
  std::vector<std::vector<Cyc>> all = basis;
  all.push_back(target);
  const int n = common_conductor(all);
  const auto& red = CycReducer::get(n);
  const u64 p = red.prime();

  auto verify = [&](const std::vector<long>& x) {
    for (long v : x) {
      if (v < 0) return false;
    }
    for (std::size_t i = 0; i < len; ++i) {
      Cyc acc(n);
      for (std::size_t j = 0; j < m; ++j) {
        if (x[j] != 0) acc += basis[j][i] * Rational(x[j]);
      }
      if (acc != target[i]) return false;
    }
    return true;
  };

  bool reducible = true;
  for (const auto& col : all) {
    for (const auto& v : col) {
      if (mpz_divisible_ui_p(v.denominator().get_mpz_t(), p)) reducible = false;
    }
  }
  if (reducible) {
    // A non-negative integral solution has entries below target(1) < p/2, so
    // it is the signed lift of the unique solution modulo p.
    std::vector<std::vector<u64>> rows(len, std::vector<u64>(m + 1));
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = 0; j < m; ++j) rows[i][j] = red.reduce(basis[j][i]);
      rows[i][m] = red.reduce(target[i]);
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c <= m && r < len; ++c) {
      std::size_t piv = r;
      while (piv < len && rows[piv][c] == 0) ++piv;
      if (piv == len) continue;
      std::swap(rows[piv], rows[r]);
      const u64 inv = modp::inv_mod(rows[r][c], p);
      for (auto& x : rows[r]) x = x * inv % p;
      for (std::size_t i = 0; i < len; ++i) {
        if (i == r || rows[i][c] == 0) continue;
        const u64 f = rows[i][c];
        for (std::size_t j = 0; j <= m; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
      }
      pivots.push_back(c);
      ++r;
    }
    const bool inconsistent = !pivots.empty() && pivots.back() == m;
    const std::size_t basis_rank = pivots.size() - (inconsistent ? 1 : 0);
    if (basis_rank == m) {
      if (inconsistent) return std::nullopt;
      std::vector<long> x(m);
      for (std::size_t i = 0; i < m; ++i) x[pivots[i]] = red.to_signed(rows[i][m]);
      if (verify(x)) return x;
      return std::nullopt;
    }
  }
  const auto q = exact_solve(basis, target);
  if (!q) return std::nullopt;
  std::vector<long> x;
  for (const auto& v : *q) {
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) return std::nullopt;
    x.push_back(v.get_num().get_si());
  }
  if (!verify(x)) return std::nullopt;
  return x;
}

PiAnalyzer::PiAnalyzer(const GroupContext& ctx, PrimeSet pi) : ctx_(ctx), pi_(std::move(pi)) {}

PartialCharacter PiAnalyzer::restrict_to_pi(const ClassFunction& f) const {
  const auto pcs = pi_classes(ctx_, f.domain, pi_).classes;
  PartialCharacter out;
  out.domain = f.domain;
  for (auto c : pcs) out.values.push_back(f.values[c]);
  const auto deg = f.values[0].as_rational();
  out.degree = deg && deg->get_den() == 1 && *deg > 0 ? deg->get_num().get_ui() : 0;
  out.origin = ctx_.find_row(f);
  return out;
}

const PartialTable& PiAnalyzer::ipi(SubId h) const {
  return ipi_cache_.get(h, [&] { return build_ipi(h); });
}

PartialTable PiAnalyzer::build_ipi(SubId h) const {
  const auto& t = ctx_.table(h);
  PartialTable out;
  out.domain = h;
  out.classes = pi_classes(ctx_, h, pi_);
  const auto& pcs = out.classes.classes;
  const std::size_t r = t.size();

  std::vector<std::vector<Cyc>> restricted(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (auto c : pcs) restricted[i].push_back(t.value(i, c));
  }
  // Distinct restrictions in first-occurrence order, then by degree.
  std::vector<std::size_t> candidates;
  std::map<std::vector<u64>, std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<u64> key;
    for (auto c : pcs) key.push_back(t.row_residues(i)[c]);
    auto& bucket = seen[key];
    const bool dup = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t j) { return restricted[j] == restricted[i]; });
    if (dup) continue;
    bucket.push_back(i);
    candidates.push_back(i);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t a, std::size_t b) { return t.degree(a) < t.degree(b); });

  std::vector<std::vector<Cyc>> basis;
  for (std::size_t i : candidates) {
    if (!basis.empty() && nonnegative_integral_solution(basis, restricted[i])) continue;
    basis.push_back(restricted[i]);
    out.members.push_back(PartialCharacter{h, restricted[i], t.degree(i), i});
  }
  if (out.members.size() != pcs.size()) {
    throw AnomalyError("|I_pi| = " + std::to_string(out.members.size()) + " differs from the number of pi-classes " +
                       std::to_string(pcs.size()));
  }
  if (exact_rank(basis) != basis.size()) throw AnomalyError("I_pi members are linearly dependent");
  out.decomposition.resize(r);
  out.member_of_row.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    auto x = nonnegative_integral_solution(basis, restricted[i]);
    if (!x) throw AnomalyError("chi^0 for row " + std::to_string(i) + " is not a non-negative combination of I_pi");
    long total = 0;
    for (std::size_t j = 0; j < x->size(); ++j) {
      total += (*x)[j];
      if ((*x)[j] == 1) out.member_of_row[i] = j;
    }
    if (total != 1) out.member_of_row[i].reset();
    out.decomposition[i] = std::move(*x);
  }
  return out;
}

std::vector<long> PiAnalyzer::decompose_partial(const PartialCharacter& psi) const {
  const auto& table = ipi(psi.domain);
  std::vector<std::vector<Cyc>> basis;
  for (const auto& m : table.members) basis.push_back(m.values);
  auto x = nonnegative_integral_solution(basis, psi.values);
  if (!x) throw std::invalid_argument("not a non-negative integral combination of irreducible partial characters");
  return *x;
}

std::vector<std::size_t> PiAnalyzer::lifts_of(SubId h, std::size_t member) const {
  const auto& table = ipi(h);
  if (member >= table.size()) throw std::invalid_argument("partial character index out of range");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.member_of_row.size(); ++i) {
    if (table.member_of_row[i] == member) out.push_back(i);
  }
  return out;
}

bool PiAnalyzer::is_pi_lift(CharRef chi) const { return ipi(chi.domain).member_of_row[chi.row].has_value(); }

const PiAnalyzer::SpecialFlags& PiAnalyzer::special_flags(SubId h) const {
  return special_cache_.get(h, [&] {
    const auto& t = ctx_.table(h);
    const std::size_t r = t.size();
    SpecialFlags flags{std::vector<bool>(r), std::vector<bool>(r)};
    for (std::size_t i = 0; i < r; ++i) {
      flags.pi[i] = pi_.is_pi_number(t.degree(i));
      flags.pi_prime[i] = pi_.is_pi_prime_number(t.degree(i));
    }
    for (SubId s : ctx_.subnormal_subgroups(h)) {
      const auto& ts = ctx_.table(s);
      for (std::size_t i = 0; i < r; ++i) {
        if (!flags.pi[i] && !flags.pi_prime[i]) continue;
        for (const auto& [j, mult] : ctx_.restriction_constituents({h, i}, s)) {
          const auto d = ts.determinant_order(j);
          if (!pi_.is_pi_number(d)) flags.pi[i] = false;
          if (!pi_.is_pi_prime_number(d)) flags.pi_prime[i] = false;
        }
      }
    }
    return flags;
  });
}

std::optional<SpecialFactorization> PiAnalyzer::factorize(CharRef chi) const {
  return factor_cache_.get(chi, [&]() -> std::optional<SpecialFactorization> {
    const auto& t = ctx_.table(chi.domain);
    const auto& flags = special_flags(chi.domain);
    const auto p = CycReducer::get(t.conductor()).prime();
    const auto& target = t.row_residues(chi.row);
    const auto deg = t.degree(chi.row);
    std::vector<SpecialFactorization> found;
    for (std::size_t a = 0; a < t.size(); ++a) {
      if (!flags.pi[a] || deg % t.degree(a) != 0) continue;
      for (std::size_t b = 0; b < t.size(); ++b) {
        if (!flags.pi_prime[b] || t.degree(a) * t.degree(b) != deg) continue;
        bool match = true;
        for (std::size_t c = 0; c < t.size() && match; ++c) {
          match = t.row_residues(a)[c] * t.row_residues(b)[c] % p == target[c];
        }
        if (!match) continue;
        for (std::size_t c = 0; c < t.size() && match; ++c) match = t.value(a, c) * t.value(b, c) == t.value(chi.row, c);
        if (match) found.push_back({{chi.domain, a}, {chi.domain, b}, chi});
      }
    }
    if (found.size() > 1) throw AnomalyError("character has two distinct special factorizations");
    if (found.empty()) return std::nullopt;
    return found.front();
  });
}

nlohmann::json PiAnalyzer::partial_table_json(SubId h) const {
  const auto& table = ipi(h);
  const auto& g = ctx_.group(h);
  const auto& cls = ctx_.classes(h);
  nlohmann::json j;
  j["pi"] = pi_.to_string();
  j["order"] = g.order();
  auto& pcs = j["pi_classes"] = nlohmann::json::array();
  for (auto c : table.classes.classes) {
    pcs.push_back({{"class", c}, {"representative", g.element(cls[c].representative).to_cycles()}, {"size", cls[c].size()}});
  }
  auto& members = j["members"] = nlohmann::json::array();
  for (std::size_t m = 0; m < table.size(); ++m) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : table.members[m].values) values.push_back(cyc_to_json(v));
    members.push_back({{"index", m}, {"degree", table.members[m].degree}, {"origin_row", *table.members[m].origin},
                       {"values", std::move(values)}});
  }
  j["decomposition"] = table.decomposition;
  return j;
}

}  // namespace pilift
