#include "pilift/char_table.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "pilift/modular.hpp"

namespace pilift {

using modp::u64;

namespace {

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

struct ModularTable {
  std::vector<std::vector<u64>> values;  // per row, per class
  std::vector<u64> degrees;
};

struct Space {
  std::vector<std::vector<u64>> basis;  // reduced row echelon form
  std::vector<std::size_t> pivots;
};

Space echelonize(std::vector<std::vector<u64>> vecs, u64 p) {
  Space out;
  if (vecs.empty()) return out;
  const std::size_t len = vecs.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < len && r < vecs.size(); ++c) {
    std::size_t piv = r;
    while (piv < vecs.size() && vecs[piv][c] == 0) ++piv;
    if (piv == vecs.size()) continue;
    std::swap(vecs[piv], vecs[r]);
    const u64 inv = modp::inv_mod(vecs[r][c], p);
    for (auto& x : vecs[r]) x = x * inv % p;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      if (i == r || vecs[i][c] == 0) continue;
      const u64 f = vecs[i][c];
      for (std::size_t j = 0; j < len; ++j) vecs[i][j] = (vecs[i][j] + (p - f) * vecs[r][j]) % p;
    }
    out.pivots.push_back(c);
    ++r;
  }
  vecs.resize(r);
  out.basis = std::move(vecs);
  return out;
}

// (M_j)_{k,l} = #{x in C_j : x^-1 z_l in C_k} for a fixed representative z_l.
modp::Matrix class_matrix(const Group& g, const ConjClassSet& cls, std::size_t j, u64 p) {
  const std::size_t r = cls.size();
  modp::Matrix m(r, r);
  for (std::size_t l = 0; l < r; ++l) {
    const Elem z = cls[l].representative;
    for (Elem x : cls[j].members) {
      const std::size_t k = cls.class_of(g.mul(g.inverse(x), z));
      m.at(k, l) += 1;
    }
  }
  for (auto& v : m.data) v %= p;
  return m;
}

std::optional<ModularTable> dixon_mod_p(const Group& g, const ConjClassSet& cls,
                                        const std::vector<std::size_t>& inverse_class, u64 p) {
  const std::size_t r = cls.size();
  std::vector<Space> spaces;
  {
    std::vector<std::vector<u64>> id(r, std::vector<u64>(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(echelonize(std::move(id), p));
  }
  auto unsplit = [&] {
    return std::any_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() > 1; });
  };
  for (std::size_t j = 1; j < r && unsplit(); ++j) {
    const modp::Matrix mj = class_matrix(g, cls, j, p);
    std::vector<Space> next;
    for (auto& space : spaces) {
      const std::size_t d = space.basis.size();
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      modp::Matrix a(d, d);
      for (std::size_t b = 0; b < d; ++b) {
        const auto& vec = space.basis[b];
        for (std::size_t ai = 0; ai < d; ++ai) {
          const std::size_t row = space.pivots[ai];
          u64 acc = 0;
          for (std::size_t c = 0; c < r; ++c) acc = (acc + mj.at(row, c) * vec[c]) % p;
          a.at(ai, b) = acc;
        }
      }
      const auto eigenvalues = modp::roots(modp::characteristic_polynomial(a, p), p);
      if (eigenvalues.size() <= 1) {
        next.push_back(std::move(space));
        continue;
      }
      std::size_t total = 0;
      for (u64 lambda : eigenvalues) {
        modp::Matrix shifted = a;
        for (std::size_t i = 0; i < d; ++i) shifted.at(i, i) = (shifted.at(i, i) + p - lambda) % p;
        std::vector<std::vector<u64>> vecs;
        for (const auto& c : modp::null_space(shifted, p)) {
          std::vector<u64> w(r, 0);
          for (std::size_t b = 0; b < d; ++b) {
            if (c[b] == 0) continue;
            for (std::size_t k = 0; k < r; ++k) w[k] = (w[k] + c[b] * space.basis[b][k]) % p;
          }
          vecs.push_back(std::move(w));
        }
        total += vecs.size();
        next.push_back(echelonize(std::move(vecs), p));
      }
      if (total != d) return std::nullopt;
    }
    spaces = std::move(next);
  }
  if (unsplit() || spaces.size() != r) return std::nullopt;

  const u64 order = g.order();
  const u64 max_degree = isqrt(order);
  ModularTable out;
  for (const auto& space : spaces) {
    std::vector<u64> w = space.basis.front();
    if (w[0] == 0) return std::nullopt;
    const u64 inv0 = modp::inv_mod(w[0], p);
    for (auto& x : w) x = x * inv0 % p;
    u64 s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      s = (s + w[i] * w[inverse_class[i]] % p * modp::inv_mod(cls[i].size() % p, p)) % p;
    }
    if (s == 0) return std::nullopt;
    const u64 target = order % p * modp::inv_mod(s, p) % p;
    u64 degree = 0;
    for (u64 d = 1; d <= max_degree; ++d) {
      if (d * d % p == target) {
        degree = d;
        break;
      }
    }
    if (degree == 0) return std::nullopt;
    std::vector<u64> values(r);
    for (std::size_t i = 0; i < r; ++i) values[i] = degree * w[i] % p * modp::inv_mod(cls[i].size() % p, p) % p;
    out.values.push_back(std::move(values));
    out.degrees.push_back(degree);
  }
  return out;
}

std::vector<std::size_t> power_classes(const Group& g, const ConjClassSet& cls, std::size_t c) {
  const Elem rep = cls[c].representative;
  const std::size_t m = g.element_order(rep);
  std::vector<std::size_t> out(m);
  Elem x = g.identity();
  for (std::size_t l = 0; l < m; ++l) {
    out[l] = cls.class_of(x);
    x = g.mul(x, rep);
  }
  return out;
}

// Lifts a row of residues to exact values via eigenvalue multiplicities.
std::optional<std::vector<Cyc>> lift_row(const Group& g, const ConjClassSet& cls,
                                         const std::vector<std::vector<std::size_t>>& powers,
                                         const std::vector<u64>& values, u64 degree, u64 p, int conductor) {
  const u64 e = g.exponent();
  const u64 z = modp::pow_mod(modp::primitive_root(p), (p - 1) / e, p);
  std::vector<Cyc> out;
  out.reserve(cls.size());
  for (std::size_t c = 0; c < cls.size(); ++c) {
    const auto& pc = powers[c];
    const u64 m = pc.size();
    const u64 zm = modp::pow_mod(z, e / m, p);
    const u64 zm_inv = modp::inv_mod(zm, p);
    const u64 m_inv = modp::inv_mod(m % p, p);
    std::vector<long> mult(static_cast<std::size_t>(conductor), 0);
    u64 total = 0;
    for (u64 k = 0; k < m; ++k) {
      const u64 step = modp::pow_mod(zm_inv, k, p);
      u64 acc = 0;
      u64 root = 1;
      for (u64 l = 0; l < m; ++l) {
        acc = (acc + values[pc[l]] * root) % p;
        root = root * step % p;
      }
      const u64 mu = acc * m_inv % p;
      if (mu > degree) return std::nullopt;
      total += mu;
      mult[static_cast<std::size_t>(k * (static_cast<u64>(conductor) / m))] += static_cast<long>(mu);
    }
    if (total != degree) return std::nullopt;
    out.push_back(Cyc::from_root_multiplicities(conductor, mult));
  }
  return out;
}

}  // namespace

CycReducer::CycReducer(int conductor)
    : conductor_(conductor), prime_(modp::prime_congruent_one(static_cast<u64>(conductor), 1ULL << 30)) {
  const u64 z = modp::pow_mod(modp::primitive_root(prime_), (prime_ - 1) / static_cast<u64>(conductor), prime_);
  powers_.resize(static_cast<std::size_t>(conductor));
  u64 x = 1;
  for (auto& pw : powers_) {
    pw = x;
    x = x * z % prime_;
  }
}

const CycReducer& CycReducer::get(int conductor) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CycReducer>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[conductor];
  if (!slot) slot.reset(new CycReducer(conductor));
  return *slot;
}

u64 CycReducer::reduce(const Cyc& c) const {
  const int m = c.conductor();
  if (conductor_ % m != 0) throw std::invalid_argument("conductor does not divide reducer conductor");
  const std::size_t step = static_cast<std::size_t>(conductor_ / m);
  u64 acc = 0;
  const auto& num = c.numerators();
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    const u64 r = mpz_fdiv_ui(num[i].get_mpz_t(), prime_);
    acc = (acc + r * powers_[(i * step) % powers_.size()]) % prime_;
  }
  if (c.denominator() != 1) {
    const u64 d = mpz_fdiv_ui(c.denominator().get_mpz_t(), prime_);
    acc = acc * modp::inv_mod(d, prime_) % prime_;
  }
  return acc;
}

long CycReducer::to_signed(u64 r) const {
  return r > prime_ / 2 ? -static_cast<long>(prime_ - r) : static_cast<long>(r);
}

CharTable CharTable::compute(std::shared_ptr<const Group> group, int conductor) {
  ConjClassSet classes = conjugacy_classes(*group);
  return compute(std::move(group), std::move(classes), conductor);
}

CharTable CharTable::compute(std::shared_ptr<const Group> group, ConjClassSet classes, int conductor) {
  const Group& g = *group;
  const int e = static_cast<int>(g.exponent());
  if (conductor == 0) conductor = e;
  if (conductor % e != 0) throw std::invalid_argument("conductor must be a multiple of the group exponent");

  CharTable t;
  t.group_ = std::move(group);
  t.classes_ = std::move(classes);
  t.conductor_ = conductor;
  const std::size_t r = t.classes_.size();
  t.inverse_class_.resize(r);
  for (std::size_t c = 0; c < r; ++c) t.inverse_class_[c] = t.classes_.class_of(g.inverse(t.classes_[c].representative));

  std::vector<std::vector<std::size_t>> powers(r);
  for (std::size_t c = 0; c < r; ++c) powers[c] = power_classes(g, t.classes_, c);

  u64 bound = isqrt(4 * static_cast<u64>(g.order()));
  for (int attempt = 0; attempt < 16; ++attempt) {
    const u64 p = modp::prime_congruent_one(static_cast<u64>(e), bound);
    bound = p;
    const auto mod = dixon_mod_p(g, t.classes_, t.inverse_class_, p);
    if (!mod) continue;
    std::vector<std::vector<Cyc>> rows;
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      auto row = lift_row(g, t.classes_, powers, mod->values[i], mod->degrees[i], p, conductor);
      if (!row) ok = false;
      else rows.push_back(std::move(*row));
    }
    if (!ok) continue;
    t.dixon_prime_ = p;
    t.finish_rows(std::move(rows), mod->degrees);
    return t;
  }
  throw CharTableError("Dixon-Schneider failed for all candidate primes");
}

void CharTable::finish_rows(std::vector<std::vector<Cyc>> rows, std::vector<u64> degrees) {
  const std::size_t r = rows.size();
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    return std::lexicographical_compare_three_way(rows[a].begin(), rows[a].end(), rows[b].begin(), rows[b].end()) < 0;
  });
  for (std::size_t i : order) {
    rows_.push_back(std::move(rows[i]));
    degrees_.push_back(degrees[i]);
  }

  const u64 order_g = group_->order();
  u64 sum = 0;
  for (auto d : degrees_) sum += d * d;
  if (sum != order_g) throw CharTableError("degree squares do not sum to the group order");

  for (std::size_t i = 0; i < r; ++i) {
    if (std::all_of(rows_[i].begin(), rows_[i].end(), [&](const Cyc& v) { return v == Cyc(1L, conductor_); })) {
      trivial_row_ = i;
    }
  }
  residues_.resize(r);
  for (std::size_t i = 0; i < r; ++i) residues_[i] = residues(rows_[i]);
  // Distinct residue rows make residue lookups an exact row identification.
  {
    auto sorted = residues_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw CharTableError("two characters share residues modulo the check prime");
    }
  }
  // Orthogonality modulo the reducer prime; the exact check is verify_orthogonality().
  const auto& red = CycReducer::get(conductor_);
  const u64 p = red.prime();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      u64 acc = 0;
      for (std::size_t c = 0; c < r; ++c) {
        acc = (acc + classes_[c].size() % p * residues_[i][c] % p * residues_[j][inverse_class_[c]]) % p;
      }
      if (acc != (i == j ? order_g % p : 0)) throw CharTableError("row orthogonality failed modulo the check prime");
    }
  }
  det_orders_.resize(r);
  for (std::size_t i = 0; i < r; ++i) det_orders_[i] = compute_determinant_order(i);
}

std::size_t CharTable::power_class(std::size_t c, long k) const {
  const Elem rep = classes_[c].representative;
  return classes_.class_of(group_->power(rep, k));
}

std::vector<std::size_t> CharTable::power_map(long k) const {
  std::vector<std::size_t> out(classes_.size());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = power_class(c, k);
  return out;
}

std::vector<long> CharTable::eigenvalue_multiplicities(std::size_t row, std::size_t cls) const {
  const auto pc = power_classes(*group_, classes_, cls);
  const std::size_t m = pc.size();
  const std::size_t n = static_cast<std::size_t>(conductor_);
  const std::size_t step = n / m;
  const auto& field = CyclotomicField::get(conductor_);
  std::vector<long> out(m, 0);
  long total = 0;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Integer> raw(n);
    for (std::size_t l = 0; l < m; ++l) {
      const Cyc& v = rows_[row][pc[l]];
      if (v.denominator() != 1 || v.conductor() != conductor_) {
        throw CharTableError("character value is not an algebraic integer of the table field");
      }
      const std::size_t shift = ((m - (k * l) % m) % m) * step;
      const auto& num = v.numerators();
      for (std::size_t i = 0; i < num.size(); ++i) {
        if (num[i] != 0) raw[(i + shift) % n] += num[i];
      }
    }
    field.reduce(raw);
    for (std::size_t i = 1; i < raw.size(); ++i) {
      if (raw[i] != 0) throw CharTableError("eigenvalue multiplicity is not rational");
    }
    if (!mpz_divisible_ui_p(raw[0].get_mpz_t(), m) || raw[0] < 0) {
      throw CharTableError("eigenvalue multiplicity is not a non-negative integer");
    }
    out[k] = Integer(raw[0] / static_cast<unsigned long>(m)).get_si();
    total += out[k];
  }
  if (total != static_cast<long>(degrees_[row])) throw CharTableError("eigenvalue multiplicities do not sum to the degree");
  return out;
}

std::uint64_t CharTable::compute_determinant_order(std::size_t row) const {
  // det is a homomorphism, so its order is the lcm over a generating set.
  u64 result = 1;
  for (Elem gen : group_->generator_elements()) {
    const std::size_t c = classes_.class_of(gen);
    const auto mult = eigenvalue_multiplicities(row, c);
    const long m = static_cast<long>(mult.size());
    long s = 0;
    for (long k = 0; k < m; ++k) s = (s + k * mult[static_cast<std::size_t>(k)]) % m;
    result = std::lcm(result, static_cast<u64>(m / std::gcd(s, m)));
  }
  return result;
}

std::vector<std::size_t> CharTable::kernel_classes(std::size_t row) const {
  std::vector<std::size_t> out;
  const Cyc one(static_cast<long>(degrees_[row]), conductor_);
  for (std::size_t c = 0; c < size(); ++c) {
    if (rows_[row][c] == one) out.push_back(c);
  }
  return out;
}

std::vector<std::uint64_t> CharTable::residues(std::span<const Cyc> f) const {
  const auto& red = CycReducer::get(conductor_);
  std::vector<u64> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = red.reduce(f[i]);
  return out;
}

std::vector<long> CharTable::character_multiplicities(std::span<const std::uint64_t> f) const {
  if (f.size() != size()) throw std::invalid_argument("class function length mismatch");
  const u64 p = CycReducer::get(conductor_).prime();
  const u64 inv_order = modp::inv_mod(group_->order() % p, p);
  const auto& red = CycReducer::get(conductor_);
  const long degree = red.to_signed(f[0]);
  std::vector<long> out(size());
  long total = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    u64 acc = 0;
    for (std::size_t c = 0; c < size(); ++c) {
      if (f[c] == 0) continue;
      acc = (acc + classes_[c].size() % p * f[c] % p * residues_[i][inverse_class_[c]]) % p;
    }
    out[i] = red.to_signed(acc * inv_order % p);
    if (out[i] < 0 || out[i] > degree) throw CharTableError("class function is not a character");
    total += out[i] * static_cast<long>(degrees_[i]);
  }
  if (total != degree) throw CharTableError("class function is not a character");
  return out;
}

std::optional<std::size_t> CharTable::find_row(std::span<const Cyc> values) const {
  if (values.size() != size()) return std::nullopt;
  const auto res = residues(values);
  for (std::size_t i = 0; i < size(); ++i) {
    if (res != residues_[i]) continue;
    if (std::equal(values.begin(), values.end(), rows_[i].begin())) return i;
  }
  return std::nullopt;
}

Cyc CharTable::inner_product(std::span<const Cyc> f, std::span<const Cyc> g) const {
  if (f.size() != size() || g.size() != size()) throw std::invalid_argument("class function length mismatch");
  Cyc acc(conductor_);
  for (std::size_t c = 0; c < size(); ++c) {
    acc += f[c] * g[c].conjugate() * Rational(static_cast<long>(classes_[c].size()));
  }
  return acc / Rational(static_cast<long>(group_->order()));
}

Cyc CharTable::inner_product_with_row(std::span<const Cyc> f, std::size_t row) const {
  if (f.size() != size()) throw std::invalid_argument("class function length mismatch");
  Cyc acc(conductor_);
  for (std::size_t c = 0; c < size(); ++c) {
    if (f[c].is_zero()) continue;
    acc += f[c] * rows_[row][inverse_class_[c]] * Rational(static_cast<long>(classes_[c].size()));
  }
  return acc / Rational(static_cast<long>(group_->order()));
}

std::vector<Cyc> CharTable::coordinates(std::span<const Cyc> f) const {
  std::vector<Cyc> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(inner_product_with_row(f, i));
  return out;
}

std::optional<std::vector<long>> CharTable::integral_coordinates(std::span<const Cyc> f) const {
  if (f.size() != size()) throw std::invalid_argument("class function length mismatch");
  const auto& red = CycReducer::get(conductor_);
  const u64 p = red.prime();
  bool reducible = true;
  for (const auto& v : f) {
    if (mpz_divisible_ui_p(v.denominator().get_mpz_t(), p)) reducible = false;
  }
  if (reducible) {
    // Guess modulo p, then confirm exactly by reconstruction.
    const auto res = residues(f);
    const u64 inv_order = modp::inv_mod(group_->order() % p, p);
    std::vector<long> guess(size());
    for (std::size_t i = 0; i < size(); ++i) {
      u64 acc = 0;
      for (std::size_t c = 0; c < size(); ++c) {
        acc = (acc + classes_[c].size() % p * res[c] % p * residues_[i][inverse_class_[c]]) % p;
      }
      guess[i] = red.to_signed(acc * inv_order % p);
    }
    std::vector<Cyc> rebuilt(size(), Cyc(conductor_));
    for (std::size_t i = 0; i < size(); ++i) {
      if (guess[i] == 0) continue;
      const Rational coeff(guess[i]);
      for (std::size_t c = 0; c < size(); ++c) rebuilt[c] += rows_[i][c] * coeff;
    }
    if (std::equal(rebuilt.begin(), rebuilt.end(), f.begin())) return guess;
  }
  std::vector<long> out;
  for (const auto& x : coordinates(f)) {
    const auto q = x.as_rational();
    if (!q || q->get_den() != 1 || !q->get_num().fits_slong_p()) return std::nullopt;
    out.push_back(q->get_num().get_si());
  }
  return out;
}

std::optional<std::string> CharTable::verify_orthogonality() const {
  const std::size_t r = size();
  const Rational order(static_cast<long>(group_->order()));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      const Cyc ip = inner_product_with_row(rows_[i], j);
      if (ip != Cyc(i == j ? 1L : 0L, conductor_)) {
        return "row orthogonality fails for rows " + std::to_string(i) + " and " + std::to_string(j);
      }
    }
  }
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t d = c; d < r; ++d) {
      Cyc acc(conductor_);
      for (std::size_t i = 0; i < r; ++i) acc += rows_[i][c] * rows_[i][inverse_class_[d]];
      const long expected = c == d ? static_cast<long>(group_->order() / classes_[c].size()) : 0;
      if (acc != Cyc(expected, conductor_)) {
        return "column orthogonality fails for classes " + std::to_string(c) + " and " + std::to_string(d);
      }
    }
  }
  std::uint64_t sum = 0;
  for (auto d : degrees_) sum += d * d;
  if (sum != group_->order()) return "degree squares do not sum to |G|";
  return std::nullopt;
}

std::string CharTable::render_text() const {
  std::ostringstream out;
  out << "order " << group_->order() << ", " << size() << " classes, values in Q(z(" << conductor_ << "))\n";
  out << "classes:\n";
  for (std::size_t c = 0; c < size(); ++c) {
    out << "  " << c << ": order " << class_element_order(c) << ", size " << classes_[c].size() << ", rep "
        << group_->element(classes_[c].representative).to_cycles() << "\n";
  }
  out << "characters:\n";
  for (std::size_t i = 0; i < size(); ++i) {
    out << "  X." << i << " (degree " << degrees_[i] << "):";
    for (std::size_t c = 0; c < size(); ++c) out << (c ? " | " : " ") << rows_[i][c].to_string();
    out << "\n";
  }
  return out.str();
}

nlohmann::json CharTable::to_json() const {
  nlohmann::json j;
  j["order"] = group_->order();
  j["conductor"] = conductor_;
  j["dixon_prime"] = dixon_prime_;
  auto& cls = j["classes"] = nlohmann::json::array();
  for (std::size_t c = 0; c < size(); ++c) {
    cls.push_back({{"representative", group_->element(classes_[c].representative).to_cycles()},
                   {"element_order", class_element_order(c)},
                   {"size", classes_[c].size()}});
  }
  auto& chars = j["characters"] = nlohmann::json::array();
  for (std::size_t i = 0; i < size(); ++i) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : rows_[i]) values.push_back(cyc_to_json(v));
    chars.push_back({{"index", i}, {"degree", degrees_[i]}, {"values", std::move(values)}});
  }
  return j;
}

nlohmann::json cyc_to_json(const Cyc& c) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& q : c.coefficients()) coeffs.push_back(to_string(q));
  return {{"conductor", c.conductor()}, {"coefficients", std::move(coeffs)}};
}

Cyc cyc_from_json(const nlohmann::json& j) {
  const int n = j.at("conductor").get<int>();
  std::vector<Rational> coeffs;
  for (const auto& s : j.at("coefficients")) coeffs.push_back(parse_rational(s.get<std::string>()));
  return Cyc::from_coefficients(n, coeffs);
}

}  // namespace pilift
