#include "pilift/modular.hpp"

#include <stdexcept>

#include "pilift/primes.hpp"

namespace pilift::modp {

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return pow_mod(a, p - 2, p);
}

u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

u64 prime_congruent_one(u64 modulus, u64 lower_bound) {
  u64 p = modulus + 1;
  while (p <= lower_bound || !is_prime(p)) p += modulus;
  if (p >= (1ULL << 31)) throw std::overflow_error("modular prime too large");
  return p;
}

std::vector<std::vector<u64>> null_space(Matrix a, u64 p) {
  const std::size_t rows = a.rows;
  const std::size_t cols = a.cols;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    }
    const u64 inv = inv_mod(a.at(r, c), p);
    for (std::size_t j = 0; j < cols; ++j) a.at(r, j) = a.at(r, j) * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      const u64 f = a.at(i, c);
      for (std::size_t j = 0; j < cols; ++j) {
        a.at(i, j) = (a.at(i, j) + (p - f) * a.at(r, j)) % p;
      }
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (p - a.at(i, free)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<u64> characteristic_polynomial(Matrix h, u64 p) {
  const std::size_t n = h.rows;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t piv = k + 1;
    while (piv < n && h.at(piv, k) == 0) ++piv;
    if (piv == n) continue;
    if (piv != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(k + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, k + 1));
    }
    const u64 inv = inv_mod(h.at(k + 1, k), p);
    for (std::size_t r = k + 2; r < n; ++r) {
      const u64 f = h.at(r, k) * inv % p;
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h.at(r, j) = (h.at(r, j) + (p - f) * h.at(k + 1, j)) % p;
      for (std::size_t i = 0; i < n; ++i) h.at(i, k + 1) = (h.at(i, k + 1) + f * h.at(i, r)) % p;
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> next(m + 1, 0);
    const auto& prev = polys[m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = (next[d + 1] + prev[d]) % p;
      next[d] = (next[d] + (p - h.at(m - 1, m - 1)) * prev[d]) % p;
    }
    u64 prod = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      prod = prod * h.at(i + 1, i) % p;
      if (prod == 0) break;
      const u64 coeff = prod * h.at(i, m - 1) % p;
      if (coeff == 0) continue;
      const auto& lower = polys[i];
      for (std::size_t d = 0; d < lower.size(); ++d) next[d] = (next[d] + (p - coeff) * lower[d]) % p;
    }
    polys[m] = std::move(next);
  }
  return polys[n];
}

std::vector<u64> roots(const std::vector<u64>& poly, u64 p) {
  std::vector<u64> out;
  for (u64 x = 0; x < p; ++x) {
    u64 acc = 0;
    for (std::size_t d = poly.size(); d-- > 0;) acc = (acc * x + poly[d]) % p;
    if (acc == 0) out.push_back(x);
  }
  return out;
}

}  // namespace pilift::modp
