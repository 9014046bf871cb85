#pragma once

#include <cstdint>
#include <vector>

namespace pilift::modp {

using u64 = std::uint64_t;

u64 pow_mod(u64 base, u64 exp, u64 p);
u64 inv_mod(u64 a, u64 p);
/// Smallest generator of the multiplicative group of F_p.
u64 primitive_root(u64 p);
/// Smallest prime p with p = 1 (mod modulus) and p > lower_bound.
u64 prime_congruent_one(u64 modulus, u64 lower_bound);

/// Dense row-major matrix over F_p.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<u64> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  u64& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  u64 at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Basis of the right null space {x : A x = 0}, one vector per entry.
std::vector<std::vector<u64>> null_space(Matrix a, u64 p);
/// Characteristic polynomial det(xI - A), lowest degree first, monic.
std::vector<u64> characteristic_polynomial(Matrix a, u64 p);
/// All roots in F_p of a polynomial (lowest degree first), by evaluation.
std::vector<u64> roots(const std::vector<u64>& poly, u64 p);

}  // namespace pilift::modp
