#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pilift {

using Integer = mpz_class;
using Rational = mpq_class;

/// Renders a rational as "p" or "p/q".
std::string to_string(const Rational& q);
/// Parses "p" or "p/q"; throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

/// Static data for Q(zeta_n): Euler phi and the monic cyclotomic polynomial.
/// Instances are memoized per conductor and never mutated after creation.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int conductor);

  int conductor() const { return conductor_; }
  int degree() const { return degree_; }
  /// Coefficients of Phi_n, lowest degree first, length degree() + 1.
  const std::vector<Integer>& modulus() const { return modulus_; }

  /// Reduces a polynomial in zeta_n in place: folds exponents mod n, then
  /// divides by Phi_n. Result has exactly degree() coefficients.
  void reduce(std::vector<Integer>& poly) const;

 private:
  explicit CyclotomicField(int conductor);

  int conductor_;
  int degree_;
  std::vector<Integer> modulus_;
};

/// Exact element of Q(zeta_n), stored as an integer coefficient vector over
/// a positive common denominator in the power basis 1, z, ..., z^(phi(n)-1).
/// The representation is canonical: equal field elements of one conductor
/// have identical coefficients. Operands of different conductors are lifted
/// to the lcm.
class Cyc {
 public:
  Cyc();
  explicit Cyc(int conductor);
  Cyc(long value, int conductor);
  Cyc(const Rational& value, int conductor);

  /// zeta_n^k.
  static Cyc root_of_unity(int n, long k);
  /// Sum over exponents e of mult[e] * zeta_n^e, mult of length n.
  static Cyc from_root_multiplicities(int n, const std::vector<long>& mult);
  /// Builds from rational coefficients in the power basis (any length; reduced).
  static Cyc from_coefficients(int n, const std::vector<Rational>& coeffs);

  int conductor() const { return field_->conductor(); }
  const CyclotomicField& field() const { return *field_; }

  Rational coefficient(std::size_t i) const;
  std::vector<Rational> coefficients() const;
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;
  /// Complex conjugation zeta -> zeta^-1.
  Cyc conjugate() const;
  /// Galois automorphism zeta -> zeta^k, gcd(k, n) = 1.
  Cyc galois(long k) const;
  /// The same element viewed in Q(zeta_m); m must be a multiple of conductor().
  Cyc in_conductor(int m) const;
  /// Multiplication by zeta_n^k without a full product.
  Cyc times_root(long k) const;

  Cyc& operator+=(const Cyc& other);
  Cyc& operator-=(const Cyc& other);
  Cyc& operator*=(const Cyc& other);
  Cyc& operator*=(const Rational& scalar);
  Cyc& operator/=(const Rational& scalar);
  Cyc operator-() const;

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend Cyc operator*(Cyc a, const Rational& s) { return a *= s; }
  friend Cyc operator/(Cyc a, const Rational& s) { return a /= s; }

  friend bool operator==(const Cyc& a, const Cyc& b);
  /// Lexicographic order on the coefficient vector (after lifting to a
  /// common conductor). Total and deterministic; carries no field meaning.
  friend std::strong_ordering operator<=>(const Cyc& a, const Cyc& b);

  std::size_t hash() const;
  /// "a0 + a1*z(n)^1 + ..." with only non-zero terms; "0" for zero.
  std::string to_string() const;

 private:
  void normalize();
  void fused_add(const Cyc& other, int sign);

  const CyclotomicField* field_;
  std::vector<Integer> num_;
  Integer den_;
};

struct CycHash {
  std::size_t operator()(const Cyc& c) const { return c.hash(); }
};

int euler_phi(int n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace pilift
